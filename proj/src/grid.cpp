#include "quadirr/grid.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "quadirr/parallel.hpp"

namespace quadirr {

namespace {

Code draw_code(std::mt19937_64& rng, std::uint64_t q) {
  // Rejection keeps the draw uniform and platform independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % q;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return static_cast<Code>(r % q);
}

std::string status_text(const GridOutcome& o) {
  switch (o.status) {
    case InstanceStatus::match: return "true";
    case InstanceStatus::mismatch: return "false";
    case InstanceStatus::skipped: return "skipped";
    case InstanceStatus::failed: return "failed";
  }
  return "?";
}

std::string label(const GridOutcome& o) {
  return "q=" + o.report.q.str() + " n=" + std::to_string(o.report.n) + " map=" + o.report.map.value_or("-");
}

}  // namespace

void validate_grid_config(const GridConfig& config) {
  if (config.q_list.empty()) fail(ErrorCode::InvalidArgument, "no field orders given");
  for (auto q : config.q_list) {
    prime_power_decompose(q);
    if (q > config.caps.f_space) fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " exceeds cap");
  }
  if (config.n_min > config.n_max) fail(ErrorCode::InvalidArgument, "empty n range");
  if (config.n_min < 2) fail(ErrorCode::InvalidArgument, "map counts need n >= 2");
  if (config.random_maps > 0 && !config.seed) fail(ErrorCode::InvalidArgument, "random maps need a seed");
  if (config.random_maps == 0 && config.explicit_maps.empty() && !config.include_srim) {
    fail(ErrorCode::InvalidArgument, "no maps given");
  }
  if (config.workers == 0) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
}

std::vector<QuadMap> random_maps(const FieldSpec& spec, unsigned k, std::uint64_t seed) {
  const std::uint64_t q = spec->order();
  std::mt19937_64 rng(seed ^ (q * 0x9E3779B97F4A7C15ULL));
  std::vector<QuadMap> maps;
  std::set<std::string> seen;
  const std::uint64_t max_attempts = 100000ULL * std::max(1U, k);
  for (std::uint64_t attempt = 0; maps.size() < k && attempt < max_attempts; ++attempt) {
    std::vector<Code> g(3), h(3);
    for (auto& c : g) c = draw_code(rng, q);
    for (auto& c : h) c = draw_code(rng, q);
    try {
      QuadMap map = validate_map(Poly(spec, g), Poly(spec, h));
      if (map.degenerate_even()) continue;
      if (!seen.insert(map.to_string()).second) continue;
      maps.push_back(std::move(map));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotCoprime && e.code() != ErrorCode::BadDegree) throw;
    }
  }
  if (maps.size() < k) fail(ErrorCode::InvalidArgument, "could not draw enough distinct maps");
  return maps;
}

QuadMap parse_map(const FieldSpec& spec, const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) fail(ErrorCode::ParseError, "map must look like g/h: '" + text + "'");
  return validate_map(Poly::parse(spec, text.substr(0, slash)), Poly::parse(spec, text.substr(slash + 1)));
}

std::size_t VerifyResult::count(InstanceStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [s](const GridOutcome& o) { return o.status == s; }));
}

bool VerifyResult::all_match() const {
  return count(InstanceStatus::mismatch) == 0 && count(InstanceStatus::failed) == 0;
}

VerifyResult run_verify(const GridConfig& config) {
  validate_grid_config(config);
  std::vector<std::uint64_t> qs = config.q_list;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  struct Instance {
    std::uint64_t q;
    unsigned n;
    std::size_t map_index;
    QuadMap map;
  };
  std::vector<Instance> instances;
  for (auto q : qs) {
    const FieldSpec spec = make_field(q, config.caps.f_space);
    std::vector<QuadMap> maps;
    for (const auto& text : config.explicit_maps) maps.push_back(parse_map(spec, text));
    if (config.include_srim) maps.push_back(srim_map(spec));
    if (config.random_maps > 0) {
      for (auto& m : random_maps(spec, config.random_maps, *config.seed)) maps.push_back(std::move(m));
    }
    for (unsigned n = config.n_min; n <= config.n_max; ++n) {
      for (std::size_t i = 0; i < maps.size(); ++i) instances.push_back({q, n, i, maps[i]});
    }
  }

  OracleOptions opts;
  opts.caps = config.caps;
  opts.strict = config.strict_oracle;
  opts.workers = 1;

  VerifyResult result;
  result.outcomes.resize(instances.size());
  parallel_for_index(instances.size(), config.workers, [&](std::size_t i) {
    const Instance& inst = instances[i];
    GridOutcome& out = result.outcomes[i];
    out.map_index = inst.map_index;
    CountReport& rep = out.report;
    rep.q = inst.q;
    rep.n = inst.n;
    rep.map = inst.map.to_string();
    rep.formula_count = transform_count(rep.q, inst.n, inst.map) + config.formula_offset;
    if (!inst.map.degenerate_even()) rep.invariants = ramification_invariants(inst.map, inst.n);
    try {
      rep.oracle_count = brute_transform_count(rep.q, inst.n, inst.map, opts);
      out.status = *rep.match() ? InstanceStatus::match : InstanceStatus::mismatch;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OracleCapExceeded) throw;
      out.warning = e.what();
      out.status = config.strict_oracle ? InstanceStatus::failed : InstanceStatus::skipped;
    }
  });
  return result;
}

std::string render_table(const VerifyResult& result) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"q", "n", "map", "formula", "oracle", "a b c d", "match"});
  for (const auto& o : result.outcomes) {
    const auto& r = o.report;
    std::string inv = "-";
    if (r.invariants) {
      inv = std::to_string(r.invariants->a) + " " + std::to_string(r.invariants->b) + " " +
            std::to_string(r.invariants->c) + " " + std::to_string(r.invariants->d);
    }
    rows.push_back({r.q.str(), std::to_string(r.n), r.map.value_or("-"), r.formula_count.str(),
                    r.oracle_count ? r.oracle_count->str() : "-", inv, status_text(o)});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) os << " | ";
      if (c + 1 == row.size()) {
        os << row[c];
      } else {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    os << '\n';
  }
  for (const auto& o : result.outcomes) {
    if (o.status == InstanceStatus::mismatch) os << "MISMATCH " << label(o) << '\n';
  }
  for (const auto& o : result.outcomes) {
    if (o.status == InstanceStatus::failed) os << "FAILED " << label(o) << '\n';
  }
  os << "instances=" << result.outcomes.size() << " matched=" << result.count(InstanceStatus::match)
     << " mismatched=" << result.count(InstanceStatus::mismatch)
     << " skipped=" << result.count(InstanceStatus::skipped) << " failed=" << result.count(InstanceStatus::failed)
     << '\n';
  return os.str();
}

std::string render_json(const VerifyResult& result) {
  std::ostringstream os;
  nlohmann::json mismatches = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& o : result.outcomes) {
    os << o.report.to_json().dump() << '\n';
    if (o.status == InstanceStatus::mismatch || o.status == InstanceStatus::failed) mismatches.push_back(label(o));
    if (o.status == InstanceStatus::skipped) skipped.push_back(label(o));
  }
  nlohmann::json summary;
  summary["instances"] = std::to_string(result.outcomes.size());
  summary["matched"] = std::to_string(result.count(InstanceStatus::match));
  summary["mismatched"] = std::to_string(result.count(InstanceStatus::mismatch));
  summary["failed"] = std::to_string(result.count(InstanceStatus::failed));
  summary["skipped"] = std::to_string(result.count(InstanceStatus::skipped));
  summary["mismatches"] = mismatches;
  summary["skipped_instances"] = skipped;
  os << nlohmann::json{{"summary", summary}}.dump() << '\n';
  return os.str();
}

}  // namespace quadirr
