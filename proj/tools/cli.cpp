#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadirr/counting.hpp"
#include "quadirr/grid.hpp"
#include "quadirr/oracle.hpp"
#include "quadirr/parallel.hpp"

namespace quadirr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_f_cap() {
  const char* raw = std::getenv("QUADIRR_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return OracleCaps{}.f_space;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("QUADIRR_ORACLE_CAP is not a positive integer: ") + raw);
  }
}

// "a..b" or a single integer.
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto to_uint = [&](const std::string& s) -> unsigned {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || v > 4096) throw UsageError("bad degree range '" + text + "'");
    return static_cast<unsigned>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned v = to_uint(text);
    return {v, v};
  }
  const unsigned lo = to_uint(text.substr(0, dots));
  const unsigned hi = to_uint(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty degree range '" + text + "'");
  return {lo, hi};
}

unsigned parse_random_maps(const std::string& text) {
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) != 0) throw UsageError("--maps expects random:<k>, got '" + text + "'");
  const std::string k = text.substr(prefix.size());
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(k, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != k.size() || v == 0 || v > 10000) throw UsageError("bad map count in '" + text + "'");
  return static_cast<unsigned>(v);
}

QuadMap read_map(const FieldSpec& spec, const std::string& g, const std::string& h) {
  if (g.empty() || h.empty()) throw UsageError("a map needs both --g and --h");
  return validate_map(Poly::parse(spec, g), Poly::parse(spec, h));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_count(std::ostream& out, const std::string& q_text, std::uint64_t n, bool srim, const std::string& g,
              const std::string& h) {
  const std::uint64_t q = parse_field_order(q_text);
  CountReport report;
  report.q = q;
  report.n = n;
  if (srim) {
    if (!g.empty() || !h.empty()) throw UsageError("--srim excludes --g/--h");
    if (n == 0) throw UsageError("--n must be >= 1");
    prime_power_decompose(q);
    report.formula_count = srim_count(q, n);
    report.map = "srim";
  } else {
    const FieldSpec spec = make_field(q);
    const QuadMap map = read_map(spec, g, h);
    report.map = map.to_string();
    report.formula_count = transform_count(q, n, map);
    if (!map.degenerate_even()) report.invariants = ramification_invariants(map, static_cast<unsigned>(n));
  }
  out << report.to_json().dump() << '\n';
  return kExitOk;
}

int cmd_transform(std::ostream& out, std::ostream& err, const std::string& q_text, const std::string& f_text,
                  const std::string& g, const std::string& h) {
  const FieldSpec spec = make_field(parse_field_order(q_text));
  const Poly f = Poly::parse(spec, f_text);
  const QuadMap map = read_map(spec, g, h);
  if (f.is_constant() || !f.is_monic()) throw UsageError("f must be monic of degree >= 1");
  if (!is_irreducible(f)) throw UsageError("f = " + f.to_string() + " is reducible");
  if (f.degree() == Degree(1)) err << "warning: n=1 outside main theorem\n";
  const Poly p = transform(f, map);
  out << p.to_string() << '\n';
  out << "irreducible: " << bool_text(!p.is_constant() && is_irreducible(p)) << '\n';
  return kExitOk;
}

int cmd_invariants(std::ostream& out, const std::string& q_text, unsigned n, const std::string& g,
                   const std::string& h) {
  if (n == 0) throw UsageError("--n must be >= 1");
  const FieldSpec spec = make_field(parse_field_order(q_text));
  const QuadMap map = read_map(spec, g, h);
  const RamInvariants inv = ramification_invariants(map, n);
  const int expected = expected_combination(map.field());
  const bool holds = inv.combination() == expected;
  out << "a=" << inv.a << " b=" << inv.b << " c=" << inv.c << " d=" << inv.d << '\n';
  out << "a-b-2c-d=" << inv.combination() << '\n';
  out << "expected=" << expected << '\n';
  out << "identity: " << (holds ? "holds" : "fails") << '\n';
  return holds ? kExitOk : kExitMismatch;
}

int cmd_srim(std::ostream& out, std::ostream& err, const std::string& q_text, unsigned deg, bool list, bool count,
             std::uint64_t f_cap, bool strict) {
  if (list == count) throw UsageError("give exactly one of --list and --count");
  if (deg == 0 || deg % 2 != 0) throw UsageError("srim degree must be even and positive");
  const FieldSpec spec = make_field(parse_field_order(q_text), f_cap);
  OracleOptions opts;
  opts.caps.f_space = f_cap;
  opts.strict = strict;
  opts.workers = default_workers();
  if (list) {
    for (const auto& f : brute_srim_list(spec, deg, opts)) out << f.to_string() << '\n';
    return kExitOk;
  }
  const BigInt formula = srim_count(spec->order(), deg / 2);
  std::optional<BigInt> oracle;
  try {
    oracle = brute_srim_count(spec, deg, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OracleCapExceeded || strict) throw;
    err << "warning: " << e.what() << '\n';
  }
  out << "formula=" << formula << " oracle=" << (oracle ? oracle->str() : "-")
      << " match=" << (oracle ? bool_text(*oracle == formula) : "-") << '\n';
  return (oracle && *oracle != formula) ? kExitMismatch : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic transformations of irreducible polynomials over finite fields", "quadirr"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  // INI-style file; verify options go under a [verify] section.
  app.set_config("--config", "", "Key=value file with verify options; flags override it");
  app.fallthrough();

  std::string q_text;
  std::string g_text;
  std::string h_text;
  std::string f_text;
  std::uint64_t n_count = 2;
  unsigned n_inv = 2;
  bool srim_flag = false;

  auto* count = app.add_subcommand("count", "Closed-form count for (q, n, map) or the SRIM count");
  count->add_option("--q", q_text, "Field order, N or p^k")->required();
  count->add_option("--n", n_count, "Degree of f (SRIM degree is 2n)")->required();
  count->add_option("--g", g_text, "g as ascending codes c0,c1,c2");
  count->add_option("--h", h_text, "h as ascending codes c0,c1[,c2]");
  count->add_flag("--srim", srim_flag, "Count self-reciprocal irreducible monic polynomials of degree 2n");

  auto* transform_cmd = app.add_subcommand("transform", "Apply a quadratic map to an irreducible f");
  transform_cmd->add_option("--q", q_text, "Field order, N or p^k")->required();
  transform_cmd->add_option("--f", f_text, "Monic irreducible f, ascending codes")->required();
  transform_cmd->add_option("--g", g_text, "g as ascending codes")->required();
  transform_cmd->add_option("--h", h_text, "h as ascending codes")->required();

  auto* invariants = app.add_subcommand("invariants", "Print (a, b, c, d) and check a-b-2c-d");
  invariants->add_option("--q", q_text, "Field order, N or p^k")->required();
  invariants->add_option("--n", n_inv, "Extension degree")->required();
  invariants->add_option("--g", g_text, "g as ascending codes")->required();
  invariants->add_option("--h", h_text, "h as ascending codes")->required();

  unsigned srim_deg = 0;
  bool srim_list = false;
  bool srim_count_flag = false;
  std::uint64_t f_cap = 0;
  bool strict = false;
  auto* srim = app.add_subcommand("srim", "List or count self-reciprocal irreducible monic polynomials");
  srim->add_option("--q", q_text, "Field order, N or p^k")->required();
  srim->add_option("--deg", srim_deg, "Even degree")->required();
  srim->add_flag("--list", srim_list, "Print every SRIM polynomial");
  srim->add_flag("--count", srim_count_flag, "Compare formula and enumeration");
  srim->add_option("--f-cap", f_cap, "Cap on Q^deg for enumeration");
  srim->add_flag("--strict-oracle", strict, "Trial division; cap overruns are errors");

  std::vector<std::string> q_list;
  std::string n_range = "2..2";
  std::string maps_spec;
  std::vector<std::string> explicit_maps;
  std::optional<std::uint64_t> seed;
  bool verify_srim = false;
  std::uint64_t beta_cap = OracleCaps{}.beta_space;
  std::string output = "table";
  unsigned workers = 0;
  long long offset = 0;
  auto* verify = app.add_subcommand("verify", "Compare formula and oracle over a grid");
  verify->configurable();
  verify->add_option("--q", q_list, "Field orders, N or p^k")->required()->delimiter(',');
  verify->add_option("--n", n_range, "Degree range a..b");
  verify->add_option("--maps", maps_spec, "random:<k>");
  verify->add_option("--map", explicit_maps, "Explicit map g/h, repeatable");
  verify->add_option("--seed", seed, "Seed for random maps");
  verify->add_flag("--srim", verify_srim, "Include the map (x^2+1, x)");
  verify->add_option("--f-cap", f_cap, "Cap on q^n for f enumeration");
  verify->add_option("--beta-cap", beta_cap, "Cap on q^n for element enumeration");
  verify->add_option("--output", output, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify->add_flag("--strict-oracle", strict, "Trial division; cap overruns are failures");
  verify->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");
  verify->add_option("--inject-formula-offset", offset)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(out, q_text, n_count, srim_flag, g_text, h_text);
    if (transform_cmd->parsed()) return cmd_transform(out, err, q_text, f_text, g_text, h_text);
    if (invariants->parsed()) return cmd_invariants(out, q_text, n_inv, g_text, h_text);
    if (srim->parsed()) {
      return cmd_srim(out, err, q_text, srim_deg, srim_list, srim_count_flag, f_cap ? f_cap : env_f_cap(), strict);
    }

    GridConfig config;
    for (const auto& q : q_list) config.q_list.push_back(parse_field_order(q));
    std::tie(config.n_min, config.n_max) = parse_range(n_range);
    if (!maps_spec.empty()) config.random_maps = parse_random_maps(maps_spec);
    config.explicit_maps = explicit_maps;
    config.seed = seed;
    config.include_srim = verify_srim;
    config.caps.f_space = f_cap ? f_cap : env_f_cap();
    config.caps.beta_space = beta_cap;
    config.strict_oracle = strict;
    config.workers = workers ? workers : default_workers();
    config.formula_offset = offset;
    const VerifyResult result = run_verify(config);
    for (const auto& o : result.outcomes) {
      if (o.warning) err << "warning: " << o.report.q << "^" << o.report.n << ": " << *o.warning << '\n';
    }
    out << (output == "json" ? render_json(result) : render_table(result));
    return result.all_match() ? kExitOk : kExitMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool internal = e.code() == ErrorCode::InternalInvariantViolation || e.code() == ErrorCode::NonIntegerResult;
    return internal ? kExitMismatch : kExitUsage;
  }
}

}  // namespace quadirr::cli
