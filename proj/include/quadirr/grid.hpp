#pragma once

// Formula-versus-oracle verification over a grid of (q, n, map) instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadirr/counting.hpp"
#include "quadirr/oracle.hpp"

namespace quadirr {

struct GridConfig {
  std::vector<std::uint64_t> q_list;
  unsigned n_min = 2;
  unsigned n_max = 2;
  std::vector<std::string> explicit_maps;  // "g/h", e.g. "1,0,1/0,1"
  unsigned random_maps = 0;
  std::optional<std::uint64_t> seed;
  bool include_srim = false;
  OracleCaps caps;
  bool strict_oracle = false;  // naive irreducibility; cap overruns become failures
  unsigned workers = 1;
  long long formula_offset = 0;  // test hook: shifts every formula count
};

// Throws InvalidArgument describing the first problem found.
void validate_grid_config(const GridConfig& config);

// k distinct valid maps over spec, non-degenerate, drawn by rejection from a
// generator seeded with (seed, q). Same seed, same maps.
std::vector<QuadMap> random_maps(const FieldSpec& spec, unsigned k, std::uint64_t seed);

// Parses "g/h" in ascending code form.
QuadMap parse_map(const FieldSpec& spec, const std::string& text);

enum class InstanceStatus { match, mismatch, skipped, failed };

struct GridOutcome {
  std::size_t map_index = 0;
  CountReport report;
  InstanceStatus status = InstanceStatus::skipped;
  std::optional<std::string> warning;
};

struct VerifyResult {
  std::vector<GridOutcome> outcomes;  // ordered by (q, n, map index)

  std::size_t count(InstanceStatus s) const;
  bool all_match() const;  // no mismatch and no failure
};

VerifyResult run_verify(const GridConfig& config);

// Aligned columns q | n | map | formula | oracle | a b c d | match, then a
// summary that lists mismatches first.
std::string render_table(const VerifyResult& result);

// One sorted-key JSON object per instance per line, then a summary line.
std::string render_json(const VerifyResult& result);

}  // namespace quadirr
