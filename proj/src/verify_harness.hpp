#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "complex_core.hpp"

namespace symb {

struct suite_result {
  std::string suite_name;
  std::size_t n_samples = 0;
  std::size_t n_skipped_boundary = 0;
  double max_violation = -1.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

struct suite_info {
  const char* name;
  std::size_t default_samples;
  // pass iff max_violation <= tolerance; suites that aggregate several
  // sub-checks normalize each one to (residual - subtol)/subtol and use 0.
  double tolerance;
};

const std::vector<suite_info>& suite_registry();

// Invariant ownership table: every tracked invariant is owned by exactly one
// suite (or by a named unit test for the meta-invariants, owner "unit:...").
struct invariant_record {
  const char* id;
  const char* owner;
};

const std::vector<invariant_record>& invariant_registry();

// Deterministic per (name, n, seed): sampling is derived per-sample from
// seed + index, so results are order-independent.
suite_result run_suite(std::string_view name, std::size_t n, std::uint64_t seed,
                       const tolerance_config& cfg = default_tolerances());

// Runs every registered suite at round(default_samples * n_scale) samples
// (minimum 2).
std::vector<suite_result> run_all(double n_scale, std::uint64_t seed,
                                  const tolerance_config& cfg = default_tolerances());

bool all_pass(const std::vector<suite_result>& results);

// Canonical single-line JSON record; excludes elapsed time so certificates
// are byte-reproducible.
std::string certificate_line(const suite_result& r);
std::string certificate(const std::vector<suite_result>& results);

} // namespace symb
