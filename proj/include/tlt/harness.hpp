#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

struct counterexample
{
  std::string subject; /* truth table, or a label for gate checks */
  std::vector<std::string> failures;
};

/*! \brief Result of one verifier over one universe

  `passed + counterexamples.size() == population`. Observations are
  report-only measurements that never count as failures.
*/
struct verification_report
{
  std::string id;
  std::string statement;
  std::string universe;
  std::size_t population = 0;
  std::size_t passed = 0;
  std::vector<counterexample> counterexamples;
  std::map<std::string, std::int64_t> observations;
  double wall_seconds = 0.0;

  bool ok() const noexcept { return counterexamples.empty(); }
};

struct harness_config
{
  std::vector<std::string> suites{ "all" };
  /* per-suite arity cap; each suite has its own default when unset */
  std::optional<unsigned> max_n;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed2019u;
  unsigned random_draws = 20;
  std::size_t essential_sample = 200;
};

std::vector<std::string> const& suite_names();

/* monotone counts for n = 0..max_n and threshold counts for n = 1..min(max_n, 4) */
verification_report verify_enumeration_gates( unsigned max_monotone_n, unsigned max_threshold_n );

/* r >= k+1 for positive threshold f, with equality exactly on linear read-once f */
std::vector<verification_report> verify_theorem_extremal( unsigned max_n, unsigned threads = 1 );

/* sigma >= n+1 over H_n and sigma = n+1 on nested functions, n = 1..max_n (<= 4) */
std::vector<verification_report> verify_hu_bound( unsigned max_n, unsigned threads = 1 );

/* essential set specifies f, and no proper subset missing one point does */
std::vector<verification_report> verify_essential_specifies( unsigned max_exhaustive_n, std::size_t sample_n4,
                                                             std::uint64_t seed, unsigned threads = 1 );

/* extremal graphs of positive threshold functions are acyclic for every variable subset */
std::vector<verification_report> verify_acyclicity( unsigned max_n, unsigned random_draws, std::uint64_t seed,
                                                    unsigned threads = 1 );

/* split counting, common split variable, and the non-split bound r >= k+2 */
std::vector<verification_report> verify_split_lemmas( unsigned max_n, unsigned threads = 1 );

/* partition of extremal points by one coordinate, for every positive f */
std::vector<verification_report> verify_partition( unsigned max_n, unsigned threads = 1 );

/* recognizer soundness and the linear read-once observations */
std::vector<verification_report> verify_lro_properties( unsigned max_all_n, unsigned max_monotone_n, unsigned threads = 1 );

/* the counterexample family for n = 4..max_n */
verification_report verify_family_range( unsigned max_n, unsigned threads = 1 );

/* report-only: 2-summability of non-threshold functions */
std::vector<verification_report> summability_census( unsigned max_n, unsigned threads = 1 );

/*! \brief Runs the configured suites

  The enumeration gate always runs first; when it fails no other suite runs.
*/
std::vector<verification_report> run_all( harness_config const& config );

bool all_ok( std::vector<verification_report> const& reports );

std::string format_report_table( std::vector<verification_report> const& reports );

} // namespace tlt
