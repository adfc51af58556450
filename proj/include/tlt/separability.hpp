#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tlt/bool_function.hpp"
#include "tlt/lp.hpp"
#include "tlt/rational.hpp"

namespace tlt
{

/*! \brief Weights and threshold with unit margin

  False points satisfy w.x <= t, true points satisfy w.y >= t + 1.
*/
struct threshold_cert
{
  std::vector<rational> weights;
  rational threshold;
};

/*! \brief r false and r true points (multisets) with equal coordinate sums */
struct summability_cert
{
  unsigned r = 0;
  std::vector<point> false_points;
  std::vector<point> true_points;
};

/*! \brief Outcome of check_threshold

  Exactly one of `cert` or the negative evidence is meaningful. When the
  function is not threshold, `summability` holds a validated certificate
  whenever one could be extracted, and `farkas` holds the simplex witness for
  `system` when the LP was run.
*/
struct threshold_verdict
{
  std::optional<threshold_cert> cert;
  std::optional<summability_cert> summability;
  std::optional<lp_infeasible> farkas;
  std::optional<lp_system> system;

  bool is_threshold() const noexcept { return cert.has_value(); }
  explicit operator bool() const noexcept { return is_threshold(); }
};

struct threshold_options
{
  /* force the literal one-constraint-per-point system instead of the reduced one */
  bool full_system = false;
  /* keep the solved LP system in the verdict */
  bool keep_system = false;
  lp_options lp;
};

/* w.x <= t on false points and w.y >= t + 1 on true points */
bool certifies( threshold_cert const& cert, bool_function const& f );

/* f(x) = 0 iff w.x <= t, without margin */
bool represents( threshold_cert const& cert, bool_function const& f );

/* membership of every listed point and equality of coordinate sums */
bool certifies( summability_cert const& cert, bool_function const& f );

rational weighted_sum( std::vector<rational> const& weights, point const& x );

/*! \brief One constraint per point over variables w_1..w_n, t (t is last) */
lp_system threshold_system( bool_function const& f );

/*! \brief Extremal-point constraints plus w_i >= 0; throws non_positive

  For positive f it is feasible iff threshold_system( f ) is.
*/
lp_system reduce_constraints( bool_function const& f );

/*! \brief Exact thresholdness decision

  Binate functions are rejected with a 2-summability certificate. Otherwise
  the function is made positive by complementing its negative variables and
  the reduced system is solved; weights are mapped back. With
  `options.full_system` the point-per-constraint system is solved directly.
  Every returned certificate is validated against all 2^n points.
*/
threshold_verdict check_threshold( bool_function const& f, threshold_options const& options = {} );

bool is_threshold( bool_function const& f );

/*! \brief Searches for an r-summability certificate with 2 <= r <= max_r

  r = 2 hashes sum vectors of false pairs against true pairs; larger r enumerate
  r-multisets of false points into a table and probe it with true multisets.
  `std::nullopt` only means no certificate with r <= max_r exists.
*/
std::optional<summability_cert> find_k_summability( bool_function const& f, unsigned max_r = 2 );

} // namespace tlt
