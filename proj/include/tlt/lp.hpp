#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "tlt/rational.hpp"

namespace tlt
{

enum class relation
{
  less_equal,
  greater_equal
};

struct lp_constraint
{
  std::vector<rational> coefficients;
  relation rel = relation::less_equal;
  rational rhs;
};

/*! \brief A system of linear inequalities over free (unbounded) variables */
struct lp_system
{
  std::size_t num_vars = 0;
  std::vector<lp_constraint> constraints;

  explicit lp_system( std::size_t num_vars = 0 ) : num_vars( num_vars ) {}

  /* throws std::invalid_argument on a coefficient vector of the wrong length */
  void add( std::vector<rational> coefficients, relation rel, rational rhs );

  /* true iff `values` satisfies every constraint exactly */
  bool satisfied_by( std::vector<rational> const& values ) const;
};

struct lp_feasible_point
{
  std::vector<rational> values;
};

/*! \brief Farkas witness of infeasibility

  `multipliers[k] >= 0` scales constraint k written in `<=` form (a `>=` row is
  negated first). The scaled rows sum to the zero vector while their right-hand
  sides sum to a negative number.
*/
struct lp_infeasible
{
  std::vector<rational> multipliers;
};

using lp_result = std::variant<lp_feasible_point, lp_infeasible>;

struct lp_options
{
  std::size_t max_iterations = 1'000'000;
};

/*! \brief Exact phase-1 simplex with Bland's rule

  Returns a point satisfying every constraint, or a Farkas witness. Both
  outcomes are re-validated before returning. Throws resource_limit when the
  pivot count exceeds `options.max_iterations`.
*/
lp_result lp_feasible( lp_system const& sys, lp_options const& options = {} );

/* true iff `witness` proves `sys` infeasible */
bool certifies_infeasible( lp_system const& sys, lp_infeasible const& witness );

} // namespace tlt
