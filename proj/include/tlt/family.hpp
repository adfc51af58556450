#pragma once

#include <string>
#include <vector>

#include "tlt/bool_function.hpp"
#include "tlt/dnf.hpp"
#include "tlt/separability.hpp"

namespace tlt
{

/*! \brief The function x1x2 | x1x3 | ... | x1x_{n-1} | x2x3...xn with its expected data

  Minimal ones are x_1..x_{n-1}, maximal zeros y_1..y_{n-2} followed by z_1, z_2.
  Weights (2n-5, 2, ..., 2, 1) with threshold 2n-4 represent the function,
  and exactly x_1..x_{n-1}, z_1, z_2 are essential.
*/
struct family_instance
{
  unsigned n = 0;
  std::vector<positive_term> dnf_terms;
  std::vector<positive_term> cnf_clauses;
  bool_function function;
  std::vector<point> minimal_ones;  /* x_1 .. x_{n-1} */
  std::vector<point> y_points;      /* y_1 .. y_{n-2} */
  point z1;
  point z2;
  std::vector<long> weights;
  long threshold = 0;
  std::size_t spec_number = 0;
  std::size_t r = 0;

  std::vector<point> maximal_zeros() const;
  /* x_1..x_{n-1}, z_1, z_2 */
  std::vector<point> essential() const;
  threshold_cert cert() const;
  std::string dnf() const;
  std::string cnf() const;
};

/* throws std::invalid_argument unless 4 <= n <= max_arity */
family_instance make_family( unsigned n );

/* evaluates a positive CNF (clauses of positive literals) */
bool_function cnf_to_function( std::vector<positive_term> const& clauses, unsigned arity );

struct family_check
{
  std::string name;
  bool passed = false;
  std::string detail;
};

struct family_verdict
{
  unsigned n = 0;
  std::vector<family_check> checks;
  std::vector<point> essential;
  std::size_t spec_number = 0;
  std::vector<summability_cert> y_certificates;

  bool passed() const;
};

/*! \brief Checks every claimed property of the instance

  Essential points use the extremal-only mode; at n = 4 the all-points mode is
  rerun and must agree. Each y_i flip must carry an r = 2 certificate.
*/
family_verdict verify_family( family_instance const& inst, unsigned threads = 1 );

} // namespace tlt
