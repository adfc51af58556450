#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

/* f with its value at p negated */
bool_function flip( bool_function const& f, point const& p );

/*! \brief Whether the single-point flip of f at p is a threshold function

  The function g of the essential-point definition is forced pointwise, so the
  existential reduces to one thresholdness test. Throws not_threshold_input.
*/
bool is_essential( bool_function const& f, point const& p );

enum class candidate_mode
{
  all_points,
  /* positive f depending on all its variables: only extremal points can be essential */
  extremal_only
};

struct essential_report
{
  bool_function function;
  std::vector<point> essential;
  std::size_t spec_number = 0;
};

/*! \brief Essential points and the specification number

  `extremal_only` is opt-in and throws std::invalid_argument for functions
  that are not positive or have an irrelevant variable. Flip tests run on up
  to `threads` workers (0 = hardware concurrency).
*/
essential_report essential_points( bool_function const& f, candidate_mode mode = candidate_mode::all_points,
                                   unsigned threads = 1 );

/* exact threshold-count for n = 0..4 */
std::size_t expected_threshold_count( unsigned n );

/*! \brief The class H_n of threshold functions, n <= 4

  Built once per arity by filtering all truth tables with check_threshold and
  kept for the process lifetime. When `cache_dir` (or TLT_CACHE_DIR) names a
  directory, the class is read from `<dir>/threshold_class_<n>.txt` if that
  file holds the expected number of entries, otherwise regenerated and
  written there. Entries are sorted by bitstring.
*/
std::vector<bool_function> const& threshold_class( unsigned n );
std::vector<bool_function> load_or_build_threshold_class( unsigned n, std::optional<std::filesystem::path> const& cache_dir );
std::optional<std::filesystem::path> default_cache_dir();

/*! \brief Whether S specifies f within H_n (n <= 4)

  Throws unsupported_arity for n > 4 and not_threshold_input when f is not in H_n.
*/
bool specifies( bool_function const& f, std::vector<point> const& set );

} // namespace tlt
