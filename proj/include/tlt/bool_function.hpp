#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlt/point.hpp"

namespace tlt
{

/*! \brief A Boolean function of n <= 16 variables stored as a truth table

  Entry j of the table is f evaluated at the point whose integer encoding is j.
  Functions are values: every operation below returns a new function.
*/
class bool_function
{
public:
  bool_function() = default;

  /*! \brief Constant function of `arity` variables */
  bool_function( unsigned arity, bool value );

  /*! \brief Function of `arity` variables whose table is produced by `fn` */
  static bool_function from_predicate( unsigned arity, std::function<bool( std::uint32_t )> const& fn );

  /*! \brief Function of at most 6 variables from the low 2^arity bits of `table` */
  static bool_function from_word( unsigned arity, std::uint64_t table );

  /*! \brief Parses `<arity>:<bitstring>` */
  static bool_function from_table_string( std::string_view text );

  unsigned arity() const noexcept { return arity_; }
  std::uint32_t num_points() const noexcept { return std::uint32_t{ 1 } << arity_; }

  bool operator[]( std::uint32_t index ) const { return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u; }
  bool evaluate( point const& x ) const;

  /* low word of the table; the whole table when arity <= 6 */
  std::uint64_t word() const noexcept { return words_.empty() ? 0u : words_[0]; }
  std::vector<std::uint64_t> const& words() const noexcept { return words_; }

  std::optional<bool> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  std::uint32_t count_ones() const;

  /* table bits only, index 0 leftmost */
  std::string bitstring() const;
  /* `<arity>:<bitstring>` */
  std::string to_table_string() const;

  bool_function with_flipped( std::uint32_t index ) const;

  friend bool operator==( bool_function const&, bool_function const& ) = default;
  friend bool operator<( bool_function const& a, bool_function const& b );

private:
  void set( std::uint32_t index, bool value );

  unsigned arity_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>( 1, 0u );
};

/*! \brief Extremal points of a positive function, both lists sorted by encoding */
struct extremal_set
{
  std::vector<point> maximal_zeros;
  std::vector<point> minimal_ones;

  std::size_t r() const noexcept { return maximal_zeros.size() + minimal_ones.size(); }
};

bool evaluate( bool_function const& f, point const& x );

/*! \brief The (n-1)-variable function f|x_i=a

  Variables after x_i shift down by one position.
*/
bool_function restrict( bool_function const& f, unsigned i, bool a );

bool is_relevant( bool_function const& f, unsigned i );
std::vector<unsigned> relevant_variables( bool_function const& f );
bool depends_on_all_variables( bool_function const& f );

/*! \brief Checks monotonicity over every single-bit upward neighbor pair */
bool is_positive( bool_function const& f );

/*! \brief Maximal zeros and minimal ones; throws non_positive */
extremal_set extremal_points( bool_function const& f );

/*! \brief Canonical table form `<arity>:<bitstring>` */
std::string serialize( bool_function const& f );

} // namespace tlt
