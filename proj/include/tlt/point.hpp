#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tlt
{

inline constexpr unsigned max_arity = 16u;

/*! \brief An assignment in B^n

  Coordinate x_i (1-based) is stored at bit position i-1, so x_1 is the least
  significant bit and the integer value of the point is its truth-table index.
*/
struct point
{
  unsigned arity = 0;
  std::uint32_t bits = 0;

  point() = default;
  point( unsigned arity, std::uint32_t bits );

  /* coordinate x_i, 1-based */
  bool operator[]( unsigned i ) const { return ( bits >> ( i - 1u ) ) & 1u; }

  point with( unsigned i, bool value ) const;
  unsigned weight() const;

  /* bitstring with x_1 leftmost, e.g. (0,0,1,1) -> "0011" */
  std::string to_string() const;
  static point from_string( std::string_view text );

  friend bool operator==( point const&, point const& ) = default;
  friend auto operator<=>( point const&, point const& ) = default;
};

/*! \brief x below y in the componentwise order */
bool below( point const& x, point const& y );

} // namespace tlt
