#include "tlt/point.hpp"

#include <bit>

#include "tlt/errors.hpp"

namespace tlt
{

point::point( unsigned arity, std::uint32_t bits ) : arity( arity ), bits( bits )
{
  if ( arity > max_arity )
  {
    throw unsupported_arity( "point arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_arity ) );
  }
  if ( bits >= ( std::uint32_t{ 1 } << arity ) )
  {
    throw index_out_of_range( "point value " + std::to_string( bits ) + " does not fit in " + std::to_string( arity ) + " bits" );
  }
}

point point::with( unsigned i, bool value ) const
{
  if ( i < 1u || i > arity )
  {
    throw index_out_of_range( "coordinate " + std::to_string( i ) + " out of range" );
  }
  auto const mask = std::uint32_t{ 1 } << ( i - 1u );
  point p = *this;
  p.bits = value ? ( bits | mask ) : ( bits & ~mask );
  return p;
}

unsigned point::weight() const
{
  return static_cast<unsigned>( std::popcount( bits ) );
}

std::string point::to_string() const
{
  std::string s( arity, '0' );
  for ( auto i = 0u; i < arity; ++i )
  {
    if ( ( bits >> i ) & 1u )
    {
      s[i] = '1';
    }
  }
  return s;
}

point point::from_string( std::string_view text )
{
  if ( text.size() > max_arity )
  {
    throw unsupported_arity( "point has more than " + std::to_string( max_arity ) + " coordinates" );
  }
  std::uint32_t bits = 0;
  for ( auto i = 0u; i < text.size(); ++i )
  {
    if ( text[i] == '1' )
    {
      bits |= std::uint32_t{ 1 } << i;
    }
    else if ( text[i] != '0' )
    {
      throw parse_error( "expected '0' or '1' in point", i );
    }
  }
  return point( static_cast<unsigned>( text.size() ), bits );
}

bool below( point const& x, point const& y )
{
  if ( x.arity != y.arity )
  {
    throw arity_mismatch( "cannot compare points of different arity" );
  }
  return ( x.bits & y.bits ) == x.bits;
}

} // namespace tlt
