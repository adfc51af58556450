#include "tlt/bool_function.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "tlt/errors.hpp"

namespace tlt
{

namespace
{

std::size_t words_for( unsigned arity )
{
  return arity <= 6u ? 1u : ( std::size_t{ 1 } << ( arity - 6u ) );
}

std::uint64_t low_mask( unsigned arity )
{
  return arity >= 6u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << arity ) ) - 1u );
}

void check_arity( unsigned arity )
{
  if ( arity > max_arity )
  {
    throw unsupported_arity( "arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_arity ) );
  }
}

void check_variable( bool_function const& f, unsigned i )
{
  if ( i < 1u || i > f.arity() )
  {
    throw index_out_of_range( "variable index " + std::to_string( i ) + " out of range 1.." + std::to_string( f.arity() ) );
  }
}

/* index of the point obtained by inserting value `a` at 0-based position `pos` of `j` */
inline std::uint32_t insert_bit( std::uint32_t j, unsigned pos, bool a )
{
  auto const low = j & ( ( std::uint32_t{ 1 } << pos ) - 1u );
  auto const high = j >> pos;
  return low | ( std::uint32_t{ a } << pos ) | ( high << ( pos + 1u ) );
}

} // namespace

bool_function::bool_function( unsigned arity, bool value ) : arity_( arity )
{
  check_arity( arity );
  words_.assign( words_for( arity ), value ? ~std::uint64_t{ 0 } : 0u );
  words_[0] &= low_mask( arity );
}

bool_function bool_function::from_predicate( unsigned arity, std::function<bool( std::uint32_t )> const& fn )
{
  bool_function f( arity, false );
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    if ( fn( j ) )
    {
      f.set( j, true );
    }
  }
  return f;
}

bool_function bool_function::from_word( unsigned arity, std::uint64_t table )
{
  if ( arity > 6u )
  {
    throw unsupported_arity( "from_word supports at most 6 variables" );
  }
  bool_function f( arity, false );
  f.words_[0] = table & low_mask( arity );
  return f;
}

bool_function bool_function::from_table_string( std::string_view text )
{
  auto const colon = text.find( ':' );
  if ( colon == std::string_view::npos )
  {
    throw parse_error( "expected '<arity>:<bitstring>'", text.size() );
  }
  unsigned arity = 0;
  auto const head = text.substr( 0, colon );
  auto const [ptr, ec] = std::from_chars( head.data(), head.data() + head.size(), arity );
  if ( ec != std::errc{} || ptr != head.data() + head.size() || head.empty() )
  {
    throw parse_error( "invalid arity", 0 );
  }
  if ( arity > max_arity )
  {
    throw unsupported_arity( "arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_arity ) );
  }
  auto const bits = text.substr( colon + 1u );
  auto const expected = std::size_t{ 1 } << arity;
  if ( bits.size() != expected )
  {
    throw parse_error( "bitstring must have length " + std::to_string( expected ), colon + 1u + std::min( bits.size(), expected ) );
  }
  bool_function f( arity, false );
  for ( std::size_t j = 0; j < bits.size(); ++j )
  {
    if ( bits[j] == '1' )
    {
      f.set( static_cast<std::uint32_t>( j ), true );
    }
    else if ( bits[j] != '0' )
    {
      throw parse_error( "expected '0' or '1'", colon + 1u + j );
    }
  }
  return f;
}

bool bool_function::evaluate( point const& x ) const
{
  if ( x.arity != arity_ )
  {
    throw arity_mismatch( "point of arity " + std::to_string( x.arity ) + " for function of arity " + std::to_string( arity_ ) );
  }
  return ( *this )[x.bits];
}

std::optional<bool> bool_function::constant_value() const
{
  auto const full = low_mask( arity_ );
  if ( std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } ) )
  {
    return false;
  }
  if ( std::all_of( words_.begin(), words_.end(), [full]( auto w ) { return w == full; } ) )
  {
    return true;
  }
  return std::nullopt;
}

std::uint32_t bool_function::count_ones() const
{
  std::uint32_t count = 0;
  for ( auto w : words_ )
  {
    count += static_cast<std::uint32_t>( std::popcount( w ) );
  }
  return count;
}

std::string bool_function::bitstring() const
{
  std::string s( num_points(), '0' );
  for ( std::uint32_t j = 0; j < num_points(); ++j )
  {
    if ( ( *this )[j] )
    {
      s[j] = '1';
    }
  }
  return s;
}

std::string bool_function::to_table_string() const
{
  return std::to_string( arity_ ) + ":" + bitstring();
}

bool_function bool_function::with_flipped( std::uint32_t index ) const
{
  if ( index >= num_points() )
  {
    throw index_out_of_range( "table index out of range" );
  }
  bool_function g = *this;
  g.set( index, !( *this )[index] );
  return g;
}

void bool_function::set( std::uint32_t index, bool value )
{
  auto const mask = std::uint64_t{ 1 } << ( index & 63u );
  if ( value )
  {
    words_[index >> 6u] |= mask;
  }
  else
  {
    words_[index >> 6u] &= ~mask;
  }
}

bool operator<( bool_function const& a, bool_function const& b )
{
  if ( a.arity() != b.arity() )
  {
    return a.arity() < b.arity();
  }
  return a.bitstring() < b.bitstring();
}

bool evaluate( bool_function const& f, point const& x )
{
  return f.evaluate( x );
}

bool_function restrict( bool_function const& f, unsigned i, bool a )
{
  check_variable( f, i );
  auto const pos = i - 1u;
  return bool_function::from_predicate( f.arity() - 1u, [&]( std::uint32_t j ) { return f[insert_bit( j, pos, a )]; } );
}

bool is_relevant( bool_function const& f, unsigned i )
{
  return restrict( f, i, false ) != restrict( f, i, true );
}

std::vector<unsigned> relevant_variables( bool_function const& f )
{
  std::vector<unsigned> vars;
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    if ( is_relevant( f, i ) )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

bool depends_on_all_variables( bool_function const& f )
{
  return relevant_variables( f ).size() == f.arity();
}

bool is_positive( bool_function const& f )
{
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    if ( !f[j] )
    {
      continue;
    }
    for ( auto pos = 0u; pos < f.arity(); ++pos )
    {
      auto const up = j | ( std::uint32_t{ 1 } << pos );
      if ( up != j && !f[up] )
      {
        return false;
      }
    }
  }
  return true;
}

extremal_set extremal_points( bool_function const& f )
{
  if ( !is_positive( f ) )
  {
    throw non_positive();
  }
  extremal_set result;
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    auto const value = f[j];
    bool extremal = true;
    for ( auto pos = 0u; pos < f.arity() && extremal; ++pos )
    {
      auto const mask = std::uint32_t{ 1 } << pos;
      if ( !value && !( j & mask ) )
      {
        extremal = f[j | mask];
      }
      else if ( value && ( j & mask ) )
      {
        extremal = !f[j & ~mask];
      }
    }
    if ( extremal )
    {
      ( value ? result.minimal_ones : result.maximal_zeros ).emplace_back( f.arity(), j );
    }
  }
  return result;
}

std::string serialize( bool_function const& f )
{
  return f.to_table_string();
}

} // namespace tlt
