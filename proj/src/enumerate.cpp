#include "tlt/enumerate.hpp"

#include <algorithm>
#include <array>

#include "tlt/errors.hpp"

namespace tlt
{

void for_each_function( unsigned n, std::function<void( bool_function const& )> const& fn )
{
  if ( n > 4u )
  {
    throw unsupported_arity( "exhaustive enumeration of all functions supports n <= 4" );
  }
  auto const count = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );
  for ( std::uint64_t t = 0; t < count; ++t )
  {
    fn( bool_function::from_word( n, t ) );
  }
}

std::vector<bool_function> enumerate_all_functions( unsigned n )
{
  std::vector<bool_function> all;
  for_each_function( n, [&]( auto const& f ) { all.push_back( f ); } );
  return all;
}

namespace
{

std::vector<std::uint64_t> monotone_below_six( unsigned n )
{
  std::vector<std::uint64_t> current{ 0u, 1u };
  for ( auto m = 1u; m <= n; ++m )
  {
    auto const half = 1u << ( m - 1u );
    std::vector<std::uint64_t> next;
    for ( auto f0 : current )
    {
      for ( auto f1 : current )
      {
        if ( ( f0 & ~f1 ) == 0u )
        {
          next.push_back( f0 | ( f1 << half ) );
        }
      }
    }
    std::sort( next.begin(), next.end() );
    current = std::move( next );
  }
  return current;
}

} // namespace

std::vector<std::uint64_t> monotone_tables( unsigned n )
{
  if ( n > 6u )
  {
    throw unsupported_arity( "monotone enumeration supports n <= 6" );
  }
  if ( n < 6u )
  {
    return monotone_below_six( n );
  }
  auto const lower = monotone_below_six( 5u );
  std::vector<std::uint64_t> result;
  result.reserve( dedekind_number( 6u ) );
  for ( auto f0 : lower )
  {
    for ( auto f1 : lower )
    {
      if ( ( f0 & ~f1 ) == 0u )
      {
        result.push_back( f0 | ( f1 << 32u ) );
      }
    }
  }
  std::sort( result.begin(), result.end() );
  return result;
}

void for_each_monotone( unsigned n, std::function<void( bool_function const& )> const& fn )
{
  for ( auto t : monotone_tables( n ) )
  {
    fn( bool_function::from_word( n, t ) );
  }
}

std::vector<bool_function> enumerate_monotone( unsigned n )
{
  std::vector<bool_function> all;
  for_each_monotone( n, [&]( auto const& f ) { all.push_back( f ); } );
  return all;
}

std::uint64_t dedekind_number( unsigned n )
{
  static constexpr std::array<std::uint64_t, 7> numbers{ 2, 3, 6, 20, 168, 7581, 7828354 };
  if ( n >= numbers.size() )
  {
    throw unsupported_arity( "Dedekind numbers tabulated for n <= 6" );
  }
  return numbers[n];
}

} // namespace tlt
