#pragma once

/* Definition-level reimplementations used to cross-check the library. They
   only read truth-table entries and never call library algorithms. */

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "tlt/bool_function.hpp"

namespace oracle
{

inline bool value( tlt::bool_function const& f, std::uint32_t x )
{
  return f[x];
}

inline bool below( std::uint32_t x, std::uint32_t y )
{
  return ( x & ~y ) == 0u;
}

/* f(x) <= f(y) for every pair x below y */
inline bool is_positive( tlt::bool_function const& f )
{
  auto const size = std::uint32_t{ 1 } << f.arity();
  for ( std::uint32_t x = 0; x < size; ++x )
  {
    for ( std::uint32_t y = 0; y < size; ++y )
    {
      if ( below( x, y ) && value( f, x ) && !value( f, y ) )
      {
        return false;
      }
    }
  }
  return true;
}

/* some pair of points differing only in coordinate i has different values */
inline bool is_relevant( tlt::bool_function const& f, unsigned i )
{
  auto const size = std::uint32_t{ 1 } << f.arity();
  auto const bit = std::uint32_t{ 1 } << ( i - 1u );
  for ( std::uint32_t x = 0; x < size; ++x )
  {
    if ( value( f, x ) != value( f, x ^ bit ) )
    {
      return true;
    }
  }
  return false;
}

/* maximal zeros: false points with no false point strictly above; dually minimal ones */
inline std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>> extremal( tlt::bool_function const& f )
{
  auto const size = std::uint32_t{ 1 } << f.arity();
  std::set<std::uint32_t> zeros, ones;
  for ( std::uint32_t x = 0; x < size; ++x )
  {
    bool maximal = true, minimal = true;
    for ( std::uint32_t y = 0; y < size; ++y )
    {
      if ( y == x )
      {
        continue;
      }
      if ( below( x, y ) && !value( f, y ) )
      {
        maximal = false;
      }
      if ( below( y, x ) && value( f, y ) )
      {
        minimal = false;
      }
    }
    if ( !value( f, x ) && maximal )
    {
      zeros.insert( x );
    }
    if ( value( f, x ) && minimal )
    {
      ones.insert( x );
    }
  }
  return { zeros, ones };
}

namespace detail
{

inline std::uint64_t count_antichains( std::vector<std::uint32_t> const& elements, std::size_t from,
                                       std::vector<std::uint32_t>& chosen )
{
  std::uint64_t total = 1; /* the antichain `chosen` itself */
  for ( auto k = from; k < elements.size(); ++k )
  {
    auto const e = elements[k];
    bool const comparable = std::any_of( chosen.begin(), chosen.end(), [e]( auto c ) { return below( c, e ) || below( e, c ); } );
    if ( comparable )
    {
      continue;
    }
    chosen.push_back( e );
    total += count_antichains( elements, k + 1u, chosen );
    chosen.pop_back();
  }
  return total;
}

} // namespace detail

/* monotone functions of n variables correspond to antichains of the n-cube (their minimal ones) */
inline std::uint64_t antichains_of_cube( unsigned n )
{
  std::vector<std::uint32_t> elements( std::size_t{ 1 } << n );
  for ( std::uint32_t x = 0; x < elements.size(); ++x )
  {
    elements[x] = x;
  }
  std::vector<std::uint32_t> chosen;
  return detail::count_antichains( elements, 0, chosen );
}

/*! Threshold functions of n <= 4 variables by integer weight search

  Every threshold function of at most four variables has integer weights of
  magnitude at most 3, so the grid [-bound, bound]^n with thresholds between
  consecutive attainable sums covers the class.
*/
inline std::set<std::uint64_t> threshold_tables_by_grid( unsigned n, int bound = 4 )
{
  std::set<std::uint64_t> tables;
  auto const size = std::uint32_t{ 1 } << n;
  std::vector<int> w( n, -bound );
  while ( true )
  {
    std::vector<int> sums( size, 0 );
    for ( std::uint32_t x = 0; x < size; ++x )
    {
      for ( auto i = 0u; i < n; ++i )
      {
        sums[x] += ( ( x >> i ) & 1u ) ? w[i] : 0;
      }
    }
    auto const max_sum = bound * static_cast<int>( n );
    /* threshold t + 1/2 for t from -max_sum - 1 to max_sum: f(x) = 1 iff sum > t */
    for ( int t = -max_sum - 1; t <= max_sum; ++t )
    {
      std::uint64_t table = 0;
      for ( std::uint32_t x = 0; x < size; ++x )
      {
        if ( sums[x] > t )
        {
          table |= std::uint64_t{ 1 } << x;
        }
      }
      tables.insert( table );
    }
    std::size_t k = 0;
    while ( k < n && w[k] == bound )
    {
      w[k] = -bound;
      ++k;
    }
    if ( k == n )
    {
      break;
    }
    ++w[k];
  }
  return tables;
}

} // namespace oracle
