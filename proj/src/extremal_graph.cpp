#include "tlt/extremal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tlt/errors.hpp"

namespace tlt
{

namespace
{

/* (a)_j >= (b)_j for all j other than i */
bool dominates_off( point const& a, point const& b, unsigned i )
{
  auto const mask = ~( std::uint32_t{ 1 } << ( i - 1u ) );
  return ( b.bits & mask & ~a.bits ) == 0u;
}

bool contains( std::vector<point> const& sorted, point const& p )
{
  return std::binary_search( sorted.begin(), sorted.end(), p );
}

void require_relevant( bool_function const& f, unsigned i )
{
  if ( i < 1u || i > f.arity() )
  {
    throw index_out_of_range( "variable index " + std::to_string( i ) + " out of range" );
  }
  if ( !is_relevant( f, i ) )
  {
    throw irrelevant_variable( "x" + std::to_string( i ) + " is irrelevant" );
  }
}

point descend( bool_function const& f, point b )
{
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( auto pos = f.arity(); pos-- > 0u; )
    {
      auto const mask = std::uint32_t{ 1 } << pos;
      if ( ( b.bits & mask ) && f[b.bits & ~mask] )
      {
        b.bits &= ~mask;
        changed = true;
        break;
      }
    }
  }
  return b;
}

point ascend( bool_function const& f, point a )
{
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( auto pos = f.arity(); pos-- > 0u; )
    {
      auto const mask = std::uint32_t{ 1 } << pos;
      if ( !( a.bits & mask ) && !f[a.bits | mask] )
      {
        a.bits |= mask;
        changed = true;
        break;
      }
    }
  }
  return a;
}

} // namespace

bool is_extremal_pair( extremal_set const& ext, extremal_pair const& pair )
{
  auto const i = pair.variable;
  if ( i < 1u || i > pair.a.arity || pair.a.arity != pair.b.arity )
  {
    return false;
  }
  return contains( ext.maximal_zeros, pair.a ) && contains( ext.minimal_ones, pair.b ) && !pair.a[i] && pair.b[i] &&
         dominates_off( pair.a, pair.b, i );
}

bool is_extremal_pair( bool_function const& f, extremal_pair const& pair )
{
  return pair.a.arity == f.arity() && is_extremal_pair( extremal_points( f ), pair );
}

extremal_pair find_extremal_pair( bool_function const& f, unsigned i, std::optional<point> const& seed )
{
  if ( !is_positive( f ) )
  {
    throw non_positive();
  }
  require_relevant( f, i );
  auto const ext = extremal_points( f );

  extremal_pair pair;
  pair.variable = i;
  if ( seed && contains( ext.maximal_zeros, *seed ) && !( *seed )[i] )
  {
    pair.a = *seed;
    pair.b = descend( f, seed->with( i, true ) );
  }
  else if ( seed && contains( ext.minimal_ones, *seed ) && ( *seed )[i] )
  {
    pair.b = *seed;
    pair.a = ascend( f, seed->with( i, false ) );
  }
  else if ( seed )
  {
    throw std::invalid_argument( "seed " + seed->to_string() + " is not an extremal point corresponding to x" + std::to_string( i ) );
  }
  else
  {
    auto const it = std::find_if( ext.maximal_zeros.begin(), ext.maximal_zeros.end(), [i]( auto const& a ) { return !a[i]; } );
    if ( it == ext.maximal_zeros.end() )
    {
      throw std::logic_error( "relevant variable without a corresponding maximal zero" );
    }
    pair.a = *it;
    pair.b = descend( f, it->with( i, true ) );
  }
  if ( !is_extremal_pair( ext, pair ) )
  {
    throw std::logic_error( "constructed pair is not x" + std::to_string( i ) + "-extremal" );
  }
  return pair;
}

std::vector<extremal_pair> all_extremal_pairs( extremal_set const& ext, unsigned i )
{
  std::vector<extremal_pair> pairs;
  for ( auto const& a : ext.maximal_zeros )
  {
    if ( a[i] )
    {
      continue;
    }
    for ( auto const& b : ext.minimal_ones )
    {
      if ( b[i] && dominates_off( a, b, i ) )
      {
        pairs.push_back( { i, a, b } );
      }
    }
  }
  return pairs;
}

std::vector<extremal_pair> all_extremal_pairs( bool_function const& f, unsigned i )
{
  if ( i < 1u || i > f.arity() )
  {
    throw index_out_of_range( "variable index " + std::to_string( i ) + " out of range" );
  }
  return all_extremal_pairs( extremal_points( f ), i );
}

std::size_t extremal_graph::find_or_add( point const& p, vertex_side side )
{
  for ( std::size_t k = 0; k < vertices.size(); ++k )
  {
    if ( vertices[k].p == p )
    {
      return k;
    }
  }
  vertices.push_back( { p, side } );
  return vertices.size() - 1u;
}

extremal_graph graph_from_pairs( std::vector<extremal_pair> const& pairs )
{
  extremal_graph g;
  for ( auto const& pair : pairs )
  {
    auto const u = g.find_or_add( pair.a, vertex_side::zero );
    auto const v = g.find_or_add( pair.b, vertex_side::one );
    g.edges.push_back( { pair.variable, u, v } );
  }
  return g;
}

extremal_graph build_extremal_graph( bool_function const& f, std::vector<unsigned> const& vars )
{
  std::vector<extremal_pair> pairs;
  for ( auto i : vars )
  {
    pairs.push_back( find_extremal_pair( f, i ) );
  }
  return graph_from_pairs( pairs );
}

extremal_graph build_random_extremal_graph( bool_function const& f, std::vector<unsigned> const& vars, std::uint64_t seed )
{
  if ( !is_positive( f ) )
  {
    throw non_positive();
  }
  auto const ext = extremal_points( f );
  std::mt19937_64 rng( seed );
  std::vector<extremal_pair> pairs;
  for ( auto i : vars )
  {
    require_relevant( f, i );
    auto const options = all_extremal_pairs( ext, i );
    if ( options.empty() )
    {
      throw std::logic_error( "relevant variable without an extremal pair" );
    }
    pairs.push_back( options[rng() % options.size()] );
  }
  return graph_from_pairs( pairs );
}

bool is_acyclic( extremal_graph const& g )
{
  std::vector<std::size_t> parent( g.vertices.size() );
  std::iota( parent.begin(), parent.end(), std::size_t{ 0 } );
  auto find = [&]( std::size_t x ) {
    while ( parent[x] != x )
    {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for ( auto const& e : g.edges )
  {
    auto const ru = find( e.u );
    auto const rv = find( e.v );
    if ( ru == rv )
    {
      return false;
    }
    parent[ru] = rv;
  }
  return true;
}

std::string to_edge_list( extremal_graph const& g )
{
  std::ostringstream out;
  for ( auto const& e : g.edges )
  {
    out << "x" << e.variable << ": " << g.vertices[e.u].p.to_string() << " -- " << g.vertices[e.v].p.to_string() << "\n";
  }
  return out.str();
}

std::string to_dot( extremal_graph const& g )
{
  std::ostringstream out;
  out << "graph extremal {\n";
  for ( std::size_t k = 0; k < g.vertices.size(); ++k )
  {
    auto const& v = g.vertices[k];
    out << "  v" << k << " [label=\"" << v.p.to_string() << "\", side=" << ( v.side == vertex_side::zero ? "zero" : "one" )
        << ", shape=" << ( v.side == vertex_side::zero ? "box" : "ellipse" ) << "];\n";
  }
  for ( auto const& e : g.edges )
  {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"x" << e.variable << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace tlt
