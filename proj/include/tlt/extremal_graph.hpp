#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

/*! \brief An x_i-extremal pair

  `a` is a maximal zero with (a)_i = 0, `b` a minimal one with (b)_i = 1, and
  (a)_j >= (b)_j for every j != i.
*/
struct extremal_pair
{
  unsigned variable = 0;
  point a;
  point b;

  friend bool operator==( extremal_pair const&, extremal_pair const& ) = default;
};

/* validates the pair against the extremal points of f */
bool is_extremal_pair( bool_function const& f, extremal_pair const& pair );
bool is_extremal_pair( extremal_set const& ext, extremal_pair const& pair );

/*! \brief Constructs an x_i-extremal pair

  A seed that is a maximal zero with (seed)_i = 0 becomes `a`; raising
  coordinate i and descending greedily (highest clearable index first) gives
  `b`. A seed that is a minimal one with (seed)_i = 1 becomes `b`, and `a` is
  found by the dual ascent. Without a seed the smallest-encoded maximal zero
  with (a)_i = 0 is used. Throws non_positive, irrelevant_variable, and
  std::invalid_argument for an unusable seed.
*/
extremal_pair find_extremal_pair( bool_function const& f, unsigned i, std::optional<point> const& seed = std::nullopt );

/* every x_i-extremal pair, ordered by (a, b) */
std::vector<extremal_pair> all_extremal_pairs( bool_function const& f, unsigned i );
std::vector<extremal_pair> all_extremal_pairs( extremal_set const& ext, unsigned i );

enum class vertex_side
{
  zero,
  one
};

struct graph_vertex
{
  point p;
  vertex_side side;
};

struct graph_edge
{
  unsigned variable;
  std::size_t u; /* zero-side vertex */
  std::size_t v; /* one-side vertex */
};

/*! \brief Bipartite graph with one edge per selected variable

  Identical points across pairs share one vertex.
*/
struct extremal_graph
{
  std::vector<graph_vertex> vertices;
  std::vector<graph_edge> edges;

  std::size_t find_or_add( point const& p, vertex_side side );
};

extremal_graph graph_from_pairs( std::vector<extremal_pair> const& pairs );

/*! \brief Builds H(f, vars) with deterministic pair selection

  Throws non_positive and irrelevant_variable.
*/
extremal_graph build_extremal_graph( bool_function const& f, std::vector<unsigned> const& vars );

/*! \brief Same, choosing each pair uniformly among all x_i-extremal pairs

  Fully determined by `seed`.
*/
extremal_graph build_random_extremal_graph( bool_function const& f, std::vector<unsigned> const& vars, std::uint64_t seed );

/* union-find cycle detection */
bool is_acyclic( extremal_graph const& g );

/* lines `x<i>: <pointA> -- <pointB>` */
std::string to_edge_list( extremal_graph const& g );

/* Graphviz description, vertices labeled by bitstring and side */
std::string to_dot( extremal_graph const& g );

} // namespace tlt
