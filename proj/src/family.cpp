#include "tlt/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlt/read_once.hpp"
#include "tlt/teaching.hpp"

namespace tlt
{

namespace
{

point from_coordinates( unsigned n, std::vector<unsigned> const& ones )
{
  std::uint32_t bits = 0;
  for ( auto i : ones )
  {
    bits |= std::uint32_t{ 1 } << ( i - 1u );
  }
  return point( n, bits );
}

point all_but( unsigned n, std::vector<unsigned> const& zeros )
{
  auto p = point( n, ( std::uint32_t{ 1 } << n ) - 1u );
  for ( auto i : zeros )
  {
    p = p.with( i, false );
  }
  return p;
}

std::vector<unsigned> range( unsigned from, unsigned to )
{
  std::vector<unsigned> v;
  for ( auto i = from; i <= to; ++i )
  {
    v.push_back( i );
  }
  return v;
}

/* the pair search is quadratic in the number of points; beyond this arity only the constructed certificate is checked */
constexpr unsigned max_searched_arity = 12u;

} // namespace

std::vector<point> family_instance::maximal_zeros() const
{
  auto zeros = y_points;
  zeros.push_back( z1 );
  zeros.push_back( z2 );
  return zeros;
}

std::vector<point> family_instance::essential() const
{
  auto pts = minimal_ones;
  pts.push_back( z1 );
  pts.push_back( z2 );
  return pts;
}

threshold_cert family_instance::cert() const
{
  threshold_cert c;
  for ( auto w : weights )
  {
    c.weights.emplace_back( w );
  }
  c.threshold = threshold;
  return c;
}

std::string family_instance::dnf() const
{
  return format_dnf( dnf_terms );
}

std::string family_instance::cnf() const
{
  std::string out;
  for ( auto const& clause : cnf_clauses )
  {
    out += "(";
    for ( auto k = 0u; k < clause.size(); ++k )
    {
      out += ( k ? " | x" : "x" ) + std::to_string( clause[k] );
    }
    out += ")";
  }
  return out;
}

family_instance make_family( unsigned n )
{
  if ( n < 4u || n > max_arity )
  {
    throw std::invalid_argument( "family is defined for 4 <= n <= " + std::to_string( max_arity ) );
  }
  family_instance inst;
  inst.n = n;
  for ( auto j = 2u; j <= n - 1u; ++j )
  {
    inst.dnf_terms.push_back( { 1u, j } );
  }
  inst.dnf_terms.push_back( range( 2u, n ) );
  for ( auto j = 2u; j <= n; ++j )
  {
    inst.cnf_clauses.push_back( { 1u, j } );
  }
  inst.cnf_clauses.push_back( range( 2u, n - 1u ) );
  inst.function = dnf_to_function( inst.dnf_terms, n );

  for ( auto j = 1u; j <= n - 2u; ++j )
  {
    inst.minimal_ones.push_back( from_coordinates( n, { 1u, j + 1u } ) );
    inst.y_points.push_back( all_but( n, { 1u, j + 1u } ) );
  }
  inst.minimal_ones.push_back( from_coordinates( n, range( 2u, n ) ) );
  inst.z1 = from_coordinates( n, range( 2u, n - 1u ) );
  inst.z2 = from_coordinates( n, { 1u, n } );

  inst.weights.assign( n, 2 );
  inst.weights.front() = 2 * static_cast<long>( n ) - 5;
  inst.weights.back() = 1;
  inst.threshold = 2 * static_cast<long>( n ) - 4;
  inst.spec_number = n + 1u;
  inst.r = 2u * n - 1u;
  return inst;
}

bool_function cnf_to_function( std::vector<positive_term> const& clauses, unsigned arity )
{
  std::vector<std::uint32_t> masks;
  for ( auto const& clause : clauses )
  {
    masks.push_back( from_coordinates( arity, clause ).bits );
  }
  return bool_function::from_predicate( arity, [&]( std::uint32_t j ) {
    return std::all_of( masks.begin(), masks.end(), [j]( auto m ) { return ( j & m ) != 0u; } );
  } );
}

bool family_verdict::passed() const
{
  return std::all_of( checks.begin(), checks.end(), []( auto const& c ) { return c.passed; } );
}

family_verdict verify_family( family_instance const& inst, unsigned threads )
{
  auto const& f = inst.function;
  auto const n = inst.n;
  family_verdict verdict;
  verdict.n = n;
  auto check = [&]( std::string name, bool passed, std::string detail = {} ) {
    verdict.checks.push_back( { std::move( name ), passed, std::move( detail ) } );
    return passed;
  };

  check( "dnf_parse", parse_positive_dnf( inst.dnf(), n ) == f );
  check( "cnf_equals_dnf", cnf_to_function( inst.cnf_clauses, n ) == f );
  bool const positive = check( "positive", is_positive( f ) );
  bool const all_relevant = check( "depends_on_all_variables", depends_on_all_variables( f ) );
  check( "not_split", !is_split( f ).has_value() );
  check( "not_lro", !recognize_lro( f ).is_lro );
  check( "not_nested", !is_nested( f ) );

  auto const cert = inst.cert();
  check( "weights_certify", certifies( cert, f ) && represents( cert, f ),
         "weights certify with unit margin and represent f exactly" );
  check( "lp_threshold", check_threshold( f ).is_threshold() );

  bool tight = true;
  for ( auto const& x : inst.minimal_ones )
  {
    tight = tight && weighted_sum( cert.weights, x ) == inst.threshold + 1;
  }
  for ( auto const& y : inst.maximal_zeros() )
  {
    tight = tight && weighted_sum( cert.weights, y ) <= inst.threshold;
  }
  check( "extremal_values", tight, "minimal ones reach 2n-3, maximal zeros stay at or below 2n-4" );

  if ( !positive || !all_relevant )
  {
    return verdict;
  }

  auto const ext = extremal_points( f );
  auto expected_zeros = inst.maximal_zeros();
  auto expected_ones = inst.minimal_ones;
  std::sort( expected_zeros.begin(), expected_zeros.end() );
  std::sort( expected_ones.begin(), expected_ones.end() );
  check( "maximal_zeros", ext.maximal_zeros == expected_zeros );
  check( "minimal_ones", ext.minimal_ones == expected_ones );
  check( "r", ext.r() == inst.r, "r = " + std::to_string( ext.r() ) );

  auto const report = essential_points( f, candidate_mode::extremal_only, threads );
  auto expected_essential = inst.essential();
  std::sort( expected_essential.begin(), expected_essential.end() );
  verdict.essential = report.essential;
  verdict.spec_number = report.spec_number;
  check( "essential_points", report.essential == expected_essential );
  check( "spec_number", report.spec_number == inst.spec_number, "sigma = " + std::to_string( report.spec_number ) );
  if ( n == 4u )
  {
    auto const full = essential_points( f, candidate_mode::all_points, threads );
    check( "all_points_mode_agrees", full.essential == report.essential );
  }

  bool y_ok = true;
  for ( std::size_t k = 0; k < inst.y_points.size(); ++k )
  {
    auto const g = flip( f, inst.y_points[k] );
    summability_cert identity;
    identity.r = 2;
    identity.false_points = { inst.z1, inst.z2 };
    identity.true_points = { inst.minimal_ones[k], inst.y_points[k] };
    bool ok = certifies( identity, g );
    if ( n <= max_searched_arity )
    {
      auto const found = find_k_summability( g, 2 );
      ok = ok && found && found->r == 2u;
    }
    ok = ok && !is_threshold( g );
    y_ok = y_ok && ok;
    verdict.y_certificates.push_back( identity );
  }
  check( "y_points_not_essential", y_ok, "each y_i flip is 2-summable via x_i + y_i = z_1 + z_2" );
  return verdict;
}

} // namespace tlt
