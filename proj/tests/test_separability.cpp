#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlt/dnf.hpp"
#include "tlt/enumerate.hpp"
#include "tlt/errors.hpp"
#include "tlt/family.hpp"
#include "tlt/lp.hpp"
#include "tlt/separability.hpp"
#include "tlt/teaching.hpp"

using namespace tlt;

namespace
{

bool_function const and2 = bool_function::from_table_string( "2:0001" );
bool_function const xor2 = bool_function::from_table_string( "2:0110" );

bool_function f4()
{
  return parse_positive_dnf( "x1x2 | x1x3 | x2x3x4", 4 );
}

std::vector<rational> q( std::initializer_list<long> values )
{
  std::vector<rational> out;
  for ( auto v : values )
  {
    out.emplace_back( v );
  }
  return out;
}

std::vector<point> sorted( std::vector<point> v )
{
  std::sort( v.begin(), v.end() );
  return v;
}

} // namespace

TEST( rational, text_round_trip )
{
  EXPECT_EQ( to_string( rational( 3, 6 ) ), "1/2" );
  EXPECT_EQ( to_string( rational( -4 ) ), "-4" );
  EXPECT_EQ( parse_rational( "6/4" ), rational( 3, 2 ) );
  EXPECT_EQ( parse_rational( "-7" ), rational( -7 ) );
  EXPECT_THROW( parse_rational( "1/0" ), parse_error );
  EXPECT_THROW( parse_rational( "x" ), parse_error );
}

TEST( lp, infeasible_interval )
{
  lp_system sys( 1 );
  sys.add( q( { 1 } ), relation::greater_equal, 1 );
  sys.add( q( { 1 } ), relation::less_equal, 0 );
  auto const result = lp_feasible( sys );
  ASSERT_TRUE( std::holds_alternative<lp_infeasible>( result ) );
  EXPECT_TRUE( certifies_infeasible( sys, std::get<lp_infeasible>( result ) ) );
}

TEST( lp, feasible_interval )
{
  lp_system sys( 1 );
  sys.add( q( { 1 } ), relation::greater_equal, 1 );
  sys.add( q( { 1 } ), relation::less_equal, 2 );
  auto const result = lp_feasible( sys );
  ASSERT_TRUE( std::holds_alternative<lp_feasible_point>( result ) );
  auto const x = std::get<lp_feasible_point>( result ).values.at( 0 );
  EXPECT_GE( x, 1 );
  EXPECT_LE( x, 2 );
}

TEST( lp, free_variables_take_negative_values )
{
  lp_system sys( 2 );
  sys.add( q( { 1, 1 } ), relation::less_equal, -5 );
  sys.add( q( { 1, -1 } ), relation::greater_equal, 3 );
  auto const result = lp_feasible( sys );
  ASSERT_TRUE( std::holds_alternative<lp_feasible_point>( result ) );
  EXPECT_TRUE( sys.satisfied_by( std::get<lp_feasible_point>( result ).values ) );
}

TEST( lp, empty_and_trivial_systems )
{
  EXPECT_TRUE( std::holds_alternative<lp_feasible_point>( lp_feasible( lp_system( 3 ) ) ) );
  lp_system contradiction( 1 );
  contradiction.add( q( { 0 } ), relation::greater_equal, 1 );
  EXPECT_TRUE( std::holds_alternative<lp_infeasible>( lp_feasible( contradiction ) ) );
}

TEST( lp, iteration_cap_raises_resource_limit )
{
  lp_system sys( 3 );
  sys.add( q( { 1, 1, 1 } ), relation::greater_equal, 3 );
  sys.add( q( { 1, -1, 0 } ), relation::greater_equal, 1 );
  sys.add( q( { 0, 1, -1 } ), relation::greater_equal, 1 );
  lp_options options;
  options.max_iterations = 0;
  EXPECT_THROW( lp_feasible( sys, options ), resource_limit );
}

TEST( lp, threshold_system_of_f4_accepts_the_family_weights )
{
  auto const sys = threshold_system( f4() );
  EXPECT_EQ( sys.constraints.size(), 16u );
  EXPECT_EQ( sys.num_vars, 5u );
  EXPECT_TRUE( sys.satisfied_by( q( { 3, 2, 2, 1, 4 } ) ) );
  auto const result = lp_feasible( sys );
  ASSERT_TRUE( std::holds_alternative<lp_feasible_point>( result ) );
  EXPECT_TRUE( sys.satisfied_by( std::get<lp_feasible_point>( result ).values ) );
}

TEST( separability, examples )
{
  auto const v_xor = check_threshold( xor2 );
  EXPECT_FALSE( v_xor.is_threshold() );
  ASSERT_TRUE( v_xor.summability );
  EXPECT_TRUE( certifies( *v_xor.summability, xor2 ) );

  auto const v_and = check_threshold( and2 );
  ASSERT_TRUE( v_and.cert );
  EXPECT_TRUE( certifies( *v_and.cert, and2 ) );
  EXPECT_TRUE( certifies( threshold_cert{ q( { 1, 1 } ), 1 }, and2 ) );
}

TEST( separability, family_weights_certify_every_member )
{
  for ( auto n = 4u; n <= 12u; ++n )
  {
    auto const inst = make_family( n );
    threshold_cert cert;
    for ( auto i = 1u; i <= n; ++i )
    {
      cert.weights.emplace_back( i == 1u ? 2 * static_cast<long>( n ) - 5 : i == n ? 1 : 2 );
    }
    cert.threshold = 2 * static_cast<long>( n ) - 4;
    EXPECT_TRUE( certifies( cert, inst.function ) ) << n;
    auto const verdict = check_threshold( inst.function );
    ASSERT_TRUE( verdict.cert ) << n;
    EXPECT_TRUE( certifies( *verdict.cert, inst.function ) );
  }
}

TEST( separability, reduced_system_sizes )
{
  auto const r4 = reduce_constraints( f4() );
  EXPECT_EQ( r4.constraints.size(), 7u + 4u );
  auto const r_and = reduce_constraints( and2 );
  EXPECT_EQ( r_and.constraints.size(), 3u + 2u );
  EXPECT_THROW( reduce_constraints( xor2 ), non_positive );
}

TEST( separability, validators_reject_wrong_certificates )
{
  EXPECT_FALSE( certifies( threshold_cert{ q( { 1, 1 } ), 0 }, and2 ) );
  EXPECT_FALSE( certifies( threshold_cert{ q( { 1 } ), 0 }, and2 ) );
  summability_cert bad;
  bad.r = 2;
  bad.false_points = { point::from_string( "00" ), point::from_string( "11" ) };
  bad.true_points = { point::from_string( "10" ), point::from_string( "10" ) };
  EXPECT_FALSE( certifies( bad, xor2 ) );
  bad.true_points = { point::from_string( "10" ), point::from_string( "01" ) };
  EXPECT_TRUE( certifies( bad, xor2 ) );
  EXPECT_FALSE( certifies( bad, and2 ) );
}

TEST( separability, k_summability_examples )
{
  auto const c = find_k_summability( xor2, 2 );
  ASSERT_TRUE( c );
  EXPECT_EQ( c->r, 2u );
  EXPECT_EQ( sorted( c->false_points ), sorted( { point::from_string( "00" ), point::from_string( "11" ) } ) );
  EXPECT_EQ( sorted( c->true_points ), sorted( { point::from_string( "01" ), point::from_string( "10" ) } ) );

  auto const g1 = flip( f4(), point::from_string( "0011" ) );
  auto const c1 = find_k_summability( g1, 2 );
  ASSERT_TRUE( c1 );
  EXPECT_TRUE( certifies( *c1, g1 ) );
  /* the certificate found by the search is x1 + y1 = z1 + z2 */
  EXPECT_EQ( sorted( c1->false_points ), sorted( { point::from_string( "0110" ), point::from_string( "1001" ) } ) );
  EXPECT_EQ( sorted( c1->true_points ), sorted( { point::from_string( "1100" ), point::from_string( "0011" ) } ) );

  EXPECT_FALSE( find_k_summability( f4(), 3 ) );
  EXPECT_THROW( find_k_summability( f4(), 1 ), std::invalid_argument );
}

TEST( separability, multiset_search_never_certifies_threshold_functions )
{
  for_each_monotone( 4, [&]( auto const& f ) {
    auto const c = find_k_summability( f, 3 );
    if ( is_threshold( f ) )
    {
      ASSERT_FALSE( c ) << f.to_table_string();
    }
    else if ( c )
    {
      ASSERT_TRUE( certifies( *c, f ) ) << f.to_table_string();
      ASSERT_LE( c->r, 3u );
    }
  } );
  for_each_function( 3, [&]( auto const& f ) {
    if ( is_threshold( f ) )
    {
      ASSERT_FALSE( find_k_summability( f, 4 ) ) << f.to_table_string();
    }
  } );
}

TEST( separability, counts_match_weight_grid_oracle )
{
  for ( auto n = 0u; n <= 4u; ++n )
  {
    auto const expected = oracle::threshold_tables_by_grid( n );
    std::set<std::uint64_t> got;
    for_each_function( n, [&]( auto const& f ) {
      if ( is_threshold( f ) )
      {
        got.insert( f.word() );
      }
    } );
    EXPECT_EQ( got, expected ) << "n=" << n;
    EXPECT_EQ( got.size(), expected_threshold_count( n ) );
  }
}

TEST( separability, repeated_runs_are_identical )
{
  for_each_function( 3, [&]( auto const& f ) {
    auto const a = check_threshold( f );
    auto const b = check_threshold( f );
    ASSERT_EQ( a.is_threshold(), b.is_threshold() );
    if ( a.cert )
    {
      EXPECT_EQ( a.cert->weights, b.cert->weights );
      EXPECT_EQ( a.cert->threshold, b.cert->threshold );
    }
  } );
}

TEST( separability, certificates_are_mutually_exclusive_and_valid )
{
  for_each_function( 4, [&]( auto const& f ) {
    auto const v = check_threshold( f );
    if ( v.cert )
    {
      ASSERT_TRUE( certifies( *v.cert, f ) ) << f.to_table_string();
      ASSERT_FALSE( find_k_summability( f, 2 ) ) << f.to_table_string();
    }
    else
    {
      ASSERT_TRUE( v.summability ) << f.to_table_string();
      ASSERT_TRUE( certifies( *v.summability, f ) ) << f.to_table_string();
    }
  } );
}

TEST( separability, reduced_and_full_systems_agree_on_positive_functions )
{
  threshold_options full;
  full.full_system = true;
  for ( auto n = 0u; n <= 4u; ++n )
  {
    for_each_monotone( n, [&]( auto const& f ) {
      auto const reduced = check_threshold( f );
      auto const literal = check_threshold( f, full );
      ASSERT_EQ( reduced.is_threshold(), literal.is_threshold() ) << f.to_table_string();
      bool const reduced_feasible = std::holds_alternative<lp_feasible_point>( lp_feasible( reduce_constraints( f ) ) );
      bool const literal_feasible = std::holds_alternative<lp_feasible_point>( lp_feasible( threshold_system( f ) ) );
      ASSERT_EQ( reduced_feasible, literal_feasible ) << f.to_table_string();
      ASSERT_EQ( reduced_feasible, reduced.is_threshold() );
    } );
  }
}

TEST( separability, full_system_route_agrees_on_all_three_variable_functions )
{
  threshold_options full;
  full.full_system = true;
  full.keep_system = true;
  for_each_function( 3, [&]( auto const& f ) {
    auto const v = check_threshold( f, full );
    ASSERT_EQ( v.is_threshold(), check_threshold( f ).is_threshold() );
    ASSERT_TRUE( v.system );
    if ( v.farkas )
    {
      ASSERT_TRUE( certifies_infeasible( *v.system, *v.farkas ) );
    }
  } );
}

TEST( separability, doubling_plus_half_keeps_the_sign_pattern )
{
  for_each_function( 4, [&]( auto const& f ) {
    auto const v = check_threshold( f );
    if ( !v.cert )
    {
      return;
    }
    threshold_cert scaled = *v.cert;
    for ( auto& w : scaled.weights )
    {
      w *= 2;
    }
    scaled.threshold = 2 * scaled.threshold + rational( 1, 2 );
    ASSERT_TRUE( represents( *v.cert, f ) );
    ASSERT_TRUE( represents( scaled, f ) ) << f.to_table_string();
  } );
}

TEST( separability, negative_unate_functions_get_negative_weights )
{
  auto const nand = bool_function::from_table_string( "2:1110" );
  auto const v = check_threshold( nand );
  ASSERT_TRUE( v.cert );
  EXPECT_LT( v.cert->weights[0], 0 );
  EXPECT_LT( v.cert->weights[1], 0 );
  auto const binate = check_threshold( bool_function::from_table_string( "3:01101001" ) );
  ASSERT_TRUE( binate.summability );
  EXPECT_EQ( binate.summability->r, 2u );
}

TEST( separability, random_larger_functions_keep_certificates_valid )
{
  std::mt19937_64 rng( 11 );
  for ( auto round = 0; round < 60; ++round )
  {
    auto const n = 5u + static_cast<unsigned>( rng() % 4u );
    /* threshold functions from random integer weights, sometimes perturbed by one flip */
    std::vector<long> w( n );
    for ( auto& x : w )
    {
      x = static_cast<long>( rng() % 11u ) - 5;
    }
    long const t = static_cast<long>( rng() % 9u ) - 4;
    auto f = bool_function::from_predicate( n, [&]( std::uint32_t x ) {
      long s = 0;
      for ( auto i = 0u; i < n; ++i )
      {
        s += ( ( x >> i ) & 1u ) ? w[i] : 0;
      }
      return s > t;
    } );
    bool const perturbed = round % 2 == 1;
    if ( perturbed )
    {
      f = f.with_flipped( static_cast<std::uint32_t>( rng() % f.num_points() ) );
    }
    auto const v = check_threshold( f );
    if ( !perturbed )
    {
      ASSERT_TRUE( v.cert ) << f.to_table_string();
    }
    if ( v.cert )
    {
      ASSERT_TRUE( certifies( *v.cert, f ) );
    }
    else if ( v.summability )
    {
      ASSERT_TRUE( certifies( *v.summability, f ) );
    }
  }
}
