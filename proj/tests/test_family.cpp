#include <gtest/gtest.h>

#include "tlt/dnf.hpp"
#include "tlt/family.hpp"
#include "tlt/read_once.hpp"
#include "tlt/teaching.hpp"

using namespace tlt;

namespace
{

std::vector<point> pts( std::initializer_list<char const*> list )
{
  std::vector<point> out;
  for ( auto s : list )
  {
    out.push_back( point::from_string( s ) );
  }
  return out;
}

std::vector<point> sorted( std::vector<point> v )
{
  std::sort( v.begin(), v.end() );
  return v;
}

} // namespace

TEST( family, n4_instance )
{
  auto const inst = make_family( 4 );
  EXPECT_EQ( inst.function, parse_positive_dnf( "x1x2 | x1x3 | x2x3x4", 4 ) );
  EXPECT_EQ( inst.dnf(), "x1x2 | x1x3 | x2x3x4" );
  EXPECT_EQ( inst.cnf(), "(x1 | x2)(x1 | x3)(x1 | x4)(x2 | x3)" );
  EXPECT_EQ( inst.minimal_ones, pts( { "1100", "1010", "0111" } ) );
  EXPECT_EQ( sorted( inst.maximal_zeros() ), sorted( pts( { "0011", "0101", "0110", "1001" } ) ) );
  EXPECT_EQ( inst.weights, ( std::vector<long>{ 3, 2, 2, 1 } ) );
  EXPECT_EQ( inst.threshold, 4 );
  EXPECT_EQ( inst.r, 7u );
}

TEST( family, n5_instance )
{
  auto const inst = make_family( 5 );
  EXPECT_EQ( inst.weights, ( std::vector<long>{ 5, 2, 2, 2, 1 } ) );
  EXPECT_EQ( inst.threshold, 6 );
  EXPECT_EQ( inst.r, 9u );
  EXPECT_EQ( extremal_points( inst.function ).r(), 9u );
}

TEST( family, arity_precondition )
{
  EXPECT_THROW( make_family( 3 ), std::invalid_argument );
  EXPECT_THROW( make_family( 17 ), std::invalid_argument );
}

TEST( family, verification_passes_n4_to_n8 )
{
  for ( auto n = 4u; n <= 8u; ++n )
  {
    auto const verdict = verify_family( make_family( n ) );
    for ( auto const& c : verdict.checks )
    {
      EXPECT_TRUE( c.passed ) << "n=" << n << " " << c.name;
    }
    EXPECT_EQ( verdict.spec_number, n + 1u );
    EXPECT_EQ( verdict.y_certificates.size(), n - 2u );
    for ( auto const& c : verdict.y_certificates )
    {
      EXPECT_EQ( c.r, 2u );
      std::vector<unsigned> sum( n, 0 );
      for ( auto const& p : c.true_points )
      {
        for ( auto i = 1u; i <= n; ++i )
        {
          sum[i - 1u] += p[i];
        }
      }
      EXPECT_EQ( sum, std::vector<unsigned>( n, 1u ) );
    }
  }
  EXPECT_EQ( verify_family( make_family( 6 ) ).spec_number, 7u );
}

TEST( family, n4_check_list_includes_the_all_points_cross_check )
{
  auto const verdict = verify_family( make_family( 4 ) );
  EXPECT_TRUE( verdict.passed() );
  auto const names = [&] {
    std::vector<std::string> v;
    for ( auto const& c : verdict.checks )
    {
      v.push_back( c.name );
    }
    return v;
  }();
  EXPECT_NE( std::find( names.begin(), names.end(), "all_points_mode_agrees" ), names.end() );
  EXPECT_NE( std::find( names.begin(), names.end(), "y_points_not_essential" ), names.end() );
}

TEST( family, members_are_not_nested_but_meet_the_bound )
{
  for ( auto n = 4u; n <= 7u; ++n )
  {
    auto const inst = make_family( n );
    EXPECT_FALSE( is_nested( inst.function ) );
    EXPECT_FALSE( is_split( inst.function ) );
    EXPECT_EQ( essential_points( inst.function ).spec_number, n + 1u );
  }
}
