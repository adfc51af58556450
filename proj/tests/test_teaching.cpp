#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "tlt/dnf.hpp"
#include "tlt/enumerate.hpp"
#include "tlt/errors.hpp"
#include "tlt/read_once.hpp"
#include "tlt/separability.hpp"
#include "tlt/teaching.hpp"

using namespace tlt;

namespace
{

bool_function const and2 = bool_function::from_table_string( "2:0001" );
bool_function const maj3 = bool_function::from_table_string( "3:00010111" );

bool_function f4()
{
  return parse_positive_dnf( "x1x2 | x1x3 | x2x3x4", 4 );
}

point pt( char const* s )
{
  return point::from_string( s );
}

std::vector<point> sorted( std::vector<point> v )
{
  std::sort( v.begin(), v.end() );
  return v;
}

/* brute-force specification: no other member of the grid-derived class agrees on S */
bool oracle_specifies( bool_function const& f, std::vector<point> const& set, std::set<std::uint64_t> const& cls )
{
  std::uint64_t mask = 0;
  for ( auto const& p : set )
  {
    mask |= std::uint64_t{ 1 } << p.bits;
  }
  for ( auto table : cls )
  {
    if ( table != f.word() && ( ( table ^ f.word() ) & mask ) == 0u )
    {
      return false;
    }
  }
  return true;
}

/* exact specification number: the smallest S with oracle_specifies, by increasing size */
std::size_t oracle_spec_number( bool_function const& f, std::set<std::uint64_t> const& cls )
{
  auto const size = f.num_points();
  for ( auto k = 0u; k <= size; ++k )
  {
    for ( std::uint32_t subset = 0; subset < ( 1u << size ); ++subset )
    {
      if ( static_cast<unsigned>( __builtin_popcount( subset ) ) != k )
      {
        continue;
      }
      std::vector<point> s;
      for ( auto j = 0u; j < size; ++j )
      {
        if ( ( subset >> j ) & 1u )
        {
          s.push_back( point( f.arity(), j ) );
        }
      }
      if ( oracle_specifies( f, s, cls ) )
      {
        return k;
      }
    }
  }
  return size;
}

} // namespace

TEST( teaching, flip_examples )
{
  EXPECT_EQ( flip( and2, pt( "11" ) ), bool_function( 2, false ) );
  for ( std::uint32_t x = 0; x < 16; ++x )
  {
    EXPECT_EQ( flip( flip( f4(), point( 4, x ) ), point( 4, x ) ), f4() );
  }
  auto const g1 = flip( f4(), pt( "0011" ) );
  EXPECT_TRUE( g1.evaluate( pt( "0011" ) ) );
  EXPECT_FALSE( is_threshold( g1 ) );
  EXPECT_THROW( flip( and2, pt( "111" ) ), arity_mismatch );
}

TEST( teaching, essential_examples )
{
  EXPECT_FALSE( is_essential( f4(), pt( "0011" ) ) );
  EXPECT_TRUE( is_essential( f4(), pt( "0110" ) ) );
  EXPECT_TRUE( is_essential( and2, pt( "11" ) ) );
  EXPECT_THROW( is_essential( bool_function::from_table_string( "2:0110" ), pt( "00" ) ), not_threshold_input );

  auto const r4 = essential_points( f4() );
  EXPECT_EQ( r4.essential, sorted( { pt( "1100" ), pt( "1010" ), pt( "0111" ), pt( "0110" ), pt( "1001" ) } ) );
  EXPECT_EQ( r4.spec_number, 5u );
  EXPECT_EQ( essential_points( and2 ).spec_number, 3u );
  auto const rm = essential_points( maj3 );
  EXPECT_EQ( rm.spec_number, 6u );
  auto const ext = extremal_points( maj3 );
  auto all = ext.maximal_zeros;
  all.insert( all.end(), ext.minimal_ones.begin(), ext.minimal_ones.end() );
  EXPECT_EQ( rm.essential, sorted( all ) );
  EXPECT_THROW( essential_points( bool_function::from_table_string( "2:0110" ) ), not_threshold_input );
}

TEST( teaching, extremal_only_mode_is_opt_in_and_guarded )
{
  EXPECT_THROW( essential_points( bool_function::from_table_string( "2:0101" ), candidate_mode::extremal_only ), std::invalid_argument );
  EXPECT_THROW( essential_points( bool_function::from_table_string( "1:10" ), candidate_mode::extremal_only ), std::invalid_argument );
  for ( auto n = 1u; n <= 4u; ++n )
  {
    for ( auto const& f : threshold_class( n ) )
    {
      if ( !is_positive( f ) || !depends_on_all_variables( f ) )
      {
        continue;
      }
      EXPECT_EQ( essential_points( f, candidate_mode::extremal_only ).essential, essential_points( f ).essential ) << f.to_table_string();
    }
  }
}

TEST( teaching, essential_points_are_extremal_at_five_variables )
{
  std::size_t checked = 0;
  for_each_monotone( 5, [&]( auto const& f ) {
    if ( checked >= 400u || !depends_on_all_variables( f ) || !is_threshold( f ) )
    {
      return;
    }
    ++checked;
    auto const ext = extremal_points( f );
    for ( auto const& p : essential_points( f ).essential )
    {
      bool const extremal = std::binary_search( ext.maximal_zeros.begin(), ext.maximal_zeros.end(), p ) ||
                            std::binary_search( ext.minimal_ones.begin(), ext.minimal_ones.end(), p );
      ASSERT_TRUE( extremal ) << f.to_table_string() << " " << p.to_string();
    }
  } );
  EXPECT_EQ( checked, 400u );
}

TEST( teaching, threads_do_not_change_results )
{
  auto const a = essential_points( f4(), candidate_mode::all_points, 1 );
  auto const b = essential_points( f4(), candidate_mode::all_points, 4 );
  EXPECT_EQ( a.essential, b.essential );
}

TEST( teaching, threshold_class_matches_grid_oracle )
{
  for ( auto n = 0u; n <= 4u; ++n )
  {
    auto const expected = oracle::threshold_tables_by_grid( n );
    std::set<std::uint64_t> got;
    for ( auto const& f : threshold_class( n ) )
    {
      got.insert( f.word() );
    }
    EXPECT_EQ( got, expected );
    EXPECT_EQ( threshold_class( n ).size(), expected_threshold_count( n ) );
  }
  EXPECT_EQ( expected_threshold_count( 1 ), 4u );
  EXPECT_EQ( expected_threshold_count( 2 ), 14u );
  EXPECT_EQ( expected_threshold_count( 3 ), 104u );
  EXPECT_EQ( expected_threshold_count( 4 ), 1882u );
  EXPECT_THROW( threshold_class( 5 ), unsupported_arity );
}

TEST( teaching, threshold_class_cache_file_round_trips )
{
  auto const dir = std::filesystem::temp_directory_path() / "tlt_cache_test";
  std::filesystem::remove_all( dir );
  std::filesystem::create_directories( dir );
  auto const built = load_or_build_threshold_class( 3, dir );
  auto const file = dir / "threshold_class_3.txt";
  ASSERT_TRUE( std::filesystem::exists( file ) );
  std::ifstream in( file );
  std::string header;
  std::getline( in, header );
  EXPECT_EQ( header, "arity=3" );
  std::vector<std::string> lines;
  for ( std::string line; std::getline( in, line ); )
  {
    lines.push_back( line );
  }
  EXPECT_EQ( lines.size(), 104u );
  EXPECT_TRUE( std::is_sorted( lines.begin(), lines.end() ) );
  EXPECT_EQ( load_or_build_threshold_class( 3, dir ), built );

  /* a truncated file is regenerated */
  std::ofstream( file ) << "arity=3\n00000000\n";
  EXPECT_EQ( load_or_build_threshold_class( 3, dir ), built );
  std::filesystem::remove_all( dir );
}

TEST( teaching, specifies_examples )
{
  std::vector<point> all;
  for ( std::uint32_t x = 0; x < 16; ++x )
  {
    all.push_back( point( 4, x ) );
  }
  EXPECT_TRUE( specifies( f4(), all ) );
  auto const essential = essential_points( f4() ).essential;
  EXPECT_TRUE( specifies( f4(), essential ) );
  auto reduced = essential;
  reduced.erase( std::find( reduced.begin(), reduced.end(), pt( "1001" ) ) );
  EXPECT_FALSE( specifies( f4(), reduced ) );
  EXPECT_THROW( specifies( bool_function( 5, false ), {} ), unsupported_arity );
  EXPECT_THROW( specifies( bool_function::from_table_string( "2:0110" ), {} ), not_threshold_input );
}

TEST( teaching, spec_number_matches_minimum_specifying_set_search )
{
  for ( auto n = 0u; n <= 3u; ++n )
  {
    auto const cls = oracle::threshold_tables_by_grid( n );
    for ( auto const& f : threshold_class( n ) )
    {
      auto const report = essential_points( f );
      EXPECT_EQ( report.spec_number, report.essential.size() );
      EXPECT_EQ( report.spec_number, oracle_spec_number( f, cls ) ) << f.to_table_string();
      EXPECT_TRUE( oracle_specifies( f, report.essential, cls ) );
      EXPECT_EQ( specifies( f, report.essential ), oracle_specifies( f, report.essential, cls ) );
    }
  }
}

TEST( teaching, essential_points_match_flip_oracle_at_four_variables )
{
  auto const cls = oracle::threshold_tables_by_grid( 4 );
  for ( auto const& f : threshold_class( 4 ) )
  {
    std::vector<point> expected;
    for ( std::uint32_t x = 0; x < 16u; ++x )
    {
      if ( cls.count( f.word() ^ ( std::uint64_t{ 1 } << x ) ) )
      {
        expected.push_back( point( 4, x ) );
      }
    }
    ASSERT_EQ( essential_points( f ).essential, expected ) << f.to_table_string();
  }
}

TEST( teaching, nested_functions_meet_the_lower_bound )
{
  for ( auto n = 1u; n <= 4u; ++n )
  {
    for ( auto const& f : threshold_class( n ) )
    {
      auto const sigma = essential_points( f ).spec_number;
      EXPECT_GE( sigma, n + 1u );
      if ( is_nested( f ) )
      {
        EXPECT_EQ( sigma, n + 1u ) << f.to_table_string();
      }
    }
  }
}

TEST( teaching, random_nested_formulas_up_to_eight_variables_have_sigma_n_plus_one )
{
  std::mt19937_64 rng( 2019 );
  for ( auto round = 0; round < 24; ++round )
  {
    auto const n = 5u + static_cast<unsigned>( round % 4 );
    std::vector<unsigned> order( n );
    for ( auto i = 0u; i < n; ++i )
    {
      order[i] = i + 1u;
    }
    std::shuffle( order.begin(), order.end(), rng );
    nested_formula phi;
    for ( auto k = 0u; k + 1u < n; ++k )
    {
      phi.links.push_back( { { order[k], ( rng() & 1u ) != 0u }, ( rng() & 1u ) ? nested_op::conjunction : nested_op::disjunction } );
    }
    phi.last = { order.back(), ( rng() & 1u ) != 0u };
    auto const f = formula_to_function( phi, n );
    ASSERT_TRUE( is_nested( f ) );
    EXPECT_EQ( essential_points( f ).spec_number, n + 1u ) << to_string( phi );
  }
}
