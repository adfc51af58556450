#include <gtest/gtest.h>

#include "tlt/errors.hpp"
#include "tlt/harness.hpp"
#include "tlt/json_io.hpp"

using namespace tlt;

namespace
{

void expect_clean( std::vector<verification_report> const& reports )
{
  for ( auto const& r : reports )
  {
    EXPECT_TRUE( r.ok() ) << r.id << " " << r.universe;
    EXPECT_EQ( r.passed + r.counterexamples.size(), r.population );
  }
}

} // namespace

TEST( harness, gates_pass )
{
  auto const r = verify_enumeration_gates( 5, 4 );
  EXPECT_TRUE( r.ok() );
  EXPECT_EQ( r.population, 10u );
  EXPECT_EQ( r.observations.at( "monotone_n5" ), 7581 );
  EXPECT_EQ( r.observations.at( "threshold_n4" ), 1882 );
}

TEST( harness, extremal_characterization_small )
{
  auto const reports = verify_theorem_extremal( 3 );
  expect_clean( reports );
  ASSERT_EQ( reports.size(), 4u );
  EXPECT_EQ( reports[0].population, 2u );
  EXPECT_EQ( reports[0].observations.at( "lro" ), 2 );
  EXPECT_EQ( reports[3].population, 20u );
}

TEST( harness, spec_bound_small )
{
  auto const reports = verify_hu_bound( 3 );
  expect_clean( reports );
  EXPECT_EQ( reports[1].population, 14u );
  EXPECT_THROW( verify_hu_bound( 5 ), unsupported_arity );
}

TEST( harness, split_partition_lro_small )
{
  expect_clean( verify_split_lemmas( 4 ) );
  expect_clean( verify_partition( 4 ) );
  expect_clean( verify_lro_properties( 3, 4 ) );
  expect_clean( verify_essential_specifies( 2, 20, 1 ) );
  expect_clean( verify_acyclicity( 3, 5, 1 ) );
  expect_clean( summability_census( 3 ) );
  EXPECT_TRUE( verify_family_range( 6 ).ok() );
}

TEST( harness, reports_are_deterministic_across_thread_counts )
{
  harness_config one;
  one.suites = { "acyclic", "extremal" };
  one.max_n = 4;
  auto two = one;
  two.threads = 3;
  auto const a = to_json( run_all( one ) ).dump();
  auto const b = to_json( run_all( two ) ).dump();
  EXPECT_EQ( a, b );
}

TEST( harness, unknown_suite_is_a_configuration_error )
{
  harness_config config;
  config.suites = { "nope" };
  EXPECT_THROW( run_all( config ), std::invalid_argument );
}

TEST( harness, table_lists_every_report )
{
  harness_config config;
  config.suites = { "extremal" };
  config.max_n = 2;
  auto const reports = run_all( config );
  ASSERT_EQ( reports.front().id, "gates" );
  auto const table = format_report_table( reports );
  EXPECT_NE( table.find( "extremal" ), std::string::npos );
  EXPECT_EQ( table.find( "COUNTEREXAMPLE" ), std::string::npos );
}

TEST( harness, counterexamples_are_formatted_in_full )
{
  verification_report r;
  r.id = "demo";
  r.universe = "demo";
  r.population = 1;
  r.counterexamples.push_back( { "2:0110", { "first failure", "second failure" } } );
  auto const table = format_report_table( { r } );
  EXPECT_NE( table.find( "2:0110: first failure; second failure;" ), std::string::npos );
  EXPECT_FALSE( all_ok( { r } ) );
}
