#include "tlt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tlt/enumerate.hpp"
#include "tlt/errors.hpp"
#include "tlt/extremal_graph.hpp"
#include "tlt/family.hpp"
#include "tlt/parallel.hpp"
#include "tlt/read_once.hpp"
#include "tlt/separability.hpp"
#include "tlt/teaching.hpp"

namespace tlt
{

namespace
{

using observations = std::map<std::string, std::int64_t>;

struct outcome
{
  std::vector<std::string> failures;
  observations notes;
};

class stopwatch
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>( std::chrono::steady_clock::now() - start_ ).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string arity_label( std::string const& what, unsigned n )
{
  return what + ", n=" + std::to_string( n );
}

/* runs `check` on every member; aggregation follows population order */
template<typename Check>
verification_report run_population( std::string id, std::string statement, std::string universe,
                                    std::vector<bool_function> const& population, unsigned threads, Check&& check )
{
  stopwatch clock;
  std::vector<outcome> outcomes( population.size() );
  parallel_for( population.size(), threads, [&]( std::size_t k ) { outcomes[k] = check( population[k] ); } );

  verification_report report;
  report.id = std::move( id );
  report.statement = std::move( statement );
  report.universe = std::move( universe );
  report.population = population.size();
  for ( std::size_t k = 0; k < population.size(); ++k )
  {
    for ( auto const& [key, value] : outcomes[k].notes )
    {
      report.observations[key] += value;
    }
    if ( outcomes[k].failures.empty() )
    {
      ++report.passed;
    }
    else
    {
      report.counterexamples.push_back( { population[k].to_table_string(), std::move( outcomes[k].failures ) } );
    }
  }
  report.wall_seconds = clock.seconds();
  return report;
}

std::vector<bool_function> positive_threshold_functions( unsigned n, unsigned threads )
{
  auto const monotone = enumerate_monotone( n );
  std::vector<char> keep( monotone.size(), 0 );
  parallel_for( monotone.size(), threads, [&]( std::size_t k ) { keep[k] = is_threshold( monotone[k] ); } );
  std::vector<bool_function> result;
  for ( std::size_t k = 0; k < monotone.size(); ++k )
  {
    if ( keep[k] )
    {
      result.push_back( monotone[k] );
    }
  }
  return result;
}

std::vector<bool_function> monotone_non_threshold_functions( unsigned n, unsigned threads )
{
  auto const monotone = enumerate_monotone( n );
  std::vector<char> keep( monotone.size(), 0 );
  parallel_for( monotone.size(), threads, [&]( std::size_t k ) { keep[k] = !is_threshold( monotone[k] ); } );
  std::vector<bool_function> result;
  for ( std::size_t k = 0; k < monotone.size(); ++k )
  {
    if ( keep[k] )
    {
      result.push_back( monotone[k] );
    }
  }
  return result;
}

std::uint64_t mix( std::uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30u ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27u ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31u );
}

std::uint64_t table_hash( bool_function const& f )
{
  std::uint64_t h = mix( f.arity() );
  for ( auto w : f.words() )
  {
    h = mix( h ^ w );
  }
  return h;
}

/* drops coordinate j (1-based) of p */
point project( point const& p, unsigned j )
{
  auto const pos = j - 1u;
  auto const low = p.bits & ( ( std::uint32_t{ 1 } << pos ) - 1u );
  auto const high = p.bits >> ( pos + 1u );
  return point( p.arity - 1u, low | ( high << pos ) );
}

std::vector<point> project_all( std::vector<point> const& pts, unsigned j )
{
  std::vector<point> out;
  for ( auto const& p : pts )
  {
    out.push_back( project( p, j ) );
  }
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return out;
}

std::string str( std::size_t v )
{
  return std::to_string( v );
}

} // namespace

std::vector<std::string> const& suite_names()
{
  static std::vector<std::string> const names{ "gates", "extremal", "spec", "essential", "acyclic",
                                               "split", "partition", "lro", "family", "census" };
  return names;
}

verification_report verify_enumeration_gates( unsigned max_monotone_n, unsigned max_threshold_n )
{
  stopwatch clock;
  verification_report report;
  report.id = "gates";
  report.statement = "enumerator populations match the tabulated Dedekind and threshold counts";
  report.universe = "monotone n<=" + str( max_monotone_n ) + ", all functions n<=" + str( max_threshold_n );
  auto gate = [&]( std::string subject, std::uint64_t got, std::uint64_t expected ) {
    ++report.population;
    report.observations[subject] = static_cast<std::int64_t>( got );
    if ( got == expected )
    {
      ++report.passed;
    }
    else
    {
      report.counterexamples.push_back( { subject, { "count " + std::to_string( got ) + " != " + std::to_string( expected ) } } );
    }
  };
  for ( auto n = 0u; n <= max_monotone_n; ++n )
  {
    gate( "monotone_n" + str( n ), monotone_tables( n ).size(), dedekind_number( n ) );
  }
  for ( auto n = 1u; n <= max_threshold_n; ++n )
  {
    std::uint64_t count = 0;
    for_each_function( n, [&]( auto const& f ) { count += is_threshold( f ); } );
    gate( "threshold_n" + str( n ), count, expected_threshold_count( n ) );
  }
  report.wall_seconds = clock.seconds();
  return report;
}

std::vector<verification_report> verify_theorem_extremal( unsigned max_n, unsigned threads )
{
  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= max_n; ++n )
  {
    reports.push_back( run_population(
        "extremal", "positive threshold f with k relevant variables: r >= k+1, and r = k+1 iff linear read-once",
        arity_label( "positive threshold", n ), positive_threshold_functions( n, threads ), threads, []( auto const& f ) {
          outcome out;
          auto const k = relevant_variables( f ).size();
          auto const r = extremal_points( f ).r();
          bool const lro = is_lro( f );
          if ( r < k + 1u )
          {
            out.failures.push_back( "r=" + str( r ) + " < k+1=" + str( k + 1u ) );
          }
          if ( r == k + 1u && !lro )
          {
            out.failures.push_back( "r=k+1 but not linear read-once" );
          }
          if ( lro && r != k + 1u )
          {
            out.failures.push_back( "linear read-once but r=" + str( r ) + " != k+1" );
          }
          out.notes["lro"] = lro;
          return out;
        } ) );
  }
  return reports;
}

std::vector<verification_report> verify_hu_bound( unsigned max_n, unsigned threads )
{
  if ( max_n > 4u )
  {
    throw unsupported_arity( "the specification-number sweep supports n <= 4" );
  }
  std::vector<verification_report> reports;
  for ( auto n = 1u; n <= max_n; ++n )
  {
    reports.push_back( run_population( "spec", "sigma(f) >= n+1 for every threshold f, with equality for nested f",
                                       arity_label( "threshold", n ), threshold_class( n ), threads, [n]( auto const& f ) {
                                         outcome out;
                                         auto const sigma = essential_points( f ).spec_number;
                                         bool const nested = is_nested( f );
                                         if ( sigma < n + 1u )
                                         {
                                           out.failures.push_back( "sigma=" + str( sigma ) + " < n+1" );
                                         }
                                         if ( nested && sigma != n + 1u )
                                         {
                                           out.failures.push_back( "nested but sigma=" + str( sigma ) );
                                         }
                                         out.notes["nested"] = nested;
                                         out.notes["sigma_n_plus_1"] = sigma == n + 1u;
                                         out.notes["sigma_n_plus_1_not_nested"] = sigma == n + 1u && !nested;
                                         return out;
                                       } ) );
  }
  return reports;
}

std::vector<verification_report> verify_essential_specifies( unsigned max_exhaustive_n, std::size_t sample_n4,
                                                             std::uint64_t seed, unsigned threads )
{
  auto check = []( bool_function const& f ) {
    outcome out;
    auto const essential = essential_points( f ).essential;
    if ( !specifies( f, essential ) )
    {
      out.failures.push_back( "essential set does not specify f" );
    }
    for ( std::size_t k = 0; k < essential.size(); ++k )
    {
      auto reduced = essential;
      reduced.erase( reduced.begin() + static_cast<std::ptrdiff_t>( k ) );
      if ( specifies( f, reduced ) )
      {
        out.failures.push_back( "essential set without " + essential[k].to_string() + " still specifies f" );
      }
    }
    return out;
  };
  std::string const statement = "the essential points specify f and every one of them is needed";

  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= std::min( max_exhaustive_n, 4u ); ++n )
  {
    reports.push_back( run_population( "essential", statement, arity_label( "threshold", n ), threshold_class( n ), threads, check ) );
  }
  if ( sample_n4 > 0u && max_exhaustive_n < 4u )
  {
    auto const& cls = threshold_class( 4 );
    std::vector<std::size_t> order( cls.size() );
    std::iota( order.begin(), order.end(), std::size_t{ 0 } );
    std::mt19937_64 rng( seed );
    for ( std::size_t k = order.size(); k > 1u; --k )
    {
      std::swap( order[k - 1u], order[rng() % k] );
    }
    order.resize( std::min( sample_n4, order.size() ) );
    std::sort( order.begin(), order.end() );
    std::vector<bool_function> sample;
    for ( auto k : order )
    {
      sample.push_back( cls[k] );
    }
    reports.push_back( run_population( "essential", statement, "threshold, n=4, sample of " + str( sample.size() ), sample,
                                       threads, check ) );
  }
  return reports;
}

namespace
{

/* every non-empty subset of the relevant variables, deterministic selection and seeded random draws */
outcome check_extremal_graphs( bool_function const& f, unsigned random_draws, std::uint64_t seed, bool expect_acyclic )
{
  outcome out;
  auto const ext = extremal_points( f );
  auto const rel = relevant_variables( f );
  std::vector<extremal_pair> deterministic;
  std::vector<std::vector<extremal_pair>> options;
  for ( auto i : rel )
  {
    deterministic.push_back( find_extremal_pair( f, i ) );
    options.push_back( all_extremal_pairs( ext, i ) );
    if ( options.back().empty() )
    {
      out.failures.push_back( "no x" + str( i ) + "-extremal pair" );
      return out;
    }
  }
  auto const base = mix( seed ^ table_hash( f ) );
  std::int64_t graphs = 0, cyclic = 0;
  auto const subsets = std::uint32_t{ 1 } << rel.size();
  for ( std::uint32_t mask = 1; mask < subsets; ++mask )
  {
    std::vector<std::size_t> chosen;
    for ( std::size_t k = 0; k < rel.size(); ++k )
    {
      if ( ( mask >> k ) & 1u )
      {
        chosen.push_back( k );
      }
    }
    for ( unsigned draw = 0; draw <= random_draws; ++draw )
    {
      std::vector<extremal_pair> pairs;
      std::mt19937_64 rng( mix( base ^ ( std::uint64_t{ mask } << 32u ) ^ draw ) );
      for ( auto k : chosen )
      {
        pairs.push_back( draw == 0u ? deterministic[k] : options[k][rng() % options[k].size()] );
      }
      for ( auto const& p : pairs )
      {
        if ( !is_extremal_pair( ext, p ) )
        {
          out.failures.push_back( "invalid pair for x" + str( p.variable ) );
        }
      }
      auto const g = graph_from_pairs( pairs );
      ++graphs;
      bool const acyclic = is_acyclic( g );
      cyclic += !acyclic;
      if ( expect_acyclic && !acyclic )
      {
        out.failures.push_back( "cyclic extremal graph for variable mask " + str( mask ) + ( draw ? ", random draw " + str( draw ) : ", deterministic" ) );
      }
      if ( expect_acyclic && acyclic && g.vertices.size() < chosen.size() + 1u )
      {
        out.failures.push_back( "acyclic graph with fewer than k+1 vertices" );
      }
    }
  }
  out.notes["graphs"] = graphs;
  out.notes["cyclic_graphs"] = cyclic;
  out.notes["functions_with_cyclic_graph"] = cyclic > 0;
  return out;
}

} // namespace

std::vector<verification_report> verify_acyclicity( unsigned max_n, unsigned random_draws, std::uint64_t seed, unsigned threads )
{
  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= max_n; ++n )
  {
    reports.push_back( run_population( "acyclic", "every extremal graph of a positive threshold function is acyclic",
                                       arity_label( "positive threshold", n ), positive_threshold_functions( n, threads ),
                                       threads, [&]( auto const& f ) { return check_extremal_graphs( f, random_draws, seed, true ); } ) );
  }
  for ( auto n = 0u; n <= max_n; ++n )
  {
    reports.push_back( run_population( "acyclic-probe", "report only: search for cyclic extremal graphs of non-threshold positive functions",
                                       arity_label( "positive non-threshold", n ), monotone_non_threshold_functions( n, threads ),
                                       threads, [&]( auto const& f ) { return check_extremal_graphs( f, random_draws, seed, false ); } ) );
  }
  return reports;
}

std::vector<verification_report> verify_split_lemmas( unsigned max_n, unsigned threads )
{
  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= max_n; ++n )
  {
    reports.push_back( run_population(
        "split",
        "split f: r(f) = r(restriction) + 1; non-split f with split restrictions has a common split variable; non-split f: r >= k+2",
        arity_label( "positive threshold", n ), positive_threshold_functions( n, threads ), threads, [n]( auto const& f ) {
          outcome out;
          auto const r = extremal_points( f ).r();
          for ( auto const& w : split_witnesses( f ) )
          {
            if ( !is_relevant( f, w.variable ) )
            {
              continue;
            }
            auto const rest = restrict( f, w.variable, w.kind == split_kind::zero_side );
            auto const r_rest = extremal_points( rest ).r();
            if ( r != r_rest + 1u )
            {
              out.failures.push_back( "split on x" + str( w.variable ) + ": r=" + str( r ) + " but restriction has r=" + str( r_rest ) );
            }
            out.notes["split_witnesses"] += 1;
          }
          if ( n == 0u || is_split( f ) )
          {
            return out;
          }
          out.notes["non_split"] = 1;
          auto const k = relevant_variables( f ).size();
          if ( r < k + 2u )
          {
            out.failures.push_back( "non-split with r=" + str( r ) + " < k+2=" + str( k + 2u ) );
          }
          for ( auto i = 1u; i <= n; ++i )
          {
            auto const f0 = restrict( f, i, false );
            auto const f1 = restrict( f, i, true );
            if ( !is_split( f0 ) || !is_split( f1 ) )
            {
              continue;
            }
            out.notes["both_restrictions_split"] += 1;
            bool common = false;
            for ( auto s = 1u; s < n && !common; ++s )
            {
              common = restrict( f0, s, false ).constant_value() == false && restrict( f1, s, true ).constant_value() == true;
            }
            if ( !common )
            {
              out.failures.push_back( "restrictions at x" + str( i ) + " are split without a common split variable" );
            }
          }
          return out;
        } ) );
  }
  return reports;
}

std::vector<verification_report> verify_partition( unsigned max_n, unsigned threads )
{
  std::vector<verification_report> reports;
  for ( auto n = 1u; n <= max_n; ++n )
  {
    reports.push_back( run_population(
        "partition", "extremal points split by one coordinate into C0, P0, C1, P1 with injective projections",
        arity_label( "positive", n ), enumerate_monotone( n ), threads, [n]( auto const& f ) {
          outcome out;
          auto const ext = extremal_points( f );
          for ( auto j = 1u; j <= n; ++j )
          {
            std::vector<point> c0, p0, c1, p1;
            for ( auto const& a : ext.maximal_zeros )
            {
              ( a[j] ? p0 : c0 ).push_back( a );
            }
            for ( auto const& b : ext.minimal_ones )
            {
              ( b[j] ? c1 : p1 ).push_back( b );
            }
            auto const starred = project_all( c0, j ).size() + project_all( p0, j ).size() + project_all( c1, j ).size() +
                                 project_all( p1, j ).size();
            if ( c0.size() + p0.size() + c1.size() + p1.size() != ext.r() || starred != ext.r() )
            {
              out.failures.push_back( "partition at x" + str( j ) + " does not account for r=" + str( ext.r() ) );
            }
            auto const f0 = restrict( f, j, false );
            auto const f1 = restrict( f, j, true );
            if ( project_all( p1, j ) != extremal_points( f0 ).minimal_ones )
            {
              out.failures.push_back( "P1* differs from the minimal ones of f|x" + str( j ) + "=0" );
            }
            if ( project_all( p0, j ) != extremal_points( f1 ).maximal_zeros )
            {
              out.failures.push_back( "P0* differs from the maximal zeros of f|x" + str( j ) + "=1" );
            }
          }
          return out;
        } ) );
  }
  return reports;
}

namespace
{

outcome check_lro( bool_function const& f )
{
  outcome out;
  auto const verdict = recognize_lro( f );
  if ( !verdict.is_lro )
  {
    return out;
  }
  out.notes["lro"] = 1;
  if ( verdict.formula )
  {
    auto const& phi = *verdict.formula;
    if ( formula_to_function( phi, f.arity() ) != f )
    {
      out.failures.push_back( "witness formula " + to_string( phi ) + " does not reproduce f" );
    }
    if ( !phi.is_read_once() )
    {
      out.failures.push_back( "witness formula repeats a variable" );
    }
    for ( auto v : phi.variables() )
    {
      if ( !is_relevant( f, v ) )
      {
        out.failures.push_back( "witness mentions irrelevant x" + str( v ) );
      }
    }
    if ( is_positive( f ) && phi.has_negation() )
    {
      out.failures.push_back( "positive function with negated witness literal" );
    }
  }
  if ( f.arity() > 0u && is_positive( f ) && !is_split( f ) )
  {
    out.failures.push_back( "positive linear read-once function is not split" );
  }
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    for ( bool a : { false, true } )
    {
      if ( !is_lro( restrict( f, i, a ) ) )
      {
        out.failures.push_back( "restriction x" + str( i ) + "=" + str( a ) + " is not linear read-once" );
      }
    }
  }
  if ( !is_threshold( f ) )
  {
    out.failures.push_back( "linear read-once function is not threshold" );
  }
  return out;
}

} // namespace

std::vector<verification_report> verify_lro_properties( unsigned max_all_n, unsigned max_monotone_n, unsigned threads )
{
  std::string const statement =
      "witness formulas reproduce f; positive linear read-once functions are split; restrictions stay linear read-once; "
      "linear read-once implies threshold";
  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= std::min( max_all_n, 4u ); ++n )
  {
    reports.push_back( run_population( "lro", statement, arity_label( "all functions", n ), enumerate_all_functions( n ), threads, check_lro ) );
  }
  for ( auto n = std::min( max_all_n, 4u ) + 1u; n <= max_monotone_n; ++n )
  {
    reports.push_back( run_population( "lro", statement, arity_label( "positive", n ), enumerate_monotone( n ), threads, check_lro ) );
  }
  return reports;
}

verification_report verify_family_range( unsigned max_n, unsigned threads )
{
  stopwatch clock;
  verification_report report;
  report.id = "family";
  report.statement = "x1x2 | ... | x1x_{n-1} | x2...xn is threshold, not nested, and has sigma = n+1 and r = 2n-1";
  report.universe = "n=4.." + str( max_n );
  for ( auto n = 4u; n <= max_n; ++n )
  {
    ++report.population;
    auto const verdict = verify_family( make_family( n ), threads );
    std::vector<std::string> failed;
    for ( auto const& c : verdict.checks )
    {
      if ( !c.passed )
      {
        failed.push_back( c.name );
      }
    }
    if ( failed.empty() )
    {
      ++report.passed;
    }
    else
    {
      report.counterexamples.push_back( { "n=" + str( n ), failed } );
    }
  }
  report.wall_seconds = clock.seconds();
  return report;
}

std::vector<verification_report> summability_census( unsigned max_n, unsigned threads )
{
  std::vector<verification_report> reports;
  for ( auto n = 0u; n <= std::min( max_n, 4u ); ++n )
  {
    reports.push_back( run_population(
        "census", "threshold certificates and summability certificates never coexist; report-only 2-summability census",
        arity_label( "all functions", n ), enumerate_all_functions( n ), threads, []( auto const& f ) {
          outcome out;
          auto const verdict = check_threshold( f );
          auto const pair = find_k_summability( f, 2 );
          if ( verdict.is_threshold() && ( pair || verdict.summability ) )
          {
            out.failures.push_back( "threshold function with a summability certificate" );
          }
          if ( !verdict.is_threshold() )
          {
            out.notes["not_threshold"] = 1;
            out.notes["not_threshold_2_summable"] = pair.has_value();
            out.notes["not_threshold_with_certificate"] = verdict.summability.has_value();
          }
          return out;
        } ) );
  }
  return reports;
}

std::vector<verification_report> run_all( harness_config const& config )
{
  auto wants = [&]( std::string const& name ) {
    return std::find( config.suites.begin(), config.suites.end(), name ) != config.suites.end() ||
           std::find( config.suites.begin(), config.suites.end(), "all" ) != config.suites.end();
  };
  for ( auto const& s : config.suites )
  {
    if ( s != "all" && std::find( suite_names().begin(), suite_names().end(), s ) == suite_names().end() )
    {
      throw std::invalid_argument( "unknown suite '" + s + "'" );
    }
  }
  auto const cap = [&]( unsigned fallback ) { return config.max_n.value_or( fallback ); };
  auto const threads = config.threads;

  std::vector<verification_report> reports;
  auto append = [&]( std::vector<verification_report> more ) {
    for ( auto& r : more )
    {
      reports.push_back( std::move( r ) );
    }
  };

  reports.push_back( verify_enumeration_gates( std::max( 5u, std::min( cap( 5u ), 6u ) ), 4u ) );
  if ( !reports.back().ok() )
  {
    return reports;
  }
  if ( wants( "extremal" ) )
  {
    append( verify_theorem_extremal( cap( 5u ), threads ) );
  }
  if ( wants( "spec" ) )
  {
    append( verify_hu_bound( std::min( cap( 4u ), 4u ), threads ) );
  }
  if ( wants( "essential" ) )
  {
    auto const n = cap( 4u );
    append( verify_essential_specifies( std::min( n, 3u ), n >= 4u ? config.essential_sample : 0u, config.seed, threads ) );
  }
  if ( wants( "acyclic" ) )
  {
    append( verify_acyclicity( cap( 5u ), config.random_draws, config.seed, threads ) );
  }
  if ( wants( "split" ) )
  {
    append( verify_split_lemmas( cap( 5u ), threads ) );
  }
  if ( wants( "partition" ) )
  {
    append( verify_partition( cap( 5u ), threads ) );
  }
  if ( wants( "lro" ) )
  {
    append( verify_lro_properties( std::min( cap( 4u ), 4u ), cap( 5u ), threads ) );
  }
  if ( wants( "family" ) )
  {
    reports.push_back( verify_family_range( std::max( 4u, cap( 10u ) ), threads ) );
  }
  if ( wants( "census" ) )
  {
    append( summability_census( std::min( cap( 4u ), 4u ), threads ) );
  }
  return reports;
}

bool all_ok( std::vector<verification_report> const& reports )
{
  return std::all_of( reports.begin(), reports.end(), []( auto const& r ) { return r.ok(); } );
}

std::string format_report_table( std::vector<verification_report> const& reports )
{
  std::ostringstream out;
  out << std::left << std::setw( 15 ) << "suite" << std::setw( 38 ) << "universe" << std::right << std::setw( 11 )
      << "population" << std::setw( 9 ) << "passed" << std::setw( 9 ) << "failed" << std::setw( 10 ) << "seconds" << "\n";
  for ( auto const& r : reports )
  {
    out << std::left << std::setw( 15 ) << r.id << std::setw( 38 ) << r.universe << std::right << std::setw( 11 )
        << r.population << std::setw( 9 ) << r.passed << std::setw( 9 ) << r.counterexamples.size() << std::setw( 10 )
        << std::fixed << std::setprecision( 2 ) << r.wall_seconds << "\n";
  }
  for ( auto const& r : reports )
  {
    for ( auto const& c : r.counterexamples )
    {
      out << "COUNTEREXAMPLE [" << r.id << ", " << r.universe << "] " << c.subject << ":";
      for ( auto const& f : c.failures )
      {
        out << " " << f << ";";
      }
      out << "\n";
    }
  }
  return out.str();
}

} // namespace tlt
