#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tlt/analysis.hpp"
#include "tlt/dnf.hpp"
#include "tlt/errors.hpp"
#include "tlt/extremal_graph.hpp"
#include "tlt/family.hpp"
#include "tlt/harness.hpp"
#include "tlt/json_io.hpp"

namespace
{

enum exit_code : int
{
  ok = 0,
  counterexample = 1,
  usage = 2,
  input = 3
};

struct function_input
{
  std::string dnf;
  std::string table;
  std::optional<unsigned> arity;
};

void add_function_input( CLI::App* cmd, function_input& in )
{
  auto* dnf = cmd->add_option( "--dnf", in.dnf, "positive DNF, e.g. \"x1x2 | x3\"" );
  auto* table = cmd->add_option( "--table", in.table, "truth table <arity>:<bits>, index 0 leftmost" );
  dnf->excludes( table );
  cmd->add_option( "--arity", in.arity, "arity for --dnf (default: largest index)" )->needs( dnf );
}

std::pair<tlt::bool_function, std::optional<std::string>> read_function( function_input const& in )
{
  if ( in.dnf.empty() == in.table.empty() )
  {
    throw CLI::ValidationError( "exactly one of --dnf and --table is required" );
  }
  if ( !in.table.empty() )
  {
    return { tlt::bool_function::from_table_string( in.table ), std::nullopt };
  }
  auto f = in.arity ? tlt::parse_positive_dnf( in.dnf, *in.arity ) : tlt::parse_positive_dnf( in.dnf );
  return { f, in.dnf };
}

bool is_input_error( tlt::error const& e )
{
  return e.code() == "parse_error" || e.code() == "index_out_of_range" || e.code() == "arity_mismatch";
}

std::vector<unsigned> parse_vars( std::string const& text )
{
  std::vector<unsigned> vars;
  std::stringstream in( text );
  std::string item;
  std::size_t offset = 0;
  while ( std::getline( in, item, ',' ) )
  {
    try
    {
      std::size_t used = 0;
      auto const v = std::stoul( item, &used );
      if ( used != item.size() || v == 0u )
      {
        throw std::invalid_argument( item );
      }
      vars.push_back( static_cast<unsigned>( v ) );
    }
    catch ( std::logic_error const& )
    {
      throw tlt::parse_error( "expected a positive variable index", offset );
    }
    offset += item.size() + 1u;
  }
  return vars;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Threshold and linear read-once analysis of Boolean functions" };
  app.require_subcommand( 1 );

  function_input analyze_in;
  std::string analyze_format = "json";
  bool skip_essential = false, analyze_timings = false;
  unsigned analyze_threads = 1;
  auto* analyze = app.add_subcommand( "analyze", "full analysis of one function" );
  add_function_input( analyze, analyze_in );
  analyze->add_flag( "--skip-essential", skip_essential, "do not compute essential points" );
  analyze->add_flag( "--timings", analyze_timings, "include wall-clock timings" );
  analyze->add_option( "--threads", analyze_threads, "workers for essential points (0 = all cores)" );
  analyze->add_option( "--format", analyze_format, "json or table" )->check( CLI::IsMember( { "json", "table" } ) );

  unsigned family_n = 4, family_threads = 1;
  auto* family = app.add_subcommand( "family", "build and verify the counterexample family member f_n" );
  family->add_option( "--n", family_n, "arity, 4..16" )->required();
  family->add_option( "--threads", family_threads, "workers (0 = all cores)" );

  tlt::harness_config config;
  std::string json_path;
  bool verify_timings = false;
  unsigned max_n = 0;
  auto* verify = app.add_subcommand( "verify", "exhaustive verification suites" );
  verify->add_option( "--suite", config.suites, "suite names or all" )->delimiter( ',' );
  auto* max_n_opt = verify->add_option( "--max-n", max_n, "arity cap applied to every suite" );
  verify->add_option( "--json", json_path, "write the machine-readable report here" );
  verify->add_option( "--threads", config.threads, "workers (0 = all cores)" );
  verify->add_option( "--seed", config.seed, "seed for all random selections" );
  verify->add_option( "--draws", config.random_draws, "random extremal graphs per variable subset" );
  verify->add_option( "--sample", config.essential_sample, "sampled threshold functions at n=4 for the essential suite" );
  verify->add_flag( "--timings", verify_timings, "include wall-clock seconds in the JSON report" );

  function_input graph_in;
  std::string graph_vars, graph_format = "edges";
  std::optional<std::uint64_t> graph_seed;
  auto* graph = app.add_subcommand( "graph", "extremal graph of a positive function" );
  add_function_input( graph, graph_in );
  graph->add_option( "--vars", graph_vars, "comma-separated variables (default: all relevant)" );
  graph->add_option( "--seed", graph_seed, "choose pairs uniformly at random with this seed" );
  graph->add_option( "--format", graph_format, "edges, dot or json" )->check( CLI::IsMember( { "edges", "dot", "json" } ) );

  std::string corpus_file;
  bool corpus_skip_essential = false;
  auto* corpus = app.add_subcommand( "corpus", "analyze every truth table of a file, one JSON bundle per line" );
  corpus->add_option( "--file", corpus_file, "corpus file" )->required();
  corpus->add_flag( "--skip-essential", corpus_skip_essential, "do not compute essential points" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e );
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try
  {
    if ( *analyze )
    {
      auto [f, dnf] = read_function( analyze_in );
      auto bundle = tlt::analyze( f, { skip_essential, analyze_timings, analyze_threads } );
      bundle.dnf_input = dnf;
      if ( analyze_format == "table" )
      {
        std::cout << tlt::format_bundle( bundle );
      }
      else
      {
        std::cout << tlt::to_json( bundle, analyze_timings ).dump( 2 ) << "\n";
      }
      return exit_code::ok;
    }
    if ( *family )
    {
      if ( family_n < 4u || family_n > tlt::max_arity )
      {
        std::cerr << "error: --n must lie in 4.." << tlt::max_arity << "\n";
        return exit_code::usage;
      }
      auto const inst = tlt::make_family( family_n );
      auto const verdict = tlt::verify_family( inst, family_threads );
      std::cout << tlt::to_json( inst, verdict ).dump( 2 ) << "\n";
      return verdict.passed() ? exit_code::ok : exit_code::counterexample;
    }
    if ( *verify )
    {
      if ( *max_n_opt )
      {
        config.max_n = max_n;
      }
      auto const reports = tlt::run_all( config );
      std::cout << tlt::format_report_table( reports );
      if ( !json_path.empty() )
      {
        std::ofstream out( json_path );
        if ( !out )
        {
          std::cerr << "error: cannot write " << json_path << "\n";
          return exit_code::usage;
        }
        out << tlt::to_json( reports, verify_timings ).dump( 2 ) << "\n";
      }
      return tlt::all_ok( reports ) ? exit_code::ok : exit_code::counterexample;
    }
    if ( *graph )
    {
      auto const f = read_function( graph_in ).first;
      auto vars = graph_vars.empty() ? tlt::relevant_variables( f ) : parse_vars( graph_vars );
      auto const g = graph_seed ? tlt::build_random_extremal_graph( f, vars, *graph_seed ) : tlt::build_extremal_graph( f, vars );
      if ( graph_format == "dot" )
      {
        std::cout << tlt::to_dot( g );
      }
      else if ( graph_format == "json" )
      {
        std::cout << tlt::to_json( g ).dump( 2 ) << "\n";
      }
      else
      {
        std::cout << tlt::to_edge_list( g );
        std::cout << "# vertices " << g.vertices.size() << ", edges " << g.edges.size() << ", "
                  << ( tlt::is_acyclic( g ) ? "acyclic" : "cyclic" ) << "\n";
      }
      return exit_code::ok;
    }
    if ( *corpus )
    {
      std::ifstream in( corpus_file );
      if ( !in )
      {
        std::cerr << "error: cannot read " << corpus_file << "\n";
        return exit_code::usage;
      }
      int status = exit_code::ok;
      std::string line;
      for ( std::size_t number = 1; std::getline( in, line ); ++number )
      {
        auto const first = line.find_first_not_of( " \t\r" );
        if ( first == std::string::npos || line[first] == '#' )
        {
          continue;
        }
        auto const last = line.find_last_not_of( " \t\r" );
        auto const text = line.substr( first, last - first + 1u );
        try
        {
          auto const bundle = tlt::analyze( tlt::bool_function::from_table_string( text ), { corpus_skip_essential, false, 1 } );
          std::cout << tlt::to_json( bundle ).dump() << "\n";
        }
        catch ( tlt::error const& e )
        {
          std::cout << tlt::json{ { "line", number }, { "error", e.code() }, { "message", e.what() } }.dump() << "\n";
          status = exit_code::input;
        }
      }
      return status;
    }
  }
  catch ( CLI::ValidationError const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  catch ( tlt::error const& e )
  {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return is_input_error( e ) ? exit_code::input : exit_code::usage;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}
