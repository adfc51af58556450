#include "tlt/analysis.hpp"

#include <chrono>
#include <sstream>

#include "tlt/dnf.hpp"
#include "tlt/errors.hpp"

namespace tlt
{

namespace
{

constexpr char const* not_threshold_sigma = "undefined (not threshold)";

template<typename Fn>
auto timed( std::map<std::string, double>& seconds, std::string const& key, Fn&& fn )
{
  auto const start = std::chrono::steady_clock::now();
  auto result = fn();
  seconds[key] = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return result;
}

std::string lro_text( lro_verdict const& v )
{
  if ( v.constant )
  {
    return *v.constant ? "1" : "0";
  }
  return v.formula ? to_string( *v.formula ) : "";
}

std::string join( std::vector<point> const& pts )
{
  std::string out;
  for ( auto const& p : pts )
  {
    out += ( out.empty() ? "" : " " ) + p.to_string();
  }
  return out;
}

} // namespace

analysis_bundle analyze( bool_function const& f, analysis_options const& options )
{
  analysis_bundle b;
  b.function = f;
  b.positive = is_positive( f );
  b.relevant = relevant_variables( f );
  b.threshold = timed( b.seconds, "threshold", [&] { return check_threshold( f ); } );
  if ( !b.threshold.is_threshold() && !b.threshold.summability && f.arity() <= 10u )
  {
    /* the Farkas route may exceed its multiplicity cap; fall back to a direct pair search */
    b.threshold.summability = find_k_summability( f, 2 );
  }
  b.lro = timed( b.seconds, "lro", [&] { return recognize_lro( f ); } );
  b.split = is_split( f );

  if ( b.positive )
  {
    b.extremal = timed( b.seconds, "extremal", [&] { return extremal_points( f ); } );
  }
  else
  {
    b.extremal_unavailable = unavailable{ "non_positive", "extremal points are defined for positive functions" };
  }

  if ( options.skip_essential )
  {
    b.essential_unavailable = unavailable{ "skipped", "essential points skipped on request" };
  }
  else if ( !b.threshold.is_threshold() )
  {
    b.essential_unavailable = unavailable{ not_threshold_input().code(), not_threshold_sigma };
  }
  else
  {
    b.essential = timed( b.seconds, "essential", [&] { return essential_points( f, candidate_mode::all_points, options.threads ); } );
  }
  return b;
}

json to_json( analysis_bundle const& b, bool timings )
{
  json input = { { "table", b.function.to_table_string() }, { "arity", b.function.arity() } };
  if ( b.dnf_input )
  {
    input["dnf"] = *b.dnf_input;
  }

  json threshold = { { "is_threshold", b.threshold.is_threshold() } };
  threshold["certificate"] = b.threshold.cert ? to_json( *b.threshold.cert ) : json( nullptr );
  threshold["summability"] = b.threshold.summability ? to_json( *b.threshold.summability ) : json( nullptr );

  json lro = { { "is_lro", b.lro.is_lro } };
  lro["formula"] = b.lro.is_lro ? json( lro_text( b.lro ) ) : json( nullptr );

  json split = nullptr;
  if ( b.split )
  {
    split = { { "variable", b.split->variable }, { "kind", b.split->kind == split_kind::zero_side ? "zero_side" : "one_side" } };
  }

  json extremal;
  if ( b.extremal )
  {
    extremal = { { "available", true },
                 { "maximal_zeros", to_json( b.extremal->maximal_zeros ) },
                 { "minimal_ones", to_json( b.extremal->minimal_ones ) },
                 { "r", b.extremal->r() } };
  }
  else
  {
    extremal = { { "available", false }, { "reason", b.extremal_unavailable->reason } };
  }

  json essential;
  if ( b.essential )
  {
    essential = { { "available", true }, { "points", to_json( b.essential->essential ) }, { "spec_number", b.essential->spec_number } };
  }
  else
  {
    auto const& why = *b.essential_unavailable;
    essential = { { "available", false }, { "reason", why.reason } };
    if ( why.reason == not_threshold_input().code() )
    {
      essential["spec_number"] = not_threshold_sigma;
    }
  }

  json j = { { "input", input },
             { "positive", b.positive },
             { "relevant_variables", b.relevant },
             { "threshold", threshold },
             { "lro", lro },
             { "split", split },
             { "extremal", extremal },
             { "essential", essential } };
  if ( timings )
  {
    j["timings"] = b.seconds;
  }
  return j;
}

std::string format_bundle( analysis_bundle const& b )
{
  std::ostringstream out;
  out << "table:        " << b.function.to_table_string() << "\n";
  if ( b.dnf_input )
  {
    out << "dnf:          " << *b.dnf_input << "\n";
  }
  out << "positive:     " << ( b.positive ? "yes" : "no" ) << "\n";
  out << "relevant:    ";
  for ( auto i : b.relevant )
  {
    out << " x" << i;
  }
  out << "\n";
  if ( b.threshold.cert )
  {
    out << "threshold:    yes, weights";
    for ( auto const& w : b.threshold.cert->weights )
    {
      out << " " << to_string( w );
    }
    out << ", t = " << to_string( b.threshold.cert->threshold ) << "\n";
  }
  else
  {
    out << "threshold:    no";
    if ( b.threshold.summability )
    {
      auto const& s = *b.threshold.summability;
      out << ", " << s.r << "-summable: false {" << join( s.false_points ) << "} true {" << join( s.true_points ) << "}";
    }
    out << "\n";
  }
  out << "lro:          " << ( b.lro.is_lro ? lro_text( b.lro ) : "no" ) << "\n";
  out << "split:        ";
  if ( b.split )
  {
    out << "x" << b.split->variable << ( b.split->kind == split_kind::zero_side ? " (f|=0 is 0)" : " (f|=1 is 1)" ) << "\n";
  }
  else
  {
    out << "no\n";
  }
  if ( b.extremal )
  {
    out << "max zeros:    " << join( b.extremal->maximal_zeros ) << "\n";
    out << "min ones:     " << join( b.extremal->minimal_ones ) << "\n";
    out << "r:            " << b.extremal->r() << "\n";
  }
  else
  {
    out << "extremal:     unavailable (" << b.extremal_unavailable->reason << ")\n";
  }
  if ( b.essential )
  {
    out << "essential:    " << join( b.essential->essential ) << "\n";
    out << "sigma:        " << b.essential->spec_number << "\n";
  }
  else if ( b.essential_unavailable->reason == not_threshold_input().code() )
  {
    out << "sigma:        " << not_threshold_sigma << "\n";
  }
  else
  {
    out << "sigma:        unavailable (" << b.essential_unavailable->reason << ")\n";
  }
  return out.str();
}

} // namespace tlt
