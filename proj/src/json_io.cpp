#include "tlt/json_io.hpp"

#include "tlt/errors.hpp"
#include "tlt/rational.hpp"

namespace tlt
{

namespace
{

json points_field( json const& j, char const* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_array() )
  {
    throw parse_error( std::string( "missing array '" ) + key + "'", 0 );
  }
  return j.at( key );
}

std::vector<point> points_from_json( json const& arr )
{
  std::vector<point> pts;
  for ( auto const& e : arr )
  {
    if ( !e.is_string() )
    {
      throw parse_error( "point must be a bitstring", 0 );
    }
    pts.push_back( point::from_string( e.get<std::string>() ) );
  }
  return pts;
}

} // namespace

json to_json( point const& p )
{
  return p.to_string();
}

json to_json( std::vector<point> const& pts )
{
  auto arr = json::array();
  for ( auto const& p : pts )
  {
    arr.push_back( p.to_string() );
  }
  return arr;
}

json to_json( threshold_cert const& cert )
{
  auto weights = json::array();
  for ( auto const& w : cert.weights )
  {
    weights.push_back( to_string( w ) );
  }
  return { { "weights", weights }, { "threshold", to_string( cert.threshold ) } };
}

json to_json( summability_cert const& cert )
{
  return { { "r", cert.r }, { "false", to_json( cert.false_points ) }, { "true", to_json( cert.true_points ) } };
}

json to_json( extremal_graph const& g )
{
  auto vertices = json::array();
  for ( auto const& v : g.vertices )
  {
    vertices.push_back( { { "point", v.p.to_string() }, { "side", v.side == vertex_side::zero ? "zero" : "one" } } );
  }
  auto edges = json::array();
  for ( auto const& e : g.edges )
  {
    edges.push_back( { { "variable", e.variable }, { "a", g.vertices[e.u].p.to_string() }, { "b", g.vertices[e.v].p.to_string() } } );
  }
  return { { "vertices", vertices }, { "edges", edges }, { "acyclic", is_acyclic( g ) } };
}

json to_json( verification_report const& report, bool timings )
{
  auto cex = json::array();
  for ( auto const& c : report.counterexamples )
  {
    cex.push_back( { { "subject", c.subject }, { "failures", c.failures } } );
  }
  json j = { { "id", report.id },
             { "statement", report.statement },
             { "universe", report.universe },
             { "population", report.population },
             { "passed", report.passed },
             { "counterexamples", cex },
             { "observations", report.observations } };
  if ( timings )
  {
    j["wall_seconds"] = report.wall_seconds;
  }
  return j;
}

json to_json( std::vector<verification_report> const& reports, bool timings )
{
  auto arr = json::array();
  for ( auto const& r : reports )
  {
    arr.push_back( to_json( r, timings ) );
  }
  return { { "ok", all_ok( reports ) }, { "reports", arr } };
}

json to_json( family_instance const& inst, family_verdict const& verdict )
{
  auto checks = json::object();
  for ( auto const& c : verdict.checks )
  {
    checks[c.name] = c.passed;
  }
  auto y_certs = json::array();
  for ( auto const& c : verdict.y_certificates )
  {
    y_certs.push_back( to_json( c ) );
  }
  auto weights = json::array();
  for ( auto w : inst.weights )
  {
    weights.push_back( std::to_string( w ) );
  }
  return { { "n", inst.n },
           { "dnf", inst.dnf() },
           { "cnf", inst.cnf() },
           { "table", inst.function.to_table_string() },
           { "minimal_ones", to_json( inst.minimal_ones ) },
           { "maximal_zeros", to_json( inst.maximal_zeros() ) },
           { "weights", weights },
           { "threshold", std::to_string( inst.threshold ) },
           { "essential", to_json( verdict.essential ) },
           { "spec_number", verdict.spec_number },
           { "r", inst.r },
           { "lro", false },
           { "y_certificates", y_certs },
           { "checks", checks },
           { "verified", verdict.passed() } };
}

threshold_cert threshold_cert_from_json( json const& j )
{
  auto const weights = points_field( j, "weights" );
  if ( !j.contains( "threshold" ) || !j.at( "threshold" ).is_string() )
  {
    throw parse_error( "missing string 'threshold'", 0 );
  }
  threshold_cert cert;
  for ( auto const& w : weights )
  {
    if ( !w.is_string() )
    {
      throw parse_error( "weight must be a string", 0 );
    }
    cert.weights.push_back( parse_rational( w.get<std::string>() ) );
  }
  cert.threshold = parse_rational( j.at( "threshold" ).get<std::string>() );
  return cert;
}

summability_cert summability_cert_from_json( json const& j )
{
  if ( !j.contains( "r" ) || !j.at( "r" ).is_number_unsigned() )
  {
    throw parse_error( "missing unsigned 'r'", 0 );
  }
  summability_cert cert;
  cert.r = j.at( "r" ).get<unsigned>();
  cert.false_points = points_from_json( points_field( j, "false" ) );
  cert.true_points = points_from_json( points_field( j, "true" ) );
  return cert;
}

} // namespace tlt
