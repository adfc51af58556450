#include "tlt/separability.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tlt/errors.hpp"

namespace tlt
{

rational weighted_sum( std::vector<rational> const& weights, point const& x )
{
  rational sum = 0;
  for ( auto i = 1u; i <= x.arity; ++i )
  {
    if ( x[i] )
    {
      sum += weights[i - 1u];
    }
  }
  return sum;
}

bool certifies( threshold_cert const& cert, bool_function const& f )
{
  if ( cert.weights.size() != f.arity() )
  {
    return false;
  }
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    auto const s = weighted_sum( cert.weights, point( f.arity(), j ) );
    if ( f[j] ? s < cert.threshold + 1 : s > cert.threshold )
    {
      return false;
    }
  }
  return true;
}

bool represents( threshold_cert const& cert, bool_function const& f )
{
  if ( cert.weights.size() != f.arity() )
  {
    return false;
  }
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    auto const s = weighted_sum( cert.weights, point( f.arity(), j ) );
    if ( f[j] == ( s <= cert.threshold ) )
    {
      return false;
    }
  }
  return true;
}

bool certifies( summability_cert const& cert, bool_function const& f )
{
  if ( cert.r < 2u || cert.false_points.size() != cert.r || cert.true_points.size() != cert.r )
  {
    return false;
  }
  std::array<unsigned long, max_arity> sums{};
  for ( auto const& x : cert.false_points )
  {
    if ( x.arity != f.arity() || f[x.bits] )
    {
      return false;
    }
    for ( auto i = 1u; i <= x.arity; ++i )
    {
      sums[i - 1u] += x[i];
    }
  }
  for ( auto const& y : cert.true_points )
  {
    if ( y.arity != f.arity() || !f[y.bits] )
    {
      return false;
    }
    for ( auto i = 1u; i <= y.arity; ++i )
    {
      sums[i - 1u] -= y[i];
    }
  }
  return std::all_of( sums.begin(), sums.end(), []( auto s ) { return s == 0u; } );
}

namespace
{

std::vector<rational> point_row( point const& x, int sign )
{
  std::vector<rational> row( x.arity + 1u, rational( 0 ) );
  for ( auto i = 1u; i <= x.arity; ++i )
  {
    if ( x[i] )
    {
      row[i - 1u] = sign;
    }
  }
  row[x.arity] = -sign;
  return row;
}

/* meaning of one LP row, used to turn Farkas multipliers into summability */
struct row_kind
{
  enum
  {
    false_point,
    true_point,
    sign
  } kind;
  point p;
  unsigned variable = 0;
};

void add_false( lp_system& sys, std::vector<row_kind>& kinds, point const& x )
{
  sys.add( point_row( x, 1 ), relation::less_equal, 0 );
  kinds.push_back( { row_kind::false_point, x } );
}

void add_true( lp_system& sys, std::vector<row_kind>& kinds, point const& y )
{
  sys.add( point_row( y, 1 ), relation::greater_equal, 1 );
  kinds.push_back( { row_kind::true_point, y } );
}

lp_system build_full( bool_function const& f, std::vector<row_kind>& kinds )
{
  lp_system sys( f.arity() + 1u );
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    point const x( f.arity(), j );
    f[j] ? add_true( sys, kinds, x ) : add_false( sys, kinds, x );
  }
  return sys;
}

lp_system build_reduced( bool_function const& f, std::vector<row_kind>& kinds )
{
  auto const ext = extremal_points( f );
  lp_system sys( f.arity() + 1u );
  for ( auto const& z : ext.maximal_zeros )
  {
    add_false( sys, kinds, z );
  }
  for ( auto const& u : ext.minimal_ones )
  {
    add_true( sys, kinds, u );
  }
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    std::vector<rational> row( f.arity() + 1u, rational( 0 ) );
    row[i - 1u] = 1;
    sys.add( std::move( row ), relation::greater_equal, 0 );
    kinds.push_back( { row_kind::sign, point(), i } );
  }
  return sys;
}

constexpr unsigned long max_extracted_r = 1u << 16u;

/*! \brief Integer-scaled Farkas multipliers as a summability certificate

  Sign rows contribute unit vectors e_i to the true side; they are absorbed by
  raising coordinate i of true copies that have it clear, which keeps them true
  because the system is only built with sign rows for positive functions.
*/
std::optional<summability_cert> summability_from_farkas( std::vector<row_kind> const& kinds, lp_infeasible const& witness,
                                                         unsigned arity )
{
  mpz_class scale = 1;
  for ( auto const& m : witness.multipliers )
  {
    mpz_lcm( scale.get_mpz_t(), scale.get_mpz_t(), m.get_den_mpz_t() );
  }
  summability_cert cert;
  std::vector<unsigned long> raise( arity + 1u, 0u );
  mpz_class total_false = 0, total_true = 0;
  for ( std::size_t k = 0; k < kinds.size(); ++k )
  {
    mpz_class const count = rational( witness.multipliers[k] * scale ).get_num();
    if ( count == 0 )
    {
      continue;
    }
    if ( kinds[k].kind == row_kind::false_point )
    {
      total_false += count;
    }
    else if ( kinds[k].kind == row_kind::true_point )
    {
      total_true += count;
    }
    if ( total_false > max_extracted_r || total_true > max_extracted_r || count > max_extracted_r )
    {
      return std::nullopt;
    }
    auto const c = count.get_ui();
    if ( kinds[k].kind == row_kind::sign )
    {
      raise[kinds[k].variable] += c;
      continue;
    }
    auto& side = kinds[k].kind == row_kind::false_point ? cert.false_points : cert.true_points;
    side.insert( side.end(), c, kinds[k].p );
  }
  if ( cert.false_points.size() != cert.true_points.size() || cert.false_points.size() < 2u )
  {
    return std::nullopt;
  }
  for ( auto i = 1u; i <= arity; ++i )
  {
    for ( auto& y : cert.true_points )
    {
      if ( raise[i] == 0u )
      {
        break;
      }
      if ( !y[i] )
      {
        y = y.with( i, true );
        --raise[i];
      }
    }
    if ( raise[i] != 0u )
    {
      return std::nullopt;
    }
  }
  cert.r = static_cast<unsigned>( cert.false_points.size() );
  return cert;
}

threshold_cert cert_from_solution( std::vector<rational> const& values, unsigned arity )
{
  threshold_cert cert;
  cert.weights.assign( values.begin(), values.begin() + arity );
  cert.threshold = values[arity];
  return cert;
}

threshold_verdict solve_system( lp_system sys, std::vector<row_kind> const& kinds, unsigned arity,
                                threshold_options const& options )
{
  threshold_verdict verdict;
  auto result = lp_feasible( sys, options.lp );
  if ( auto const* p = std::get_if<lp_feasible_point>( &result ) )
  {
    verdict.cert = cert_from_solution( p->values, arity );
  }
  else
  {
    auto& witness = std::get<lp_infeasible>( result );
    verdict.summability = summability_from_farkas( kinds, witness, arity );
    verdict.farkas = std::move( witness );
  }
  if ( options.keep_system )
  {
    verdict.system = std::move( sys );
  }
  return verdict;
}

/* x XOR mask applied to every listed point */
void complement_points( std::vector<point>& points, std::uint32_t mask )
{
  for ( auto& p : points )
  {
    p.bits ^= mask;
  }
}

} // namespace

lp_system threshold_system( bool_function const& f )
{
  std::vector<row_kind> kinds;
  return build_full( f, kinds );
}

lp_system reduce_constraints( bool_function const& f )
{
  std::vector<row_kind> kinds;
  return build_reduced( f, kinds );
}

threshold_verdict check_threshold( bool_function const& f, threshold_options const& options )
{
  auto const n = f.arity();
  threshold_verdict verdict;

  if ( options.full_system )
  {
    std::vector<row_kind> kinds;
    auto sys = build_full( f, kinds );
    verdict = solve_system( std::move( sys ), kinds, n, options );
  }
  else
  {
    std::uint32_t negative = 0;
    for ( auto i = 1u; i <= n; ++i )
    {
      auto const c0 = restrict( f, i, false );
      auto const c1 = restrict( f, i, true );
      std::optional<std::uint32_t> rising, falling;
      for ( std::uint32_t j = 0; j < c0.num_points() && !( rising && falling ); ++j )
      {
        if ( !c0[j] && c1[j] && !rising )
        {
          rising = j;
        }
        if ( c0[j] && !c1[j] && !falling )
        {
          falling = j;
        }
      }
      if ( rising && falling )
      {
        /* binate in x_i: a + (c + e_i) = (a + e_i) + c */
        auto lift = [&]( std::uint32_t j, bool value ) {
          auto const pos = i - 1u;
          auto const low = j & ( ( std::uint32_t{ 1 } << pos ) - 1u );
          return point( n, low | ( std::uint32_t{ value } << pos ) | ( ( j >> pos ) << ( pos + 1u ) ) );
        };
        summability_cert cert;
        cert.r = 2;
        cert.false_points = { lift( *rising, false ), lift( *falling, true ) };
        cert.true_points = { lift( *rising, true ), lift( *falling, false ) };
        verdict.summability = cert;
        break;
      }
      if ( falling )
      {
        negative |= std::uint32_t{ 1 } << ( i - 1u );
      }
    }

    if ( !verdict.summability )
    {
      auto const g = bool_function::from_predicate( n, [&]( std::uint32_t j ) { return f[j ^ negative]; } );
      std::vector<row_kind> kinds;
      auto sys = build_reduced( g, kinds );
      verdict = solve_system( std::move( sys ), kinds, n, options );
      if ( verdict.cert )
      {
        for ( auto i = 1u; i <= n; ++i )
        {
          if ( ( negative >> ( i - 1u ) ) & 1u )
          {
            verdict.cert->threshold -= verdict.cert->weights[i - 1u];
            verdict.cert->weights[i - 1u] = -verdict.cert->weights[i - 1u];
          }
        }
      }
      else if ( verdict.summability )
      {
        complement_points( verdict.summability->false_points, negative );
        complement_points( verdict.summability->true_points, negative );
      }
    }
  }

  if ( verdict.cert && !certifies( *verdict.cert, f ) )
  {
    throw std::logic_error( "threshold certificate failed validation for " + f.to_table_string() );
  }
  if ( verdict.summability && !certifies( *verdict.summability, f ) )
  {
    throw std::logic_error( "summability certificate failed validation for " + f.to_table_string() );
  }
  return verdict;
}

bool is_threshold( bool_function const& f )
{
  return check_threshold( f ).is_threshold();
}

namespace
{

std::optional<summability_cert> find_pair_summability( bool_function const& f )
{
  auto const n = f.arity();
  std::vector<std::uint64_t> pow3( n + 1u, 1u );
  for ( auto i = 1u; i <= n; ++i )
  {
    pow3[i] = pow3[i - 1u] * 3u;
  }
  auto enc = [&]( std::uint32_t j ) {
    std::uint64_t key = 0;
    for ( auto i = 0u; i < n; ++i )
    {
      if ( ( j >> i ) & 1u )
      {
        key += pow3[i];
      }
    }
    return key;
  };
  std::vector<std::uint32_t> zeros, ones;
  for ( std::uint32_t j = 0; j < f.num_points(); ++j )
  {
    ( f[j] ? ones : zeros ).push_back( j );
  }
  std::vector<std::uint64_t> zero_key( zeros.size() );
  std::transform( zeros.begin(), zeros.end(), zero_key.begin(), enc );

  /* smaller side goes into the table */
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> table;
  for ( std::size_t a = 0; a < ones.size(); ++a )
  {
    auto const ka = enc( ones[a] );
    for ( std::size_t b = a; b < ones.size(); ++b )
    {
      table.try_emplace( ka + enc( ones[b] ), ones[a], ones[b] );
    }
  }
  for ( std::size_t a = 0; a < zeros.size(); ++a )
  {
    for ( std::size_t b = a; b < zeros.size(); ++b )
    {
      auto const it = table.find( zero_key[a] + zero_key[b] );
      if ( it != table.end() )
      {
        summability_cert cert;
        cert.r = 2;
        cert.false_points = { point( n, zeros[a] ), point( n, zeros[b] ) };
        cert.true_points = { point( n, it->second.first ), point( n, it->second.second ) };
        return cert;
      }
    }
  }
  return std::nullopt;
}

constexpr std::size_t max_multisets = 20'000'000;

class multiset_search
{
public:
  multiset_search( bool_function const& f, unsigned r ) : f_( f ), r_( r )
  {
    for ( std::uint32_t j = 0; j < f.num_points(); ++j )
    {
      ( f[j] ? ones_ : zeros_ ).push_back( j );
    }
  }

  std::optional<summability_cert> run()
  {
    if ( zeros_.empty() || ones_.empty() )
    {
      return std::nullopt;
    }
    std::vector<std::uint32_t> chosen;
    std::string sums( f_.arity(), '\0' );
    fill( 0, chosen, sums );
    std::optional<summability_cert> found;
    probe( 0, chosen, sums, found );
    return found;
  }

private:
  void count_visit()
  {
    if ( ++visited_ > max_multisets )
    {
      throw resource_limit( "summability search exceeded " + std::to_string( max_multisets ) + " multisets" );
    }
  }

  static void add( std::string& sums, std::uint32_t j, int delta )
  {
    for ( auto i = 0u; i < sums.size(); ++i )
    {
      if ( ( j >> i ) & 1u )
      {
        sums[i] = static_cast<char>( sums[i] + delta );
      }
    }
  }

  void fill( std::size_t from, std::vector<std::uint32_t>& chosen, std::string& sums )
  {
    if ( chosen.size() == r_ )
    {
      count_visit();
      table_.try_emplace( sums, chosen );
      return;
    }
    for ( auto k = from; k < zeros_.size(); ++k )
    {
      chosen.push_back( zeros_[k] );
      add( sums, zeros_[k], 1 );
      fill( k, chosen, sums );
      add( sums, zeros_[k], -1 );
      chosen.pop_back();
    }
  }

  void probe( std::size_t from, std::vector<std::uint32_t>& chosen, std::string& sums, std::optional<summability_cert>& found )
  {
    if ( found )
    {
      return;
    }
    if ( chosen.size() == r_ )
    {
      count_visit();
      auto const it = table_.find( sums );
      if ( it != table_.end() )
      {
        summability_cert cert;
        cert.r = r_;
        for ( auto j : it->second )
        {
          cert.false_points.emplace_back( f_.arity(), j );
        }
        for ( auto j : chosen )
        {
          cert.true_points.emplace_back( f_.arity(), j );
        }
        found = std::move( cert );
      }
      return;
    }
    for ( auto k = from; k < ones_.size() && !found; ++k )
    {
      chosen.push_back( ones_[k] );
      add( sums, ones_[k], 1 );
      probe( k, chosen, sums, found );
      add( sums, ones_[k], -1 );
      chosen.pop_back();
    }
  }

  bool_function const& f_;
  unsigned r_;
  std::vector<std::uint32_t> zeros_, ones_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> table_;
  std::size_t visited_ = 0;
};

} // namespace

std::optional<summability_cert> find_k_summability( bool_function const& f, unsigned max_r )
{
  if ( max_r < 2u )
  {
    throw std::invalid_argument( "max_r must be at least 2" );
  }
  auto cert = find_pair_summability( f );
  for ( auto r = 3u; r <= max_r && !cert; ++r )
  {
    cert = multiset_search( f, r ).run();
  }
  if ( cert && !certifies( *cert, f ) )
  {
    throw std::logic_error( "summability search produced an invalid certificate" );
  }
  return cert;
}

} // namespace tlt
