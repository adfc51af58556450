#include "tlt/lp.hpp"

#include <stdexcept>
#include <string>

#include "tlt/errors.hpp"

namespace tlt
{

void lp_system::add( std::vector<rational> coefficients, relation rel, rational rhs )
{
  if ( coefficients.size() != num_vars )
  {
    throw std::invalid_argument( "constraint has " + std::to_string( coefficients.size() ) + " coefficients, expected " +
                                 std::to_string( num_vars ) );
  }
  constraints.push_back( { std::move( coefficients ), rel, std::move( rhs ) } );
}

bool lp_system::satisfied_by( std::vector<rational> const& values ) const
{
  if ( values.size() != num_vars )
  {
    return false;
  }
  for ( auto const& c : constraints )
  {
    rational lhs = 0;
    for ( std::size_t j = 0; j < num_vars; ++j )
    {
      lhs += c.coefficients[j] * values[j];
    }
    if ( c.rel == relation::less_equal ? lhs > c.rhs : lhs < c.rhs )
    {
      return false;
    }
  }
  return true;
}

bool certifies_infeasible( lp_system const& sys, lp_infeasible const& witness )
{
  if ( witness.multipliers.size() != sys.constraints.size() )
  {
    return false;
  }
  std::vector<rational> combination( sys.num_vars, 0 );
  rational rhs = 0;
  for ( std::size_t k = 0; k < sys.constraints.size(); ++k )
  {
    auto const& lambda = witness.multipliers[k];
    if ( sgn( lambda ) < 0 )
    {
      return false;
    }
    if ( sgn( lambda ) == 0 )
    {
      continue;
    }
    auto const& c = sys.constraints[k];
    rational const scale = c.rel == relation::less_equal ? rational( lambda ) : rational( -lambda );
    for ( std::size_t j = 0; j < sys.num_vars; ++j )
    {
      combination[j] += scale * c.coefficients[j];
    }
    rhs += scale * c.rhs;
  }
  for ( auto const& v : combination )
  {
    if ( sgn( v ) != 0 )
    {
      return false;
    }
  }
  return sgn( rhs ) < 0;
}

namespace
{

/* dense phase-1 tableau: columns are u (k), v (k), slacks (m), artificials */
class phase_one
{
public:
  explicit phase_one( lp_system const& sys ) : m_( sys.constraints.size() ), k_( sys.num_vars )
  {
    sign_.resize( m_ );
    std::vector<std::size_t> needs_artificial;
    for ( std::size_t i = 0; i < m_; ++i )
    {
      int const slack = sys.constraints[i].rel == relation::less_equal ? 1 : -1;
      auto const rhs_sign = sgn( sys.constraints[i].rhs );
      /* zero right-hand sides are oriented so the slack can start in the basis */
      sign_[i] = ( rhs_sign < 0 || ( rhs_sign == 0 && slack < 0 ) ) ? -1 : 1;
      if ( sign_[i] * slack < 0 )
      {
        needs_artificial.push_back( i );
      }
    }
    cols_ = 2u * k_ + m_ + needs_artificial.size();
    stride_ = cols_ + 1u;
    tab_.assign( ( m_ + 1u ) * stride_, rational( 0 ) );
    basis_.resize( m_ );

    for ( std::size_t i = 0; i < m_; ++i )
    {
      auto const& c = sys.constraints[i];
      rational const s( sign_[i] );
      for ( std::size_t j = 0; j < k_; ++j )
      {
        at( i, j ) = s * c.coefficients[j];
        at( i, k_ + j ) = -at( i, j );
      }
      int const slack = c.rel == relation::less_equal ? 1 : -1;
      at( i, 2u * k_ + i ) = sign_[i] * slack;
      at( i, cols_ ) = s * c.rhs;
      basis_[i] = 2u * k_ + i;
    }
    for ( std::size_t a = 0; a < needs_artificial.size(); ++a )
    {
      auto const i = needs_artificial[a];
      auto const col = 2u * k_ + m_ + a;
      at( i, col ) = 1;
      basis_[i] = col;
      /* objective row holds reduced costs c_j - c_B B^-1 A_j and -z in the last column */
      for ( std::size_t j = 0; j <= cols_; ++j )
      {
        if ( j != col )
        {
          obj( j ) -= at( i, j );
        }
      }
    }
  }

  lp_result solve( lp_options const& options )
  {
    std::size_t iterations = 0;
    while ( true )
    {
      std::size_t entering = cols_;
      for ( std::size_t j = 0; j < cols_; ++j )
      {
        if ( sgn( obj( j ) ) < 0 )
        {
          entering = j;
          break;
        }
      }
      if ( entering == cols_ )
      {
        break;
      }
      if ( ++iterations > options.max_iterations )
      {
        throw resource_limit( "simplex exceeded " + std::to_string( options.max_iterations ) + " pivots" );
      }

      std::size_t leaving = m_;
      rational best;
      for ( std::size_t i = 0; i < m_; ++i )
      {
        if ( sgn( at( i, entering ) ) <= 0 )
        {
          continue;
        }
        rational ratio = at( i, cols_ ) / at( i, entering );
        if ( leaving == m_ || ratio < best || ( ratio == best && basis_[i] < basis_[leaving] ) )
        {
          leaving = i;
          best = std::move( ratio );
        }
      }
      if ( leaving == m_ )
      {
        throw std::logic_error( "phase-1 objective unbounded" );
      }
      pivot( leaving, entering );
    }

    if ( sgn( obj( cols_ ) ) != 0 )
    {
      lp_infeasible witness;
      witness.multipliers.resize( m_ );
      for ( std::size_t i = 0; i < m_; ++i )
      {
        witness.multipliers[i] = obj( 2u * k_ + i );
      }
      return witness;
    }

    std::vector<rational> u( 2u * k_, rational( 0 ) );
    for ( std::size_t i = 0; i < m_; ++i )
    {
      if ( basis_[i] < 2u * k_ )
      {
        u[basis_[i]] = at( i, cols_ );
      }
    }
    lp_feasible_point p;
    p.values.resize( k_ );
    for ( std::size_t j = 0; j < k_; ++j )
    {
      p.values[j] = u[j] - u[k_ + j];
    }
    return p;
  }

private:
  rational& at( std::size_t i, std::size_t j ) { return tab_[i * stride_ + j]; }
  rational& obj( std::size_t j ) { return tab_[m_ * stride_ + j]; }

  void pivot( std::size_t r, std::size_t c )
  {
    rational const inv = 1 / at( r, c );
    for ( std::size_t j = 0; j <= cols_; ++j )
    {
      if ( sgn( at( r, j ) ) != 0 )
      {
        at( r, j ) *= inv;
      }
    }
    for ( std::size_t i = 0; i <= m_; ++i )
    {
      if ( i == r )
      {
        continue;
      }
      rational const factor = tab_[i * stride_ + c];
      if ( sgn( factor ) == 0 )
      {
        continue;
      }
      for ( std::size_t j = 0; j <= cols_; ++j )
      {
        auto const& pr = at( r, j );
        if ( sgn( pr ) != 0 )
        {
          tab_[i * stride_ + j] -= factor * pr;
        }
      }
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t k_;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<int> sign_;
  std::vector<rational> tab_;
  std::vector<std::size_t> basis_;
};

} // namespace

lp_result lp_feasible( lp_system const& sys, lp_options const& options )
{
  for ( auto const& c : sys.constraints )
  {
    if ( c.coefficients.size() != sys.num_vars )
    {
      throw std::invalid_argument( "constraint width does not match num_vars" );
    }
  }
  auto result = phase_one( sys ).solve( options );
  if ( auto const* p = std::get_if<lp_feasible_point>( &result ) )
  {
    if ( !sys.satisfied_by( p->values ) )
    {
      throw std::logic_error( "simplex returned a point violating the system" );
    }
  }
  else if ( !certifies_infeasible( sys, std::get<lp_infeasible>( result ) ) )
  {
    throw std::logic_error( "simplex returned an invalid infeasibility witness" );
  }
  return result;
}

} // namespace tlt
