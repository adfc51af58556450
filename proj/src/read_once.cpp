#include "tlt/read_once.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tlt/errors.hpp"

namespace tlt
{

std::vector<unsigned> nested_formula::variables() const
{
  std::vector<unsigned> vars;
  for ( auto const& link : links )
  {
    vars.push_back( link.lit.variable );
  }
  vars.push_back( last.variable );
  return vars;
}

bool nested_formula::is_read_once() const
{
  auto vars = variables();
  std::sort( vars.begin(), vars.end() );
  return std::adjacent_find( vars.begin(), vars.end() ) == vars.end();
}

bool nested_formula::has_negation() const
{
  return !last.positive || std::any_of( links.begin(), links.end(), []( auto const& l ) { return !l.lit.positive; } );
}

namespace
{

std::string literal_text( literal const& l )
{
  return ( l.positive ? "x" : "~x" ) + std::to_string( l.variable );
}

class formula_parser
{
public:
  explicit formula_parser( std::string_view text ) : text_( text ) {}

  nested_formula parse()
  {
    nested_formula phi;
    formula( phi );
    skip_ws();
    if ( pos_ != text_.size() )
    {
      throw parse_error( "trailing input after formula", pos_ );
    }
    if ( !phi.is_read_once() )
    {
      throw parse_error( "variable repeated in nested formula", 0 );
    }
    return phi;
  }

private:
  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  void expect( char c )
  {
    skip_ws();
    if ( pos_ >= text_.size() || text_[pos_] != c )
    {
      throw parse_error( std::string( "expected '" ) + c + "'", pos_ );
    }
    ++pos_;
  }

  void formula( nested_formula& phi )
  {
    skip_ws();
    if ( pos_ < text_.size() && text_[pos_] == '(' )
    {
      ++pos_;
      auto const lit = parse_literal();
      skip_ws();
      if ( pos_ >= text_.size() || ( text_[pos_] != '&' && text_[pos_] != '|' ) )
      {
        throw parse_error( "expected '&' or '|'", pos_ );
      }
      auto const op = text_[pos_] == '&' ? nested_op::conjunction : nested_op::disjunction;
      ++pos_;
      phi.links.push_back( { lit, op } );
      formula( phi );
      expect( ')' );
      return;
    }
    phi.last = parse_literal();
  }

  literal parse_literal()
  {
    skip_ws();
    literal lit;
    if ( pos_ < text_.size() && text_[pos_] == '~' )
    {
      lit.positive = false;
      ++pos_;
      skip_ws();
    }
    if ( pos_ >= text_.size() || text_[pos_] != 'x' )
    {
      throw parse_error( "expected literal 'x<k>' or '~x<k>'", pos_ );
    }
    ++pos_;
    auto const start = pos_;
    unsigned long index = 0;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      index = index * 10u + static_cast<unsigned>( text_[pos_] - '0' );
      if ( index > 1000000u )
      {
        throw parse_error( "variable index too large", start );
      }
      ++pos_;
    }
    if ( pos_ == start || index == 0u )
    {
      throw parse_error( "expected variable index >= 1", start );
    }
    lit.variable = static_cast<unsigned>( index );
    return lit;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<nested_formula> decompose( bool_function const& g, std::vector<unsigned> const& names )
{
  for ( auto k = 1u; k <= g.arity(); ++k )
  {
    auto const c0 = restrict( g, k, false );
    auto const c1 = restrict( g, k, true );
    if ( c0 == c1 )
    {
      continue;
    }
    auto const v0 = c0.constant_value();
    auto const v1 = c1.constant_value();

    struct shape
    {
      bool applies;
      bool positive;
      nested_op op;
      bool_function const* rest;
    };
    shape const shapes[] = {
        { v0 == false, true, nested_op::conjunction, &c1 },
        { v1 == true, true, nested_op::disjunction, &c0 },
        { v1 == false, false, nested_op::conjunction, &c0 },
        { v0 == true, false, nested_op::disjunction, &c1 },
    };
    for ( auto const& s : shapes )
    {
      if ( !s.applies )
      {
        continue;
      }
      literal const lit{ names[k - 1u], s.positive };
      if ( s.rest->is_constant() )
      {
        nested_formula phi;
        phi.last = lit;
        return phi;
      }
      auto rest_names = names;
      rest_names.erase( rest_names.begin() + ( k - 1u ) );
      /* restrictions of linear read-once functions are linear read-once, so
         a failure here means f has no decomposition at all */
      auto sub = decompose( *s.rest, rest_names );
      if ( !sub )
      {
        return std::nullopt;
      }
      sub->links.insert( sub->links.begin(), nested_link{ lit, s.op } );
      return sub;
    }
  }
  return std::nullopt;
}

} // namespace

std::string to_string( nested_formula const& phi )
{
  std::string out;
  for ( auto const& link : phi.links )
  {
    out += "(" + literal_text( link.lit ) + ( link.op == nested_op::conjunction ? " & " : " | " );
  }
  out += literal_text( phi.last );
  out.append( phi.links.size(), ')' );
  return out;
}

nested_formula parse_nested_formula( std::string_view text )
{
  return formula_parser( text ).parse();
}

std::vector<split_witness> split_witnesses( bool_function const& f )
{
  std::vector<split_witness> result;
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    if ( restrict( f, i, false ).constant_value() == false )
    {
      result.push_back( { i, split_kind::zero_side } );
    }
    if ( restrict( f, i, true ).constant_value() == true )
    {
      result.push_back( { i, split_kind::one_side } );
    }
  }
  return result;
}

std::optional<split_witness> is_split( bool_function const& f )
{
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    if ( restrict( f, i, false ).constant_value() == false )
    {
      return split_witness{ i, split_kind::zero_side };
    }
    if ( restrict( f, i, true ).constant_value() == true )
    {
      return split_witness{ i, split_kind::one_side };
    }
  }
  return std::nullopt;
}

lro_verdict recognize_lro( bool_function const& f )
{
  lro_verdict verdict;
  if ( auto c = f.constant_value() )
  {
    verdict.is_lro = true;
    verdict.constant = c;
    return verdict;
  }
  std::vector<unsigned> names( f.arity() );
  for ( auto i = 0u; i < f.arity(); ++i )
  {
    names[i] = i + 1u;
  }
  verdict.formula = decompose( f, names );
  verdict.is_lro = verdict.formula.has_value();
  return verdict;
}

bool is_lro( bool_function const& f )
{
  return recognize_lro( f ).is_lro;
}

bool is_nested( bool_function const& f )
{
  return is_lro( f ) && depends_on_all_variables( f );
}

bool_function formula_to_function( nested_formula const& phi, unsigned arity )
{
  for ( auto v : phi.variables() )
  {
    if ( v < 1u || v > arity )
    {
      throw index_out_of_range( "formula variable x" + std::to_string( v ) + " exceeds arity " + std::to_string( arity ) );
    }
  }
  auto value_of = []( literal const& l, std::uint32_t j ) {
    bool const bit = ( j >> ( l.variable - 1u ) ) & 1u;
    return l.positive ? bit : !bit;
  };
  return bool_function::from_predicate( arity, [&]( std::uint32_t j ) {
    bool value = value_of( phi.last, j );
    for ( auto it = phi.links.rbegin(); it != phi.links.rend(); ++it )
    {
      bool const lit = value_of( it->lit, j );
      value = it->op == nested_op::conjunction ? ( lit && value ) : ( lit || value );
    }
    return value;
  } );
}

} // namespace tlt
