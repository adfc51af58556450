#include "tlt/dnf.hpp"

#include <algorithm>
#include <cctype>

#include "tlt/errors.hpp"

namespace tlt
{

namespace
{

class dnf_parser
{
public:
  explicit dnf_parser( std::string_view text ) : text_( text ) {}

  std::vector<positive_term> parse()
  {
    std::vector<positive_term> terms;
    terms.push_back( term() );
    skip_ws();
    while ( pos_ < text_.size() )
    {
      if ( text_[pos_] != '|' )
      {
        throw parse_error( "expected '|' or end of input", pos_ );
      }
      ++pos_;
      terms.push_back( term() );
      skip_ws();
    }
    return terms;
  }

private:
  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  positive_term term()
  {
    positive_term t;
    skip_ws();
    while ( pos_ < text_.size() && text_[pos_] == 'x' )
    {
      t.push_back( atom() );
      skip_ws();
    }
    if ( t.empty() )
    {
      throw parse_error( "expected variable 'x<k>'", pos_ );
    }
    return t;
  }

  unsigned atom()
  {
    auto const start = pos_;
    ++pos_; /* 'x' */
    skip_ws();
    if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      throw parse_error( "expected variable index", pos_ );
    }
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
    if ( index == 0u )
    {
      throw parse_error( "variable indices start at 1", start );
    }
    return static_cast<unsigned>( index );
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<positive_term> parse_positive_terms( std::string_view text )
{
  return dnf_parser( text ).parse();
}

bool_function dnf_to_function( std::vector<positive_term> const& terms, unsigned arity )
{
  std::vector<std::uint32_t> masks;
  for ( auto const& t : terms )
  {
    std::uint32_t mask = 0;
    for ( auto v : t )
    {
      if ( v < 1u || v > arity )
      {
        throw index_out_of_range( "variable x" + std::to_string( v ) + " exceeds arity " + std::to_string( arity ) );
      }
      mask |= std::uint32_t{ 1 } << ( v - 1u );
    }
    masks.push_back( mask );
  }
  return bool_function::from_predicate( arity, [&]( std::uint32_t j ) {
    return std::any_of( masks.begin(), masks.end(), [j]( auto m ) { return ( j & m ) == m; } );
  } );
}

bool_function parse_positive_dnf( std::string_view text, unsigned arity )
{
  return dnf_to_function( parse_positive_terms( text ), arity );
}

bool_function parse_positive_dnf( std::string_view text )
{
  auto const terms = parse_positive_terms( text );
  unsigned arity = 0;
  for ( auto const& t : terms )
  {
    arity = std::max( arity, *std::max_element( t.begin(), t.end() ) );
  }
  if ( arity > max_arity )
  {
    throw unsupported_arity( "DNF uses x" + std::to_string( arity ) + ", beyond " + std::to_string( max_arity ) + " variables" );
  }
  return dnf_to_function( terms, arity );
}

std::string format_dnf( std::vector<positive_term> const& terms )
{
  std::string out;
  for ( auto k = 0u; k < terms.size(); ++k )
  {
    if ( k )
    {
      out += " | ";
    }
    for ( auto v : terms[k] )
    {
      out += "x" + std::to_string( v );
    }
  }
  return out;
}

std::string to_positive_dnf( bool_function const& f )
{
  if ( auto c = f.constant_value() )
  {
    return *c ? "1" : "0";
  }
  std::vector<positive_term> terms;
  for ( auto const& p : extremal_points( f ).minimal_ones )
  {
    positive_term t;
    for ( auto i = 1u; i <= p.arity; ++i )
    {
      if ( p[i] )
      {
        t.push_back( i );
      }
    }
    terms.push_back( t );
  }
  return format_dnf( terms );
}

} // namespace tlt
