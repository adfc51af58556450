#include "tlt/rational.hpp"

#include <cctype>

#include "tlt/errors.hpp"

namespace tlt
{

std::string to_string( rational const& q )
{
  rational reduced = q;
  reduced.canonicalize();
  return reduced.get_str();
}

rational parse_rational( std::string_view text )
{
  auto const slash = text.find( '/' );
  auto valid_integer = []( std::string_view s ) {
    if ( !s.empty() && ( s[0] == '-' || s[0] == '+' ) )
    {
      s.remove_prefix( 1 );
    }
    if ( s.empty() )
    {
      return false;
    }
    for ( char c : s )
    {
      if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
      {
        return false;
      }
    }
    return true;
  };
  auto const num = text.substr( 0, slash );
  if ( !valid_integer( num ) )
  {
    throw parse_error( "invalid rational numerator", 0 );
  }
  std::string s( num[0] == '+' ? num.substr( 1 ) : num );
  if ( slash != std::string_view::npos )
  {
    auto const den = text.substr( slash + 1u );
    if ( !valid_integer( den ) || den[0] == '-' || den[0] == '+' )
    {
      throw parse_error( "invalid rational denominator", slash + 1u );
    }
    if ( mpz_class( std::string( den ) ) == 0 )
    {
      throw parse_error( "zero denominator", slash + 1u );
    }
    s += "/" + std::string( den );
  }
  rational q( s );
  q.canonicalize();
  return q;
}

} // namespace tlt
