#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

/*! \brief A positive term, variable indices 1-based */
using positive_term = std::vector<unsigned>;

/*! \brief Parses a positive DNF such as `x1x2 | x1x3 | x2x3x4`

  Grammar: `term ('|' term)*` where a term is one or more atoms `x<k>`, k >= 1.
  Whitespace is ignored. Throws parse_error carrying the offending offset, and
  index_out_of_range when an atom exceeds `arity`.
*/
bool_function parse_positive_dnf( std::string_view text, unsigned arity );

/*! \brief Same as above with the arity taken to be the largest index used */
bool_function parse_positive_dnf( std::string_view text );

std::vector<positive_term> parse_positive_terms( std::string_view text );
bool_function dnf_to_function( std::vector<positive_term> const& terms, unsigned arity );

/*! \brief Prints terms in the grammar accepted by parse_positive_dnf */
std::string format_dnf( std::vector<positive_term> const& terms );

/*! \brief The irredundant positive DNF of a positive function (its minimal ones)

  Constants have no DNF in the grammar and yield "0" or "1".
*/
std::string to_positive_dnf( bool_function const& f );

} // namespace tlt
