#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tlt
{

/* exact rational in lowest terms with positive denominator */
using rational = mpq_class;

/* "p/q", or plain "p" when the denominator is 1 */
std::string to_string( rational const& q );

/* accepts "p", "-p", "p/q"; throws parse_error */
rational parse_rational( std::string_view text );

} // namespace tlt
