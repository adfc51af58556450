#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

/* all 2^(2^n) truth tables of n <= 4 variables in increasing table order */
void for_each_function( unsigned n, std::function<void( bool_function const& )> const& fn );
std::vector<bool_function> enumerate_all_functions( unsigned n );

/*! \brief Monotone functions of n <= 6 variables

  Generated by the pair rule: f = (f0, f1) on x_n = 0 / x_n = 1 with f0, f1
  monotone in n-1 variables and f0 <= f1 pointwise. Tables are returned as
  words in increasing order.
*/
std::vector<std::uint64_t> monotone_tables( unsigned n );
void for_each_monotone( unsigned n, std::function<void( bool_function const& )> const& fn );
std::vector<bool_function> enumerate_monotone( unsigned n );

/* Dedekind numbers for n = 0..6 */
std::uint64_t dedekind_number( unsigned n );

} // namespace tlt
