#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlt/bool_function.hpp"

namespace tlt
{

struct literal
{
  unsigned variable = 0;
  bool positive = true;

  friend bool operator==( literal const&, literal const& ) = default;
};

enum class nested_op
{
  conjunction,
  disjunction
};

struct nested_link
{
  literal lit;
  nested_op op;

  friend bool operator==( nested_link const&, nested_link const& ) = default;
};

/*! \brief Nested formula l_1 op_1 ( l_2 op_2 ( ... ( l_k op_k last ) ) )

  Each level combines one fresh literal with the remaining subformula.
*/
struct nested_formula
{
  std::vector<nested_link> links;
  literal last;

  std::vector<unsigned> variables() const;
  /* every variable index appears at most once */
  bool is_read_once() const;
  bool has_negation() const;

  friend bool operator==( nested_formula const&, nested_formula const& ) = default;
};

/* fully parenthesized text, e.g. `(x3 & (x5 & (x1 | x2)))`, negation `~` */
std::string to_string( nested_formula const& phi );

/* accepts the output of to_string; throws parse_error */
nested_formula parse_nested_formula( std::string_view text );

enum class split_kind
{
  zero_side, /* f|x_i=0 is constant 0 */
  one_side   /* f|x_i=1 is constant 1 */
};

struct split_witness
{
  unsigned variable = 0;
  split_kind kind = split_kind::zero_side;

  friend bool operator==( split_witness const&, split_witness const& ) = default;
};

/* first witness in (variable, zero_side before one_side) order */
std::optional<split_witness> is_split( bool_function const& f );

/* every witness in the same order */
std::vector<split_witness> split_witnesses( bool_function const& f );

/*! \brief Linear read-once recognition result

  Constants are linear read-once without a formula; `constant` then holds
  their value.
*/
struct lro_verdict
{
  bool is_lro = false;
  std::optional<bool> constant;
  std::optional<nested_formula> formula;

  explicit operator bool() const noexcept { return is_lro; }
};

/*! \brief Decomposes f greedily into a nested formula

  Variables are tried in increasing order, shapes in the order x & t, x | t,
  ~x & t, ~x | t. Irrelevant variables never appear in the formula.
*/
lro_verdict recognize_lro( bool_function const& f );

bool is_lro( bool_function const& f );

/* linear read-once and depends on all its variables */
bool is_nested( bool_function const& f );

/* throws index_out_of_range if phi mentions a variable above arity */
bool_function formula_to_function( nested_formula const& phi, unsigned arity );

} // namespace tlt
