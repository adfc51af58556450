#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlt
{

/*! \brief Base class of all errors raised by the library

  Every error carries a short machine-readable reason code that the command
  line front end forwards into its JSON output.
*/
class error : public std::runtime_error
{
public:
  error( std::string code, std::string const& message )
      : std::runtime_error( message ), code_( std::move( code ) )
  {
  }

  std::string const& code() const noexcept { return code_; }

private:
  std::string code_;
};

class arity_mismatch : public error
{
public:
  explicit arity_mismatch( std::string const& message ) : error( "arity_mismatch", message ) {}
};

class index_out_of_range : public error
{
public:
  explicit index_out_of_range( std::string const& message ) : error( "index_out_of_range", message ) {}
};

class unsupported_arity : public error
{
public:
  explicit unsupported_arity( std::string const& message ) : error( "unsupported_arity", message ) {}
};

class non_positive : public error
{
public:
  explicit non_positive( std::string const& message = "function is not positive" )
      : error( "non_positive", message )
  {
  }
};

class not_threshold_input : public error
{
public:
  explicit not_threshold_input( std::string const& message = "function is not a threshold function" )
      : error( "not_threshold_input", message )
  {
  }
};

class irrelevant_variable : public error
{
public:
  explicit irrelevant_variable( std::string const& message ) : error( "irrelevant_variable", message ) {}
};

class resource_limit : public error
{
public:
  explicit resource_limit( std::string const& message ) : error( "resource_limit", message ) {}
};

/*! \brief Malformed textual input; `position` is a 0-based character offset */
class parse_error : public error
{
public:
  parse_error( std::string const& message, std::size_t position )
      : error( "parse_error", message + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace tlt
