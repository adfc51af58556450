#pragma once

#include <optional>
#include <string>

#include "tlt/json_io.hpp"
#include "tlt/read_once.hpp"
#include "tlt/teaching.hpp"

namespace tlt
{

struct analysis_options
{
  bool skip_essential = false;
  bool timings = false;
  unsigned threads = 1;
};

/* a section that could not be computed, with the error code that prevented it */
struct unavailable
{
  std::string reason;
  std::string message;
};

/*! \brief Everything the pipeline knows about one function

  Optional members are empty exactly when their precondition failed; the
  matching `*_unavailable` entry names the reason.
*/
struct analysis_bundle
{
  bool_function function;
  std::optional<std::string> dnf_input;
  bool positive = false;
  std::vector<unsigned> relevant;
  threshold_verdict threshold;
  lro_verdict lro;
  std::optional<split_witness> split;
  std::optional<extremal_set> extremal;
  std::optional<unavailable> extremal_unavailable;
  std::optional<essential_report> essential;
  std::optional<unavailable> essential_unavailable;
  std::map<std::string, double> seconds;
};

analysis_bundle analyze( bool_function const& f, analysis_options const& options = {} );

json to_json( analysis_bundle const& bundle, bool timings = false );

/* key: value lines for terminals */
std::string format_bundle( analysis_bundle const& bundle );

} // namespace tlt
