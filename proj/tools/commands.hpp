// Subcommands of the `henkin` tool, callable in-process.

#ifndef HENKIN_TOOLS_COMMANDS_HPP
#define HENKIN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "henkin/reducer.hpp"
#include "henkin/words.hpp"

namespace henkin::cli {

  enum ExitStatus : int {
    ok            = 0,  // success, true, found
    negative      = 1,  // false, none
    usage_error   = 2,  // bad arguments or unparsable input
    mismatch      = 3,  // crosscheck disagreement
    out_of_budget = 4,  // resource limit
  };

  struct CrosscheckRow {
    std::uint32_t size;
    bool          formula_true;
    bool          witness_found;

    bool agree() const noexcept { return formula_true == witness_found; }
  };

  // Evaluates compile(E, q) and runs the oracle for every m in 1..max_size.
  // Throws ResourceLimitExceeded from either side.
  std::vector<CrosscheckRow> crosscheck(
      Presentation const& E,
      Equation const&     q,
      std::uint32_t       max_size,
      std::uint64_t       budget,
      reduce::Mutation    mutation = reduce::Mutation::none);

  // Runs `henkin <args...>`; args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace henkin::cli

#endif  // HENKIN_TOOLS_COMMANDS_HPP
