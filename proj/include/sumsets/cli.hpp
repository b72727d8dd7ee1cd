#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumsets/field.hpp"

namespace sumsets::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapRefused = 3,
};

// Contents of an instance file:
//   {"q": 3, "n": 2, "S": [[0,1],[2,2]], "T": [[1,1]],
//    "S_prime": [...], "T_prime": [...]}
// S is required. T defaults to S. S_prime and T_prime are only read by
// `verify`. S and T keep their file order in s_ord / t_ord for check-sumfree.
struct Instance {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::vector<FieldVector> s_ord;
  std::vector<FieldVector> t_ord;
  PointSet s{2, 0};
  PointSet t{2, 0};
  bool has_t = false;
  std::optional<PointSet> s_prime;
  std::optional<PointSet> t_prime;
};

// ParseError (with line/column or field path) for malformed text;
// ValidationError for composite q, out-of-range coordinates, wrong tuple
// length, or duplicate entries.
Instance parse_instance_text(std::string_view text);
Instance parse_instance(const std::string& path);

// Runs one subcommand. args excludes the program name. The report goes to
// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsets::cli
