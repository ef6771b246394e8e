#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "optpovm/povm.hpp"
#include "optpovm/spin32.hpp"

namespace optpovm::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kUnsupported = 3,
};

/// Requested target is not one of the built-ins, or parameters fall outside
/// what is supported.
class UnsupportedTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names accepted by --target.
const std::vector<std::string>& build_targets();

/// A built-in target is either a POVM or a bare ray catalog.
using Artifact = std::variant<Povm, spin32::RayCatalog>;
Artifact build_target(std::string_view name);

/// Angle written as a rational multiple of pi: "0", "pi", "pi/8", "3pi/8",
/// "3*pi/8". Throws std::invalid_argument otherwise.
double parse_angle(std::string_view text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optpovm::cli
