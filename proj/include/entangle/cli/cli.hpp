#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entangle::cli {

/// Exit codes shared by every command.
enum Exit : int { kVerified = 0, kCheckFailed = 1, kUsage = 2 };

struct QubitCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The six exact checks of the two-qubit example, in order.
std::vector<QubitCheck> qubit_checks();

/// Entry point of the `cone` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entangle::cli
