#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "bincollatz/exact.hpp"

namespace bincollatz::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

/// A decimal integer, or a bitstring written as "bits:<digits>".
using StartValue = std::variant<BigInt, BinaryFraction>;

StartValue parse_start(const std::string& text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bincollatz::cli
