#pragma once
//
// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
//   jtdfe recode   (--k K --l L | --eta0 A,B --eta1 A,B) [--w 5 --bmax 4 --lut FILE --grid]
//   jtdfe lut-gen  --w W --bmax B [--xmax X] [--mu +1|-1] [-o FILE] [--stats] [--serial]
//   jtdfe dsmul    (--k K --l L | --eta0 A,B --eta1 A,B) [--P PT --Q PT] [--method naive|tjsf|jtdfe]
//   jtdfe bench    [--trials N --seed S --methods tjsf,jtdfe] [--serial] [--no-greedy]
//   jtdfe selftest [--samples N --seed S]
//
// Common: --curve FILE (key=value curve config; K-163 by default).
//

#include "jtdfe/ztau.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace jtdfe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitInternal = 4;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decimal or 0x-hex integer, optional leading '-'. Throws std::invalid_argument.
BigInt parse_scalar(const std::string& text);
/// "a,b" with each part accepted by parse_scalar.
KleinianInt parse_kleinian(const std::string& text);

}  // namespace jtdfe::cli
