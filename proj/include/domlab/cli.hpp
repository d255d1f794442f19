#pragma once

#include <iosfwd>

namespace domlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // verify found a violated constraint
inline constexpr int kExitInput = 2;    // unreadable or malformed input, bad flags

/// Entry point of the `domlab` tool. Normal output goes to `out`; diagnostics
/// and FINDING lines go to `err`. Never throws.
///
///   solve <graph> [--variant V] [--format F]
///   verify <graph> <labeling> [--variant V] [--format F]
///   classify <graph> [--format F]
///   crosscheck [--nmax N] [--workers W] [--out PATH]
///   grid-table [--nmax N] [--workers W] [--out PATH]
///   product-check [--max-order N] [--workers W] [--out PATH]
///   catalog [--nmax N] [--workers W] [--out PATH]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace domlab::cli
