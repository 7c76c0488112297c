#pragma once

#include <ostream>
#include <span>
#include <string>

namespace geoconv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
/// A NO / UNKNOWN answer, a failed class requirement or an oracle mismatch.
inline constexpr int exit_negative = 2;

/// Runs one command line (without the program name). Reports go to `out` as
/// JSON (graph and matroid text for gen/basis-graph); diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

} // namespace geoconv::cli
