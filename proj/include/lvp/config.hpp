#pragma once

#include <string>
#include <string_view>

#include "lvp/coeffs.hpp"

namespace lvp {

/// Parses the line-oriented system description:
///
///   [system]
///   T = 1
///   [a]
///   kind = const          # or trig
///   value = 2.0102        # const
///   c0 = 2.0102           # trig
///   harmonic = 1, 0, 0.01 # trig, repeatable: k, cos, sin
///
/// Sections [system] and [a]..[f] are all required. '#' starts a comment.
/// Throws ParseError (with line/column) on malformed text and
/// ValidationError when the system violates T > 0 or b, c, e, f > 0.
SystemSpec parseConfig(std::string_view text);

/// Reads and parses a file. Throws Error if the file cannot be read.
SystemSpec loadConfig(const std::string& path);

/// Inverse of parseConfig; numbers carry 17 significant digits so that
/// parseConfig(formatConfig(s)) == s.
std::string formatConfig(const SystemSpec& spec);

}  // namespace lvp
