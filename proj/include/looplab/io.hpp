#pragma once

#include <iosfwd>
#include <string>

#include "looplab/loop_table.hpp"

namespace looplab {

/// Cayley-table text format:
///   line 1: the order n
///   next n lines: n whitespace-separated 0-based entries each
/// '#' starts a comment to end of line; blank lines are ignored.
/// Throws Error(Parse) with line/column diagnostics; out-of-range entries
/// surface as Error(OutOfRangeEntry) with the offending line.
MagmaTable parse_table(std::istream& in);
MagmaTable parse_table(const std::string& text);

/// Canonical rendering of the same format (no comments, single spaces).
std::string format_table(const MagmaTable& m);
std::string format_table(const LoopTable& t);

/// FNV-1a 64-bit hash of the canonical rendering; identifies table content
/// independently of comments/whitespace in the source file.
std::uint64_t content_hash(const MagmaTable& m);
std::string content_hash_hex(const MagmaTable& m);

}  // namespace looplab
