#pragma once

#include <string>
#include <string_view>

#include "toricvb/bundle.hpp"

namespace toricvb {

// Bundle interchange format (JSON):
//
//   {
//     "rank": 2,
//     "n": 2,
//     "filtrations": [
//       {"ray": 0, "steps": [{"until": 0, "basis": [[1,0],[0,1]]},
//                            {"until": 1, "basis": [[1,0]]}]},
//       ...
//     ]
//   }
//
// Step semantics follow Filtration: the first step is the whole space, each
// later step holds for (previous until, until], and the space is zero past
// the last until. Rationals are JSON integers or strings "n" / "p/q". "n"
// defaults to 2 and every ray must appear exactly once.

/// Throws ParseError (malformed document or field) or InvariantViolation
/// (filtration that is not strictly decreasing, ...).
ToricBundle parse_bundle(std::string_view text);

/// Canonical document: RREF bases, rays in order, integers where possible.
std::string serialize_bundle(const ToricBundle& e);

/// Reads `arg` as a bundle file when it names an existing file, otherwise
/// as a shifting-index string "a02,a01;a12,a11;a22,a21".
ToricBundle load_bundle(const std::string& arg);

}  // namespace toricvb
