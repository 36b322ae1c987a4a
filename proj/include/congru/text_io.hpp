#pragma once

// Plain-text formats shared by the CLI and fixtures. Lines starting with '#'
// are comments everywhere.
//
//   function table   "n m" then n values
//   integer list     whitespace separated decimal integers
//   approximation    "p N" (base p) or "! N" (factorial), then N digits,
//                    least significant first
//   set              "d B", "pos r..", "neg r..", "window <2B+1 chars of 0/1>"

#include <string>
#include <string_view>
#include <vector>

#include "congru/finite_cp.hpp"
#include "congru/lattices.hpp"
#include "congru/limits.hpp"
#include "congru/ringcore.hpp"

namespace congru {

FiniteFn parse_finite_fn(std::string_view text);
std::string format_finite_fn(const FiniteFn& f);

std::vector<Int> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<Int>& values);

LimitApprox parse_limit(std::string_view text);
std::string format_limit(const LimitApprox& x);

EPSet parse_epset(std::string_view text);
std::string format_epset(const EPSet& s);

// Inline set syntax:
//   rec:d:r1,r2,..        r + dZ
//   ray:start:d           start + dN
//   rat:d:S:F:R           -(d+S+dN) u F u (d+R+dN), lists comma separated
//   fin:x1,x2,..          finite set
// Empty lists are written as nothing between the colons.
EPSet parse_set_spec(std::string_view spec);

}  // namespace congru
