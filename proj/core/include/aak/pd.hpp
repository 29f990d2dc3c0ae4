#pragma once
#include <string>
#include <string_view>

#include "aak/diagram.hpp"

namespace aak {

// Parse PD notation: whitespace-separated tokens, `#` starts a comment that
// runs to end of line.
//   X[a,b,c,d]   crossing; labels counterclockwise, a = incoming under edge
//   Xd[a,b,c,d]  same, crossing flagged as the dealternator
//   O            crossing-free circle component
// Labels are positive integers, each appearing exactly twice overall.
// Throws input_error on malformed text, bad label multiplicity, or a
// non-planar pairing.
Diagram parse_pd(std::string_view text);

// Emit PD text for a diagram: one line, X/Xd tokens plus one O per loop.
// Deterministic: edge labels 1..2n are assigned along the strand walk that
// realizes the canonical code, and each crossing is written starting at its
// incoming under edge.
std::string emit_pd(const Diagram& d);

}  // namespace aak
