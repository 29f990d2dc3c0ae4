#pragma once
#include <vector>

#include "aak/diagram.hpp"

namespace aak {

// Capped twist chain of |m| crossings ("coiled" unknot diagram): alternating,
// every crossing removable as a kink, sign(m) picks the handedness.
// Throws input_error when m == 0.
Diagram encode_coil(int m);

// Base family member: the |m|-crossing twist chain closed through a clasp
// pair whose second crossing is the dealternator. Reduced, almost
// alternating, not strongly reduced; clasp removal plus kink reduction
// empties it. Throws input_error when m == 0.
Diagram encode_C(int m);

struct EnumConfig {
    int max_crossings = 0;
    std::vector<int> m_values = {1, -1, 2, -2, 3, -3};
    bool dedup = true;
};

// Breadth-first closure of {encode_C(m)} under flype (same crossing count),
// tongue (+2) and twirl (+3) placements, truncated at max_crossings. Only
// reduced outputs are kept; each is re-flagged at its computed dealternator.
// Output is sorted by (crossing count, canonical code); with dedup (the
// default) each canonical class appears once.
std::vector<Diagram> enumerate_unknot_diagrams(const EnumConfig& cfg);

// Flip the unique dealternator of a reduced almost alternating diagram and
// clear the flag: the corresponding reduced alternating diagram (the
// unknotting-number-one witness). Throws input_error on precondition
// failure.
Diagram u1_alternating(const Diagram& d);

}  // namespace aak
