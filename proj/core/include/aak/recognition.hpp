#pragma once
#include <vector>

#include "aak/diagram.hpp"

namespace aak {

// A bigon face whose two crossings cancel by a Reidemeister-II move: one
// strand passes over at both crossings.
struct ClaspSite {
    int c1, c2;                  // c1 < c2
    std::array<Dart, 2> face;    // the bigon's face orbit
    bool operator==(const ClaspSite&) const = default;
};

struct Recognition {
    bool connected = false;           // single strand component, no loops aside
    bool knot = false;                // exactly one component and no loops
    bool reduced = false;             // no nugatory crossing
    bool prime = false;
    bool alternating = false;
    bool almost_alternating = false;  // exactly one crossing change away
    bool strongly_reduced = false;    // reduced and no trivial clasp
    std::vector<int> dealternators;   // sorted crossing ids
    std::vector<ClaspSite> clasps;    // sorted by (c1, c2)
    std::vector<int> nugatory;        // sorted crossing ids
};

bool is_alternating(const Diagram& d);
// Crossings whose flip makes the diagram alternating (empty if alternating).
std::vector<int> dealternators(const Diagram& d);
// Crossings with both opposite darts on one face (kink-removable).
std::vector<int> nugatory_crossings(const Diagram& d);
std::vector<ClaspSite> trivial_clasps(const Diagram& d);
// No simple closed curve meets the diagram in two edge points with
// crossings on both sides.
bool is_prime(const Diagram& d);

Recognition recognize(const Diagram& d);

}  // namespace aak
