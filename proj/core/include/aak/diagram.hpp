#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace aak {

// A dart is a quarter-edge at a crossing: dart = 4*crossing + slot,
// slots 0..3 counterclockwise.
using Dart = int32_t;

constexpr Dart make_dart(int c, int s) { return static_cast<Dart>(4 * c + s); }
constexpr int dart_crossing(Dart d) { return d >> 2; }
constexpr int dart_slot(Dart d) { return d & 3; }
// Rotate a dart k slots counterclockwise around its crossing (k may be
// negative).
constexpr Dart dart_rot(Dart d, int k) { return (d & ~3) | ((d + k) & 3); }

// Combinatorial knot/link diagram as a rotation system on a 4-regular plane
// graph. The strand passing UNDER at crossing c occupies slots {u, u+2} where
// u = under[c] in {0,1}. `dealt` flags crossings marked as the distinguished
// non-alternating crossing. `loops` counts crossing-free circle components.
struct Diagram {
    int n = 0;
    int loops = 0;
    std::vector<Dart> sigma;     // size 4n, fixed-point-free involution
    std::vector<uint8_t> under;  // size n, values 0/1
    std::vector<uint8_t> dealt;  // size n, values 0/1

    Diagram() = default;
    Diagram(int n_, std::vector<Dart> sigma_, std::vector<uint8_t> under_,
            std::vector<uint8_t> dealt_ = {});

    int dart_count() const { return 4 * n; }
    Dart mate(Dart d) const { return sigma[static_cast<size_t>(d)]; }
    bool is_under_dart(Dart d) const {
        return (dart_slot(d) & 1) == under[static_cast<size_t>(dart_crossing(d))];
    }
    // Strand traversal: enter a crossing via d, exit via the opposite slot.
    Dart next_passage(Dart d) const { return mate(dart_rot(d, 2)); }

    // Structural checks; throws internal_error when the involution is broken.
    void check_wellformed() const;

    // Faces as orbits of d -> rot(sigma(d), 1): the face to the left of a
    // dart pointing out of its crossing. Face degree = orbit length.
    std::vector<std::vector<Dart>> faces() const;
    // face index per dart, plus the face list.
    std::vector<int> face_map(std::vector<std::vector<Dart>>* out_faces = nullptr) const;

    bool euler_ok() const;           // V - E + F == 2 (sphere embedding)
    int components() const;          // strand components (loops excluded)
    bool is_connected_graph() const; // crossing graph connectivity
    // One passage orbit per strand component (direction quotiented).
    std::vector<std::vector<Dart>> strands() const;

    Diagram flipped(int c) const;    // toggle over/under at crossing c

    bool operator==(const Diagram&) const = default;
};

// Canonical code: traversal encoding minimized over all 4n start darts
// (which covers both traversal orientations); relabeling-invariant,
// mirror-images get distinct codes. Tokens per passage:
// (first-visit label, slot offset from first entry, under bit, dealt bit).
using CanonicalCode = std::vector<int32_t>;
CanonicalCode canonical_code(const Diagram& d);
std::string canonical_code_string(const Diagram& d);
// The start dart whose traversal encoding realizes the canonical code.
Dart canonical_start(const Diagram& d);

// Plane reflection: negate slots at every crossing (under parity is
// preserved by slot negation). Dealternator flags are preserved.
Diagram reflect(const Diagram& d);

}  // namespace aak
