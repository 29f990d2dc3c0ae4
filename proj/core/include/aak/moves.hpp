#pragma once
#include <array>
#include <optional>
#include <vector>

#include "aak/diagram.hpp"

namespace aak {

// ---------------------------------------------------------------------------
// Pattern site detection around the dealternator.
//
// A candidate site sits on an edge lambda from the dealternator delta to a
// neighbor crossing q. Each side of lambda carries three faces: the side
// face O (adjacent to lambda), P (across O's corner edge at delta) and Q
// (across O's corner edge at q). A crossing x shared by P and Q makes the
// side a "flype component"; the tangle W spanned between delta, q and x is
// trivial when it is just the two boundary segments (equivalently: O is a
// triangle whose third corner is x).
// ---------------------------------------------------------------------------

struct TongueSide {
    int o_face = -1, p_face = -1, q_face = -1;
    std::vector<int> xs;         // candidate flype crossings, sorted
    int triv = -1;               // the trivial-corner crossing, or -1
    std::array<Dart, 2> corner_delta{};  // O/P corner edge at delta
    std::array<Dart, 2> corner_q{};      // O/Q corner edge at q
    std::vector<int> w;          // tangle crossings for x* (triv or xs[0])
    bool w_trivial = false;      // w.empty() for x*
};

struct TongueSite {
    int delta = -1, q = -1;
    Dart d_delta = -1, d_q = -1;  // the lambda edge's two darts
    int slot = -1;                // dart_slot(d_delta)
    TongueSide left, right;       // left: face of d_q; right: face of d_delta
};

// All candidate sites on edges at the dealternator `delt`, in slot order.
std::vector<TongueSite> tongue_sites(const Diagram& d, int delt);

// Tangle crossings between delta, q and candidate x on one side: the
// crossings cut off from delta and q by removing x and cutting the two
// corner edges. Empty = trivial side.
std::vector<int> side_tangle(const Diagram& d, const TongueSite& t,
                             bool left_side, int x);

// True when the trivial-trivial site closes up with the wrap edge
// (its e_q leg attaches to v_A or v_B): the one-crossing pattern applies
// instead of the two-crossing one.
bool site_is_wrap(const Diagram& d, const TongueSite& t);

// ---------------------------------------------------------------------------
// Pattern rewrites. All return std::nullopt when the move does not apply at
// the given site (wrong local shape, or the reglued diagram fails planarity
// or connectivity). Every successful result is a planar connected diagram
// whose dealternator flag sits on the pattern's new distinguished crossing.
// ---------------------------------------------------------------------------

// Expand the dealternator edge (delt, slot)--mate into the four-crossing
// pattern (adds 2 crossings). `mirror` applies the reflected variant.
std::optional<Diagram> apply_tongue(const Diagram& d, int delt, int slot,
                                    bool mirror);

// Replace the dealternator crossing by the four-crossing pattern plus wrap
// edge (adds 3 crossings). r rotates the attachment; wrap is 'A' or 'B'.
std::optional<Diagram> apply_twirl(const Diagram& d, int delt, int r,
                                   char wrap, bool mirror);

// Collapse a trivial-trivial site without wrap to two crossings (removes 2).
std::optional<Diagram> apply_untongue(const Diagram& d, const TongueSite& t);

// Collapse a trivial-trivial site with wrap to one crossing (removes 3).
std::optional<Diagram> apply_untwirl(const Diagram& d, const TongueSite& t);

// ---------------------------------------------------------------------------
// Flype: rotate a tangle T by a half-turn, moving crossing x to its far
// side. The flype circle cuts the two edges at x facing T plus e1 and e2.
// ---------------------------------------------------------------------------

struct FlypeSite {
    int x = -1;
    int s = -1;                 // T-facing slots are s, s+1
    std::array<Dart, 2> e1{};   // cut edge (dart pair, smaller first)
    std::array<Dart, 2> e2{};
    std::vector<int> tangle;    // T crossings, sorted
};

std::vector<FlypeSite> flype_sites(const Diagram& d);

// Deterministic regluing: tangle crossings reflect slots and toggle under
// parity; exactly one regluing chirality is planar and the moved crossing's
// under bit is locked to it. Returns nullopt if the site data is stale.
std::optional<Diagram> apply_flype(const Diagram& d, int x, int s,
                                   std::array<Dart, 2> e1,
                                   std::array<Dart, 2> e2);
inline std::optional<Diagram> apply_flype(const Diagram& d, const FlypeSite& f) {
    return apply_flype(d, f.x, f.s, f.e1, f.e2);
}

// One flype that trivializes a non-trivial side of a site: moves the
// candidate crossing x across the tangle W toward lambda. When `used` is
// non-null it receives the flype actually applied.
std::optional<Diagram> shrink_flype(const Diagram& d, const TongueSite& t,
                                    bool left_side, FlypeSite* used = nullptr);

// ---------------------------------------------------------------------------
// Reidemeister reductions.
// ---------------------------------------------------------------------------

// First crossing with both opposite darts on one face, or -1.
int find_nugatory_crossing(const Diagram& d);

// Remove crossing c by splicing its through-strands (valid when c is
// nugatory); closed circles created by the splice accumulate on `loops`.
Diagram remove_through(const Diagram& d, int c);

// Remove a clasp pair by two through-splices.
Diagram r2_clasp_remove(const Diagram& d, int c1, int c2);

// Remove nugatory crossings until none remain; records removed crossing ids
// (pre-removal ids, in order) when `removed` is non-null.
Diagram reduce_kinks(const Diagram& d, std::vector<int>* removed = nullptr);

}  // namespace aak
