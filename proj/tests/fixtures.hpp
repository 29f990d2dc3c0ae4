#pragma once
// Shared fixtures and brute-force reference checkers for the unit tests.
#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "aak/diagram.hpp"
#include "aak/pd.hpp"

namespace fixtures {

using namespace aak;

// Alternating 3-crossing torus knot.
inline const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
// The same diagram with crossing 0 flipped: an unknot diagram one crossing
// change away from alternating.
inline const char* kFlippedTrefoil = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";
// Connected sum of two trefoils of equal handedness.
inline const char* kGranny =
    "X[1,4,2,5] X[3,6,4,1] X[5,13,6,3] X[13,10,8,11] X[9,12,10,2] "
    "X[11,8,12,9]";

// Alternating (2,k) torus diagram: a closed chain of k clasped crossings.
inline Diagram torus2k(int k) {
    std::vector<Dart> sig(static_cast<size_t>(4 * k), -1);
    auto link = [&](Dart a, Dart b) {
        sig[static_cast<size_t>(a)] = b;
        sig[static_cast<size_t>(b)] = a;
    };
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        link(make_dart(i, 3), make_dart(j, 0));
        link(make_dart(i, 2), make_dart(j, 1));
    }
    return Diagram(k, std::move(sig), std::vector<uint8_t>(static_cast<size_t>(k), 0));
}

// Flip one crossing of d and mark it as the distinguished crossing.
inline Diagram flip_marked(const Diagram& d, int c) {
    Diagram nd = d.flipped(c);
    nd.dealt.assign(nd.dealt.size(), 0);
    nd.dealt[static_cast<size_t>(c)] = 1;
    return nd;
}

// Apply an explicit crossing permutation + per-crossing slot rotation.
// Rotating slots by an odd amount swaps the under-strand parity.
inline Diagram relabeled(const Diagram& d, const std::vector<int>& perm,
                         const std::vector<int>& rot) {
    std::vector<Dart> sig(static_cast<size_t>(d.dart_count()));
    std::vector<uint8_t> under(static_cast<size_t>(d.n));
    std::vector<uint8_t> dealt(static_cast<size_t>(d.n));
    auto phi = [&](Dart dd) {
        int c = dart_crossing(dd), s = dart_slot(dd);
        return make_dart(perm[static_cast<size_t>(c)],
                         (s + rot[static_cast<size_t>(c)]) & 3);
    };
    for (Dart dd = 0; dd < d.dart_count(); ++dd)
        sig[static_cast<size_t>(phi(dd))] = phi(d.mate(dd));
    for (int c = 0; c < d.n; ++c) {
        under[static_cast<size_t>(perm[static_cast<size_t>(c)])] =
            static_cast<uint8_t>((d.under[static_cast<size_t>(c)] +
                                  rot[static_cast<size_t>(c)]) &
                                 1);
        dealt[static_cast<size_t>(perm[static_cast<size_t>(c)])] =
            d.dealt[static_cast<size_t>(c)];
    }
    Diagram nd(d.n, std::move(sig), std::move(under), std::move(dealt));
    nd.loops = d.loops;
    return nd;
}

// Exhaustive orientation-preserving map isomorphism: some crossing bijection
// plus per-crossing slot rotation carries one involution to the other and
// matches the under/dealt decorations. Only practical for small n.
inline bool map_isomorphic(const Diagram& a, const Diagram& b) {
    if (a.n != b.n || a.loops != b.loops) return false;
    if (a.n == 0) return true;
    std::vector<int> p(static_cast<size_t>(a.n));
    std::iota(p.begin(), p.end(), 0);
    int total = 1;
    for (int i = 0; i < a.n; ++i) total *= 4;
    std::vector<int> rot(static_cast<size_t>(a.n));
    do {
        for (int code = 0; code < total; ++code) {
            int cc = code;
            for (int i = 0; i < a.n; ++i) {
                rot[static_cast<size_t>(i)] = cc & 3;
                cc >>= 2;
            }
            auto phi = [&](Dart dd) {
                int c = dart_crossing(dd), s = dart_slot(dd);
                return make_dart(p[static_cast<size_t>(c)],
                                 (s + rot[static_cast<size_t>(c)]) & 3);
            };
            bool ok = true;
            for (Dart dd = 0; dd < a.dart_count() && ok; ++dd)
                if (b.mate(phi(dd)) != phi(a.mate(dd))) ok = false;
            for (int c = 0; c < a.n && ok; ++c) {
                size_t pc = static_cast<size_t>(p[static_cast<size_t>(c)]);
                if (b.under[pc] !=
                    ((a.under[static_cast<size_t>(c)] +
                      rot[static_cast<size_t>(c)]) &
                     1))
                    ok = false;
                if (b.dealt[pc] != a.dealt[static_cast<size_t>(c)]) ok = false;
            }
            if (ok) return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace fixtures
