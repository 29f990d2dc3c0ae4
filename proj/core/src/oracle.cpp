#include "aak/oracle.hpp"

#include <numeric>
#include <set>
#include <vector>

#include "aak/errors.hpp"

namespace aak {

namespace {

void check_budget(const Diagram& d, int budget) {
    if (d.n > budget)
        throw input_error("diagram has " + std::to_string(d.n) +
                          " crossings, over the exact-evaluation budget of " +
                          std::to_string(budget));
}

int uf_find(std::vector<int>& p, int x) {
    while (p[static_cast<size_t>(x)] != x) {
        p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
        x = p[static_cast<size_t>(x)];
    }
    return x;
}

void uf_union(std::vector<int>& p, int a, int b) {
    p[static_cast<size_t>(uf_find(p, a))] = uf_find(p, b);
}

}  // namespace

Poly bracket(const Diagram& d, int budget) {
    check_budget(d, budget);
    int n = d.n;
    if (n == 0) return delta_pow(std::max(0, d.loops - 1));
    int nd = d.dart_count();
    Poly out;
    std::vector<int> base(static_cast<size_t>(nd));
    std::iota(base.begin(), base.end(), 0);
    for (Dart dd = 0; dd < nd; ++dd) uf_union(base, dd, d.mate(dd));
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> p = base;
        int a_minus_b = 0;
        for (int c = 0; c < n; ++c) {
            int u0 = d.under[static_cast<size_t>(c)];
            if (((mask >> c) & 1u) == 0) {
                // A-smoothing joins (u0,u0+1) and (u0+2,u0+3).
                ++a_minus_b;
                uf_union(p, make_dart(c, u0), make_dart(c, (u0 + 1) & 3));
                uf_union(p, make_dart(c, (u0 + 2) & 3), make_dart(c, (u0 + 3) & 3));
            } else {
                --a_minus_b;
                uf_union(p, make_dart(c, (u0 + 1) & 3), make_dart(c, (u0 + 2) & 3));
                uf_union(p, make_dart(c, (u0 + 3) & 3), make_dart(c, u0));
            }
        }
        int circles = 0;
        for (int i = 0; i < nd; ++i)
            if (uf_find(p, i) == i) ++circles;
        Poly term = poly_shift(delta_pow(circles - 1 + d.loops), a_minus_b, 1);
        out = poly_add(out, term);
    }
    return out;
}

namespace {

// Splice away crossing c: reconnect each of the two slot pairs given by
// `join01` (true: join slots u0-u0+1 / u0+2-u0+3, the A-smoothing; false:
// the B-smoothing), removing the crossing and counting any circle that
// becomes crossing-free.
Diagram splice(const Diagram& d, int c, bool a_smoothing) {
    int u0 = d.under[static_cast<size_t>(c)];
    // pairing of slots at c after the smoothing
    std::array<int, 4> link{};
    if (a_smoothing) {
        link[static_cast<size_t>(u0)] = (u0 + 1) & 3;
        link[static_cast<size_t>((u0 + 1) & 3)] = u0;
        link[static_cast<size_t>((u0 + 2) & 3)] = (u0 + 3) & 3;
        link[static_cast<size_t>((u0 + 3) & 3)] = (u0 + 2) & 3;
    } else {
        link[static_cast<size_t>((u0 + 1) & 3)] = (u0 + 2) & 3;
        link[static_cast<size_t>((u0 + 2) & 3)] = (u0 + 1) & 3;
        link[static_cast<size_t>((u0 + 3) & 3)] = u0;
        link[static_cast<size_t>(u0)] = (u0 + 3) & 3;
    }
    std::vector<int> remap(static_cast<size_t>(d.n), -1);
    int k = 0;
    for (int i = 0; i < d.n; ++i)
        if (i != c) remap[static_cast<size_t>(i)] = k++;
    std::vector<Dart> sig(static_cast<size_t>(4 * (d.n - 1)), -1);
    std::vector<char> visited(4, 0);
    int extra_loops = 0;
    auto resolve = [&](Dart start) -> Dart {
        // follow through c until landing on a kept dart
        Dart cur = start;
        int guard = 0;
        while (dart_crossing(cur) == c) {
            visited[static_cast<size_t>(dart_slot(cur))] = 1;
            int exit_slot = link[static_cast<size_t>(dart_slot(cur))];
            visited[static_cast<size_t>(exit_slot)] = 1;
            cur = d.mate(make_dart(c, exit_slot));
            if (++guard > 8) return -1;  // closed loop inside the splice
        }
        return cur;
    };
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        if (dart_crossing(dd) == c) continue;
        Dart m = resolve(d.mate(dd));
        if (m < 0) continue;  // unreachable for involution inputs
        sig[static_cast<size_t>(
            make_dart(remap[static_cast<size_t>(dart_crossing(dd))], dart_slot(dd)))] =
            make_dart(remap[static_cast<size_t>(dart_crossing(m))], dart_slot(m));
    }
    // Slots of c never touched by any outside chain form closed circles.
    {
        std::vector<char> seen(4, 0);
        for (int s = 0; s < 4; ++s) {
            if (visited[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)])
                continue;
            // trace the internal orbit s -> link(s) -> mate ...
            int cur = s;
            bool internal = true;
            int guard = 0;
            while (!seen[static_cast<size_t>(cur)]) {
                seen[static_cast<size_t>(cur)] = 1;
                int ex = link[static_cast<size_t>(cur)];
                seen[static_cast<size_t>(ex)] = 1;
                Dart m = d.mate(make_dart(c, ex));
                if (dart_crossing(m) != c) {
                    internal = false;
                    break;
                }
                cur = dart_slot(m);
                if (++guard > 8) break;
            }
            if (internal) ++extra_loops;
        }
    }
    std::vector<uint8_t> up, dl;
    for (int i = 0; i < d.n; ++i) {
        if (i == c) continue;
        up.push_back(d.under[static_cast<size_t>(i)]);
        dl.push_back(d.dealt[static_cast<size_t>(i)]);
    }
    Diagram nd(d.n - 1, std::move(sig), std::move(up), std::move(dl));
    nd.loops = d.loops + extra_loops;
    return nd;
}

Poly bracket_rec_impl(const Diagram& d) {
    if (d.n == 0) return delta_pow(std::max(0, d.loops - 1));
    Diagram a = splice(d, d.n - 1, true);
    Diagram b = splice(d, d.n - 1, false);
    Poly pa = poly_shift(bracket_rec_impl(a), 1, 1);
    Poly pb = poly_shift(bracket_rec_impl(b), -1, 1);
    return poly_add(pa, pb);
}

}  // namespace

Poly bracket_recursive(const Diagram& d, int budget) {
    check_budget(d, budget);
    return bracket_rec_impl(d);
}

int writhe(const Diagram& d) {
    // Orientation map: entering dart -1, exiting dart +1, per strand orbit.
    std::vector<int> dir(static_cast<size_t>(d.dart_count()), 0);
    for (auto& orb : d.strands()) {
        for (Dart dd : orb) {
            dir[static_cast<size_t>(dd)] = -1;
            dir[static_cast<size_t>(dart_rot(dd, 2))] = +1;
        }
    }
    int w = 0;
    for (int c = 0; c < d.n; ++c) {
        int u0 = d.under[static_cast<size_t>(c)];
        int uin = (dir[static_cast<size_t>(make_dart(c, u0))] == -1)
                      ? u0
                      : (u0 + 2) & 3;
        int oin = (dir[static_cast<size_t>(make_dart(c, (uin + 1) & 3))] == -1)
                      ? (uin + 1) & 3
                      : (uin + 3) & 3;
        w += (oin == ((uin + 1) & 3)) ? -1 : 1;
    }
    return w;
}

Poly jones(const Diagram& d, int budget) {
    Poly br = bracket(d, budget);
    int w = writhe(d);
    long long sign = (w % 2 == 0) ? 1 : -1;
    return poly_shift(br, -3 * w, sign);
}

bool jones_is_one(const Diagram& d, int budget) {
    return poly_is_one(jones(d, budget));
}

long long determinant(const Diagram& d, int budget) {
    Poly v = jones(d, budget);
    // Substitute A^4 = -1: exponents of a knot's V are multiples of 4, so
    // residues 1..3 must cancel.
    std::array<long long, 4> acc{0, 0, 0, 0};
    for (auto& [e, c] : v) {
        int q = (e >= 0) ? e / 4 : -((-e + 3) / 4);
        int r = e - 4 * q;
        acc[static_cast<size_t>(r)] += ((q % 2) ? -1 : 1) * c;
    }
    if (acc[1] != 0 || acc[2] != 0 || acc[3] != 0)
        throw internal_error("Jones polynomial has non-knot exponents");
    return acc[0] < 0 ? -acc[0] : acc[0];
}

}  // namespace aak
