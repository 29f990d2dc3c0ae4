#include <algorithm>
#include <numeric>
#include <set>

#include "aak/moves.hpp"

namespace aak {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
    }
};

// Crossing components with crossing x removed and the two given edges cut.
UnionFind components_minus(const Diagram& d, int x,
                           const std::array<Dart, 2>& e1,
                           const std::array<Dart, 2>& e2) {
    UnionFind uf(d.n);
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(dd);
        if (m < dd) continue;
        if (dart_crossing(dd) == x || dart_crossing(m) == x) continue;
        std::array<Dart, 2> e{dd, m};
        if (e == e1 || e == e2) continue;
        uf.unite(dart_crossing(dd), dart_crossing(m));
    }
    return uf;
}

std::array<Dart, 2> norm_edge(Dart a, Dart b) {
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

std::vector<FlypeSite> flype_sites(const Diagram& d) {
    std::vector<FlypeSite> out;
    std::vector<std::array<Dart, 2>> edges;
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(dd);
        if (dd < m) edges.push_back({dd, m});
    }
    std::sort(edges.begin(), edges.end());
    for (int x = 0; x < d.n; ++x) {
        // Edge pairs not incident to x, in (i, j) order; the component
        // structure with x removed and a pair cut is shared across all four
        // corner choices, so compute each pair's crossing roots once.
        std::vector<std::pair<std::array<Dart, 2>, std::array<Dart, 2>>> pairs;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (dart_crossing(edges[i][0]) == x ||
                dart_crossing(edges[i][1]) == x)
                continue;
            for (size_t j = i + 1; j < edges.size(); ++j) {
                if (dart_crossing(edges[j][0]) == x ||
                    dart_crossing(edges[j][1]) == x)
                    continue;
                pairs.emplace_back(edges[i], edges[j]);
            }
        }
        std::vector<std::vector<int>> roots(pairs.size());
        for (size_t p = 0; p < pairs.size(); ++p) {
            UnionFind uf = components_minus(d, x, pairs[p].first,
                                            pairs[p].second);
            roots[p].resize(static_cast<size_t>(d.n));
            for (int c = 0; c < d.n; ++c)
                roots[p][static_cast<size_t>(c)] = uf.find(c);
        }
        for (int s = 0; s < 4; ++s) {
            Dart a = d.mate(make_dart(x, s));
            Dart b = d.mate(make_dart(x, (s + 1) & 3));
            if (dart_crossing(a) == x || dart_crossing(b) == x) continue;
            Dart m1 = d.mate(make_dart(x, (s + 2) & 3));
            Dart m2 = d.mate(make_dart(x, (s + 3) & 3));
            for (size_t p = 0; p < pairs.size(); ++p) {
                const auto& E1 = pairs[p].first;
                const auto& E2 = pairs[p].second;
                const std::vector<int>& root = roots[p];
                auto rt = [&](Dart dd) {
                    return root[static_cast<size_t>(dart_crossing(dd))];
                };
                int t_root = rt(a);
                if (rt(b) != t_root) continue;
                if (rt(m1) == t_root || rt(m2) == t_root) continue;
                int in1 = (rt(E1[0]) == t_root) + (rt(E1[1]) == t_root);
                int in2 = (rt(E2[0]) == t_root) + (rt(E2[1]) == t_root);
                if (in1 != 1 || in2 != 1) continue;
                FlypeSite site;
                site.x = x;
                site.s = s;
                site.e1 = E1;
                site.e2 = E2;
                for (int c = 0; c < d.n; ++c)
                    if (c != x && root[static_cast<size_t>(c)] == t_root)
                        site.tangle.push_back(c);
                out.push_back(std::move(site));
            }
        }
    }
    return out;
}

std::optional<Diagram> apply_flype(const Diagram& d, int x, int s,
                                   std::array<Dart, 2> e1,
                                   std::array<Dart, 2> e2) {
    if (x < 0 || x >= d.n) return std::nullopt;
    e1 = norm_edge(e1[0], e1[1]);
    e2 = norm_edge(e2[0], e2[1]);
    Dart a = d.mate(make_dart(x, s));
    Dart b = d.mate(make_dart(x, (s + 1) & 3));
    Dart m1 = d.mate(make_dart(x, (s + 2) & 3));
    Dart m2 = d.mate(make_dart(x, (s + 3) & 3));
    if (dart_crossing(a) == x || dart_crossing(b) == x) return std::nullopt;
    UnionFind uf = components_minus(d, x, e1, e2);
    int t_root = uf.find(dart_crossing(a));
    if (uf.find(dart_crossing(b)) != t_root) return std::nullopt;
    if (uf.find(dart_crossing(m1)) == t_root ||
        uf.find(dart_crossing(m2)) == t_root)
        return std::nullopt;
    std::vector<char> in_t(static_cast<size_t>(d.n), 0);
    for (int c = 0; c < d.n; ++c)
        if (c != x && uf.find(c) == t_root) in_t[static_cast<size_t>(c)] = 1;
    auto pick = [&](const std::array<Dart, 2>& e, bool want_t) -> Dart {
        Dart hit = -1;
        for (Dart dd : e)
            if (static_cast<bool>(in_t[static_cast<size_t>(dart_crossing(dd))]) ==
                want_t) {
                if (hit >= 0) return -1;
                hit = dd;
            }
        return hit;
    };
    Dart p1 = pick(e1, true), q1 = pick(e1, false);
    Dart p2 = pick(e2, true), q2 = pick(e2, false);
    if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0) return std::nullopt;

    auto refl = [&](Dart dd) -> Dart {
        if (!in_t[static_cast<size_t>(dart_crossing(dd))]) return dd;
        return make_dart(dart_crossing(dd), (-dart_slot(dd)) & 3);
    };
    bool uA = d.is_under_dart(make_dart(x, s));

    std::optional<Diagram> found;
    for (int chir = 0; chir < 2; ++chir) {
        std::vector<Dart> sig(static_cast<size_t>(d.dart_count()), -1);
        auto link = [&](Dart u, Dart v) {
            sig[static_cast<size_t>(u)] = v;
            sig[static_cast<size_t>(v)] = u;
        };
        bool bad = false;
        for (Dart dd = 0; dd < d.dart_count() && !bad; ++dd) {
            Dart m = d.mate(dd);
            if (m < dd) continue;
            if (dart_crossing(dd) == x || dart_crossing(m) == x) continue;
            std::array<Dart, 2> e{dd, m};
            if (e == e1 || e == e2) continue;
            link(refl(dd), refl(m));
        }
        link(m1, refl(a));
        link(m2, refl(b));
        link(refl(p1), make_dart(x, 0));
        link(q1, make_dart(x, 2));
        if (chir == 0) {
            link(refl(p2), make_dart(x, 1));
            link(q2, make_dart(x, 3));
        } else {
            link(refl(p2), make_dart(x, 3));
            link(q2, make_dart(x, 1));
        }
        for (Dart dd = 0; dd < d.dart_count(); ++dd) {
            Dart m = sig[static_cast<size_t>(dd)];
            if (m < 0 || m == dd || sig[static_cast<size_t>(m)] != dd) {
                bad = true;
                break;
            }
        }
        if (bad) continue;
        std::vector<uint8_t> up = d.under;
        for (int c = 0; c < d.n; ++c)
            if (in_t[static_cast<size_t>(c)])
                up[static_cast<size_t>(c)] = 1 - up[static_cast<size_t>(c)];
        // The moved crossing's under bit follows the chirality that glued.
        bool want_under_slot0 = (chir == 0) ? uA : !uA;
        up[static_cast<size_t>(x)] = want_under_slot0 ? 0 : 1;
        Diagram nd(d.n, std::move(sig), std::move(up), d.dealt);
        nd.loops = d.loops;
        if (!nd.euler_ok() || nd.components() != 1) continue;
        if (found) return std::nullopt;  // ambiguous: both chiralities glue
        found = std::move(nd);
    }
    return found;
}

}  // namespace aak
