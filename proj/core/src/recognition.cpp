#include "aak/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace aak {

bool is_alternating(const Diagram& d) {
    if (d.n == 0) return false;
    for (auto& orb : d.strands()) {
        size_t k = orb.size();
        for (size_t i = 0; i < k; ++i) {
            bool u1 = d.is_under_dart(orb[i]);
            bool u2 = d.is_under_dart(orb[(i + 1) % k]);
            if (u1 == u2) return false;
        }
    }
    return true;
}

std::vector<int> dealternators(const Diagram& d) {
    std::vector<int> out;
    if (d.n == 0 || is_alternating(d)) return out;
    for (int c = 0; c < d.n; ++c)
        if (is_alternating(d.flipped(c))) out.push_back(c);
    return out;
}

std::vector<int> nugatory_crossings(const Diagram& d) {
    std::set<int> out;
    for (auto& face : d.faces()) {
        std::set<Dart> fs(face.begin(), face.end());
        for (Dart dd : face)
            if (fs.count(dart_rot(dd, 2))) out.insert(dart_crossing(dd));
    }
    return {out.begin(), out.end()};
}

std::vector<ClaspSite> trivial_clasps(const Diagram& d) {
    std::vector<ClaspSite> out;
    for (auto& f : d.faces()) {
        if (f.size() != 2) continue;
        int c1 = dart_crossing(f[0]), c2 = dart_crossing(f[1]);
        if (c1 == c2) continue;  // kink bigon is not a clasp
        // The bigon's two boundary edges are {f[0], mate} and {f[1], mate}.
        auto over_both = [&](Dart a) {
            return !d.is_under_dart(a) && !d.is_under_dart(d.mate(a));
        };
        if (over_both(f[0]) || over_both(f[1])) {
            ClaspSite s;
            s.c1 = std::min(c1, c2);
            s.c2 = std::max(c1, c2);
            s.face = {f[0], f[1]};
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const ClaspSite& a, const ClaspSite& b) {
        return std::pair(a.c1, a.c2) < std::pair(b.c1, b.c2);
    });
    return out;
}

bool is_prime(const Diagram& d) {
    if (d.n <= 1) return true;
    std::vector<int> fm = d.face_map();
    // Group edges by their unordered face pair.
    std::map<std::pair<int, int>, std::vector<Dart>> by_facepair;
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(dd);
        if (m < dd) continue;  // one representative per edge
        int f1 = fm[static_cast<size_t>(dd)], f2 = fm[static_cast<size_t>(m)];
        if (f1 == f2) continue;
        by_facepair[std::minmax(f1, f2)].push_back(dd);
    }
    for (auto& [fp, es] : by_facepair) {
        if (es.size() < 2) continue;
        for (size_t i = 0; i < es.size(); ++i) {
            for (size_t j = i + 1; j < es.size(); ++j) {
                // Cut both edges; if the crossing graph splits in two,
                // a decomposing curve exists.
                std::vector<int> parent(static_cast<size_t>(d.n));
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int x) {
                    while (parent[static_cast<size_t>(x)] != x) {
                        parent[static_cast<size_t>(x)] =
                            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                        x = parent[static_cast<size_t>(x)];
                    }
                    return x;
                };
                for (Dart dd = 0; dd < d.dart_count(); ++dd) {
                    Dart m = d.mate(dd);
                    if (m < dd) continue;
                    if (dd == es[i] || dd == es[j]) continue;
                    int a = find(dart_crossing(dd)), b = find(dart_crossing(m));
                    if (a != b) parent[static_cast<size_t>(a)] = b;
                }
                std::set<int> roots;
                for (int c = 0; c < d.n; ++c) roots.insert(find(c));
                if (roots.size() == 2) return false;
            }
        }
    }
    return true;
}

Recognition recognize(const Diagram& d) {
    Recognition r;
    r.connected = (d.n > 0) ? (d.is_connected_graph() && d.loops == 0)
                            : (d.loops <= 1);
    int comps = d.components() + d.loops;
    r.knot = (d.n > 0) ? (comps == 1) : (d.loops == 1);
    r.nugatory = nugatory_crossings(d);
    r.reduced = d.n > 0 && r.nugatory.empty();
    r.prime = is_prime(d);
    r.alternating = is_alternating(d);
    r.dealternators = dealternators(d);
    r.almost_alternating = !r.alternating && r.dealternators.size() >= 1;
    r.clasps = trivial_clasps(d);
    r.strongly_reduced = r.reduced && r.clasps.empty();
    return r;
}

}  // namespace aak
