#include "aak/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "aak/errors.hpp"

namespace aak {

namespace {

// Port roles of the four-crossing pattern, in a fixed order.
enum Port { kEDelta = 0, kEQ, kVA, kUA, kUB, kVB, kPortCount };

struct Pattern4 {
    int dl, q, xA, xB;
    std::vector<std::pair<Dart, Dart>> internal_edges;
    std::array<Dart, kPortCount> port{};
    std::array<uint8_t, 4> under{};  // for dl, q, xA, xB in id order
};

// Allocate the pattern crossings dl,q,xA,xB after `n_keep` kept crossings.
// Slot layout: dl: 0=lam 1=a_A 2=e_delta 3=a_B; q: 0=lam 1=b_B 2=e_q 3=b_A;
// xA: 0=alpha_A 1=beta_A 2=v_A 3=u_A; xB: 0=beta_B 1=alpha_B 2=u_B 3=v_B.
Pattern4 build_pattern(int n_keep, bool tD) {
    Pattern4 p;
    p.dl = n_keep;
    p.q = n_keep + 1;
    p.xA = n_keep + 2;
    p.xB = n_keep + 3;
    p.internal_edges = {
        {make_dart(p.dl, 0), make_dart(p.q, 0)},   // lam
        {make_dart(p.dl, 1), make_dart(p.xA, 0)},  // a_A -- alpha_A
        {make_dart(p.dl, 3), make_dart(p.xB, 1)},  // a_B -- alpha_B
        {make_dart(p.q, 1), make_dart(p.xB, 0)},   // b_B -- beta_B
        {make_dart(p.q, 3), make_dart(p.xA, 1)},   // b_A -- beta_A
    };
    p.port[kEDelta] = make_dart(p.dl, 2);
    p.port[kEQ] = make_dart(p.q, 2);
    p.port[kVA] = make_dart(p.xA, 2);
    p.port[kUA] = make_dart(p.xA, 3);
    p.port[kUB] = make_dart(p.xB, 2);
    p.port[kVB] = make_dart(p.xB, 3);
    p.under = {static_cast<uint8_t>(tD ? 0 : 1), static_cast<uint8_t>(tD ? 0 : 1),
               static_cast<uint8_t>(tD ? 1 : 0), static_cast<uint8_t>(tD ? 0 : 1)};
    return p;
}

// Generic pattern insertion: drop `removed` crossings, renumber the rest,
// splice in the pattern. port_of: old dart -> port (for old mates landing on
// the pattern); port_ext: port -> old dart whose old mate the port attaches
// to (-1 when the port is consumed by an internal edge, e.g. the wrap).
std::optional<Diagram> rewrite_with_pattern(
    const Diagram& diag, const std::vector<int>& removed,
    const std::vector<std::pair<Dart, int>>& port_of, const Pattern4& pat,
    const std::array<Dart, kPortCount>& port_ext) {
    std::vector<int> remap(static_cast<size_t>(diag.n), -1);
    int nk = 0;
    for (int c = 0; c < diag.n; ++c) {
        if (std::find(removed.begin(), removed.end(), c) == removed.end())
            remap[static_cast<size_t>(c)] = nk++;
    }
    int n2 = nk + 4;
    std::vector<Dart> sig(static_cast<size_t>(4 * n2), -1);

    auto land = [&](Dart old) -> Dart {
        int c = dart_crossing(old);
        if (remap[static_cast<size_t>(c)] >= 0)
            return make_dart(remap[static_cast<size_t>(c)], dart_slot(old));
        for (auto& [od, pn] : port_of)
            if (od == old) return pat.port[static_cast<size_t>(pn)];
        return -1;
    };

    for (int c = 0; c < diag.n; ++c) {
        if (remap[static_cast<size_t>(c)] < 0) continue;
        for (int s = 0; s < 4; ++s) {
            Dart l = land(diag.mate(make_dart(c, s)));
            if (l < 0) return std::nullopt;
            sig[static_cast<size_t>(make_dart(remap[static_cast<size_t>(c)], s))] = l;
        }
    }
    for (auto& [a, b] : pat.internal_edges) {
        sig[static_cast<size_t>(a)] = b;
        sig[static_cast<size_t>(b)] = a;
    }
    for (int pn = 0; pn < kPortCount; ++pn) {
        Dart old = port_ext[static_cast<size_t>(pn)];
        if (old < 0) continue;
        Dart l = land(diag.mate(old));
        if (l < 0) return std::nullopt;
        sig[static_cast<size_t>(pat.port[static_cast<size_t>(pn)])] = l;
        sig[static_cast<size_t>(l)] = pat.port[static_cast<size_t>(pn)];
    }
    for (Dart dd = 0; dd < 4 * n2; ++dd) {
        Dart m = sig[static_cast<size_t>(dd)];
        if (m < 0 || m == dd || sig[static_cast<size_t>(m)] != dd)
            return std::nullopt;
    }
    std::vector<uint8_t> up(static_cast<size_t>(n2), 0);
    std::vector<uint8_t> dl(static_cast<size_t>(n2), 0);
    for (int c = 0; c < diag.n; ++c)
        if (remap[static_cast<size_t>(c)] >= 0)
            up[static_cast<size_t>(remap[static_cast<size_t>(c)])] =
                diag.under[static_cast<size_t>(c)];
    up[static_cast<size_t>(pat.dl)] = pat.under[0];
    up[static_cast<size_t>(pat.q)] = pat.under[1];
    up[static_cast<size_t>(pat.xA)] = pat.under[2];
    up[static_cast<size_t>(pat.xB)] = pat.under[3];
    dl[static_cast<size_t>(pat.dl)] = 1;  // the pattern's new dealternator
    Diagram nd(n2, std::move(sig), std::move(up), std::move(dl));
    nd.loops = diag.loops;
    if (!nd.euler_ok() || nd.components() != 1) return std::nullopt;
    return nd;
}

}  // namespace

std::optional<Diagram> apply_tongue(const Diagram& d, int delt, int slot,
                                    bool mirror) {
    if (delt < 0 || delt >= d.n) return std::nullopt;
    if (slot < 0 || slot > 3) return std::nullopt;
    if (mirror) {
        auto r = apply_tongue(reflect(d), delt, (-slot) & 3, false);
        if (!r) return std::nullopt;
        return reflect(*r);
    }
    Dart d_y = make_dart(delt, slot);
    Dart d_z = d.mate(d_y);
    int z = dart_crossing(d_z);
    if (z == delt) return std::nullopt;
    bool tD = d.is_under_dart(d_y);
    Pattern4 pat = build_pattern(d.n - 2, tD);
    std::vector<std::pair<Dart, int>> port_of = {
        {dart_rot(d_y, -1), kUB}, {dart_rot(d_y, 1), kUA},
        {dart_rot(d_y, 2), kEDelta}, {dart_rot(d_z, -1), kVA},
        {dart_rot(d_z, 1), kVB}, {dart_rot(d_z, 2), kEQ},
    };
    std::array<Dart, kPortCount> port_ext;
    port_ext.fill(-1);
    for (auto& [od, pn] : port_of) port_ext[static_cast<size_t>(pn)] = od;
    return rewrite_with_pattern(d, {delt, z}, port_of, pat, port_ext);
}

std::optional<Diagram> apply_twirl(const Diagram& d, int delt, int r,
                                   char wrap, bool mirror) {
    if (delt < 0 || delt >= d.n) return std::nullopt;
    if (r < 0 || r > 3) return std::nullopt;
    if (wrap != 'A' && wrap != 'B') return std::nullopt;
    if (mirror) {
        auto rr = apply_twirl(reflect(d), delt, (-r) & 3, wrap, false);
        if (!rr) return std::nullopt;
        return reflect(*rr);
    }
    bool tD = d.is_under_dart(make_dart(delt, r));
    Pattern4 pat = build_pattern(d.n - 1, tD);
    std::array<int, 4> order{};
    if (wrap == 'A') {
        pat.internal_edges.push_back({pat.port[kEQ], pat.port[kVA]});
        order = {kEDelta, kUB, kVB, kUA};
    } else {
        pat.internal_edges.push_back({pat.port[kEQ], pat.port[kVB]});
        order = {kVA, kUA, kEDelta, kUB};
    }
    std::vector<std::pair<Dart, int>> port_of;
    std::array<Dart, kPortCount> port_ext;
    port_ext.fill(-1);
    for (int k = 0; k < 4; ++k) {
        Dart od = make_dart(delt, (r + k) & 3);
        port_of.push_back({od, order[static_cast<size_t>(k)]});
        port_ext[static_cast<size_t>(order[static_cast<size_t>(k)])] = od;
    }
    return rewrite_with_pattern(d, {delt}, port_of, pat, port_ext);
}

// --------------------------------------------------------------------- sites

std::vector<TongueSite> tongue_sites(const Diagram& d, int delt) {
    std::vector<TongueSite> out;
    if (delt < 0 || delt >= d.n) return out;
    std::vector<std::vector<Dart>> fl;
    std::vector<int> fm = d.face_map(&fl);
    std::vector<std::set<int>> cof(fl.size());
    for (size_t i = 0; i < fl.size(); ++i)
        for (Dart dd : fl[i]) cof[i].insert(dart_crossing(dd));
    auto face_deg = [&](int f) { return static_cast<int>(fl[static_cast<size_t>(f)].size()); };

    for (int s = 0; s < 4; ++s) {
        Dart d_delta = make_dart(delt, s);
        Dart d_q = d.mate(d_delta);
        int q = dart_crossing(d_q);
        if (q == delt) continue;
        TongueSite t;
        t.delta = delt;
        t.q = q;
        t.d_delta = d_delta;
        t.d_q = d_q;
        t.slot = s;
        // left = side A: the face containing d_q; right = side B.
        int fA = fm[static_cast<size_t>(d_q)];
        int fB = fm[static_cast<size_t>(d_delta)];
        int P_A = fm[static_cast<size_t>(d.mate(dart_rot(d_delta, 1)))];
        int Q_A = fm[static_cast<size_t>(dart_rot(d_q, -1))];
        int Q_B = fm[static_cast<size_t>(d.mate(dart_rot(d_q, 1)))];
        int P_B = fm[static_cast<size_t>(dart_rot(d_delta, -1))];
        auto side_xs = [&](int P, int Q) {
            std::vector<int> xs;
            for (int c : cof[static_cast<size_t>(P)])
                if (c != delt && c != q && cof[static_cast<size_t>(Q)].count(c))
                    xs.push_back(c);
            return xs;
        };
        t.left.o_face = fA;
        t.left.p_face = P_A;
        t.left.q_face = Q_A;
        t.left.xs = side_xs(P_A, Q_A);
        t.right.o_face = fB;
        t.right.p_face = P_B;
        t.right.q_face = Q_B;
        t.right.xs = side_xs(P_B, Q_B);
        if (t.left.xs.empty() || t.right.xs.empty()) continue;
        auto trivial_x = [&](int fO) -> int {
            if (face_deg(fO) != 3) return -1;
            int corner = -1;
            for (int c : cof[static_cast<size_t>(fO)]) {
                if (c == delt || c == q) continue;
                if (corner >= 0) return -1;
                corner = c;
            }
            return corner;
        };
        int tA = trivial_x(fA);
        int tB = trivial_x(fB);
        t.left.triv =
            (tA >= 0 && std::find(t.left.xs.begin(), t.left.xs.end(), tA) !=
                            t.left.xs.end())
                ? tA
                : -1;
        t.right.triv =
            (tB >= 0 && std::find(t.right.xs.begin(), t.right.xs.end(), tB) !=
                            t.right.xs.end())
                ? tB
                : -1;
        auto edge_of = [&](Dart dd) {
            Dart m = d.mate(dd);
            return std::array<Dart, 2>{std::min(dd, m), std::max(dd, m)};
        };
        t.left.corner_delta = edge_of(dart_rot(d_delta, 1));
        t.left.corner_q = edge_of(dart_rot(d_q, -1));
        t.right.corner_delta = edge_of(dart_rot(d_delta, -1));
        t.right.corner_q = edge_of(dart_rot(d_q, 1));
        for (int side = 0; side < 2; ++side) {
            TongueSide& sd = side == 0 ? t.left : t.right;
            int xstar = sd.triv >= 0 ? sd.triv : sd.xs.front();
            sd.w = side_tangle(d, t, side == 0, xstar);
            sd.w_trivial = sd.w.empty();
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<int> side_tangle(const Diagram& d, const TongueSite& t,
                             bool left_side, int x) {
    const TongueSide& sd = left_side ? t.left : t.right;
    std::vector<int> parent(static_cast<size_t>(d.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    auto is_cut = [&](Dart a, Dart b) {
        std::array<Dart, 2> e{std::min(a, b), std::max(a, b)};
        return e == sd.corner_delta || e == sd.corner_q;
    };
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(dd);
        if (m < dd) continue;
        if (dart_crossing(dd) == x || dart_crossing(m) == x) continue;
        if (is_cut(dd, m)) continue;
        int ra = find(dart_crossing(dd)), rb = find(dart_crossing(m));
        if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
    }
    int rd = find(t.delta), rq = find(t.q);
    std::vector<int> w;
    for (int c = 0; c < d.n; ++c) {
        if (c == x) continue;
        int r = find(c);
        if (r != rd && r != rq) w.push_back(c);
    }
    return w;
}

// ------------------------------------------------- untongue / untwirl frame

namespace {

// Recover the six port darts of a trivial-trivial site. Returns false when
// the triangle closure does not hold (stale or malformed site).
struct SiteFrame {
    int delt, q, xA, xB;
    std::array<Dart, kPortCount> ports{};
    bool tD_under;
};

bool site_frame(const Diagram& d, const TongueSite& t, SiteFrame& out) {
    if (t.left.triv < 0 || t.right.triv < 0 || t.left.triv == t.right.triv)
        return false;
    int xA = t.left.triv, xB = t.right.triv;
    Dart a_A = dart_rot(t.d_delta, 1);
    Dart a_B = dart_rot(t.d_delta, -1);
    Dart e_delta = dart_rot(t.d_delta, 2);
    Dart b_A = dart_rot(t.d_q, -1);
    Dart b_B = dart_rot(t.d_q, 1);
    Dart e_q = dart_rot(t.d_q, 2);
    Dart alpha_A = d.mate(a_A);
    Dart beta_A = d.mate(b_A);
    Dart beta_B = d.mate(b_B);
    Dart alpha_B = d.mate(a_B);
    if (dart_crossing(alpha_A) != xA || dart_crossing(beta_A) != xA) return false;
    if (dart_crossing(alpha_B) != xB || dart_crossing(beta_B) != xB) return false;
    if (beta_A != dart_rot(alpha_A, 1)) return false;
    if (alpha_B != dart_rot(beta_B, 1)) return false;
    out.delt = t.delta;
    out.q = t.q;
    out.xA = xA;
    out.xB = xB;
    out.ports[kEDelta] = e_delta;
    out.ports[kEQ] = e_q;
    out.ports[kVA] = dart_rot(alpha_A, 2);
    out.ports[kUA] = dart_rot(alpha_A, 3);
    out.ports[kUB] = dart_rot(beta_B, 2);
    out.ports[kVB] = dart_rot(beta_B, 3);
    out.tD_under = d.is_under_dart(t.d_delta);
    return true;
}

}  // namespace

bool site_is_wrap(const Diagram& d, const TongueSite& t) {
    SiteFrame f;
    if (!site_frame(d, t, f)) return false;
    Dart m = d.mate(f.ports[kEQ]);
    return m == f.ports[kVA] || m == f.ports[kVB];
}

std::optional<Diagram> apply_untongue(const Diagram& d, const TongueSite& t) {
    SiteFrame f;
    if (!site_frame(d, t, f)) return std::nullopt;
    // y legs (u_B, e_delta, u_A) and z legs (v_A, e_q, v_B), both wound in
    // direction -1: leg i sits at slot (-i)&3, internal edge at slot 1.
    std::array<int, 3> y_legs{kUB, kEDelta, kUA};
    std::array<int, 3> z_legs{kVA, kEQ, kVB};
    std::vector<int> keep;
    std::vector<int> remap(static_cast<size_t>(d.n), -1);
    for (int c = 0; c < d.n; ++c)
        if (c != f.delt && c != f.q && c != f.xA && c != f.xB) {
            remap[static_cast<size_t>(c)] = static_cast<int>(keep.size());
            keep.push_back(c);
        }
    int ny = static_cast<int>(keep.size());
    int nz = ny + 1;
    std::array<Dart, kPortCount> newdart{};
    for (int i = 0; i < 3; ++i) {
        newdart[static_cast<size_t>(y_legs[static_cast<size_t>(i)])] =
            make_dart(ny, (-i) & 3);
        newdart[static_cast<size_t>(z_legs[static_cast<size_t>(i)])] =
            make_dart(nz, (-i) & 3);
    }
    Dart int_y = make_dart(ny, 1);
    Dart int_z = make_dart(nz, 1);
    int n2 = ny + 2;
    std::vector<Dart> sig(static_cast<size_t>(4 * n2), -1);
    auto land = [&](Dart old) -> Dart {
        int c = dart_crossing(old);
        if (remap[static_cast<size_t>(c)] >= 0)
            return make_dart(remap[static_cast<size_t>(c)], dart_slot(old));
        for (int pn = 0; pn < kPortCount; ++pn)
            if (f.ports[static_cast<size_t>(pn)] == old)
                return newdart[static_cast<size_t>(pn)];
        return -1;
    };
    for (int c : keep) {
        for (int s = 0; s < 4; ++s) {
            Dart l = land(d.mate(make_dart(c, s)));
            if (l < 0) return std::nullopt;
            sig[static_cast<size_t>(make_dart(remap[static_cast<size_t>(c)], s))] = l;
        }
    }
    for (int pn = 0; pn < kPortCount; ++pn) {
        Dart l = land(d.mate(f.ports[static_cast<size_t>(pn)]));
        if (l < 0) return std::nullopt;
        sig[static_cast<size_t>(newdart[static_cast<size_t>(pn)])] = l;
        sig[static_cast<size_t>(l)] = newdart[static_cast<size_t>(pn)];
    }
    sig[static_cast<size_t>(int_y)] = int_z;
    sig[static_cast<size_t>(int_z)] = int_y;
    for (Dart dd = 0; dd < 4 * n2; ++dd) {
        Dart m = sig[static_cast<size_t>(dd)];
        if (m < 0 || m == dd || sig[static_cast<size_t>(m)] != dd)
            return std::nullopt;
    }
    // Passage types from the far ends of the legs: y is the new
    // dealternator (leg end equals far type), z alternates (negated).
    auto far_under = [&](int pn) {
        return d.is_under_dart(d.mate(f.ports[static_cast<size_t>(pn)]));
    };
    std::array<bool, 3> fy{far_under(y_legs[0]), far_under(y_legs[1]),
                           far_under(y_legs[2])};
    if (fy[0] != fy[2]) return std::nullopt;
    std::array<bool, 3> fz{!far_under(z_legs[0]), !far_under(z_legs[1]),
                           !far_under(z_legs[2])};
    if (fz[0] != fz[2]) return std::nullopt;
    if (fy[1] != fz[1]) return std::nullopt;
    std::vector<uint8_t> up, dl;
    up.reserve(static_cast<size_t>(n2));
    for (int c : keep) up.push_back(d.under[static_cast<size_t>(c)]);
    up.push_back(fy[0] ? 0 : 1);
    up.push_back(fz[0] ? 0 : 1);
    dl.assign(static_cast<size_t>(n2), 0);
    dl[static_cast<size_t>(ny)] = 1;
    Diagram nd(n2, std::move(sig), std::move(up), std::move(dl));
    nd.loops = d.loops;
    if (!nd.euler_ok() || nd.components() != 1) return std::nullopt;
    return nd;
}

std::optional<Diagram> apply_untwirl(const Diagram& d, const TongueSite& t) {
    SiteFrame f;
    if (!site_frame(d, t, f)) return std::nullopt;
    Dart s_eq = d.mate(f.ports[kEQ]);
    std::array<int, 4> order{};
    if (s_eq == f.ports[kVA]) {
        order = {kEDelta, kUB, kVB, kUA};
    } else if (s_eq == f.ports[kVB]) {
        order = {kVA, kUA, kEDelta, kUB};
    } else {
        return std::nullopt;
    }
    std::vector<int> keep;
    std::vector<int> remap(static_cast<size_t>(d.n), -1);
    for (int c = 0; c < d.n; ++c)
        if (c != f.delt && c != f.q && c != f.xA && c != f.xB) {
            remap[static_cast<size_t>(c)] = static_cast<int>(keep.size());
            keep.push_back(c);
        }
    int ny = static_cast<int>(keep.size());
    int n2 = ny + 1;
    std::vector<Dart> sig(static_cast<size_t>(4 * n2), -1);
    auto land = [&](Dart old) -> Dart {
        int c = dart_crossing(old);
        if (remap[static_cast<size_t>(c)] >= 0)
            return make_dart(remap[static_cast<size_t>(c)], dart_slot(old));
        for (int k = 0; k < 4; ++k)
            if (f.ports[static_cast<size_t>(order[static_cast<size_t>(k)])] == old)
                return make_dart(ny, k);
        return -1;
    };
    for (int c : keep) {
        for (int s = 0; s < 4; ++s) {
            Dart l = land(d.mate(make_dart(c, s)));
            if (l < 0) return std::nullopt;
            sig[static_cast<size_t>(make_dart(remap[static_cast<size_t>(c)], s))] = l;
        }
    }
    for (int k = 0; k < 4; ++k) {
        Dart l = land(d.mate(f.ports[static_cast<size_t>(order[static_cast<size_t>(k)])]));
        if (l < 0) return std::nullopt;
        sig[static_cast<size_t>(make_dart(ny, k))] = l;
        sig[static_cast<size_t>(l)] = make_dart(ny, k);
    }
    for (Dart dd = 0; dd < 4 * n2; ++dd) {
        Dart m = sig[static_cast<size_t>(dd)];
        if (m < 0 || m == dd || sig[static_cast<size_t>(m)] != dd)
            return std::nullopt;
    }
    std::vector<uint8_t> up, dl;
    up.reserve(static_cast<size_t>(n2));
    for (int c : keep) up.push_back(d.under[static_cast<size_t>(c)]);
    up.push_back(f.tD_under ? 0 : 1);
    dl.assign(static_cast<size_t>(n2), 0);
    dl[static_cast<size_t>(ny)] = 1;
    Diagram nd(n2, std::move(sig), std::move(up), std::move(dl));
    nd.loops = d.loops;
    if (!nd.euler_ok() || nd.components() != 1) return std::nullopt;
    return nd;
}

std::optional<Diagram> shrink_flype(const Diagram& d, const TongueSite& t,
                                    bool left_side, FlypeSite* used) {
    const TongueSide& sd = left_side ? t.left : t.right;
    for (int x : sd.xs) {
        std::vector<int> w = side_tangle(d, t, left_side, x);
        if (w.empty()) continue;
        std::set<int> ws(w.begin(), w.end());
        std::vector<int> inw;
        for (int s = 0; s < 4; ++s)
            if (ws.count(dart_crossing(d.mate(make_dart(x, s)))))
                inw.push_back(s);
        if (inw.size() != 2) continue;
        int a = inw[0], b = inw[1];
        int s0;
        if (((b - a) & 3) == 1) {
            s0 = a;
        } else if (((a - b) & 3) == 1 || ((b - a) & 3) == 3) {
            s0 = b;
        } else {
            continue;  // the tangle does not sit on one rotational side of x
        }
        const auto& E1 = sd.corner_delta;
        const auto& E2 = sd.corner_q;
        if (dart_crossing(E1[0]) == x || dart_crossing(E1[1]) == x ||
            dart_crossing(E2[0]) == x || dart_crossing(E2[1]) == x)
            continue;
        auto nd = apply_flype(d, x, s0, E1, E2);
        if (nd) {
            if (used) {
                used->x = x;
                used->s = s0;
                used->e1 = E1;
                used->e2 = E2;
                used->tangle = std::move(w);
            }
            return nd;
        }
    }
    return std::nullopt;
}

// ----------------------------------------------------------------- kinks/R2

int find_nugatory_crossing(const Diagram& d) {
    for (auto& f : d.faces()) {
        std::set<Dart> fs(f.begin(), f.end());
        for (Dart dd : f)
            if (fs.count(dart_rot(dd, 2))) return dart_crossing(dd);
    }
    return -1;
}

Diagram remove_through(const Diagram& d, int c) {
    // Through pairing: entering slot k exits at k+2.
    auto P = [](int k) { return (k + 2) & 3; };
    std::array<Dart, 4> mate{};
    for (int k = 0; k < 4; ++k) mate[static_cast<size_t>(k)] = d.mate(make_dart(c, k));
    // Keep edges untouched by c, then splice chains through c.
    std::map<Dart, Dart> sigma;
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(dd);
        if (dart_crossing(dd) != c && dart_crossing(m) != c) sigma[dd] = m;
    }
    std::array<char, 4> visited{0, 0, 0, 0};
    int loops = 0;
    for (int k = 0; k < 4; ++k) {
        if (dart_crossing(mate[static_cast<size_t>(k)]) == c) continue;  // internal
        if (visited[static_cast<size_t>(k)]) continue;
        visited[static_cast<size_t>(k)] = 1;
        int cur = P(k);
        visited[static_cast<size_t>(cur)] = 1;
        while (dart_crossing(mate[static_cast<size_t>(cur)]) == c) {
            int j = dart_slot(mate[static_cast<size_t>(cur)]);
            visited[static_cast<size_t>(j)] = 1;
            cur = P(j);
            visited[static_cast<size_t>(cur)] = 1;
        }
        Dart a = mate[static_cast<size_t>(k)];
        Dart b = mate[static_cast<size_t>(cur)];
        sigma[a] = b;
        sigma[b] = a;
    }
    for (int k = 0; k < 4; ++k) {  // fully-internal orbits are closed circles
        if (visited[static_cast<size_t>(k)]) continue;
        ++loops;
        int cur = k;
        while (!visited[static_cast<size_t>(cur)]) {
            visited[static_cast<size_t>(cur)] = 1;
            int ex = P(cur);
            visited[static_cast<size_t>(ex)] = 1;
            cur = dart_slot(mate[static_cast<size_t>(ex)]);
        }
    }
    std::vector<int> remap(static_cast<size_t>(d.n), -1);
    int k2 = 0;
    for (int i = 0; i < d.n; ++i)
        if (i != c) remap[static_cast<size_t>(i)] = k2++;
    std::vector<Dart> sig(static_cast<size_t>(4 * (d.n - 1)), -1);
    for (auto& [a, b] : sigma) {
        sig[static_cast<size_t>(
            make_dart(remap[static_cast<size_t>(dart_crossing(a))], dart_slot(a)))] =
            make_dart(remap[static_cast<size_t>(dart_crossing(b))], dart_slot(b));
    }
    std::vector<uint8_t> up, dl;
    for (int i = 0; i < d.n; ++i) {
        if (i == c) continue;
        up.push_back(d.under[static_cast<size_t>(i)]);
        dl.push_back(d.dealt[static_cast<size_t>(i)]);
    }
    Diagram d2(d.n - 1, std::move(sig), std::move(up), std::move(dl));
    d2.loops = d.loops + loops;
    d2.check_wellformed();
    return d2;
}

Diagram r2_clasp_remove(const Diagram& d, int c1, int c2) {
    Diagram d1 = remove_through(d, c1);
    int c2b = c2 - (c2 > c1 ? 1 : 0);
    return remove_through(d1, c2b);
}

Diagram reduce_kinks(const Diagram& d, std::vector<int>* removed) {
    Diagram cur = d;
    while (cur.n > 0) {
        int c = find_nugatory_crossing(cur);
        if (c < 0) break;
        if (removed) removed->push_back(c);
        cur = remove_through(cur, c);
        if (cur.n > 0 && (!cur.euler_ok() || cur.components() != 1))
            throw internal_error("kink removal broke planarity");
    }
    return cur;
}

}  // namespace aak
