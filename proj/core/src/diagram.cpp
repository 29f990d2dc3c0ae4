#include "aak/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "aak/errors.hpp"

namespace aak {

Diagram::Diagram(int n_, std::vector<Dart> sigma_, std::vector<uint8_t> under_,
                 std::vector<uint8_t> dealt_)
    : n(n_), sigma(std::move(sigma_)), under(std::move(under_)),
      dealt(std::move(dealt_)) {
    if (dealt.empty()) dealt.assign(static_cast<size_t>(n), 0);
}

void Diagram::check_wellformed() const {
    if (static_cast<int>(sigma.size()) != 4 * n ||
        static_cast<int>(under.size()) != n ||
        static_cast<int>(dealt.size()) != n) {
        throw internal_error("diagram arrays have inconsistent sizes");
    }
    for (Dart d = 0; d < dart_count(); ++d) {
        Dart m = sigma[static_cast<size_t>(d)];
        if (m < 0 || m >= dart_count() || m == d ||
            sigma[static_cast<size_t>(m)] != d) {
            throw internal_error("edge pairing is not a fixed-point-free involution");
        }
    }
}

std::vector<std::vector<Dart>> Diagram::faces() const {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(static_cast<size_t>(dart_count()), 0);
    for (Dart d0 = 0; d0 < dart_count(); ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        std::vector<Dart> face;
        Dart d = d0;
        while (!seen[static_cast<size_t>(d)]) {
            seen[static_cast<size_t>(d)] = 1;
            face.push_back(d);
            d = dart_rot(mate(d), 1);
        }
        out.push_back(std::move(face));
    }
    return out;
}

std::vector<int> Diagram::face_map(std::vector<std::vector<Dart>>* out_faces) const {
    auto fl = faces();
    std::vector<int> fm(static_cast<size_t>(dart_count()), -1);
    for (size_t i = 0; i < fl.size(); ++i)
        for (Dart d : fl[i]) fm[static_cast<size_t>(d)] = static_cast<int>(i);
    if (out_faces) *out_faces = std::move(fl);
    return fm;
}

bool Diagram::euler_ok() const {
    if (n == 0) return true;
    int V = n, E = 2 * n, F = static_cast<int>(faces().size());
    return V - E + F == 2;
}

namespace {
struct UF {
    std::vector<int> p;
    explicit UF(int k) : p(static_cast<size_t>(k)) {
        std::iota(p.begin(), p.end(), 0);
    }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};
}  // namespace

int Diagram::components() const {
    if (n == 0) return 0;
    UF uf(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) {
        uf.unite(d, mate(d));
        uf.unite(d, dart_rot(d, 2));
    }
    std::set<int> roots;
    for (Dart d = 0; d < dart_count(); ++d) roots.insert(uf.find(d));
    return static_cast<int>(roots.size());
}

bool Diagram::is_connected_graph() const {
    if (n == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int c2 = dart_crossing(mate(make_dart(c, s)));
            if (!seen[static_cast<size_t>(c2)]) {
                seen[static_cast<size_t>(c2)] = 1;
                ++cnt;
                stack.push_back(c2);
            }
        }
    }
    return cnt == n;
}

std::vector<std::vector<Dart>> Diagram::strands() const {
    std::vector<std::vector<Dart>> orbits;
    std::vector<char> seen(static_cast<size_t>(dart_count()), 0);
    for (Dart d0 = 0; d0 < dart_count(); ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        std::vector<Dart> orb;
        Dart d = d0;
        while (!seen[static_cast<size_t>(d)]) {
            seen[static_cast<size_t>(d)] = 1;
            orb.push_back(d);
            d = next_passage(d);
        }
        orbits.push_back(std::move(orb));
    }
    // The two orientations of one component traverse the same crossings with
    // the same passage count; keep one orbit per (crossing set, length) pair.
    std::set<std::pair<std::vector<int>, size_t>> used;
    std::vector<std::vector<Dart>> out;
    for (auto& orb : orbits) {
        std::set<int> cs;
        for (Dart d : orb) cs.insert(dart_crossing(d));
        std::pair<std::vector<int>, size_t> sig(
            std::vector<int>(cs.begin(), cs.end()), orb.size());
        if (used.count(sig)) continue;
        used.insert(sig);
        out.push_back(std::move(orb));
    }
    return out;
}

Diagram Diagram::flipped(int c) const {
    Diagram d = *this;
    d.under[static_cast<size_t>(c)] ^= 1;
    return d;
}

namespace {
// Deterministic strand traversal from d0: crossings labeled in first-visit
// order, each passage encoded relative to the crossing's first entry slot.
// Codes from the same diagram all have length 8n, so a strictly-smaller
// prefix decides the comparison; abort as soon as the trial exceeds `best`.
// Returns true when the code from d0 is strictly smaller than `best` (an
// empty `best` counts as larger than everything), leaving it in `trial`.
bool encode_less(const Diagram& d, Dart d0, const CanonicalCode& best,
                 CanonicalCode& trial, std::vector<int>& label) {
    trial.clear();
    std::fill(label.begin(), label.end(), -1);
    static thread_local std::vector<int> entry;
    entry.assign(static_cast<size_t>(d.n), 0);
    int next_label = 0;
    Dart cur = d0;
    bool lt = best.empty();
    auto push = [&](int tok) {
        if (!lt) {
            int b = best[trial.size()];
            if (tok > b) return false;
            if (tok < b) lt = true;
        }
        trial.push_back(tok);
        return true;
    };
    for (int i = 0; i < 2 * d.n; ++i) {
        int c = dart_crossing(cur);
        int s = dart_slot(cur);
        if (label[static_cast<size_t>(c)] < 0) {
            label[static_cast<size_t>(c)] = next_label++;
            entry[static_cast<size_t>(c)] = s;
        }
        int rel = (s - entry[static_cast<size_t>(c)]) & 3;
        if (!push(label[static_cast<size_t>(c)])) return false;
        if (!push(rel)) return false;
        if (!push(d.is_under_dart(cur) ? 1 : 0)) return false;
        if (!push(d.dealt[static_cast<size_t>(c)] ? 1 : 0)) return false;
        cur = d.next_passage(cur);
    }
    return lt;
}
}  // namespace

CanonicalCode canonical_code(const Diagram& d) {
    if (d.n == 0) return CanonicalCode{-d.loops};
    CanonicalCode best, trial;
    std::vector<int> label(static_cast<size_t>(d.n));
    for (Dart d0 = 0; d0 < d.dart_count(); ++d0) {
        if (encode_less(d, d0, best, trial, label)) best.swap(trial);
    }
    return best;
}

Dart canonical_start(const Diagram& d) {
    Dart start = 0;
    CanonicalCode best, trial;
    std::vector<int> label(static_cast<size_t>(d.n));
    for (Dart d0 = 0; d0 < d.dart_count(); ++d0) {
        if (encode_less(d, d0, best, trial, label)) {
            best.swap(trial);
            start = d0;
        }
    }
    return start;
}

std::string canonical_code_string(const Diagram& d) {
    if (d.n == 0) {
        std::string s;
        for (int i = 0; i < std::max(1, d.loops); ++i) {
            if (!s.empty()) s += ' ';
            s += 'O';
        }
        return s;
    }
    CanonicalCode code = canonical_code(d);
    std::ostringstream os;
    for (size_t i = 0; i < code.size(); i += 4) {
        if (i) os << ',';
        os << code[i] << '.' << code[i + 1] << '.' << code[i + 2] << '.'
           << code[i + 3];
    }
    return os.str();
}

Diagram reflect(const Diagram& d) {
    std::vector<Dart> sig(static_cast<size_t>(d.dart_count()));
    for (Dart dd = 0; dd < d.dart_count(); ++dd) {
        Dart m = d.mate(make_dart(dart_crossing(dd), (-dart_slot(dd)) & 3));
        sig[static_cast<size_t>(dd)] =
            make_dart(dart_crossing(m), (-dart_slot(m)) & 3);
    }
    // Slot negation maps under slots {0,2}->{0,2} and {1,3}->{3,1}: the
    // under parity stays as-is.
    return Diagram(d.n, std::move(sig), d.under, d.dealt);
}

}  // namespace aak
