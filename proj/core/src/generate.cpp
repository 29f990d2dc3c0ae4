#include "aak/generate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "aak/errors.hpp"
#include "aak/moves.hpp"
#include "aak/recognition.hpp"

namespace aak {

namespace {

void join(std::vector<Dart>& sig, Dart a, Dart b) {
    sig[static_cast<size_t>(a)] = b;
    sig[static_cast<size_t>(b)] = a;
}

}  // namespace

Diagram encode_coil(int m) {
    if (m == 0) throw input_error("coil parameter must be non-zero");
    int k = m > 0 ? m : -m;
    std::vector<Dart> sig(static_cast<size_t>(4 * k), -1);
    for (int i = 0; i + 1 < k; ++i) {
        join(sig, make_dart(i, 2), make_dart(i + 1, 1));
        join(sig, make_dart(i, 3), make_dart(i + 1, 0));
    }
    join(sig, make_dart(0, 0), make_dart(0, 1));
    join(sig, make_dart(k - 1, 2), make_dart(k - 1, 3));
    std::vector<uint8_t> up(static_cast<size_t>(k),
                            static_cast<uint8_t>(m > 0 ? 0 : 1));
    Diagram d(k, std::move(sig), std::move(up));
    d.check_wellformed();
    return d;
}

Diagram encode_C(int m) {
    if (m == 0) throw input_error("base family parameter must be non-zero");
    int k = m > 0 ? m : -m;
    int n = k + 2;
    std::vector<Dart> sig(static_cast<size_t>(4 * n), -1);
    for (int i = 0; i + 1 < k; ++i) {
        join(sig, make_dart(i, 2), make_dart(i + 1, 1));
        join(sig, make_dart(i, 3), make_dart(i + 1, 0));
    }
    join(sig, make_dart(0, 0), make_dart(k, 1));
    join(sig, make_dart(0, 1), make_dart(k + 1, 1));
    join(sig, make_dart(k - 1, 2), make_dart(k + 1, 0));
    join(sig, make_dart(k - 1, 3), make_dart(k, 2));
    join(sig, make_dart(k, 3), make_dart(k + 1, 3));
    join(sig, make_dart(k, 0), make_dart(k + 1, 2));
    std::vector<uint8_t> up(static_cast<size_t>(n),
                            static_cast<uint8_t>(m > 0 ? 0 : 1));
    std::vector<uint8_t> dl(static_cast<size_t>(n), 0);
    dl[static_cast<size_t>(k + 1)] = 1;
    Diagram d(n, std::move(sig), std::move(up), std::move(dl));
    d.check_wellformed();
    return d;
}

std::vector<Diagram> enumerate_unknot_diagrams(const EnumConfig& cfg) {
    struct Node {
        Diagram d;
        CanonicalCode key;
    };
    auto node_less = [](const Node& a, const Node& b) {
        if (a.d.n != b.d.n) return a.d.n < b.d.n;
        return a.key < b.key;
    };
    std::map<CanonicalCode, Diagram> emitted;
    std::vector<Node> frontier;
    std::vector<Node> raw_stream;  // every admitted result, for dedup=false
    for (int m : cfg.m_values) {
        if (m == 0) throw input_error("base family parameter must be non-zero");
        int k = m > 0 ? m : -m;
        if (k + 2 > cfg.max_crossings) continue;
        Diagram d = encode_C(m);
        CanonicalCode key = canonical_code(d);
        raw_stream.push_back({d, key});
        if (emitted.count(key)) continue;
        emitted.emplace(key, d);
        frontier.push_back({std::move(d), std::move(key)});
    }
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end(), node_less);
        std::vector<Node> next;
        for (const Node& node : frontier) {
            const Diagram& d = node.d;
            int delt = -1;
            for (int c = 0; c < d.n; ++c)
                if (d.dealt[static_cast<size_t>(c)]) delt = c;
            if (delt < 0)
                throw internal_error("frontier diagram lost its dealternator");
            std::vector<Diagram> outs;
            for (const FlypeSite& fs : flype_sites(d)) {
                auto nd = apply_flype(d, fs);
                if (nd) outs.push_back(std::move(*nd));
            }
            if (d.n + 2 <= cfg.max_crossings) {
                for (int slot = 0; slot < 4; ++slot)
                    for (int mir = 0; mir < 2; ++mir) {
                        auto nd = apply_tongue(d, delt, slot, mir != 0);
                        if (nd) outs.push_back(std::move(*nd));
                    }
            }
            if (d.n + 3 <= cfg.max_crossings) {
                for (int r = 0; r < 4; ++r)
                    for (char wrap : {'A', 'B'})
                        for (int mir = 0; mir < 2; ++mir) {
                            auto nd = apply_twirl(d, delt, r, wrap, mir != 0);
                            if (nd) outs.push_back(std::move(*nd));
                        }
            }
            for (Diagram& nd : outs) {
                if (nd.n == 0 || !nugatory_crossings(nd).empty())
                    continue;  // not reduced
                std::vector<int> da = dealternators(nd);
                if (is_alternating(nd) || da.size() != 1)
                    throw internal_error(
                        "generator produced a non-almost-alternating diagram");
                std::fill(nd.dealt.begin(), nd.dealt.end(), 0);
                nd.dealt[static_cast<size_t>(da[0])] = 1;
                CanonicalCode key = canonical_code(nd);
                raw_stream.push_back({nd, key});
                if (emitted.count(key)) continue;
                emitted.emplace(key, nd);
                next.push_back({std::move(nd), std::move(key)});
            }
        }
        frontier = std::move(next);
    }
    std::vector<Node> picked;
    if (cfg.dedup) {
        picked.reserve(emitted.size());
        for (auto& [k, v] : emitted) picked.push_back({std::move(v), k});
    } else {
        picked = std::move(raw_stream);
    }
    std::stable_sort(picked.begin(), picked.end(), node_less);
    std::vector<Diagram> out;
    out.reserve(picked.size());
    for (Node& nd : picked) out.push_back(std::move(nd.d));
    return out;
}

Diagram u1_alternating(const Diagram& d) {
    Recognition rec = recognize(d);
    if (!rec.knot) throw input_error("diagram is not a knot");
    if (!rec.reduced) throw input_error("diagram is not reduced");
    if (!rec.almost_alternating)
        throw input_error("diagram is not almost alternating");
    if (rec.dealternators.size() != 1)
        throw input_error("diagram must have a unique dealternator");
    int flags = 0;
    for (int c = 0; c < d.n; ++c)
        if (d.dealt[static_cast<size_t>(c)]) ++flags;
    if (flags > 1) throw input_error("more than one crossing is flagged");
    if (flags == 1 && !d.dealt[static_cast<size_t>(rec.dealternators[0])])
        throw input_error("flagged crossing is not the dealternator");
    Diagram out = d.flipped(rec.dealternators[0]);
    std::fill(out.dealt.begin(), out.dealt.end(), 0);
    return out;
}

}  // namespace aak
