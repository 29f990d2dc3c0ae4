#include "aak/pd.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "aak/errors.hpp"

namespace aak {

namespace {

std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : ch);
    }
    return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
    std::istringstream is(strip_comments(text));
    std::string tok;
    int loops = 0;
    std::vector<std::array<long, 4>> rows;
    std::vector<uint8_t> dealt_flags;
    while (is >> tok) {
        if (tok == "O") {
            ++loops;
            continue;
        }
        bool dealt = false;
        size_t body = 0;
        if (tok.rfind("X[", 0) == 0) {
            body = 2;
        } else if (tok.rfind("Xd[", 0) == 0) {
            body = 3;
            dealt = true;
        } else {
            throw input_error("unrecognized PD token: " + tok);
        }
        if (tok.back() != ']')
            throw input_error("unterminated crossing token: " + tok);
        std::string inner = tok.substr(body, tok.size() - body - 1);
        std::array<long, 4> vals{};
        size_t pos = 0;
        for (int k = 0; k < 4; ++k) {
            size_t comma = (k == 3) ? inner.size() : inner.find(',', pos);
            if (comma == std::string::npos)
                throw input_error("crossing needs 4 labels: " + tok);
            std::string piece = inner.substr(pos, comma - pos);
            try {
                size_t used = 0;
                vals[static_cast<size_t>(k)] = std::stol(piece, &used);
                if (used != piece.size()) throw std::invalid_argument(piece);
            } catch (const std::exception&) {
                throw input_error("bad edge label '" + piece + "' in " + tok);
            }
            if (vals[static_cast<size_t>(k)] <= 0)
                throw input_error("edge labels must be positive: " + tok);
            pos = comma + 1;
        }
        rows.push_back(vals);
        dealt_flags.push_back(dealt ? 1 : 0);
    }

    int n = static_cast<int>(rows.size());
    if (n == 0) {
        if (loops == 0)
            throw input_error("no PD tokens: a diagram needs at least one "
                              "crossing or circle");
        Diagram d;
        d.loops = loops;
        return d;
    }
    std::map<long, std::vector<Dart>> where;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            where[rows[static_cast<size_t>(c)][static_cast<size_t>(s)]].push_back(
                make_dart(c, s));
    std::vector<Dart> sigma(static_cast<size_t>(4 * n), -1);
    for (auto& [label, ds] : where) {
        if (ds.size() != 2)
            throw input_error("edge label " + std::to_string(label) +
                              " appears " + std::to_string(ds.size()) +
                              " times (need exactly 2)");
        sigma[static_cast<size_t>(ds[0])] = ds[1];
        sigma[static_cast<size_t>(ds[1])] = ds[0];
    }
    // PD lists labels counterclockwise from the incoming under edge, so the
    // under strand occupies slots {0,2} at every crossing.
    Diagram d(n, std::move(sigma), std::vector<uint8_t>(static_cast<size_t>(n), 0),
              std::move(dealt_flags));
    d.loops = loops;
    d.check_wellformed();
    if (!d.euler_ok())
        throw input_error("PD edge pairing is not planar");
    return d;
}

std::string emit_pd(const Diagram& d) {
    std::ostringstream os;
    if (d.n > 0) {
        // Each edge is entered exactly once per directed strand walk, so
        // labeling entry edges 1..2n along the walk labels every edge once.
        std::vector<long> lab(static_cast<size_t>(d.dart_count()), 0);
        std::vector<char> entered(static_cast<size_t>(d.dart_count()), 0);
        long next = 1;
        auto walk = [&](Dart d0) {
            Dart cur = d0;
            while (!entered[static_cast<size_t>(cur)]) {
                entered[static_cast<size_t>(cur)] = 1;
                lab[static_cast<size_t>(cur)] = next;
                lab[static_cast<size_t>(d.mate(cur))] = next;
                ++next;
                cur = d.next_passage(cur);
            }
        };
        walk(canonical_start(d));
        for (Dart d0 = 0; d0 < d.dart_count(); ++d0)
            if (lab[static_cast<size_t>(d0)] == 0) walk(d0);
        bool first = true;
        for (int c = 0; c < d.n; ++c) {
            // incoming under dart = the under-slot dart used as a walk entry
            Dart a = -1;
            for (int s = 0; s < 4; ++s) {
                Dart dd = make_dart(c, s);
                if (d.is_under_dart(dd) && entered[static_cast<size_t>(dd)]) {
                    a = dd;
                    break;
                }
            }
            if (a < 0) throw internal_error("crossing without under entry");
            if (!first) os << ' ';
            first = false;
            os << (d.dealt[static_cast<size_t>(c)] ? "Xd[" : "X[");
            for (int k = 0; k < 4; ++k) {
                if (k) os << ',';
                os << lab[static_cast<size_t>(dart_rot(a, k))];
            }
            os << ']';
        }
    }
    for (int i = 0; i < d.loops; ++i) {
        if (d.n > 0 || i > 0) os << ' ';
        os << 'O';
    }
    return os.str();
}

}  // namespace aak
