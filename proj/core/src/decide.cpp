#include "aak/decide.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "aak/errors.hpp"
#include "aak/moves.hpp"
#include "aak/oracle.hpp"
#include "aak/pd.hpp"
#include "aak/recognition.hpp"

namespace aak {

void validate_for_decide(const Diagram& d) {
    try {
        d.check_wellformed();
    } catch (const internal_error& e) {
        throw input_error(e.what());
    }
    if (d.n > 0 && !d.euler_ok()) throw input_error("diagram is not planar");
    Recognition rec = recognize(d);
    if (!rec.knot)
        throw input_error("diagram is not a knot (need one closed strand)");
    if (!rec.almost_alternating)
        throw input_error("diagram is not almost alternating");
    if (!rec.reduced)
        throw input_error("diagram is not reduced (nugatory crossing present)");
    if (rec.dealternators.size() != 1)
        throw input_error("diagram must have a unique dealternator");
    std::vector<int> flagged;
    for (int c = 0; c < d.n; ++c)
        if (d.dealt[static_cast<size_t>(c)]) flagged.push_back(c);
    if (!flagged.empty() && flagged != rec.dealternators)
        throw input_error("dealternator flag does not match the diagram");
}

namespace {

int flagged_dealternator(const Diagram& d) {
    int delt = -1;
    for (int c = 0; c < d.n; ++c) {
        if (!d.dealt[static_cast<size_t>(c)]) continue;
        if (delt >= 0) throw internal_error("multiple dealternator flags");
        delt = c;
    }
    if (delt < 0) throw internal_error("dealternator flag lost");
    return delt;
}

// Certificates reference crossing ids and slots, and PD text only expresses
// the parse normal form (slot 0 = incoming under edge at each crossing).
// Both decide() and write_certificate() therefore work on the same
// deterministic flagged PD round-trip of the input.
Diagram flagged_copy(const Diagram& input) {
    Diagram s = input;
    std::vector<int> dealts = dealternators(input);
    if (dealts.size() == 1) {
        std::fill(s.dealt.begin(), s.dealt.end(), 0);
        s.dealt[static_cast<size_t>(dealts[0])] = 1;
    }
    return s;
}

Diagram decide_normal_form(const Diagram& input) {
    return parse_pd(emit_pd(flagged_copy(input)));
}

}  // namespace

Verdict decide(const Diagram& input, int max_iter) {
    validate_for_decide(input);
    Diagram d = decide_normal_form(input);
    std::vector<Step> steps;
    for (int iter = 0; iter < max_iter; ++iter) {
        Recognition rec = recognize(d);
        if (!rec.reduced)
            throw internal_error("moves must preserve reducedness");
        if (!rec.clasps.empty()) {
            // Clasp branch: one R2 removal, then kink reduction; terminal.
            int c1 = rec.clasps.front().c1;
            int c2 = rec.clasps.front().c2;
            Diagram d2 = r2_clasp_remove(d, c1, c2);
            steps.push_back({StepKind::R2_CLASP, {c1, c2}, false, d2.n});
            if (d2.n == 0)
                throw internal_error(
                    "clasp removal emptied a reduced diagram");
            if (!d2.euler_ok() || d2.components() != 1)
                throw internal_error("clasp removal broke planarity");
            if (!is_alternating(d2))
                throw internal_error(
                    "clasp branch must yield an alternating diagram");
            while (d2.n > 0) {
                int c = find_nugatory_crossing(d2);
                if (c < 0) break;
                d2 = remove_through(d2, c);
                steps.push_back({StepKind::R1_KINK, {c}, false, d2.n});
            }
            Verdict v;
            v.steps = std::move(steps);
            v.terminal = std::move(d2);
            if (v.terminal.n == 0 && v.terminal.loops == 1) {
                v.status = Status::TRIVIAL;
                v.reason = Reason::COILED_AFTER_R2;
            } else {
                v.status = Status::NONTRIVIAL;
                v.reason = Reason::NOT_COILED_AFTER_R2;
            }
            return v;
        }
        int delt = flagged_dealternator(d);
        std::vector<TongueSite> sites = tongue_sites(d, delt);
        if (sites.empty()) {
            Verdict v;
            v.status = Status::NONTRIVIAL;
            v.reason = Reason::NO_FLYPED_TONGUE;
            v.steps = std::move(steps);
            v.terminal = std::move(d);
            return v;
        }
        std::stable_sort(sites.begin(), sites.end(),
                         [](const TongueSite& a, const TongueSite& b) {
                             return std::pair(a.q, a.slot) <
                                    std::pair(b.q, b.slot);
                         });
        bool progressed = false;
        for (const TongueSite& t : sites) {
            if (t.left.triv >= 0 && t.right.triv >= 0 &&
                t.left.triv != t.right.triv) {
                bool wrap = site_is_wrap(d, t);
                auto nd = wrap ? apply_untwirl(d, t) : apply_untongue(d, t);
                if (nd) {
                    steps.push_back({wrap ? StepKind::UNTWIRL
                                          : StepKind::UNTONGUE,
                                     {t.delta, t.slot},
                                     false,
                                     nd->n});
                    d = std::move(*nd);
                    progressed = true;
                    break;
                }
            }
            for (int side = 0; side < 2 && !progressed; ++side) {
                const TongueSide& sd = side == 0 ? t.left : t.right;
                if (sd.triv >= 0) continue;
                FlypeSite used;
                auto nd = shrink_flype(d, t, side == 0, &used);
                if (nd) {
                    steps.push_back(
                        {StepKind::FLYPE,
                         {used.x, used.s, dart_crossing(used.e1[0]),
                          dart_slot(used.e1[0]), dart_crossing(used.e2[0]),
                          dart_slot(used.e2[0])},
                         false,
                         nd->n});
                    d = std::move(*nd);
                    progressed = true;
                }
            }
            if (progressed) break;
        }
        if (!progressed)
            throw internal_error(
                "no applicable move at a strongly reduced diagram with "
                "sites (decision law violated)");
        if (d.n == 0) {
            Verdict v;
            v.status = d.loops == 1 ? Status::TRIVIAL : Status::NONTRIVIAL;
            v.reason = Reason::REACHED_TRIVIAL;
            v.steps = std::move(steps);
            v.terminal = std::move(d);
            return v;
        }
    }
    throw internal_error("decision iteration budget exhausted");
}

// ----------------------------------------------------------------- strings

const char* status_name(Status s) {
    return s == Status::TRIVIAL ? "TRIVIAL" : "NONTRIVIAL";
}

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::COILED_AFTER_R2: return "COILED_AFTER_R2";
        case Reason::NOT_COILED_AFTER_R2: return "NOT_COILED_AFTER_R2";
        case Reason::NO_FLYPED_TONGUE: return "NO_FLYPED_TONGUE";
        case Reason::REACHED_TRIVIAL: return "REACHED_TRIVIAL";
    }
    return "?";
}

namespace {

const char* reason_phrase(Reason r) {
    switch (r) {
        case Reason::COILED_AFTER_R2: return "coiled after R2";
        case Reason::NOT_COILED_AFTER_R2: return "not coiled after R2";
        case Reason::NO_FLYPED_TONGUE: return "no flyped tongue";
        case Reason::REACHED_TRIVIAL: return "reached trivial diagram";
    }
    return "?";
}

std::optional<std::pair<Status, Reason>> parse_status_line(
    const std::string& s) {
    for (Reason r : {Reason::COILED_AFTER_R2, Reason::NOT_COILED_AFTER_R2,
                     Reason::NO_FLYPED_TONGUE, Reason::REACHED_TRIVIAL}) {
        for (Status st : {Status::TRIVIAL, Status::NONTRIVIAL}) {
            std::string cand = std::string(status_name(st)) + " (" +
                               reason_phrase(r) + ")";
            if (s == cand) return std::pair(st, r);
        }
    }
    return std::nullopt;
}

}  // namespace

std::string status_line(const Verdict& v) {
    return std::string(status_name(v.status)) + " (" +
           reason_phrase(v.reason) + ")";
}

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::R2_CLASP: return "R2_CLASP";
        case StepKind::R1_KINK: return "R1_KINK";
        case StepKind::FLYPE: return "FLYPE";
        case StepKind::UNTONGUE: return "UNTONGUE";
        case StepKind::UNTWIRL: return "UNTWIRL";
        case StepKind::TONGUE: return "TONGUE";
        case StepKind::TWIRL: return "TWIRL";
    }
    return "?";
}

std::string format_step(const Step& s) {
    std::ostringstream os;
    os << step_kind_name(s.kind) << ' ';
    const auto& a = s.args;
    switch (s.kind) {
        case StepKind::R2_CLASP: os << a[0] << ':' << a[1]; break;
        case StepKind::R1_KINK: os << a[0]; break;
        case StepKind::FLYPE:
            os << a[0] << ':' << a[1] << ':' << a[2] << '.' << a[3] << ':'
               << a[4] << '.' << a[5];
            break;
        case StepKind::UNTONGUE:
        case StepKind::UNTWIRL:
        case StepKind::TONGUE:
            os << a[0] << ':' << a[1];
            break;
        case StepKind::TWIRL:
            os << a[0] << ':' << a[1] << ':' << a[2];
            break;
    }
    os << ' ' << (s.mirror ? 1 : 0);
    return os.str();
}

std::string write_certificate(const Diagram& source, const Verdict& v) {
    std::ostringstream os;
    os << "# reduction certificate\n";
    os << "# verdict: " << status_line(v) << '\n';
    os << emit_pd(flagged_copy(source)) << '\n';
    for (const Step& s : v.steps) os << format_step(s) << '\n';
    os << "# terminal: " << emit_pd(v.terminal) << '\n';
    return os.str();
}

// ------------------------------------------------------------------ replay

namespace {

struct StepParseError {
    std::string what;
};

std::vector<int> parse_site_ints(const std::string& tok) {
    std::vector<int> out;
    std::string cur;
    for (char ch : tok + ":") {
        if (ch == ':' || ch == '.') {
            if (cur.empty()) throw StepParseError{"empty site field"};
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else {
            throw StepParseError{"bad character in site field"};
        }
    }
    return out;
}

Step parse_step_line(const std::string& line) {
    std::istringstream is(line);
    std::string kind, site, mir;
    if (!(is >> kind >> site >> mir))
        throw StepParseError{"step line needs kind, site, mirror"};
    std::string extra;
    if (is >> extra) throw StepParseError{"trailing tokens on step line"};
    Step st;
    if (kind == "R2_CLASP") st.kind = StepKind::R2_CLASP;
    else if (kind == "R1_KINK") st.kind = StepKind::R1_KINK;
    else if (kind == "FLYPE") st.kind = StepKind::FLYPE;
    else if (kind == "UNTONGUE") st.kind = StepKind::UNTONGUE;
    else if (kind == "UNTWIRL") st.kind = StepKind::UNTWIRL;
    else if (kind == "TONGUE") st.kind = StepKind::TONGUE;
    else if (kind == "TWIRL") st.kind = StepKind::TWIRL;
    else throw StepParseError{"unknown step kind: " + kind};
    st.args = parse_site_ints(site);
    size_t want = 0;
    switch (st.kind) {
        case StepKind::R2_CLASP: want = 2; break;
        case StepKind::R1_KINK: want = 1; break;
        case StepKind::FLYPE: want = 6; break;
        case StepKind::UNTONGUE:
        case StepKind::UNTWIRL:
        case StepKind::TONGUE: want = 2; break;
        case StepKind::TWIRL: want = 3; break;
    }
    if (st.args.size() != want)
        throw StepParseError{"wrong site arity for " + kind};
    if (mir == "0") st.mirror = false;
    else if (mir == "1") st.mirror = true;
    else throw StepParseError{"mirror flag must be 0 or 1"};
    return st;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Apply one certificate step to the current diagram, verifying that the
// recorded site is legal right now. Returns nullopt with `why` set.
std::optional<Diagram> replay_step(const Diagram& d, const Step& st,
                                   std::string* why) {
    auto fail = [&](const std::string& w) -> std::optional<Diagram> {
        *why = w;
        return std::nullopt;
    };
    switch (st.kind) {
        case StepKind::R2_CLASP: {
            int c1 = st.args[0], c2 = st.args[1];
            if (c1 >= c2 || c2 >= d.n) return fail("clasp ids out of range");
            bool found = false;
            for (const ClaspSite& cs : trivial_clasps(d))
                if (cs.c1 == c1 && cs.c2 == c2) found = true;
            if (!found) return fail("recorded pair is not a trivial clasp");
            return r2_clasp_remove(d, c1, c2);
        }
        case StepKind::R1_KINK: {
            int c = st.args[0];
            if (c < 0 || c >= d.n) return fail("kink id out of range");
            std::vector<int> nug = nugatory_crossings(d);
            if (std::find(nug.begin(), nug.end(), c) == nug.end())
                return fail("recorded crossing is not nugatory");
            return remove_through(d, c);
        }
        case StepKind::FLYPE: {
            int x = st.args[0], s = st.args[1];
            if (x < 0 || x >= d.n || s < 0 || s > 3)
                return fail("flype site out of range");
            auto edge_from = [&](int c, int sl,
                                 std::array<Dart, 2>& e) -> bool {
                if (c < 0 || c >= d.n || sl < 0 || sl > 3) return false;
                Dart a = make_dart(c, sl);
                Dart b = d.mate(a);
                e = {std::min(a, b), std::max(a, b)};
                return true;
            };
            std::array<Dart, 2> e1{}, e2{};
            if (!edge_from(st.args[2], st.args[3], e1) ||
                !edge_from(st.args[4], st.args[5], e2))
                return fail("flype cut edge out of range");
            auto nd = apply_flype(d, x, s, e1, e2);
            if (!nd) return fail("flype does not apply at the recorded site");
            return nd;
        }
        case StepKind::UNTONGUE:
        case StepKind::UNTWIRL: {
            int delta = st.args[0], slot = st.args[1];
            if (delta < 0 || delta >= d.n || slot < 0 || slot > 3)
                return fail("site out of range");
            if (!d.dealt[static_cast<size_t>(delta)])
                return fail("recorded crossing is not the dealternator");
            for (const TongueSite& t : tongue_sites(d, delta)) {
                if (t.slot != slot) continue;
                if (t.left.triv < 0 || t.right.triv < 0 ||
                    t.left.triv == t.right.triv)
                    return fail("recorded site is not trivial-trivial");
                bool wrap = site_is_wrap(d, t);
                if (wrap != (st.kind == StepKind::UNTWIRL))
                    return fail("wrap shape does not match the step kind");
                auto nd = st.kind == StepKind::UNTWIRL
                              ? apply_untwirl(d, t)
                              : apply_untongue(d, t);
                if (!nd) return fail("pattern collapse failed at the site");
                return nd;
            }
            return fail("no site at the recorded slot");
        }
        case StepKind::TONGUE: {
            auto nd = apply_tongue(d, st.args[0], st.args[1], st.mirror);
            if (!nd) return fail("tongue does not apply");
            return nd;
        }
        case StepKind::TWIRL: {
            if (st.args[2] != 0 && st.args[2] != 1)
                return fail("twirl wrap flag must be 0 or 1");
            auto nd = apply_twirl(d, st.args[0], st.args[1],
                                  st.args[2] == 0 ? 'A' : 'B', st.mirror);
            if (!nd) return fail("twirl does not apply");
            return nd;
        }
    }
    return fail("unhandled step kind");
}

}  // namespace

ReplayReport replay_certificate(const std::string& text) {
    ReplayReport rep;
    std::vector<std::string> body;
    std::string verdict_comment, terminal_comment;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            std::string t = trim(line);
            if (t.empty()) continue;
            if (t[0] == '#') {
                const std::string vp = "# verdict:";
                const std::string tp = "# terminal:";
                if (t.rfind(vp, 0) == 0)
                    verdict_comment = trim(t.substr(vp.size()));
                else if (t.rfind(tp, 0) == 0)
                    terminal_comment = trim(t.substr(tp.size()));
                continue;
            }
            body.push_back(t);
        }
    }
    if (body.empty()) {
        rep.error = "certificate has no source line";
        return rep;
    }
    Diagram d;
    try {
        d = parse_pd(body[0]);
    } catch (const std::exception& e) {
        rep.error = std::string("source line: ") + e.what();
        return rep;
    }
    Poly j0;
    try {
        j0 = jones(d);
    } catch (const std::exception& e) {
        rep.error = std::string("source Jones evaluation: ") + e.what();
        return rep;
    }
    for (size_t i = 1; i < body.size(); ++i) {
        Step st;
        try {
            st = parse_step_line(body[i]);
        } catch (const StepParseError& e) {
            rep.error = e.what;
            rep.failed_step = static_cast<int>(i) - 1;
            return rep;
        }
        std::string why;
        std::optional<Diagram> nd;
        try {
            nd = replay_step(d, st, &why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!nd) {
            rep.error = why;
            rep.failed_step = static_cast<int>(i) - 1;
            return rep;
        }
        bool must_shrink =
            st.kind == StepKind::R2_CLASP || st.kind == StepKind::R1_KINK ||
            st.kind == StepKind::UNTONGUE || st.kind == StepKind::UNTWIRL;
        if (nd->n > d.n || (must_shrink && nd->n >= d.n)) {
            rep.error = "crossing count law violated";
            rep.failed_step = static_cast<int>(i) - 1;
            return rep;
        }
        try {
            if (jones(*nd) != j0) {
                rep.error = "Jones polynomial changed across the step";
                rep.failed_step = static_cast<int>(i) - 1;
                return rep;
            }
        } catch (const std::exception& e) {
            rep.error = std::string("Jones evaluation: ") + e.what();
            rep.failed_step = static_cast<int>(i) - 1;
            return rep;
        }
        d = std::move(*nd);
        st.n_after = d.n;
        rep.steps.push_back(std::move(st));
    }
    if (!terminal_comment.empty() && emit_pd(d) != terminal_comment) {
        rep.error = "terminal diagram does not match the recorded one";
        return rep;
    }
    if (!verdict_comment.empty()) {
        auto sr = parse_status_line(verdict_comment);
        if (!sr) {
            rep.error = "unrecognized verdict comment";
            return rep;
        }
        auto [st, rs] = *sr;
        bool okv = true;
        switch (rs) {
            case Reason::COILED_AFTER_R2:
                okv = st == Status::TRIVIAL && d.n == 0 && d.loops == 1;
                break;
            case Reason::NOT_COILED_AFTER_R2:
                okv = st == Status::NONTRIVIAL && d.n > 0 &&
                      is_alternating(d) && nugatory_crossings(d).empty();
                break;
            case Reason::NO_FLYPED_TONGUE: {
                Recognition rc = recognize(d);
                okv = st == Status::NONTRIVIAL && rc.strongly_reduced &&
                      rc.dealternators.size() == 1 &&
                      tongue_sites(d, flagged_dealternator(d)).empty();
                break;
            }
            case Reason::REACHED_TRIVIAL:
                okv = d.n == 0;
                break;
        }
        if (!okv) {
            rep.error = "terminal state does not support the verdict";
            return rep;
        }
    }
    rep.ok = true;
    rep.terminal = std::move(d);
    return rep;
}

}  // namespace aak
