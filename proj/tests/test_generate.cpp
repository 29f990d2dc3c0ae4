#include <map>
#include <set>

#include "aak/errors.hpp"
#include "aak/generate.hpp"
#include "aak/moves.hpp"
#include "aak/oracle.hpp"
#include "aak/pd.hpp"
#include "aak/recognition.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aak;
using namespace fixtures;

TEST_CASE("coil construction") {
    CHECK_THROWS_AS(encode_coil(0), input_error);
    for (int m : {1, -1, 2, -2, 4, -4}) {
        Diagram d = encode_coil(m);
        CHECK(d.n == (m > 0 ? m : -m));
        CHECK(d.euler_ok());
        CHECK(d.components() == 1);
        CHECK(is_alternating(d));
        CHECK(jones_is_one(d));
        // every crossing unwinds as a kink
        Diagram r = reduce_kinks(d);
        CHECK(r.n == 0);
        CHECK(r.loops == 1);
    }
    CHECK(canonical_code(encode_coil(-3)) ==
          canonical_code(reflect(encode_coil(3))));
}

TEST_CASE("base family construction") {
    CHECK_THROWS_AS(encode_C(0), input_error);
    for (int m : {1, -1, 2, -2, 3, -3, 5, -5}) {
        Diagram d = encode_C(m);
        int k = m > 0 ? m : -m;
        CHECK(d.n == k + 2);  // fixed two-crossing closure overhead
        Recognition r = recognize(d);
        CHECK(r.knot);
        CHECK(r.reduced);
        CHECK(r.almost_alternating);
        CHECK(!r.strongly_reduced);
        CHECK(r.dealternators == std::vector<int>{k + 1});
        CHECK(d.dealt[static_cast<size_t>(k + 1)] == 1);
        CHECK(jones_is_one(d));
    }
}

TEST_CASE("closure counts at small budgets") {
    auto count = [](int max, std::vector<int> ms) {
        EnumConfig cfg;
        cfg.max_crossings = max;
        cfg.m_values = std::move(ms);
        return enumerate_unknot_diagrams(cfg).size();
    };
    CHECK(count(5, {1}) == 1);
    CHECK(count(6, {1, -1, 2, -2, 3, -3, 4, -4}) == 14);
    CHECK(count(5, {1, -1, 2, -2, 3, -3}) == 6);
    CHECK(count(6, {1, -1, 2, -2, 3, -3}) == 12);
    CHECK(count(7, {1, -1, 2, -2, 3, -3}) == 26);
    CHECK(count(8, {1, -1, 2, -2, 3, -3}) == 72);
}

TEST_CASE("closure profile by crossing count at budget eight") {
    EnumConfig cfg;
    cfg.max_crossings = 8;
    std::map<int, int> profile;
    for (const Diagram& d : enumerate_unknot_diagrams(cfg)) ++profile[d.n];
    CHECK(profile == std::map<int, int>{{3, 2}, {4, 2}, {5, 2}, {6, 6},
                                        {7, 14}, {8, 46}});
}

TEST_CASE("every enumerated diagram is a reduced almost alternating knot") {
    EnumConfig cfg;
    cfg.max_crossings = 7;
    for (const Diagram& d : enumerate_unknot_diagrams(cfg)) {
        Recognition r = recognize(d);
        CHECK(r.knot);
        CHECK(r.reduced);
        CHECK(r.almost_alternating);
        REQUIRE(r.dealternators.size() >= 1);
        int flags = 0, delt = -1;
        for (int c = 0; c < d.n; ++c)
            if (d.dealt[static_cast<size_t>(c)]) {
                ++flags;
                delt = c;
            }
        CHECK(flags == 1);
        CHECK(std::find(r.dealternators.begin(), r.dealternators.end(),
                        delt) != r.dealternators.end());
    }
}

TEST_CASE("outputs are sorted and duplicate-free") {
    EnumConfig cfg;
    cfg.max_crossings = 7;
    auto out = enumerate_unknot_diagrams(cfg);
    std::set<CanonicalCode> seen;
    int prev_n = 0;
    CanonicalCode prev_code;
    for (const Diagram& d : out) {
        CanonicalCode code = canonical_code(d);
        CHECK(!seen.count(code));
        seen.insert(code);
        if (d.n == prev_n) CHECK(prev_code < code);
        CHECK(d.n >= prev_n);
        prev_n = d.n;
        prev_code = std::move(code);
    }
}

TEST_CASE("raw stream covers the deduplicated classes") {
    EnumConfig dd, raw;
    dd.max_crossings = 6;
    raw.max_crossings = 6;
    raw.dedup = false;
    auto a = enumerate_unknot_diagrams(dd);
    auto b = enumerate_unknot_diagrams(raw);
    CHECK(b.size() >= a.size());
    std::set<CanonicalCode> ca, cb;
    for (auto& d : a) ca.insert(canonical_code(d));
    for (auto& d : b) cb.insert(canonical_code(d));
    CHECK(ca == cb);
}

TEST_CASE("budget truncation is a prefix of the larger closure") {
    // expansion moves never decrease the crossing count, so the budget-six
    // closure is exactly the small part of the budget-eight closure
    EnumConfig c6, c8;
    c6.max_crossings = 6;
    c8.max_crossings = 8;
    auto e6 = enumerate_unknot_diagrams(c6);
    auto e8 = enumerate_unknot_diagrams(c8);
    std::vector<CanonicalCode> small, filtered;
    for (auto& d : e6) small.push_back(canonical_code(d));
    for (auto& d : e8)
        if (d.n <= 6) filtered.push_back(canonical_code(d));
    CHECK(small == filtered);
}

TEST_CASE("zero and missing base parameters") {
    EnumConfig cfg;
    cfg.max_crossings = 8;
    cfg.m_values = {0};
    CHECK_THROWS_AS(enumerate_unknot_diagrams(cfg), input_error);
    cfg.m_values = {7};  // needs 9 crossings, over budget
    CHECK(enumerate_unknot_diagrams(cfg).empty());
}

TEST_CASE("alternating extraction") {
    Diagram f = parse_pd(kFlippedTrefoil);
    std::vector<int> da = dealternators(f);
    REQUIRE(da.size() == 1);
    f.dealt.assign(f.dealt.size(), 0);
    f.dealt[static_cast<size_t>(da[0])] = 1;
    Diagram alt = u1_alternating(f);
    CHECK(is_alternating(alt));
    CHECK(canonical_code(alt) == canonical_code(parse_pd(kTrefoil)));
    int flags = 0;
    for (int c = 0; c < alt.n; ++c) flags += alt.dealt[static_cast<size_t>(c)];
    CHECK(flags == 0);

    // rejects inputs without a unique marked dealternator
    CHECK_THROWS_AS(u1_alternating(parse_pd(kTrefoil)), input_error);
    Diagram two = f;
    two.dealt[(static_cast<size_t>(da[0]) + 1) % 3] = 1;
    CHECK_THROWS_AS(u1_alternating(two), input_error);
}

TEST_CASE("extraction over the corpus yields reduced alternating diagrams") {
    EnumConfig cfg;
    cfg.max_crossings = 7;
    std::set<CanonicalCode> classes;
    for (const Diagram& d : enumerate_unknot_diagrams(cfg)) {
        int delt = -1;
        for (int c = 0; c < d.n; ++c)
            if (d.dealt[static_cast<size_t>(c)]) delt = c;
        Diagram alt = u1_alternating(d);
        CHECK(is_alternating(alt));
        CHECK(nugatory_crossings(alt).empty());
        // flipping the same crossing back restores an unknot diagram
        CHECK(jones_is_one(alt.flipped(delt)));
        classes.insert(canonical_code(alt));
    }
    CHECK(classes.size() == 21);  // distinct classes at budget seven
}
