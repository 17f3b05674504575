#include <doctest.h>

#include "qtw/enumeration.hpp"
#include "qtw/walk.hpp"

using namespace qtw;

namespace {
const char* const kWalk14 = "+--+--+++----+";
}

TEST_CASE("values are prefix sums starting at zero") {
    CHECK(values(parse_walk("+-")) == std::vector<int>{0, 1, 0});
    CHECK(values(parse_walk("")) == std::vector<int>{0});
    CHECK(values(parse_walk(kWalk14)) ==
          std::vector<int>{0, 1, 0, -1, 0, -1, -2, -1, 0, 1, 0, -1, -2, -3, -2});
}

TEST_CASE("classification of simple walks") {
    const auto dyck = classify(parse_walk("+-"));
    CHECK(dyck.bridge);
    CHECK(dyck.non_negative);
    CHECK(dyck.dyck);
    CHECK_FALSE(dyck.first_passage_bridge);
    CHECK_FALSE(dyck.general);

    const auto fpb = classify(parse_walk("+--"));
    CHECK(fpb.first_passage_bridge);
    CHECK_FALSE(fpb.bridge);
    CHECK_FALSE(fpb.non_negative);
    CHECK_FALSE(fpb.dyck);

    const auto just_bridge = classify(parse_walk("-+"));
    CHECK(just_bridge.bridge);
    CHECK_FALSE(just_bridge.non_negative);
    CHECK_FALSE(just_bridge.first_passage_bridge);
    CHECK_FALSE(just_bridge.dyck);
}

TEST_CASE("the empty walk is a non-negative bridge but no first-passage bridge") {
    const auto c = classify(Walk{});
    CHECK(c.bridge);
    CHECK(c.non_negative);
    CHECK(c.dyck);
    CHECK_FALSE(c.first_passage_bridge);
}

TEST_CASE("general walks only classify as bridge / non-negative") {
    const auto c = classify(parse_real_walk("1.5,-0.5"));
    CHECK_FALSE(c.bridge);
    CHECK(c.non_negative);
    CHECK(c.general);
    CHECK_FALSE(c.dyck);
    CHECK_FALSE(c.first_passage_bridge);
}

TEST_CASE("level summary of the 14-step example") {
    const auto s = levels(parse_walk(kWalk14));
    CHECK(s.start == 3);
    CHECK(s.terminal == 1);
    CHECK(s.preterminal == 0);
    CHECK(s.maximum == 4);
    CHECK(s.up == std::vector<std::int64_t>{1, 1, 2, 2, 0});
    CHECK(s.down == std::vector<std::int64_t>{0, 1, 2, 3, 2});
}

TEST_CASE("level summary edge cases") {
    const auto up = levels(parse_walk("+"));
    CHECK(up.start == 0);
    CHECK(up.terminal == 1);
    CHECK(up.preterminal == 0);
    CHECK(up.maximum == 0);
    CHECK(up.up == std::vector<std::int64_t>{1});
    CHECK(up.down == std::vector<std::int64_t>{0});

    // The minimum runs over i < n, so the final value -2 is not a level.
    const auto dd = levels(parse_walk("--"));
    CHECK(dd.start == 1);
    CHECK(dd.terminal == -1);
    CHECK(dd.preterminal == 0);
    CHECK(dd.maximum == 1);
    CHECK(dd.up == std::vector<std::int64_t>{0, 0});
    CHECK(dd.down == std::vector<std::int64_t>{1, 1});

    CHECK_THROWS_AS(levels(Walk{}), EmptyWalk);
}

TEST_CASE("parse and format") {
    CHECK(parse_walk("+-") == Walk({+1, -1}));
    CHECK(parse_walk("").length() == 0);
    CHECK(parse_real_walk("1.5,-0.5") == RealWalk({1.5, -0.5}));
    CHECK(format_walk(parse_real_walk("1.5,-0.5")) == "1.5,-0.5");

    try {
        parse_walk("+-x+");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
    CHECK_THROWS_AS(parse_real_walk("1.0,,2.0"), ParseError);
    CHECK_THROWS_AS(Walk({+1, 2}), DomainError);
}

TEST_CASE("parse / format round-trips on every short walk") {
    for (int n = 0; n <= 10; ++n) {
        for_each_walk(n, [&](const Walk& w) {
            CHECK(parse_walk(format_walk(w)) == w);
        });
    }
}

namespace {

// Direct transcription of the level relations used across the library.
void check_level_relations(const Walk& w) {
    const auto s = levels(w);
    const auto vals = values(w);
    const int n = w.length();

    // S = T - w(n) = P - w(n-1)
    CHECK(s.start == s.terminal - vals[n]);
    CHECK(s.start == s.preterminal - vals[n - 1]);

    // total increments and at least one per level
    std::int64_t total = 0;
    for (int i = 0; i <= s.maximum; ++i) {
        CHECK(s.up[i] + s.down[i] >= 1);
        total += s.up[i] + s.down[i];
    }
    CHECK(total == n);

    // u_{i-1} - d_i = 1{i<=T} - 1{i<=S} over [0, L+1]
    for (int i = 0; i <= s.maximum + 1; ++i) {
        const std::int64_t u_prev = i == 0 ? 0 : s.up[i - 1];
        const std::int64_t d_here = i == s.maximum + 1 ? 0 : s.down[i];
        const int want = (i <= s.terminal ? 1 : 0) - (i <= s.start ? 1 : 0);
        CHECK(u_prev - d_here == want);
    }

    const auto c = classify(w);
    if (c.bridge) {
        for (int i = 0; i < s.maximum; ++i) CHECK(s.up[i] == s.down[i + 1]);
        CHECK(s.up[s.maximum] == 0);
    }
    if (c.first_passage_bridge && vals[n] < 0) CHECK(s.down[0] == 1);
    else CHECK(s.down[0] == 0);
    if (c.first_passage_bridge && vals[n] > 0) CHECK(s.up[s.maximum] == 1);
    else CHECK(s.up[s.maximum] == 0);
}

}  // namespace

TEST_CASE("level relations hold exhaustively up to n = 16") {
    for (int n = 1; n <= 16; ++n) {
        for_each_walk(n, [&](const Walk& w) { check_level_relations(w); });
    }
}
