#include <doctest.h>

#include <set>

#include "qtw/arrays.hpp"
#include "qtw/enumeration.hpp"
#include "qtw/rng.hpp"

using namespace qtw;

namespace {

const char* const kWalk14 = "+--+--+++----+";

MarkedArray walk14_array() {
    return {IncrementArray({{+1},
                            {+1, -1},
                            {+1, -1, +1, -1},
                            {+1, -1, -1, +1, -1},
                            {-1, -1}}),
            0};
}

// Five-step reconstitution fixture: the walk -+++- seen from level 1.
MarkedArray five_step_array() {
    return {IncrementArray({{+1}, {-1, +1}, {+1}, {-1}}), 3};
}

std::string array_key(const IncrementArray& x) {
    std::string key;
    for (const auto& row : x.rows()) {
        for (int v : row) key.push_back(v > 0 ? '+' : '-');
        key.push_back('|');
    }
    return key;
}

}  // namespace

TEST_CASE("alpha splits increments by level and marks the preterminal row") {
    CHECK(alpha(parse_walk(kWalk14)) == walk14_array());
    CHECK(alpha(parse_walk("+")) == MarkedArray{IncrementArray({{+1}}), 0});
    CHECK(alpha(parse_walk("-+++-")) == five_step_array());
    CHECK_THROWS_AS(alpha(Walk{}), EmptyWalk);
}

TEST_CASE("sigma sums every entry") {
    CHECK(sigma(walk14_array().array) == -2);
    CHECK(sigma(IncrementArray({{+1}})) == 1);
    CHECK(sigma(five_step_array().array) == 1);
}

TEST_CASE("terminal and start rows follow from the mark") {
    const auto a = special_rows(walk14_array());
    CHECK(a.terminal == 1);
    CHECK(a.start == 3);

    const auto b = special_rows(five_step_array());
    CHECK(b.terminal == 2);
    CHECK(b.start == 1);

    // single down-step: terminal escapes below the array
    const auto c = special_rows({IncrementArray({{-1}}), 0});
    CHECK(c.terminal == -1);
    CHECK(c.start == 0);
}

TEST_CASE("bookends predicate") {
    CHECK(has_bookends(walk14_array()));
    // re-marking the same rows at P = 4 puts terminal at 3 and breaks row 1
    CHECK_FALSE(has_bookends({walk14_array().array, 4}));
    CHECK(has_bookends({IncrementArray({{+1}}), 0}));
}

TEST_CASE("crossings predicate") {
    CHECK(has_crossings(walk14_array()));
    CHECK_FALSE(has_crossings({IncrementArray({{+1}, {+1}}), 0}));
    CHECK(has_crossings({IncrementArray({{+1}}), 0}));
}

TEST_CASE("validity is the conjunction") {
    CHECK(is_valid(five_step_array()));
    CHECK_FALSE(is_valid({IncrementArray({{+1}, {+1}}), 0}));
    for (int n = 1; n <= 14; ++n)
        for_each_walk(n, [&](const Walk& w) { CHECK(is_valid(alpha(w))); });
}

TEST_CASE("reconstitution replays the queue algorithm") {
    const Walk five = reconstitute(five_step_array());
    CHECK(format_walk(five) == "-+++-");
    CHECK(values(five) == std::vector<int>{0, -1, 0, 1, 2, 1});

    CHECK(reconstitute(walk14_array()) == parse_walk(kWalk14));
    CHECK(reconstitute({IncrementArray({{+1}}), 0}) == parse_walk("+"));

    CHECK_THROWS_AS(reconstitute({IncrementArray({{+1}, {+1}}), 0}), InvalidArray);
    CHECK_THROWS_AS(reconstitute_raw({IncrementArray({{+1}, {+1}}), 0}),
                    StuckReconstitution);
}

TEST_CASE("round trip over all walks up to n = 16") {
    for (int n = 1; n <= 16; ++n) {
        for_each_walk(n, [&](const Walk& w) { CHECK(reconstitute(alpha(w)) == w); });
    }
}

TEST_CASE("valid marks: unique when sigma is nonzero, two bridges when zero") {
    CHECK(valid_marks(walk14_array().array) == std::vector<int>{0});

    // the bridge pair: x_0 = (+), x_1 = (-) reconstitutes to -+ and +- depending on the mark
    const IncrementArray bridge_rows({{+1}, {-1}});
    CHECK(valid_marks(bridge_rows) == std::vector<int>{0, 1});
    CHECK(format_walk(reconstitute({bridge_rows, 0})) == "-+");
    CHECK(format_walk(reconstitute({bridge_rows, 1})) == "+-");

    // four-row fixture whose row-ending signs transition between rows 2 and 3
    const IncrementArray four_rows({{+1},
                                    {+1, +1, -1, +1},
                                    {-1, +1, +1, -1, +1},
                                    {+1, -1, -1},
                                    {-1}});
    CHECK(sigma(four_rows) == 2);
    const auto marks = valid_marks(four_rows);
    CHECK(marks == std::vector<int>{2});
    CHECK(alpha(reconstitute({four_rows, 2})) == MarkedArray{four_rows, 2});
}

TEST_CASE("multiplicity over every array reachable from walks up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
        std::set<std::string> seen;
        for_each_walk(n, [&](const Walk& w) {
            const auto m = alpha(w);
            if (!seen.insert(array_key(m.array)).second) return;
            const auto marks = valid_marks(m.array);
            if (sigma(m.array) != 0) {
                CHECK(marks.size() == 1);
                CHECK(marks[0] == m.preterminal);
            } else {
                REQUIRE(marks.size() == 2);
                const Walk a = reconstitute({m.array, marks[0]});
                const Walk b = reconstitute({m.array, marks[1]});
                CHECK(a != b);
                CHECK(end_value(a) == 0);
                CHECK(end_value(b) == 0);
            }
        });
    }
}

TEST_CASE("flipping one row-final entry never preserves the described walk") {
    auto rng = make_rng(4242, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 11));
        const Walk w = random_walk(rng, n);
        const auto m = alpha(w);
        for (int r = 0; r <= m.array.height(); ++r) {
            auto rows = m.array.rows();
            rows[r].back() = -rows[r].back();
            const MarkedArray mutated{IncrementArray(std::move(rows)), m.preterminal};
            if (!is_valid(mutated)) continue;
            CHECK(reconstitute(mutated) != w);
        }
    }
}
