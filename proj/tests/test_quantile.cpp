#include <doctest.h>

#include <map>
#include <set>

#include "qtw/enumeration.hpp"
#include "qtw/quantile.hpp"
#include "qtw/rng.hpp"

using namespace qtw;

namespace {
const char* const kWalk14 = "+--+--+++----+";

std::vector<int> brute_helper_range(const Walk& v) {
    std::vector<int> ks;
    for (int k = 1; k <= v.length(); ++k)
        if (is_quantile_pair(v, k)) ks.push_back(k);
    return ks;
}
}  // namespace

TEST_CASE("quantile permutation sorts by (pre-step value, time)") {
    CHECK(quantile_permutation(parse_walk("-+")).order == std::vector<int>{2, 1});
    CHECK(quantile_permutation(parse_walk("++")).order == std::vector<int>{1, 2});
    CHECK(quantile_permutation(parse_walk(kWalk14)).order ==
          std::vector<int>{14, 7, 13, 4, 6, 8, 12, 1, 3, 5, 9, 11, 2, 10});
    CHECK_THROWS_AS(quantile_permutation(Walk{}), EmptyWalk);
}

TEST_CASE("quantile transform on small walks") {
    const auto a = quantile_transform(parse_walk("-+"));
    CHECK(format_walk(a.walk) == "+-");
    CHECK(a.helper == 1);

    const auto b = quantile_transform(parse_walk("+-"));
    CHECK(format_walk(b.walk) == "+-");
    CHECK(b.helper == 2);
}

TEST_CASE("quantile transform of the 14-step example") {
    const auto q = quantile_transform(parse_walk(kWalk14));
    CHECK(format_walk(q.walk) == "++-+-+-+--+---");
    CHECK(q.helper == 1);
    CHECK(values(q.walk) ==
          std::vector<int>{0, 1, 2, 1, 2, 1, 2, 1, 2, 1, 0, 1, 0, -1, -2});
}

TEST_CASE("occupation quantile equals the order statistic of pre-step values") {
    CHECK(occupation_quantile_discrete(parse_walk("-+"), 1) == -1);
    CHECK(occupation_quantile_discrete(parse_walk("++"), 2) == 1);
    CHECK(occupation_quantile_discrete(parse_walk(kWalk14), 6) == -1);
    CHECK_THROWS_AS(occupation_quantile_discrete(parse_walk("+-"), 3), IndexError);
    CHECK_THROWS_AS(occupation_quantile_discrete(parse_walk("+-"), 0), IndexError);

    // permutation-free formula: min{a : #{i in [0,n-1], w(i) <= a} >= j}
    for (int n = 1; n <= 8; ++n) {
        for_each_walk(n, [&](const Walk& w) {
            const auto vals = values(w);
            for (int j = 1; j <= n; ++j) {
                int best = 0;
                for (int a = -n; a <= n; ++a) {
                    int covered = 0;
                    for (int i = 0; i < n; ++i) covered += vals[i] <= a;
                    if (covered >= j) { best = a; break; }
                }
                CHECK(occupation_quantile_discrete(w, j) == best);
            }
        });
    }
}

TEST_CASE("quantile pair predicate") {
    CHECK(is_quantile_pair(parse_walk("+-"), 2));
    CHECK_FALSE(is_quantile_pair(parse_walk("+-"), 3));
    CHECK_FALSE(is_quantile_pair(parse_walk("--"), 2));
    CHECK_FALSE(is_quantile_pair(parse_walk("+-"), 0));
}

TEST_CASE("helper ranges by the closed window rules") {
    CHECK(helper_range(parse_walk("+-")) == std::vector<int>{1, 2});
    CHECK(helper_range(parse_walk("++")) == std::vector<int>{2});
    CHECK(helper_range(parse_walk("--")) == std::vector<int>{1});
    CHECK_THROWS_AS(helper_range(parse_walk("-+")), NotQuantileWalk);
}

TEST_CASE("helper ranges match brute force on every quantile walk up to n = 14") {
    for (int n = 1; n <= 14; ++n) {
        for_each_walk(n, [&](const Walk& v) {
            if (!is_quantile_walk(v)) return;
            CHECK(helper_range(v) == brute_helper_range(v));
        });
    }
}

TEST_CASE("transform lands on quantile pairs, keeps the end value and multiset") {
    for (int n = 1; n <= 16; ++n) {
        for_each_walk(n, [&](const Walk& w) {
            const auto [q, k] = quantile_transform(w);
            CHECK(is_quantile_pair(q, k));
            CHECK(end_value(q) == end_value(w));
            int ups_w = 0, ups_q = 0;
            for (int s : w.steps()) ups_w += s > 0;
            for (int s : q.steps()) ups_q += s > 0;
            CHECK(ups_w == ups_q);
        });
    }
}

TEST_CASE("the permutation ignores the final increment") {
    for (int n = 1; n <= 12; ++n) {
        for_each_walk(n, [&](const Walk& w) {
            auto steps = w.steps();
            steps.back() = -steps.back();
            const Walk flipped(std::move(steps));
            CHECK(quantile_permutation(w).order == quantile_permutation(flipped).order);
        });
    }
}

TEST_CASE("general real-increment walks transform into quantile shape") {
    auto rng = make_rng(20240501, 7);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 50));
        const RealWalk w = random_real_walk(rng, n);
        const auto [q, k] = quantile_transform(w);
        const auto vals = values(q);
        for (int j = 0; j < k; ++j) CHECK(vals[j] >= 0.0);
        for (int j = k; j < n; ++j) CHECK(vals[j] > vals[n]);
    }
}

TEST_CASE("lexicographic tie-breaking is shared by simple and general walks") {
    // The same path encoded both ways must produce the same permutation.
    auto rng = make_rng(99, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 14));
        const Walk w = random_walk(rng, n);
        std::vector<double> as_reals(w.steps().begin(), w.steps().end());
        CHECK(quantile_permutation(w).order ==
              quantile_permutation(RealWalk(std::move(as_reals))).order);
    }
}
