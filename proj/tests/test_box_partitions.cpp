#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <numeric>
#include <vector>

#include "lmn/box_partitions.hpp"
#include "lmn/rank_sequence.hpp"

using lmn::BoxShape;
using lmn::Integer;
using lmn::Partition;
using lmn::RankSequence;

namespace {

/// Slow independent evaluation of the tropical minimum: enumerate every
/// weakly increasing tuple (t_0, ..., t_{m-2r}) in [0, r] explicitly.
long tropical_f_brute(const Partition& p, int r) {
    const int m = p.shape().m;
    const std::vector<int> a = lmn::gaps(p).a;
    const int len = m - 2 * r + 1;
    long best = std::numeric_limits<long>::max();
    std::vector<int> t(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == len) {
            long sum = 0;
            for (int j = 0; j < len; ++j) sum += a[static_cast<std::size_t>(2 * t[static_cast<std::size_t>(j)] + j)];
            best = std::min(best, sum);
            return;
        }
        for (int v = lo; v <= r; ++v) {
            t[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("box element counts") {
    CHECK(BoxShape{2, 2}.element_count() == 6);
    CHECK(BoxShape{4, 4}.element_count() == 70);
    CHECK(BoxShape{0, 9}.element_count() == 1);
    CHECK(BoxShape{9, 0}.element_count() == 1);
}

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition(BoxShape{3, 4}, {4, 2, 0}));
    CHECK_THROWS_AS(Partition(BoxShape{3, 4}, {2, 4, 0}), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(Partition(BoxShape{3, 4}, {4, 2}), std::invalid_argument);     // wrong arity
    CHECK_THROWS_AS(Partition(BoxShape{3, 4}, {5, 2, 0}), std::invalid_argument);  // part > n
    CHECK_THROWS_AS(Partition(BoxShape{3, 4}, {4, 2, -1}), std::invalid_argument);
    CHECK(Partition(BoxShape{3, 4}, {4, 2, 0}).rank() == 6);
}

TEST_CASE("enumeration is lexicographic and complete") {
    const auto one = lmn::enumerate(BoxShape{1, 1});
    REQUIRE(one.size() == 2);
    CHECK(one[0].parts() == std::vector<int>{0});
    CHECK(one[1].parts() == std::vector<int>{1});

    const auto six = lmn::enumerate(BoxShape{2, 2});
    REQUIRE(six.size() == 6);
    const std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    for (std::size_t i = 0; i < six.size(); ++i) CHECK(six[i].parts() == expected[i]);

    CHECK(lmn::enumerate(BoxShape{4, 4}).size() == 70);

    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            CHECK(Integer(lmn::enumerate(BoxShape{m, n}).size()) ==
                  BoxShape{m, n}.element_count());
}

TEST_CASE("enumeration refuses over budget") {
    CHECK_THROWS_AS(lmn::enumerate(BoxShape{4, 4}, 69), lmn::BudgetExceededError);
    try {
        lmn::enumerate(BoxShape{4, 4}, 69);
        FAIL("expected refusal");
    } catch (const lmn::BudgetExceededError& e) {
        CHECK(e.required() == 70);
        CHECK(e.budget() == 69);
        CHECK(std::string(e.what()).find("70") != std::string::npos);
    }
    CHECK_NOTHROW(lmn::enumerate(BoxShape{4, 4}, 70));
}

TEST_CASE("rank counts match the closed form") {
    CHECK(lmn::rank_counts(BoxShape{2, 2}) == RankSequence(0, {1, 1, 2, 1, 1}));
    for (int n = 0; n <= 6; ++n)
        CHECK(lmn::rank_counts(BoxShape{1, n}) ==
              RankSequence(0, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 1)));
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            CHECK(lmn::rank_counts(BoxShape{m, n}) == lmn::gaussian(m, n));
}

TEST_CASE("gap vectors") {
    const BoxShape box{2, 2};
    CHECK(lmn::gaps(Partition(box, {1, 0})).a == std::vector<int>{1, 1, 0});
    CHECK(lmn::gaps(Partition(box, {1, 1})).a == std::vector<int>{1, 0, 1});
    CHECK(lmn::gaps(Partition(BoxShape{3, 5}, {5, 5, 5})).a == std::vector<int>{0, 0, 0, 5});

    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (const auto& p : lmn::enumerate(BoxShape{m, n})) {
                const auto a = lmn::gaps(p).a;
                CHECK(a.size() == static_cast<std::size_t>(m) + 1);
                CHECK(std::accumulate(a.begin(), a.end(), 0) == n);
                for (int g : a) CHECK(g >= 0);
            }
}

TEST_CASE("tropical evaluation on worked cases") {
    const BoxShape box{2, 2};
    CHECK(lmn::tropical_f(Partition(box, {1, 0}), 1) == 0);
    CHECK(lmn::tropical_f(Partition(box, {1, 1}), 1) == 1);
    CHECK(lmn::tropical_f(Partition(box, {2, 1}), 1) == 0);

    // The empty partition evaluates to zero for every admissible r.
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int r = 1; r <= m / 2; ++r)
                CHECK(lmn::tropical_f(Partition(BoxShape{m, n}, std::vector<int>(m, 0)), r) == 0);

    CHECK_THROWS_AS(lmn::tropical_f(Partition(box, {1, 0}), 0), std::invalid_argument);
    CHECK_THROWS_AS(lmn::tropical_f(Partition(box, {1, 0}), 2), std::invalid_argument);
}

TEST_CASE("tropical DP equals exhaustive tuple enumeration") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : lmn::enumerate(BoxShape{m, n}))
                for (int r = 1; r <= m / 2; ++r)
                    REQUIRE(lmn::tropical_f(p, r) == tropical_f_brute(p, r));
}

TEST_CASE("signatures") {
    const BoxShape box{2, 2};
    CHECK(lmn::signature(Partition(box, {1, 1})) == std::vector<long>{1});
    CHECK(lmn::signature(Partition(box, {1, 0})) == std::vector<long>{0});
    CHECK(lmn::signature(Partition(box, {2, 1})) == std::vector<long>{0});
    CHECK(lmn::signature(Partition(BoxShape{1, 3}, {2})).empty());
    CHECK(lmn::signature(Partition(BoxShape{0, 3}, {})).empty());
}
