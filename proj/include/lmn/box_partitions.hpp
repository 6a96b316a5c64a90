#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmn/integer.hpp"
#include "lmn/rank_sequence.hpp"

namespace lmn {

/// Exhaustive enumeration refuses to start when the element count exceeds the
/// budget; it never truncates silently.
inline constexpr long kDefaultEnumerationBudget = 5'000'000;

class BudgetExceededError : public std::runtime_error {
  public:
    BudgetExceededError(Integer required, long budget)
        : std::runtime_error("enumeration budget exceeded: requires " + required.str() +
                             " elements, budget is " + std::to_string(budget)),
          required_(std::move(required)),
          budget_(budget) {}

    const Integer& required() const { return required_; }
    long budget() const { return budget_; }

  private:
    Integer required_;
    long budget_;
};

/// An m x n box: partitions with at most m parts, each part at most n.
struct BoxShape {
    int m = 0;
    int n = 0;

    /// Number of partitions in the box, C(m+n, m).
    Integer element_count() const { return binomial(m + n, m); }

    bool operator==(const BoxShape&) const = default;
};

/// A partition boxed in its shape: exactly m weakly decreasing parts in
/// [0, n], trailing zeros explicit.
class Partition {
  public:
    Partition(BoxShape shape, std::vector<int> parts) : shape_(shape), parts_(std::move(parts)) {
        if (static_cast<int>(parts_.size()) != shape_.m)
            throw std::invalid_argument("Partition: expected exactly m parts");
        int prev = shape_.n;
        for (int p : parts_) {
            if (p < 0 || p > prev)
                throw std::invalid_argument("Partition: parts must weakly decrease within [0, n]");
            prev = p;
        }
    }

    const BoxShape& shape() const { return shape_; }
    const std::vector<int>& parts() const { return parts_; }
    long rank() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool operator==(const Partition&) const = default;

  private:
    BoxShape shape_;
    std::vector<int> parts_;
};

/// Successive differences a_i = lambda_i - lambda_{i+1} with the boundary
/// convention lambda_0 = n, lambda_{m+1} = 0; m+1 entries summing to n.
struct GapVector {
    std::vector<int> a;
};

inline GapVector gaps(const Partition& p) {
    const auto& parts = p.parts();
    const int m = p.shape().m;
    std::vector<int> a(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        const int hi = (i == 0) ? p.shape().n : parts[static_cast<std::size_t>(i) - 1];
        const int lo = (i == m) ? 0 : parts[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(i)] = hi - lo;
    }
    return GapVector{std::move(a)};
}

inline void check_enumeration_budget(BoxShape shape, long budget) {
    Integer required = shape.element_count();
    if (required > budget) throw BudgetExceededError(std::move(required), budget);
}

/// Visits every partition of the box exactly once, in lexicographic order on
/// the parts vector. fn receives (parts, rank); the parts buffer is reused
/// between calls.
template <class Fn>
void for_each_partition(BoxShape shape, long budget, Fn&& fn) {
    check_enumeration_budget(shape, budget);
    std::vector<int> parts(static_cast<std::size_t>(shape.m), 0);
    long rank = 0;
    for (;;) {
        fn(static_cast<const std::vector<int>&>(parts), rank);
        int i = shape.m - 1;
        while (i >= 0) {
            const int limit = (i == 0) ? shape.n : parts[static_cast<std::size_t>(i) - 1];
            if (parts[static_cast<std::size_t>(i)] < limit) break;
            --i;
        }
        if (i < 0) return;
        ++parts[static_cast<std::size_t>(i)];
        ++rank;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < parts.size(); ++j) {
            rank -= parts[j];
            parts[j] = 0;
        }
    }
}

/// Materialized enumeration, same order as for_each_partition.
inline std::vector<Partition> enumerate(BoxShape shape, long budget = kDefaultEnumerationBudget) {
    std::vector<Partition> out;
    for_each_partition(shape, budget,
                       [&](const std::vector<int>& parts, long) { out.emplace_back(shape, parts); });
    return out;
}

/// Brute-force rank counts: coefficient at r = number of partitions of size r
/// in the box. The independent oracle for gaussian(m, n).
inline RankSequence rank_counts(BoxShape shape, long budget = kDefaultEnumerationBudget) {
    std::vector<Integer> counts(static_cast<std::size_t>(shape.m) * shape.n + 1, Integer(0));
    for_each_partition(shape, budget, [&](const std::vector<int>&, long rank) {
        ++counts[static_cast<std::size_t>(rank)];
    });
    return RankSequence(0, std::move(counts));
}

/// Tropical polynomial value
///     f_{m,r}(lambda) = min over 0 <= t_0 <= ... <= t_{m-2r} <= r
///                       of sum_j a_{2 t_j + j},
/// computed by dynamic programming over (j, t) with an incrementally
/// maintained prefix minimum; O(m * r) time.
inline long tropical_f(const Partition& p, int r) {
    const int m = p.shape().m;
    if (r < 1 || r > m / 2)
        throw std::invalid_argument("tropical_f: r must satisfy 1 <= r <= floor(m/2)");
    const std::vector<int> a = gaps(p).a;
    const int last = m - 2 * r;  // index tuple is (t_0, ..., t_last)
    std::vector<long> best(static_cast<std::size_t>(r) + 1);
    for (int t = 0; t <= r; ++t) best[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(2 * t)];
    for (int j = 1; j <= last; ++j) {
        long prefix_min = std::numeric_limits<long>::max();
        for (int t = 0; t <= r; ++t) {
            prefix_min = std::min(prefix_min, best[static_cast<std::size_t>(t)]);
            best[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(2 * t + j)] + prefix_min;
        }
    }
    return *std::min_element(best.begin(), best.end());
}

/// The vector (f_{m,1}, ..., f_{m,k}), k = floor(m/2); empty for m <= 1.
/// Constant on each piece of the box decomposition, distinct across pieces.
inline std::vector<long> signature(const Partition& p) {
    const int k = p.shape().m / 2;
    std::vector<long> sig;
    sig.reserve(static_cast<std::size_t>(k));
    for (int r = 1; r <= k; ++r) sig.push_back(tropical_f(p, r));
    return sig;
}

}  // namespace lmn
