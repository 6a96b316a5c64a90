#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmn/integer.hpp"
#include "lmn/report.hpp"

namespace lmn {

/// Rank-generating sequence of a ranked set: a global offset (the rank of the
/// first coefficient) plus a nonempty list of nonnegative coefficients.
///
/// Normalized form: the first and the last coefficient are nonzero; interior
/// zeros are kept. The zero sequence does not exist — constructing one throws.
/// Values are immutable after construction.
class RankSequence {
  public:
    RankSequence(long offset, std::vector<Integer> coeffs)
        : offset_(offset), coeffs_(std::move(coeffs)) {
        normalize();
    }

    /// Convenience constructor for small literal sequences.
    RankSequence(long offset, std::initializer_list<long> coeffs) : offset_(offset) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    long offset() const { return offset_; }
    std::size_t size() const { return coeffs_.size(); }
    long max_rank() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Coefficient by local index (0 = the coefficient at rank offset()).
    const Integer& operator[](std::size_t local) const { return coeffs_[local]; }

    /// Coefficient at global rank r; zero outside the support.
    Integer at_rank(long r) const {
        if (r < offset_ || r > max_rank()) return 0;
        return coeffs_[static_cast<std::size_t>(r - offset_)];
    }

    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool operator==(const RankSequence&) const = default;

  private:
    void normalize() {
        for (const auto& c : coeffs_)
            if (c < 0) throw std::invalid_argument("RankSequence: negative coefficient");
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const Integer& c) { return c != 0; });
        if (first == coeffs_.end())
            throw std::invalid_argument("RankSequence: the zero sequence is forbidden");
        auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                                 [](const Integer& c) { return c != 0; });
        offset_ += static_cast<long>(first - coeffs_.begin());
        coeffs_.erase(last.base(), coeffs_.end());
        coeffs_.erase(coeffs_.begin(), first);
        if (offset_ < 0)
            throw std::invalid_argument("RankSequence: negative offset after normalization");
    }

    long offset_;
    std::vector<Integer> coeffs_;
};

/// Rank sizes p_r of the lattice of partitions in an m x n box, r = 0..mn.
/// Computed by the Pascal-type recurrence
///     G(j,i) = G(j-1,i) + q^j * G(j,i-1),   G(0,i) = G(j,0) = 1,
/// exact by construction. Coefficients sum to C(m+n, m) and the sequence is
/// symmetric about mn/2.
inline RankSequence gaussian(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("gaussian: m, n must be nonnegative");
    std::vector<std::vector<Integer>> prev(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<Integer>> cur(static_cast<std::size_t>(n) + 1);
    for (auto& row : prev) row = {Integer(1)};
    for (int j = 1; j <= m; ++j) {
        cur[0] = {Integer(1)};
        for (int i = 1; i <= n; ++i) {
            std::vector<Integer> c(static_cast<std::size_t>(j) * i + 1, Integer(0));
            const auto& above = prev[static_cast<std::size_t>(i)];
            for (std::size_t t = 0; t < above.size(); ++t) c[t] += above[t];
            const auto& left = cur[static_cast<std::size_t>(i) - 1];
            for (std::size_t t = 0; t < left.size(); ++t) c[t + static_cast<std::size_t>(j)] += left[t];
            cur[static_cast<std::size_t>(i)] = std::move(c);
        }
        std::swap(prev, cur);
    }
    return RankSequence(0, std::move(prev[static_cast<std::size_t>(n)]));
}

/// Full discrete convolution; offsets add. The rank sequence of a product of
/// ranked sets.
inline RankSequence convolve(const RankSequence& a, const RankSequence& b) {
    std::vector<Integer> c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return RankSequence(a.offset() + b.offset(), std::move(c));
}

/// Rank sizes of the chain product [a_1] x ... x [a_k]: the convolution of the
/// all-ones sequences of lengths a_i + 1. Offset 0, symmetric.
inline RankSequence chain_product_seq(std::span<const int> lengths) {
    RankSequence acc(0, {1});
    for (int a : lengths) {
        if (a < 0) throw std::invalid_argument("chain_product_seq: negative chain length");
        acc = convolve(acc, RankSequence(0, std::vector<Integer>(static_cast<std::size_t>(a) + 1,
                                                                 Integer(1))));
    }
    return acc;
}

inline RankSequence chain_product_seq(std::initializer_list<int> lengths) {
    return chain_product_seq(std::span<const int>(lengths.begin(), lengths.size()));
}

/// Pointwise sum in global rank coordinates (disjoint union of ranked sets).
/// A gap between supports is filled with explicit interior zeros.
inline RankSequence add(const RankSequence& a, const RankSequence& b) {
    const long lo = std::min(a.offset(), b.offset());
    const long hi = std::max(a.max_rank(), b.max_rank());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo) + 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[static_cast<std::size_t>(a.offset() - lo) + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[static_cast<std::size_t>(b.offset() - lo) + i] += b[i];
    return RankSequence(lo, std::move(c));
}

inline bool is_symmetric(const RankSequence& a) {
    const auto& c = a.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
        if (c[i] != c[j]) return false;
    return true;
}

inline bool is_unimodal(const RankSequence& a) {
    const auto& c = a.coeffs();
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    return i + 1 == c.size();
}

/// Largest s such that the coefficients strictly increase over local indices
/// 0..s (s = 0 when the first step is not a strict rise).
inline long strict_rise_prefix(const RankSequence& a) {
    const auto& c = a.coeffs();
    long s = 0;
    while (static_cast<std::size_t>(s) + 1 < c.size() &&
           c[static_cast<std::size_t>(s)] < c[static_cast<std::size_t>(s) + 1])
        ++s;
    return s;
}

/// Strict unimodality for a symmetric sequence: coefficients strictly
/// increase from the lowest rank through the middle.
inline bool is_strictly_unimodal(const RankSequence& a) {
    const long span = static_cast<long>(a.size()) - 1;
    return is_symmetric(a) && strict_rise_prefix(a) == span / 2;
}

/// Checks coeff(r) - coeff(r-1) >= d for every global rank r in [lo, hi].
/// An empty range [lo, hi] with lo > hi passes vacuously. On failure the
/// witness carries the smallest violating rank and the observed difference.
inline VerificationReport d_strict_check(const RankSequence& a, const Integer& d, long lo,
                                         long hi) {
    const std::string claim =
        "d-strict-rise(d=" + d.str() + ",lo=" + std::to_string(lo) + ",hi=" + std::to_string(hi) + ")";
    if (lo > hi) return VerificationReport::pass(claim, 0);
    if (lo < a.offset() + 1 || hi > a.max_rank())
        throw std::invalid_argument("d_strict_check: range [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] outside support");
    std::uint64_t cases = 0;
    for (long r = lo; r <= hi; ++r) {
        ++cases;
        Integer diff = a.at_rank(r) - a.at_rank(r - 1);
        if (diff < d) {
            return VerificationReport::fail(
                claim, cases,
                "rank " + std::to_string(r) + " rises by " + diff.str() + " < " + d.str(),
                {{"r", std::to_string(r)},
                 {"p_r", a.at_rank(r).str()},
                 {"p_r_minus_1", a.at_rank(r - 1).str()},
                 {"difference", diff.str()},
                 {"required", d.str()}});
        }
    }
    return VerificationReport::pass(claim, cases);
}

}  // namespace lmn
