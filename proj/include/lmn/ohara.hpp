#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmn/box_partitions.hpp"
#include "lmn/integer.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/report.hpp"

namespace lmn {

/// Index of one piece of the decomposition of L(m,n): a tuple (d_0,...,d_k)
/// of nonnegative integers with k = floor(m/2) and n = sum (j+1) d_j.
class Composition {
  public:
    Composition(int m, std::vector<int> d) : m_(m), d_(std::move(d)) {
        if (m_ < 1) throw std::invalid_argument("Composition: m must be >= 1");
        if (d_.size() != static_cast<std::size_t>(m_ / 2) + 1)
            throw std::invalid_argument("Composition: d must have floor(m/2)+1 entries");
        long n = 0;
        for (std::size_t j = 0; j < d_.size(); ++j) {
            if (d_[j] < 0) throw std::invalid_argument("Composition: negative entry");
            n += static_cast<long>(j + 1) * d_[j];
        }
        n_ = n;
    }

    int m() const { return m_; }
    long n() const { return n_; }
    int k() const { return m_ / 2; }
    const std::vector<int>& d() const { return d_; }

    /// Minimal rank of the piece: sum j(j+1) d_j.
    long min_rank() const {
        long s = 0;
        for (std::size_t j = 0; j < d_.size(); ++j)
            s += static_cast<long>(j) * static_cast<long>(j + 1) * d_[j];
        return s;
    }

    /// Tropical values shared by every partition in the piece:
    /// signature[r-1] = sum_{j=r}^{k} (j+1-r) d_j for 1 <= r <= k.
    std::vector<long> expected_signature() const {
        const int kk = k();
        std::vector<long> sig(static_cast<std::size_t>(kk), 0);
        for (int r = 1; r <= kk; ++r) {
            long s = 0;
            for (int j = r; j <= kk; ++j)
                s += static_cast<long>(j + 1 - r) * d_[static_cast<std::size_t>(j)];
            sig[static_cast<std::size_t>(r - 1)] = s;
        }
        return sig;
    }

    bool operator==(const Composition&) const = default;

  private:
    int m_;
    long n_;
    std::vector<int> d_;
};

/// All solutions of n = sum (j+1) d_j in nonnegative integers, each exactly
/// once, in descending lexicographic order on d (so the d_0-heavy tuple that
/// indexes the largest piece comes first).
inline std::vector<Composition> enumerate_compositions(int m, int n) {
    if (m < 1) throw std::invalid_argument("enumerate_compositions: m must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_compositions: n must be >= 0");
    const int k = m / 2;
    std::vector<Composition> out;
    std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == k) {
            if (remaining % (k + 1) == 0) {
                d[static_cast<std::size_t>(j)] = remaining / (k + 1);
                out.emplace_back(m, d);
            }
            return;
        }
        for (int v = remaining / (j + 1); v >= 0; --v) {
            d[static_cast<std::size_t>(j)] = v;
            self(self, j + 1, remaining - (j + 1) * v);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// One piece of the decomposition, positioned inside L(m,n).
struct QPiece {
    Composition composition;
    RankSequence seq;  // global offset inside L(m,n)
    long min_rank;
    std::vector<long> expected_signature;
};

namespace detail {

inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Relative (offset-0) rank sequence of Q_m(d), via the structure recursion
/// Q_m(d_0,...,d_k) = L(r, ell) x Q_{m-2r}(d_r,...,d_k) with
/// r = 1 + min{ j | d_j > 0 } and ell = sum (m-2j) d_j.
inline RankSequence q_relative_seq(int m, const std::vector<int>& d) {
    const bool all_zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
    if (all_zero) return RankSequence(0, std::vector<Integer>{1});

    int j0 = 0;
    while (d[static_cast<std::size_t>(j0)] == 0) ++j0;
    const int r = j0 + 1;
    long ell = 0;
    for (std::size_t j = 0; j < d.size(); ++j)
        ell += (static_cast<long>(m) - 2 * static_cast<long>(j)) * d[j];
    if (ell < 0 || ell > std::numeric_limits<int>::max())
        throw std::overflow_error("q_relative_seq: ell out of range");

    // Reindex the tail (d_r,...,d_k) to the arity of Q_{m-2r}. Entries beyond
    // the new length must be zero; anything else means the recursion left the
    // valid-composition regime.
    const long new_len = std::max(0L, floor_div(static_cast<long>(m) - 2 * r, 2) + 1);
    std::vector<int> tail(static_cast<std::size_t>(new_len), 0);
    for (std::size_t j = static_cast<std::size_t>(r); j < d.size(); ++j) {
        const std::size_t pos = j - static_cast<std::size_t>(r);
        if (pos < tail.size())
            tail[pos] = d[j];
        else if (d[j] != 0)
            throw std::logic_error("q_relative_seq: nonzero d beyond recursion arity");
    }
    if (m - 2 * r < 0 && !tail.empty())
        throw std::logic_error("q_relative_seq: negative arity with nonempty tail");

    return convolve(gaussian(r, static_cast<int>(ell)), q_relative_seq(m - 2 * r, tail));
}

}  // namespace detail

/// Rank sequence of the piece Q_m(d), positioned by the centering property
/// 2*offset + (length - 1) = mn and cross-checked against the minimal-rank
/// formula sum j(j+1) d_j.
inline QPiece q_rank_seq(const Composition& c) {
    const RankSequence rel = detail::q_relative_seq(c.m(), c.d());
    const long mn = static_cast<long>(c.m()) * c.n();
    const long span = static_cast<long>(rel.size()) - 1;
    if ((mn - span) % 2 != 0 || mn < span)
        throw std::logic_error("q_rank_seq: piece cannot be centered in [0, mn]");
    const long offset = (mn - span) / 2;
    if (offset != c.min_rank())
        throw std::logic_error("q_rank_seq: centering offset disagrees with min-rank formula");
    RankSequence seq(offset, rel.coeffs());
    if (!is_symmetric(seq) || !is_unimodal(seq))
        throw std::logic_error("q_rank_seq: piece is not symmetric unimodal");
    return QPiece{c, std::move(seq), offset, c.expected_signature()};
}

struct Decomposition {
    std::vector<QPiece> pieces;
    VerificationReport identity;
};

/// All pieces of L(m,n), plus a report checking that their rank sequences
/// sum exactly to the Gaussian coefficient.
inline Decomposition decompose(int m, int n) {
    const auto comps = enumerate_compositions(m, n);
    std::vector<QPiece> pieces;
    pieces.reserve(comps.size());
    for (const auto& c : comps) pieces.push_back(q_rank_seq(c));

    const std::string claim =
        "ohara-identity(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    RankSequence total = pieces.front().seq;
    for (std::size_t i = 1; i < pieces.size(); ++i) total = add(total, pieces[i].seq);
    const RankSequence expected = gaussian(m, n);

    VerificationReport report = VerificationReport::pass(claim, pieces.size());
    if (!(total == expected)) {
        long bad_rank = 0;
        const long lo = std::min(total.offset(), expected.offset());
        const long hi = std::max(total.max_rank(), expected.max_rank());
        for (long rk = lo; rk <= hi; ++rk)
            if (total.at_rank(rk) != expected.at_rank(rk)) {
                bad_rank = rk;
                break;
            }
        report = VerificationReport::fail(
            claim, pieces.size(), "piece sum differs from Gaussian coefficient",
            {{"rank", std::to_string(bad_rank)},
             {"sum", total.at_rank(bad_rank).str()},
             {"expected", expected.at_rank(bad_rank).str()}});
    }
    return Decomposition{std::move(pieces), std::move(report)};
}

/// One tropical level set, found by brute-force enumeration of the box.
struct LevelSetBucket {
    std::vector<long> signature;
    RankSequence counts;  // global offsets

    Integer partition_count() const { return counts.coefficient_sum(); }
};

/// Buckets every partition in the m x n box by its tropical signature.
/// Buckets are returned sorted by signature for determinism.
inline std::vector<LevelSetBucket> levelset_decompose(int m, int n,
                                                      long budget = kDefaultEnumerationBudget) {
    const BoxShape shape{m, n};
    std::map<std::vector<long>, std::map<long, Integer>> acc;
    for_each_partition(shape, budget, [&](const std::vector<int>& parts, long rank) {
        const Partition p(shape, parts);
        acc[signature(p)][rank] += 1;
    });
    std::vector<LevelSetBucket> out;
    out.reserve(acc.size());
    for (auto& [sig, by_rank] : acc) {
        const long lo = by_rank.begin()->first;
        const long hi = by_rank.rbegin()->first;
        std::vector<Integer> coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [rk, cnt] : by_rank) coeffs[static_cast<std::size_t>(rk - lo)] = cnt;
        out.push_back(LevelSetBucket{sig, RankSequence(lo, std::move(coeffs))});
    }
    return out;
}

namespace detail {

inline std::string format_signature(const std::vector<long>& sig) {
    std::string s = "(";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sig[i]);
    }
    return s + ")";
}

}  // namespace detail

/// Verifies that the tropical level sets are in bijection with the
/// compositions, with matching per-rank counts and a unique minimal-rank
/// element per bucket.
inline VerificationReport check_levelsets(int m, int n,
                                          long budget = kDefaultEnumerationBudget) {
    const std::string claim =
        "ohara-levelsets(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    const auto buckets = levelset_decompose(m, n, budget);
    const auto comps = enumerate_compositions(m, n);

    std::map<std::vector<long>, const LevelSetBucket*> by_sig;
    for (const auto& b : buckets) by_sig[b.signature] = &b;

    std::uint64_t cases = 0;
    for (const auto& c : comps) {
        ++cases;
        const QPiece piece = q_rank_seq(c);
        const auto it = by_sig.find(piece.expected_signature);
        if (it == by_sig.end())
            return VerificationReport::fail(
                claim, cases, "no level set carries the piece's signature",
                {{"signature", detail::format_signature(piece.expected_signature)}});
        if (!(it->second->counts == piece.seq))
            return VerificationReport::fail(
                claim, cases, "level-set rank counts differ from the piece's sequence",
                {{"signature", detail::format_signature(piece.expected_signature)}});
    }
    if (buckets.size() != comps.size())
        return VerificationReport::fail(
            claim, cases, "level sets and compositions are not in bijection",
            {{"buckets", std::to_string(buckets.size())},
             {"compositions", std::to_string(comps.size())}});
    for (const auto& b : buckets) {
        ++cases;
        if (b.counts[0] != 1)
            return VerificationReport::fail(
                claim, cases, "level set has more than one minimal-rank element",
                {{"signature", detail::format_signature(b.signature)},
                 {"count_at_min_rank", b.counts[0].str()}});
    }
    return VerificationReport::pass(claim, cases);
}

}  // namespace lmn
