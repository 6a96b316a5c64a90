#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmn/integer.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/report.hpp"

namespace lmn {

/// A product of chains [a_1] x ... x [a_n], lengths stored sorted descending.
/// Degenerate zero-length factors are retained.
class ChainProduct {
  public:
    explicit ChainProduct(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        for (int a : lengths_)
            if (a < 0) throw std::invalid_argument("ChainProduct: negative chain length");
        std::sort(lengths_.begin(), lengths_.end(), std::greater<int>());
    }

    const std::vector<int>& lengths() const { return lengths_; }
    std::size_t factors() const { return lengths_.size(); }

    /// Top rank, sum of the a_i.
    long total_rank() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0L); }

    /// Number of lattice points, prod (a_i + 1).
    Integer element_count() const {
        Integer c = 1;
        for (int a : lengths_) c *= a + 1;
        return c;
    }

    RankSequence rank_sequence() const { return chain_product_seq(lengths_); }

    bool operator==(const ChainProduct&) const = default;

  private:
    std::vector<int> lengths_;
};

/// A lattice point of a chain product.
using ChainElement = std::vector<int>;

inline long element_rank(const ChainElement& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

/// A saturated rank path: consecutive elements differ by +1 in exactly one
/// coordinate. Construction does not validate (validate_scd is the checker,
/// and negative test cases need broken chains).
class Chain {
  public:
    explicit Chain(std::vector<ChainElement> elements) : elements_(std::move(elements)) {}

    const std::vector<ChainElement>& elements() const { return elements_; }
    /// Number of steps; a chain of length a has a+1 elements.
    long length() const { return static_cast<long>(elements_.size()) - 1; }
    long lowest_rank() const { return element_rank(elements_.front()); }
    long highest_rank() const { return element_rank(elements_.back()); }

    bool operator==(const Chain&) const = default;

  private:
    std::vector<ChainElement> elements_;
};

struct SCDecomposition {
    ChainProduct product;
    std::vector<Chain> chains;
};

namespace detail {

/// Hook chains of [a] x [b] for a >= b: chain i walks row y = i from x = 0 to
/// x = a-i, then column x = a-i up to y = b. Chain i has length a+b-2i and
/// lowest rank i.
inline std::vector<std::vector<std::pair<int, int>>> hook_chain_pairs(int a, int b) {
    std::vector<std::vector<std::pair<int, int>>> chains;
    chains.reserve(static_cast<std::size_t>(b) + 1);
    for (int i = 0; i <= b; ++i) {
        std::vector<std::pair<int, int>> c;
        c.reserve(static_cast<std::size_t>(a + b - 2 * i) + 1);
        for (int x = 0; x <= a - i; ++x) c.emplace_back(x, i);
        for (int y = i + 1; y <= b; ++y) c.emplace_back(a - i, y);
        chains.push_back(std::move(c));
    }
    return chains;
}

/// Recursive construction: decompose the tail product, then split each
/// [a_1] x D' via the two-chain decomposition, orienting the longer factor
/// first.
inline std::vector<std::vector<ChainElement>> scd_chains(std::span<const int> lengths) {
    if (lengths.empty()) return {{ChainElement{}}};
    const int a1 = lengths[0];
    const auto rest = scd_chains(lengths.subspan(1));
    std::vector<std::vector<ChainElement>> out;
    for (const auto& d : rest) {
        const int tail_len = static_cast<int>(d.size()) - 1;
        const bool first_is_longer = a1 >= tail_len;
        const auto pieces = first_is_longer ? hook_chain_pairs(a1, tail_len)
                                            : hook_chain_pairs(tail_len, a1);
        for (const auto& piece : pieces) {
            std::vector<ChainElement> chain;
            chain.reserve(piece.size());
            for (const auto& [u, v] : piece) {
                const int x = first_is_longer ? u : v;  // coordinate in [a_1]
                const int j = first_is_longer ? v : u;  // position along D'
                ChainElement e;
                e.reserve(d[static_cast<std::size_t>(j)].size() + 1);
                e.push_back(x);
                const auto& tail = d[static_cast<std::size_t>(j)];
                e.insert(e.end(), tail.begin(), tail.end());
                chain.push_back(std::move(e));
            }
            out.push_back(std::move(chain));
        }
    }
    return out;
}

inline void sort_chains(std::vector<Chain>& chains) {
    std::sort(chains.begin(), chains.end(), [](const Chain& x, const Chain& y) {
        const long rx = x.lowest_rank(), ry = y.lowest_rank();
        if (rx != ry) return rx < ry;
        return x.elements().front() < y.elements().front();
    });
}

}  // namespace detail

/// Canonical symmetric chain decomposition of [a] x [b], a >= b >= 0:
/// b+1 hook chains, chain i of length a+b-2i with lowest rank i.
inline SCDecomposition scd_two(int a, int b) {
    if (b < 0 || a < b)
        throw std::invalid_argument("scd_two: requires a >= b >= 0 (caller must orient)");
    std::vector<Chain> chains;
    for (const auto& piece : detail::hook_chain_pairs(a, b)) {
        std::vector<ChainElement> elems;
        elems.reserve(piece.size());
        for (const auto& [x, y] : piece) elems.push_back({x, y});
        chains.emplace_back(std::move(elems));
    }
    return SCDecomposition{ChainProduct({a, b}), std::move(chains)};
}

/// Symmetric chain decomposition of an arbitrary chain product. Chains are
/// emitted sorted by (lowest rank, lexicographic first element) so outputs
/// are deterministic and diffable.
inline SCDecomposition scd(const ChainProduct& p) {
    std::vector<Chain> chains;
    for (auto& elems : detail::scd_chains(p.lengths())) chains.emplace_back(std::move(elems));
    detail::sort_chains(chains);
    return SCDecomposition{p, std::move(chains)};
}

namespace detail {

inline std::string format_element(const ChainElement& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

}  // namespace detail

/// Checks saturation, symmetry, chain-length parity, disjointness, and
/// coverage; reports the first violation with the offending element.
inline VerificationReport validate_scd(const SCDecomposition& d) {
    std::string claim = "scd-valid(lengths=";
    for (std::size_t i = 0; i < d.product.lengths().size(); ++i) {
        if (i) claim += ",";
        claim += std::to_string(d.product.lengths()[i]);
    }
    claim += ")";

    const auto& lengths = d.product.lengths();
    const long total = d.product.total_rank();
    std::uint64_t elements_seen = 0;

    auto fail = [&](const std::string& check, std::size_t chain_idx, const ChainElement* elem,
                    const std::string& msg) {
        std::vector<std::pair<std::string, std::string>> w{
            {"check", check}, {"chain", std::to_string(chain_idx)}};
        if (elem) w.emplace_back("element", detail::format_element(*elem));
        return VerificationReport::fail(claim, elements_seen, msg, std::move(w));
    };

    for (std::size_t ci = 0; ci < d.chains.size(); ++ci) {
        const auto& elems = d.chains[ci].elements();
        if (elems.empty()) return fail("nonempty", ci, nullptr, "chain has no elements");
        for (const auto& e : elems) {
            ++elements_seen;
            if (e.size() != lengths.size())
                return fail("dimension", ci, &e, "element has wrong arity");
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] < 0 || e[i] > lengths[i])
                    return fail("bounds", ci, &e, "coordinate outside its chain");
        }
        for (std::size_t pos = 1; pos < elems.size(); ++pos) {
            int bumped = 0;
            bool ok = true;
            for (std::size_t i = 0; i < elems[pos].size(); ++i) {
                const int delta = elems[pos][i] - elems[pos - 1][i];
                if (delta == 1)
                    ++bumped;
                else if (delta != 0)
                    ok = false;
            }
            if (!ok || bumped != 1)
                return fail("saturation", ci, &elems[pos],
                            "consecutive elements must differ by +1 in exactly one coordinate");
        }
        const Chain& c = d.chains[ci];
        if (c.lowest_rank() + c.highest_rank() != total)
            return fail("symmetry", ci, &elems.front(),
                        "min rank + max rank = " +
                            std::to_string(c.lowest_rank() + c.highest_rank()) + ", expected " +
                            std::to_string(total));
        // follows from symmetry; checked as a derived property
        if ((c.length() - total) % 2 != 0)
            return fail("parity", ci, &elems.front(), "chain length parity differs from total rank");
    }

    std::vector<const ChainElement*> all;
    all.reserve(elements_seen);
    for (const auto& c : d.chains)
        for (const auto& e : c.elements()) all.push_back(&e);
    std::sort(all.begin(), all.end(),
              [](const ChainElement* x, const ChainElement* y) { return *x < *y; });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (*all[i] == *all[i - 1])
            return fail("disjointness", 0, all[i], "element appears in two chains");
    if (Integer(all.size()) != d.product.element_count())
        return VerificationReport::fail(
            claim, elements_seen,
            "covered " + std::to_string(all.size()) + " of " + d.product.element_count().str() +
                " elements",
            {{"check", "coverage"}, {"covered", std::to_string(all.size())},
             {"expected", d.product.element_count().str()}});

    return VerificationReport::pass(claim, elements_seen);
}

/// Length of a shortest chain in any SCD of the product:
/// max(a_1 - (a_2 + ... + a_n), eps) with eps = (sum a_i) mod 2.
inline long shortest_chain_length(const ChainProduct& p) {
    if (p.lengths().empty()) return 0;
    const long a1 = p.lengths()[0];
    const long rest = p.total_rank() - a1;
    const long eps = p.total_rank() % 2;
    return std::max(a1 - rest, eps);
}

/// Lowest rank of a shortest symmetric chain; the product's rank sequence is
/// strictly unimodal from rank 0 through this rank.
inline long strict_prefix_bound(const ChainProduct& p) {
    return (p.total_rank() - shortest_chain_length(p)) / 2;
}

/// The product is strictly unimodal iff a_1 <= a_2 + ... + a_n + 1.
inline bool is_strictly_unimodal_product(const ChainProduct& p) {
    if (p.lengths().empty()) return true;
    const long a1 = p.lengths()[0];
    return a1 <= p.total_rank() - a1 + 1;
}

}  // namespace lmn
