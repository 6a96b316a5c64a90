#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmn/chains.hpp"
#include "lmn/integer.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/report.hpp"

namespace lmn {

/// Default grid bounds for the proof audit. Every scan bound is named here so
/// the audit's cost stays tunable in one place.
namespace defaults {
inline constexpr int kScanDMax = 3;
inline constexpr int kScanMMax = 20;
inline constexpr int kScanNMax = 20;
inline constexpr int kInspectionLo = 8;
inline constexpr int kInspectionHi = 11;
inline constexpr int kExtremalNMax = 60;
inline constexpr int kCount234TMax = 200;
}  // namespace defaults

/// One instance of the main claim: the rank sequence of L(m,n) rises by at
/// least d at every rank in [2d, floor(mn/2)].
struct TheoremInstance {
    int m;
    int n;
    int d;

    long r_lo() const { return 2L * d; }
    long r_hi() const { return static_cast<long>(m) * n / 2; }
};

/// Pluggable provider of Gaussian coefficients, so callers can route
/// through a cache. An empty function means "compute directly".
using GaussianFn = std::function<RankSequence(int, int)>;

namespace detail {

inline RankSequence gaussian_via(const GaussianFn& g, int m, int n) {
    return g ? g(m, n) : gaussian(m, n);
}

}  // namespace detail

/// Checks one theorem instance. May be run outside the hypothesis region
/// (m, n >= 8d) to probe sharpness; the report then records the witness.
inline VerificationReport verify_main(const TheoremInstance& inst, const GaussianFn& g = {}) {
    const std::string claim = "main-theorem(m=" + std::to_string(inst.m) +
                              ",n=" + std::to_string(inst.n) + ",d=" + std::to_string(inst.d) + ")";
    const RankSequence seq = detail::gaussian_via(g, inst.m, inst.n);
    VerificationReport inner =
        d_strict_check(seq, Integer(inst.d), inst.r_lo(), inst.r_hi());
    if (inner.passed) return VerificationReport::pass(claim, inner.cases_checked);
    std::vector<std::pair<std::string, std::string>> witness{
        {"m", std::to_string(inst.m)}, {"n", std::to_string(inst.n)},
        {"d", std::to_string(inst.d)}};
    witness.insert(witness.end(), inner.witness.begin(), inner.witness.end());
    return VerificationReport::fail(claim, inner.cases_checked, inner.message,
                                    std::move(witness));
}

/// The d = 1 cases left to inspection: the full grid 8 <= m,n <= 11.
inline VerificationReport verify_inspection_cases(const GaussianFn& g = {}) {
    const std::string claim = "inspection-cases(8<=m,n<=11,d=1)";
    std::uint64_t cases = 0;
    for (int m = defaults::kInspectionLo; m <= defaults::kInspectionHi; ++m)
        for (int n = defaults::kInspectionLo; n <= defaults::kInspectionHi; ++n) {
            ++cases;
            VerificationReport r = verify_main({m, n, 1}, g);
            if (!r.passed)
                return VerificationReport::fail(claim, cases, r.message, std::move(r.witness));
        }
    return VerificationReport::pass(claim, cases);
}

/// Grid scan of the main claim: for each d, the hypothesis region starts at
/// m = n = 8d; the grid always includes that corner even when the caller's
/// bounds stop short of it.
inline VerificationReport verify_scan(int d_max, int m_max = defaults::kScanMMax,
                                      int n_max = defaults::kScanNMax,
                                      const GaussianFn& g = {}) {
    if (d_max < 1) throw std::invalid_argument("verify_scan: d_max must be >= 1");
    const std::string claim = "main-theorem-scan(dmax=" + std::to_string(d_max) +
                              ",mmax=" + std::to_string(m_max) +
                              ",nmax=" + std::to_string(n_max) + ")";
    std::uint64_t cases = 0;
    for (int d = 1; d <= d_max; ++d) {
        const int lo = 8 * d;
        for (int m = lo; m <= std::max(m_max, lo); ++m)
            for (int n = lo; n <= std::max(n_max, lo); ++n) {
                ++cases;
                VerificationReport r = verify_main({m, n, d}, g);
                if (!r.passed)
                    return VerificationReport::fail(claim, cases, r.message,
                                                    std::move(r.witness));
            }
    }
    return VerificationReport::pass(claim, cases);
}

/// Number of three-chain pieces of L(m,n) that are strictly unimodal:
/// triples d_0, d_1, d_2 >= 1 with d_0 + 2d_1 + 3d_2 = n and
/// m d_0 <= (m-4) d_2 + 1.
inline long n3_count(int m, int n) {
    if (m <= 4) throw std::invalid_argument("n3_count: requires m >= 5");
    long count = 0;
    for (int d2 = 1; 3 * d2 <= n; ++d2)
        for (int d1 = 1; 2 * d1 + 3 * d2 < n; ++d1) {
            const int d0 = n - 2 * d1 - 3 * d2;
            if (d0 >= 1 && static_cast<long>(m) * d0 <= static_cast<long>(m - 4) * d2 + 1)
                ++count;
        }
    return count;
}

/// The two-chain piece indexed by (d_0, d_1): chain lengths, offset, and the
/// rank interval on which the ambient sequence is forced to rise strictly.
struct Step1Range {
    long len0;       // m d_0 + (m-2) d_1
    long len1;       // (m-2) d_1
    long offset;     // lowest rank, 2 d_1
    long strict_lo;  // = offset
    long strict_hi;  // m d_1
};

/// Computes the piece's chain lengths and strict range, then cross-checks
/// both against the chain-product machinery and the actual sequence.
inline Step1Range step1_piece_range(int m, int d0, int d1) {
    if (m < 2 || d0 < 1 || d1 < 1)
        throw std::invalid_argument("step1_piece_range: requires m >= 2 and d0, d1 >= 1");
    Step1Range out;
    out.len0 = static_cast<long>(m) * d0 + static_cast<long>(m - 2) * d1;
    out.len1 = static_cast<long>(m - 2) * d1;
    out.offset = 2L * d1;
    out.strict_lo = out.offset;
    out.strict_hi = static_cast<long>(m) * d1;

    const ChainProduct product({static_cast<int>(out.len0), static_cast<int>(out.len1)});
    if (out.offset + strict_prefix_bound(product) != out.strict_hi)
        throw std::logic_error("step1_piece_range: strict bound disagrees with chain formula");
    const RankSequence seq = product.rank_sequence();
    if (strict_rise_prefix(seq) < out.strict_hi - out.offset)
        throw std::logic_error("step1_piece_range: sequence rises strictly on less than the claimed range");
    return out;
}

struct Step2Triple {
    int d0, d1, d2;
};

/// The d_2-maximal positive triple with d_0 + 2d_1 + 3d_2 = n, selected by
/// n mod 3. Maximality and the closed form for max(2d_1 + 6d_2) are verified
/// by enumeration on every call.
inline Step2Triple step2_extremal(int n) {
    if (n < 6) throw std::invalid_argument("step2_extremal: no positive triple for n < 6");
    Step2Triple t{};
    switch (n % 3) {
        case 0: t = {1, 1, (n - 3) / 3}; break;
        case 1: t = {2, 1, (n - 4) / 3}; break;
        default: t = {1, 2, (n - 5) / 3}; break;
    }
    if (t.d0 + 2 * t.d1 + 3 * t.d2 != n || t.d2 < 1)
        throw std::logic_error("step2_extremal: selected triple is invalid");

    int max_d2 = 0;
    long max_low = -1;
    for (int d2 = 1; 3 * d2 <= n; ++d2)
        for (int d1 = 1; 2 * d1 + 3 * d2 < n; ++d1) {
            const int d0 = n - 2 * d1 - 3 * d2;
            if (d0 < 1) continue;
            max_d2 = std::max(max_d2, d2);
            max_low = std::max(max_low, 2L * d1 + 6L * d2);
        }
    if (t.d2 != max_d2)
        throw std::logic_error("step2_extremal: triple does not maximize d2");
    const long expected_low = (n % 3 == 0) ? 2L * n - 4 : 2L * n - 6;
    if (max_low != expected_low)
        throw std::logic_error("step2_extremal: max lowest rank does not match closed form");
    return t;
}

/// Sufficient condition for the four-chain piece to be strictly unimodal:
/// m d_0 <= (m-4) d_2 + 2(m-6) d_3. (The exact threshold sits one higher;
/// this is the stated, slightly stronger inequality.)
inline bool step4_criterion(int m, int d0, int d1, int d2, int d3) {
    if (m < 7 || d0 < 1 || d1 < 1 || d2 < 1 || d3 < 1)
        throw std::invalid_argument("step4_criterion: requires m >= 7 and all d_i >= 1");
    return static_cast<long>(m) * d0 <=
           static_cast<long>(m - 4) * d2 + 2L * (m - 6) * d3;
}

/// Chain lengths of the four-chain piece: l3 = (m-6)d3, l2 = l3 + (m-4)d2,
/// l1 = l2 + (m-2)d1, l0 = l1 + m d0.
inline std::vector<int> step4_chain_lengths(int m, int d0, int d1, int d2, int d3) {
    const int l3 = (m - 6) * d3;
    const int l2 = l3 + (m - 4) * d2;
    const int l1 = l2 + (m - 2) * d1;
    const int l0 = l1 + m * d0;
    return {l0, l1, l2, l3};
}

/// Exhaustive agreement check between the Step 4 inequality and the chain
/// lemma on the induced four-chain product. Two facts are verified cell by
/// cell: the inequality implies strict unimodality, and strict unimodality
/// is exactly m d_0 <= (m-4) d_2 + 2(m-6) d_3 + 1 (the lemma's threshold,
/// one above the stated inequality).
inline VerificationReport step4_agreement_check(int m_lo = 7, int m_hi = 16, int d_max = 4) {
    const std::string claim = "step4-agreement(m=" + std::to_string(m_lo) + ".." +
                              std::to_string(m_hi) + ",d<=" + std::to_string(d_max) + ")";
    std::uint64_t cases = 0;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int d0 = 1; d0 <= d_max; ++d0)
            for (int d1 = 1; d1 <= d_max; ++d1)
                for (int d2 = 1; d2 <= d_max; ++d2)
                    for (int d3 = 1; d3 <= d_max; ++d3) {
                        ++cases;
                        const bool stated = step4_criterion(m, d0, d1, d2, d3);
                        const bool exact_form =
                            static_cast<long>(m) * d0 <=
                            static_cast<long>(m - 4) * d2 + 2L * (m - 6) * d3 + 1;
                        const bool actual = is_strictly_unimodal_product(
                            ChainProduct(step4_chain_lengths(m, d0, d1, d2, d3)));
                        const bool ok = (!stated || actual) && (exact_form == actual);
                        if (!ok)
                            return VerificationReport::fail(
                                claim, cases, "Step 4 inequality disagrees with chain lemma",
                                {{"m", std::to_string(m)},
                                 {"d0", std::to_string(d0)},
                                 {"d1", std::to_string(d1)},
                                 {"d2", std::to_string(d2)},
                                 {"d3", std::to_string(d3)},
                                 {"stated", stated ? "true" : "false"},
                                 {"actual", actual ? "true" : "false"}});
                    }
    return VerificationReport::pass(claim, cases);
}

struct Step4Tuple {
    int d0, d1, d2, d3;
};

/// The d_3-maximal tuple (1, d_1, d_2, d_3) with 1 + 2d_1 + 3d_2 + 4d_3 = n,
/// selected by n mod 4. Maximality is verified by enumeration over the
/// d_0 = 1 family; the bound max(2d_1 + 6d_2 + 12d_3) <= 3n - 10 is verified
/// over all positive tuples.
inline Step4Tuple step4_extremal(int n) {
    if (n < 12) throw std::invalid_argument("step4_extremal: requires n >= 12");
    Step4Tuple t{};
    switch (n % 4) {
        case 0: t = {1, 2, 1, (n - 8) / 4}; break;
        case 1: t = {1, 1, 2, (n - 9) / 4}; break;
        case 2: t = {1, 1, 1, (n - 6) / 4}; break;
        default: t = {1, 2, 2, (n - 11) / 4}; break;
    }
    if (t.d0 + 2 * t.d1 + 3 * t.d2 + 4 * t.d3 != n || t.d3 < 1)
        throw std::logic_error("step4_extremal: selected tuple is invalid");

    int max_d3_with_d0_1 = 0;
    long max_low = -1;
    for (int d3 = 1; 4 * d3 < n; ++d3)
        for (int d2 = 1; 3 * d2 + 4 * d3 < n; ++d2)
            for (int d1 = 1; 2 * d1 + 3 * d2 + 4 * d3 < n; ++d1) {
                const int d0 = n - 2 * d1 - 3 * d2 - 4 * d3;
                if (d0 < 1) continue;
                if (d0 == 1) max_d3_with_d0_1 = std::max(max_d3_with_d0_1, d3);
                max_low = std::max(max_low, 2L * d1 + 6L * d2 + 12L * d3);
            }
    if (t.d3 != max_d3_with_d0_1)
        throw std::logic_error("step4_extremal: tuple does not maximize d3");
    if (max_low > 3L * n - 10)
        throw std::logic_error("step4_extremal: lowest rank exceeds 3n - 10");
    return t;
}

/// Number of nonnegative solutions of 2x + 3y + 4z = t.
inline long count_234(long t) {
    if (t < 0) throw std::invalid_argument("count_234: t must be >= 0");
    long count = 0;
    for (long z = 0; 4 * z <= t; ++z)
        for (long y = 0; 3 * y + 4 * z <= t; ++y)
            if ((t - 3 * y - 4 * z) % 2 == 0) ++count;
    return count;
}

/// The representability facts Step 4 needs: at least one solution for every
/// t >= 2 and at least two for every t >= 6 (t = n - 10).
inline VerificationReport count_234_check(long t_max = defaults::kCount234TMax) {
    const std::string claim = "count-234(t<=" + std::to_string(t_max) + ")";
    std::uint64_t cases = 0;
    for (long t = 2; t <= t_max; ++t) {
        ++cases;
        const long c = count_234(t);
        const long need = (t >= 6) ? 2 : 1;
        if (c < need)
            return VerificationReport::fail(claim, cases, "too few representations 2x+3y+4z = t",
                                            {{"t", std::to_string(t)},
                                             {"count", std::to_string(c)},
                                             {"required", std::to_string(need)}});
    }
    return VerificationReport::pass(claim, cases);
}

/// Sweeps step2_extremal over [6, n_max], converting any failed internal
/// assertion into a report with the offending n.
inline VerificationReport step2_extremal_check(int n_max = defaults::kExtremalNMax) {
    const std::string claim = "step2-extremal(n=6.." + std::to_string(n_max) + ")";
    std::uint64_t cases = 0;
    for (int n = 6; n <= n_max; ++n) {
        ++cases;
        try {
            (void)step2_extremal(n);
        } catch (const std::logic_error& e) {
            return VerificationReport::fail(claim, cases, e.what(), {{"n", std::to_string(n)}});
        }
    }
    return VerificationReport::pass(claim, cases);
}

/// Sweeps step4_extremal over [12, n_max].
inline VerificationReport step4_extremal_check(int n_max = defaults::kExtremalNMax) {
    const std::string claim = "step4-extremal(n=12.." + std::to_string(n_max) + ")";
    std::uint64_t cases = 0;
    for (int n = 12; n <= n_max; ++n) {
        ++cases;
        try {
            (void)step4_extremal(n);
        } catch (const std::logic_error& e) {
            return VerificationReport::fail(claim, cases, e.what(), {{"n", std::to_string(n)}});
        }
    }
    return VerificationReport::pass(claim, cases);
}

/// The Step 3 reduction, audited cell by cell over 1 <= d <= d_max and
/// m, n in [8d, max(bound, 8d)]:
///   (i)  m(n - 2d) >= 4n - 8            (the region reaches rank 2n - 4);
///   (ii) for d >= 3, N_3(m,n) >= d      (three-chain pieces suffice);
///   (iii) for d <= 2, mn - 2dm >= 6n - 20 (the region reaches rank 3n - 10,
///         where the four-chain pieces of Step 4 take over).
/// Cells are visited in ascending (d, m, n), so a failure report carries the
/// lexicographically smallest counterexample.
inline VerificationReport audit_step3(int d_max = defaults::kScanDMax,
                                      int m_max = defaults::kScanMMax,
                                      int n_max = defaults::kScanNMax) {
    if (d_max < 1) throw std::invalid_argument("audit_step3: d_max must be >= 1");
    const std::string claim = "step3-audit(dmax=" + std::to_string(d_max) +
                              ",mmax=" + std::to_string(m_max) +
                              ",nmax=" + std::to_string(n_max) + ")";
    std::uint64_t cases = 0;
    auto fail = [&](int d, int m, int n, const std::string& check, const std::string& msg) {
        return VerificationReport::fail(claim, cases, msg,
                                        {{"check", check},
                                         {"d", std::to_string(d)},
                                         {"m", std::to_string(m)},
                                         {"n", std::to_string(n)}});
    };
    for (int d = 1; d <= d_max; ++d) {
        const int lo = 8 * d;
        for (int m = lo; m <= std::max(m_max, lo); ++m)
            for (int n = lo; n <= std::max(n_max, lo); ++n) {
                ++cases;
                if (static_cast<long>(m) * (n - 2L * d) < 4L * n - 8)
                    return fail(d, m, n, "i", "m(n-2d) >= 4n-8 fails");
                if (d >= 3) {
                    if (n3_count(m, n) < d)
                        return fail(d, m, n, "ii", "N_3(m,n) >= d fails");
                } else {
                    if (static_cast<long>(m) * n - 2L * d * m < 6L * n - 20)
                        return fail(d, m, n, "iii", "mn - 2dm >= 6n-20 fails");
                }
            }
    }
    return VerificationReport::pass(claim, cases);
}

struct AuditOptions {
    int d_max = defaults::kScanDMax;
    int m_max = defaults::kScanMMax;
    int n_max = defaults::kScanNMax;
    int extremal_n_max = defaults::kExtremalNMax;
    long count234_t_max = defaults::kCount234TMax;
    GaussianFn gaussian = {};
};

/// The full proof audit: one report per named claim.
inline std::vector<VerificationReport> run_audit(const AuditOptions& opt = {}) {
    std::vector<VerificationReport> reports;
    reports.push_back(verify_inspection_cases(opt.gaussian));
    reports.push_back(step2_extremal_check(opt.extremal_n_max));
    reports.push_back(step4_extremal_check(opt.extremal_n_max));
    reports.push_back(step4_agreement_check());
    reports.push_back(count_234_check(opt.count234_t_max));
    reports.push_back(audit_step3(opt.d_max, opt.m_max, opt.n_max));
    return reports;
}

}  // namespace lmn
