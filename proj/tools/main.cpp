// lmn — exact rank-sequence toolkit for the partition lattice L(m,n).
//
// Subcommands: qbinom, verify, ohara, scd, audit.
// Exit codes: 0 verified / success, 1 counterexample found, 2 usage or
// resource error.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmn/box_partitions.hpp"
#include "lmn/chains.hpp"
#include "lmn/gaussian_cache.hpp"
#include "lmn/json_io.hpp"
#include "lmn/ohara.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/theorem.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct CacheFlags {
    std::string dir;
    bool disabled = false;
};

void add_cache_flags(CLI::App* cmd, CacheFlags& flags) {
    cmd->add_option("--cache-dir", flags.dir,
                    "Directory for the coefficient cache (default: $LMN_CACHE_DIR or the "
                    "per-user cache path)");
    cmd->add_flag("--no-cache", flags.disabled, "Compute everything fresh, touch no disk cache");
}

lmn::GaussianFn make_provider(const CacheFlags& flags) {
    if (flags.disabled) return {};
    const std::filesystem::path dir =
        flags.dir.empty() ? lmn::GaussianCache::default_dir() : std::filesystem::path(flags.dir);
    return lmn::GaussianCache(dir).provider();
}

void print_report_text(const lmn::VerificationReport& r, std::ostream& os) {
    os << (r.passed ? "PASS" : "FAIL") << ": " << r.claim << " (" << r.cases_checked
       << " cases)";
    if (!r.passed) {
        os << "\n  " << r.message << "\n  witness: " << lmn::to_json(r)["witness"].dump();
    }
    os << "\n";
}

int run_qbinom(int m, int n, const std::string& format, const lmn::GaussianFn& g) {
    const lmn::RankSequence seq = g ? g(m, n) : lmn::gaussian(m, n);
    if (format == "csv") {
        std::cout << "rank,count\n";
        for (std::size_t i = 0; i < seq.size(); ++i)
            std::cout << seq.offset() + static_cast<long>(i) << "," << seq[i].str() << "\n";
    } else if (format == "json") {
        lmn::Json j = lmn::Json::object();
        j["m"] = m;
        j["n"] = n;
        j["offset"] = seq.offset();
        lmn::Json coeffs = lmn::Json::array();
        for (const auto& c : seq.coeffs()) coeffs.push_back(c.str());
        j["coeffs"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::size_t rank_w = 4, count_w = 5;  // header widths
        for (std::size_t i = 0; i < seq.size(); ++i)
            count_w = std::max(count_w, seq[i].str().size());
        rank_w = std::max(rank_w, std::to_string(seq.max_rank()).size());
        std::cout << std::setw(static_cast<int>(rank_w)) << "rank" << "  "
                  << std::setw(static_cast<int>(count_w)) << "count" << "\n";
        for (std::size_t i = 0; i < seq.size(); ++i)
            std::cout << std::setw(static_cast<int>(rank_w))
                      << seq.offset() + static_cast<long>(i) << "  "
                      << std::setw(static_cast<int>(count_w)) << seq[i].str() << "\n";
    }
    return kExitVerified;
}

int run_verify(bool scan, int m, int n, int d, int dmax, int mmax, int nmax,
               const lmn::GaussianFn& g) {
    const lmn::VerificationReport report =
        scan ? lmn::verify_scan(dmax, mmax, nmax, g) : lmn::verify_main({m, n, d}, g);
    std::cout << lmn::to_json(report).dump(2) << "\n";
    return report.passed ? kExitVerified : kExitCounterexample;
}

int run_ohara(int m, int n, bool check_levelsets, const std::string& format) {
    const lmn::Decomposition dec = lmn::decompose(m, n);
    bool ok = dec.identity.passed;
    std::optional<lmn::VerificationReport> levelsets;
    if (check_levelsets) {
        levelsets = lmn::check_levelsets(m, n);
        ok = ok && levelsets->passed;
    }

    if (format == "text") {
        for (const auto& p : dec.pieces) {
            std::cout << "d=(";
            for (std::size_t i = 0; i < p.composition.d().size(); ++i)
                std::cout << (i ? "," : "") << p.composition.d()[i];
            std::cout << ") offset=" << p.seq.offset() << " coeffs=";
            for (std::size_t i = 0; i < p.seq.size(); ++i)
                std::cout << (i ? "," : "") << p.seq[i].str();
            std::cout << " signature=(";
            for (std::size_t i = 0; i < p.expected_signature.size(); ++i)
                std::cout << (i ? "," : "") << p.expected_signature[i];
            std::cout << ")\n";
        }
        print_report_text(dec.identity, std::cout);
        if (levelsets) print_report_text(*levelsets, std::cout);
    } else {
        lmn::Json j = lmn::Json::object();
        j["m"] = m;
        j["n"] = n;
        lmn::Json pieces = lmn::Json::array();
        for (const auto& p : dec.pieces) pieces.push_back(lmn::to_json(p));
        j["pieces"] = std::move(pieces);
        j["identity"] = lmn::to_json(dec.identity);
        if (levelsets) j["levelsets"] = lmn::to_json(*levelsets);
        std::cout << j.dump(2) << "\n";
    }
    return ok ? kExitVerified : kExitCounterexample;
}

std::vector<int> parse_lengths(const std::string& csv) {
    std::vector<int> lengths;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed --lengths entry: '" + token + "'");
        lengths.push_back(std::stoi(token));
    }
    if (lengths.empty()) throw std::invalid_argument("--lengths must name at least one chain");
    return lengths;
}

int run_scd(const std::string& lengths_csv, bool validate_only) {
    const lmn::ChainProduct product(parse_lengths(lengths_csv));
    const lmn::SCDecomposition dec = lmn::scd(product);
    const lmn::VerificationReport report = lmn::validate_scd(dec);

    lmn::Json j = lmn::Json::object();
    j["lengths"] = product.lengths();
    j["shortest_chain_length"] = lmn::shortest_chain_length(product);
    j["strict_prefix_bound"] = lmn::strict_prefix_bound(product);
    j["strictly_unimodal"] = lmn::is_strictly_unimodal_product(product);
    j["validation"] = lmn::to_json(report);
    if (!validate_only) {
        lmn::Json chains = lmn::Json::array();
        for (const auto& c : dec.chains) chains.push_back(lmn::to_json(c));
        j["chains"] = std::move(chains);
    }
    std::cout << j.dump(2) << "\n";
    return report.passed ? kExitVerified : kExitCounterexample;
}

int run_audit(int dmax, const std::string& format, const lmn::GaussianFn& g) {
    lmn::AuditOptions opt;
    opt.d_max = dmax;
    opt.gaussian = g;
    const std::vector<lmn::VerificationReport> reports = lmn::run_audit(opt);
    bool ok = true;
    if (format == "json") {
        lmn::Json arr = lmn::Json::array();
        for (const auto& r : reports) arr.push_back(lmn::to_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (format != "json") print_report_text(r, std::cout);
        ok = ok && r.passed;
    }
    return ok ? kExitVerified : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank-sequence toolkit for the lattice of partitions in an m x n box"};
    app.require_subcommand(1);

    // qbinom
    auto* qbinom = app.add_subcommand("qbinom", "Print the rank counts of L(m,n)");
    int qb_m = 0, qb_n = 0;
    std::string qb_format = "text";
    CacheFlags qb_cache;
    qbinom->add_option("--m", qb_m, "Number of parts bound")->required()->check(CLI::NonNegativeNumber);
    qbinom->add_option("--n", qb_n, "Part size bound")->required()->check(CLI::NonNegativeNumber);
    qbinom->add_option("--format", qb_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    add_cache_flags(qbinom, qb_cache);

    // verify
    auto* verify = app.add_subcommand("verify", "Check the d-strict rise of the rank sequence");
    int vf_m = 0, vf_n = 0, vf_d = 0;
    bool vf_scan = false;
    int vf_dmax = 0, vf_mmax = lmn::defaults::kScanMMax, vf_nmax = lmn::defaults::kScanNMax;
    CacheFlags vf_cache;
    auto* vf_m_opt = verify->add_option("--m", vf_m, "Rows")->check(CLI::PositiveNumber);
    auto* vf_n_opt = verify->add_option("--n", vf_n, "Columns")->check(CLI::PositiveNumber);
    auto* vf_d_opt = verify->add_option("--d", vf_d, "Required rise")->check(CLI::PositiveNumber);
    verify->add_flag("--scan", vf_scan, "Sweep the default grid instead of one instance");
    auto* vf_dmax_opt =
        verify->add_option("--dmax", vf_dmax, "Largest d in the scan")->check(CLI::PositiveNumber);
    verify->add_option("--mmax", vf_mmax, "Largest m in the scan")->check(CLI::PositiveNumber);
    verify->add_option("--nmax", vf_nmax, "Largest n in the scan")->check(CLI::PositiveNumber);
    add_cache_flags(verify, vf_cache);

    // ohara
    auto* ohara = app.add_subcommand("ohara", "Decompose L(m,n) into centered unimodal pieces");
    int oh_m = 0, oh_n = 0;
    bool oh_levelsets = false;
    std::string oh_format = "json";
    ohara->add_option("--m", oh_m, "Rows")->required()->check(CLI::PositiveNumber);
    ohara->add_option("--n", oh_n, "Columns")->required()->check(CLI::NonNegativeNumber);
    ohara->add_flag("--check-levelsets", oh_levelsets,
                    "Also rebuild every piece as a tropical level set by brute force");
    ohara->add_option("--format", oh_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    // scd
    auto* scd = app.add_subcommand("scd", "Symmetric chain decomposition of a chain product");
    std::string scd_lengths;
    bool scd_validate_only = false;
    scd->add_option("--lengths", scd_lengths, "Comma-separated chain lengths, e.g. 2,1,1")
        ->required();
    scd->add_flag("--validate-only", scd_validate_only, "Emit only the validation verdict");

    // audit
    auto* audit = app.add_subcommand("audit", "Run every proof-step check on its default grid");
    int au_dmax = lmn::defaults::kScanDMax;
    std::string au_format = "text";
    CacheFlags au_cache;
    audit->add_option("--dmax", au_dmax, "Largest d in the region scan")
        ->check(CLI::PositiveNumber);
    audit->add_option("--format", au_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    add_cache_flags(audit, au_cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        std::cerr << "\n" << app.help() << std::flush;
        return kExitUsage;
    }

    try {
        if (qbinom->parsed()) return run_qbinom(qb_m, qb_n, qb_format, make_provider(qb_cache));
        if (verify->parsed()) {
            const bool instance_given = *vf_m_opt || *vf_n_opt || *vf_d_opt;
            if (vf_scan == instance_given || (vf_scan && !*vf_dmax_opt) ||
                (instance_given && !(*vf_m_opt && *vf_n_opt && *vf_d_opt))) {
                std::cerr << "verify needs either --m/--n/--d or --scan --dmax\n\n"
                          << verify->help() << std::flush;
                return kExitUsage;
            }
            return run_verify(vf_scan, vf_m, vf_n, vf_d, vf_dmax, vf_mmax, vf_nmax,
                              make_provider(vf_cache));
        }
        if (ohara->parsed()) return run_ohara(oh_m, oh_n, oh_levelsets, oh_format);
        if (scd->parsed()) return run_scd(scd_lengths, scd_validate_only);
        if (audit->parsed()) return run_audit(au_dmax, au_format, make_provider(au_cache));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;  // unreachable: require_subcommand(1)
}
