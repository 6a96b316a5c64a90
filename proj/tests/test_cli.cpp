#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

using Json = nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const std::string& cli_path() {
    static const std::string path = [] {
        const char* p = std::getenv("LMN_CLI_PATH");
        REQUIRE(p != nullptr);
        return std::string(p);
    }();
    return path;
}

/// Fresh directory under the system temp path, removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static unsigned counter = 0;
        path = fs::temp_directory_path() /
               ("lmn-cli-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

/// Runs the CLI with the given arguments and an isolated cache directory.
RunResult run(const std::string& args, const fs::path& cache_dir) {
    static unsigned run_counter = 0;
    const fs::path err_file = cache_dir / ("stderr-" + std::to_string(run_counter++) + ".txt");
    const std::string cmd = "LMN_CACHE_DIR=" + quoted(cache_dir.string()) + " " +
                            quoted(cli_path()) + " " + args + " 2>" + quoted(err_file.string());
    RunResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = ::pclose(pipe);
    REQUIRE(status != -1);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    std::stringstream ss;
    ss << err.rdbuf();
    result.err = ss.str();
    std::error_code ec;
    fs::remove(err_file, ec);
    return result;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

}  // namespace

TEST_CASE("qbinom csv") {
    TempDir tmp;
    const RunResult r = run("qbinom --m 2 --n 2 --format csv", tmp.path);
    CHECK(r.code == 0);
    CHECK(r.out == "rank,count\n0,1\n1,1\n2,2\n3,1\n4,1\n");
    CHECK(r.err.empty());

    const RunResult degenerate = run("qbinom --m 0 --n 0 --format csv", tmp.path);
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out == "rank,count\n0,1\n");
}

TEST_CASE("qbinom text alignment") {
    TempDir tmp;
    const RunResult r = run("qbinom --m 1 --n 1", tmp.path);
    CHECK(r.code == 0);
    CHECK(r.out == "rank  count\n   0      1\n   1      1\n");
}

TEST_CASE("qbinom csv totals") {
    TempDir tmp;
    const RunResult r = run("qbinom --m 4 --n 4 --format csv", tmp.path);
    CHECK(r.code == 0);
    long rows = 0, sum = 0;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "rank,count");
    while (std::getline(in, line)) {
        ++rows;
        sum += std::stol(line.substr(line.find(',') + 1));
    }
    CHECK(rows == 17);
    CHECK(sum == 70);
}

TEST_CASE("qbinom json and cache determinism") {
    TempDir tmp;
    const std::string args = "qbinom --m 6 --n 6 --format json";
    const RunResult cold = run(args, tmp.path);
    CHECK(cold.code == 0);
    const Json j = Json::parse(cold.out);
    CHECK(j["m"] == 6);
    CHECK(j["n"] == 6);
    CHECK(j["offset"] == 0);
    CHECK(j["coeffs"].size() == 37);
    CHECK(j["coeffs"][18] == "58");  // middle coefficient of the (6,6) table

    CHECK(fs::exists(tmp.path / "qbinom-6-6.json"));
    const RunResult warm = run(args, tmp.path);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);
}

TEST_CASE("qbinom recovers from a corrupted cache entry") {
    TempDir tmp;
    const std::string args = "qbinom --m 8 --n 8 --format json";
    const RunResult first = run(args, tmp.path);
    CHECK(first.code == 0);

    const fs::path entry = tmp.path / "qbinom-8-8.json";
    REQUIRE(fs::exists(entry));
    std::ofstream(entry) << "garbage, not a cache entry";

    const RunResult second = run(args, tmp.path);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    // The damaged entry was rewritten with a valid table.
    std::ifstream in(entry);
    const Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    REQUIRE_FALSE(doc.is_discarded());
    CHECK(doc["format_version"] == 1);
    CHECK(doc["coeffs"].size() == 65);
}

TEST_CASE("no-cache runs touch no disk") {
    TempDir tmp;
    const RunResult r = run("qbinom --m 5 --n 5 --format csv --no-cache", tmp.path);
    CHECK(r.code == 0);
    // The env-provided cache dir exists (we made it), but no entry was written.
    CHECK_FALSE(fs::exists(tmp.path / "qbinom-5-5.json"));
}

TEST_CASE("usage errors exit with 2") {
    TempDir tmp;

    const RunResult missing = run("qbinom --n 2", tmp.path);
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());

    const RunResult negative = run("qbinom --m -1 --n 2", tmp.path);
    CHECK(negative.code == 2);

    const RunResult bad_format = run("qbinom --m 2 --n 2 --format yaml", tmp.path);
    CHECK(bad_format.code == 2);

    const RunResult unknown = run("frobnicate", tmp.path);
    CHECK(unknown.code == 2);

    const RunResult none = run("", tmp.path);
    CHECK(none.code == 2);

    const RunResult help = run("--help", tmp.path);
    CHECK(help.code == 0);
    CHECK(help.out.find("qbinom") != std::string::npos);
}

TEST_CASE("verify single instance") {
    TempDir tmp;
    const RunResult pass = run("verify --m 8 --n 8 --d 1", tmp.path);
    CHECK(pass.code == 0);
    const Json jp = Json::parse(pass.out);
    CHECK(jp["outcome"] == "pass");

    const RunResult fail = run("verify --m 4 --n 4 --d 1", tmp.path);
    CHECK(fail.code == 1);
    const Json jf = Json::parse(fail.out);
    CHECK(jf["outcome"] == "fail");
    CHECK(jf["witness"]["r"] == "5");
    CHECK(jf["witness"]["difference"] == "0");
}

TEST_CASE("verify scan") {
    TempDir tmp;
    const RunResult r = run("verify --scan --dmax 1 --mmax 9 --nmax 9", tmp.path);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["outcome"] == "pass");
    CHECK(j["cases_checked"] == 4);
}

TEST_CASE("verify flag combinations are policed") {
    TempDir tmp;
    for (const std::string args :
         {"verify --m 8 --n 8", "verify --scan", "verify --scan --dmax 1 --m 8 --n 8 --d 1",
          "verify"}) {
        const RunResult r = run(args, tmp.path);
        INFO(args);
        CHECK(r.code == 2);
        CHECK(r.err.find("verify needs either") != std::string::npos);
    }
}

TEST_CASE("ohara decomposition output") {
    TempDir tmp;
    const RunResult r = run("ohara --m 2 --n 2", tmp.path);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j["pieces"].size() == 2);
    CHECK(j["pieces"][0]["d"] == Json::array({2, 0}));
    CHECK(j["pieces"][0]["offset"] == 0);
    CHECK(j["pieces"][0]["coeffs"].size() == 5);
    CHECK(j["pieces"][1]["d"] == Json::array({0, 1}));
    CHECK(j["pieces"][1]["offset"] == 2);
    CHECK(j["identity"]["outcome"] == "pass");
    CHECK_FALSE(j.contains("levelsets"));

    const RunResult single = run("ohara --m 1 --n 5", tmp.path);
    CHECK(single.code == 0);
    const Json js = Json::parse(single.out);
    REQUIRE(js["pieces"].size() == 1);
    CHECK(js["pieces"][0]["coeffs"] == Json::array({"1", "1", "1", "1", "1", "1"}));
}

TEST_CASE("ohara level-set check") {
    TempDir tmp;
    const RunResult r = run("ohara --m 4 --n 4 --check-levelsets", tmp.path);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["levelsets"]["outcome"] == "pass");

    const RunResult text = run("ohara --m 2 --n 2 --format text", tmp.path);
    CHECK(text.code == 0);
    CHECK(text.out.find("d=(2,0) offset=0 coeffs=1,1,1,1,1") != std::string::npos);
    CHECK(count_lines_with(text.out, "PASS:") == 1);
}

TEST_CASE("ohara refuses oversized brute-force requests") {
    TempDir tmp;
    const RunResult r = run("ohara --m 15 --n 15 --check-levelsets", tmp.path);
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("scd construction and validation") {
    TempDir tmp;
    const RunResult r = run("scd --lengths 2,1,1", tmp.path);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["lengths"] == Json::array({2, 1, 1}));
    CHECK(j["shortest_chain_length"] == 0);
    CHECK(j["strict_prefix_bound"] == 2);
    CHECK(j["strictly_unimodal"] == true);
    CHECK(j["validation"]["outcome"] == "pass");
    CHECK(j["chains"].size() == 4);

    const RunResult skew = run("scd --lengths 3,1", tmp.path);
    CHECK(skew.code == 0);
    const Json jskew = Json::parse(skew.out);
    CHECK(jskew["shortest_chain_length"] == 2);
    CHECK(jskew["strictly_unimodal"] == false);
    CHECK(jskew["validation"]["outcome"] == "pass");

    const RunResult single = run("scd --lengths 5 --validate-only", tmp.path);
    CHECK(single.code == 0);
    const Json jsingle = Json::parse(single.out);
    CHECK(jsingle["shortest_chain_length"] == 5);
    CHECK_FALSE(jsingle.contains("chains"));
}

TEST_CASE("scd rejects malformed lengths") {
    TempDir tmp;
    for (const std::string args :
         {"scd --lengths 2,x", "scd --lengths 2,,1", "scd --lengths -3", "scd --lengths="}) {
        const RunResult r = run(args, tmp.path);
        INFO(args);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("audit runs every check") {
    TempDir tmp;
    const RunResult r = run("audit", tmp.path);
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, "PASS:") == 6);
    CHECK(count_lines_with(r.out, "FAIL:") == 0);
    // The region scan inside the audit warmed the cache through the corner.
    CHECK(fs::exists(tmp.path / "qbinom-11-11.json"));

    const RunResult json_run = run("audit --format json", tmp.path);
    CHECK(json_run.code == 0);
    const Json arr = Json::parse(json_run.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 6);
    for (const auto& rep : arr) CHECK(rep["outcome"] == "pass");
}

TEST_CASE("cache-dir flag overrides the environment") {
    TempDir env_dir;
    TempDir flag_dir;
    const RunResult r = run(
        "qbinom --m 3 --n 3 --format csv --cache-dir " + quoted(flag_dir.path.string()),
        env_dir.path);
    CHECK(r.code == 0);
    CHECK(fs::exists(flag_dir.path / "qbinom-3-3.json"));
    CHECK_FALSE(fs::exists(env_dir.path / "qbinom-3-3.json"));
}
