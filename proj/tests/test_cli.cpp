#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using minrank::testing::data_path;

namespace {

struct Result {
    int status = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, bool with_data = true) {
    args.insert(args.begin(), "minrank");
    if (with_data && args.size() > 1) {
        const std::vector<std::pair<std::string, std::string>> defaults{{"--atlas-file", data_path("atlas.g6")},
                                                                        {"--fixtures", data_path("table1.tsv")},
                                                                        {"--forbidden", data_path("forbidden_mr2.g6")}};
        for (const auto& [flag, path] : defaults) {
            if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
            args.push_back(flag);
            args.push_back(path);
        }
    }
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.status = minrank::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("minrank_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

int count_lines(const std::string& s, char skip = '#') {
    std::istringstream in(s);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != skip) ++n;
    return n;
}

const char* kK3Witness =
    "atlas 7\n"
    "n 3\n"
    "1 1 1\n"
    "1 1 1\n"
    "1 1 1\n";

}  // namespace

TEST_CASE("bounds") {
    const Result r = run({"bounds", "--atlas", "52"});
    CHECK(r.status == 0);
    CHECK(r.out.find("52\t5\t10\t1\t1\t1\tT") != std::string::npos);

    const Result j = run({"bounds", "--graph6", "A_", "--json"});
    CHECK(j.status == 0);
    CHECK(j.out.find("\"lb\": 1") != std::string::npos);

    CHECK(run({"bounds", "--atlas", "99999"}).status == 2);
    CHECK(run({"bounds", "--graph6", "A_!"}).status == 2);
    CHECK(run({"bounds"}).status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}, false).status == 2);
    CHECK(run({"frobnicate"}, false).status == 2);
    CHECK(run({"--help"}, false).status == 0);
}

TEST_CASE("table") {
    const Result a = run({"table", "--jobs", "2"});
    REQUIRE(a.status == 0);
    CHECK(count_lines(a.out) == 1253);  // header plus every graph
    const fs::path out = fs::temp_directory_path() / "minrank_cli_table.tsv";
    CHECK(run({"table", "--jobs", "1", "--out", out.string()}).status == 0);
    CHECK(slurp(out) == a.out);
    fs::remove(out);
}

TEST_CASE("diff") {
    const Result clean = run({"diff"});
    CHECK(clean.status == 0);
    CHECK(clean.out.find("mismatches: 0") != std::string::npos);

    std::string table = slurp(data_path("table1.tsv"));
    // Row 52: NP UB 1 -> 2.
    const std::string row = "52\t5\t10\t1\tF\t1\t1\tT\t1\t1\t1\t1\t";
    const auto pos = table.find("\n" + row);
    REQUIRE(pos != std::string::npos);
    table[pos + 1 + row.size() - 2] = '2';
    const fs::path bad = temp_file("fixtures.tsv", table);
    const Result dirty = run({"diff", "--fixtures", bad.string()});
    CHECK(dirty.status == 1);
    CHECK(count_lines(dirty.out) == 1);
    CHECK(dirty.out.rfind("52\tnp_ub\t2\t1\n", 0) == 0);
    fs::remove(bad);

    CHECK(run({"diff", "--fixtures", "/nonexistent/table.tsv"}).status == 2);
}

TEST_CASE("verify-witnesses") {
    const fs::path good = temp_file("good.txt", kK3Witness);
    const Result ok = run({"verify-witnesses", "--witnesses", good.string()});
    CHECK(ok.status == 0);
    CHECK(ok.out.rfind("7\t1\tpass\n", 0) == 0);

    const fs::path tampered = temp_file("tampered.txt", "atlas 7\nn 3\n1 1 1\n1 1 0\n1 0 1\n");
    const Result bad = run({"verify-witnesses", "--witnesses", tampered.string()});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("fail(pattern,rank)") != std::string::npos);

    std::string exempt = "atlas 558\nn 7\n";
    for (int i = 0; i < 7; ++i) exempt += "0 0 0 0 0 0 0\n";
    const fs::path unexpected = temp_file("exempt.txt", exempt);
    const Result ex = run({"verify-witnesses", "--witnesses", unexpected.string()});
    CHECK(ex.status == 1);
    CHECK(ex.out.find("unexpected") != std::string::npos);

    const fs::path dup = temp_file("dup.txt", std::string(kK3Witness) + "\n" + kK3Witness);
    CHECK(run({"verify-witnesses", "--witnesses", dup.string()}).out.find("duplicate") != std::string::npos);

    const fs::path malformed = temp_file("malformed.txt", "atlas 7\nn 3\n1 1\n");
    CHECK(run({"verify-witnesses", "--witnesses", malformed.string()}).status == 2);

    for (const auto& p : {good, tampered, unexpected, dup, malformed}) fs::remove(p);
}

TEST_CASE("derive-forbidden reproduces the shipped list") {
    const fs::path out = fs::temp_directory_path() / "minrank_cli_forbidden.g6";
    const Result r = run({"derive-forbidden", "--out", out.string()});
    CHECK(r.status == 0);
    CHECK(slurp(out) == slurp(data_path("forbidden_mr2.g6")));
    fs::remove(out);

    const Result to_stdout = run({"derive-forbidden"});
    CHECK(to_stdout.status == 0);
    CHECK(to_stdout.err.find("5 patterns") != std::string::npos);
}

TEST_CASE("single-graph commands") {
    const Result zf = run({"zf", "--atlas", "14"});
    CHECK(zf.status == 0);
    CHECK(zf.out.rfind("1\t", 0) == 0);

    const Result zfj = run({"zf", "--atlas", "52", "--json"});
    CHECK(zfj.out.find("\"zero_forcing_number\":4") != std::string::npos);

    const Result cc = run({"cc", "--atlas", "38"});
    CHECK(cc.out.rfind("5\t", 0) == 0);

    CHECK(run({"diam", "--atlas", "14"}).out == "3\n");
    CHECK(run({"diam", "--atlas", "2"}).status == 2);
    CHECK(run({"diam", "--graph6", "Bw", "--json"}).out == "{\"diameter\":1}\n");
}
