#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "minrank/error.hpp"
#include "minrank/graph6.hpp"

using namespace minrank;
using namespace minrank::testing;

namespace {

const std::string kHeader =
    "atlas\torder\tsize\tmr\tmr_by_hand\tlb\tub\tcon\tzfs_lb\tdiam_lb\tcc_ub\tnp_ub\tnop_ub\tpath_ub\tis\tcv\ttree\n";

std::vector<FixtureRow> parse(const std::string& body) {
    std::istringstream in(kHeader + body);
    return read_fixtures(in);
}

std::size_t error_line(const std::string& body) {
    try {
        parse(body);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

std::map<int, BoundsRow> computed_map() {
    static const std::map<int, BoundsRow> rows = [] {
        const auto& c = corpus();
        const auto all = compute_all(c.atlas, c.forbidden, 4);
        std::map<int, BoundsRow> out;
        for (std::size_t i = 0; i < all.size(); ++i) out.emplace(c.atlas[i].atlas_number, all[i]);
        return out;
    }();
    return rows;
}

}  // namespace

TEST_CASE("atlas corpus") {
    const auto& c = corpus();
    REQUIRE(c.atlas.size() == 1252);
    CHECK(c.atlas.front().atlas_number == 1);
    CHECK(c.graph(1).order() == 1);
    CHECK(c.graph(52).order() == 5);
    CHECK(c.graph(52).size() == 10);
    CHECK(c.graph(1252).order() == 7);
    CHECK(c.graph(1252).size() == 21);

    std::istringstream bad("@\nA_\nxyz!\n");
    try {
        read_atlas(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("fixture rows") {
    const auto& c = corpus();
    CHECK(c.fixtures.size() == 1162);
    const FixtureRow& r52 = c.fixture(52);
    CHECK(r52.order == 5);
    CHECK(r52.size == 10);
    CHECK(r52.mr == 1);
    CHECK(r52.con);
    CHECK(r52.np_ub == 1);
    CHECK(r52.nop_ub == 2);
    CHECK(r52.path_ub == 3);
    CHECK(r52.is_flag == false);

    const FixtureRow& r558 = c.fixture(558);
    CHECK(r558.mr_by_hand);
    CHECK(r558.lb == 3);
    CHECK(r558.ub == 4);
    CHECK_FALSE(r558.np_ub.has_value());

    const FixtureRow& r2 = c.fixture(2);
    CHECK_FALSE(r2.con);
    CHECK_FALSE(r2.zfs_lb.has_value());
    CHECK_FALSE(r2.is_flag.has_value());
    CHECK(r2.cv == false);
}

TEST_CASE("fixture validation") {
    CHECK(parse("").empty());
    CHECK(error_line("5\t3\t1\t1\tF\t2\t1\tF\t\t\t\t\t\t\t\tF\tF\n") == 2);  // lb > ub
    CHECK(error_line("5\t3\t1\t3\tF\t1\t2\tF\t\t\t\t\t\t\t\tF\tF\n") == 2);  // mr outside the bracket
    CHECK(error_line("2\t2\t0\t0\tF\t0\t0\tF\t\t\t\t\t\t\t\tF\tF\n"
                     "2\t2\t0\t0\tF\t0\t0\tF\t\t\t\t\t\t\t\tF\tF\n") == 3);
    CHECK(error_line("2\t2\t0\t0\tF\t0\t0\tF\n") == 2);
    CHECK(error_line("2\t2\tx\t0\tF\t0\t0\tF\t\t\t\t\t\t\t\tF\tF\n") == 2);
    CHECK(error_line("2\t2\t0\t0\tY\t0\t0\tF\t\t\t\t\t\t\t\tF\tF\n") == 2);

    std::istringstream no_header("1\t1\t0\t0\tF\t0\t0\tT\t0\t0\t0\t\t\t\tF\tF\tT\n");
    CHECK_THROWS_AS(read_fixtures(no_header), ParseError);
}

TEST_CASE("fixture write and read round trip") {
    const auto& c = corpus();
    std::ostringstream out;
    write_fixtures(out, c.fixtures);
    std::istringstream in(out.str());
    CHECK(read_fixtures(in) == c.fixtures);
}

TEST_CASE("diff of the computed table is clean") {
    const auto& c = corpus();
    const DiffReport report = diff(c.fixtures, computed_map());
    CHECK(report.ok());
    CHECK(report.rows_checked == 1162);
    for (const auto& m : report.mismatches) MESSAGE(m.atlas_number << " " << m.column);
}

TEST_CASE("diff reports a single perturbation") {
    auto fixtures = corpus().fixtures;
    for (auto& f : fixtures)
        if (f.atlas_number == 721) *f.zfs_lb += 1;
    const DiffReport report = diff(fixtures, computed_map());
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].atlas_number == 721);
    CHECK(report.mismatches[0].column == "zfs_lb");
    CHECK(report.per_column.at("zfs_lb") == 1);

    auto missing = computed_map();
    missing.erase(721);
    CHECK_THROWS_AS(diff(corpus().fixtures, missing), std::invalid_argument);
}

TEST_CASE("diff lets UB be looser but not tighter") {
    const auto& c = corpus();
    std::map<int, BoundsRow> computed{{52, computed_map().at(52)}};
    std::vector<FixtureRow> fixtures{c.fixture(52)};
    computed[52].ub = 0;
    const DiffReport tighter = diff(fixtures, computed);
    CHECK_FALSE(tighter.ok());
    CHECK(tighter.per_column.count("ub") == 1);
}

TEST_CASE("table output is deterministic and independent of jobs") {
    const auto& c = corpus();
    const std::vector<AtlasEntry> some(c.atlas.begin(), c.atlas.begin() + 300);
    const auto serial = compute_all(some, c.forbidden, 1);
    const auto parallel = compute_all(some, c.forbidden, 4);
    CHECK(serial == parallel);

    std::ostringstream a;
    std::ostringstream b;
    write_table(a, some, serial);
    write_table(b, some, parallel);
    CHECK(a.str() == b.str());

    std::istringstream lines(a.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == table_header());
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 300);

    CHECK(table_row(52, serial[51]) == "52\t5\t10\t1\t1\t1\tT\t1\t1\t1\t1\t2\t3\tF\tF\tF");
    CHECK(table_row(0, serial[51]).front() == '\t');
}
