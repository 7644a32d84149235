#include "minrank/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minrank/error.hpp"
#include "minrank/graph6.hpp"

namespace minrank {
namespace {

constexpr std::size_t kFixtureColumns = 17;
constexpr const char* kFixtureHeader =
    "atlas\torder\tsize\tmr\tmr_by_hand\tlb\tub\tcon\tzfs_lb\tdiam_lb\tcc_ub\tnp_ub\tnop_ub\tpath_ub\tis\tcv\ttree";

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

class RowReader {
public:
    RowReader(const std::vector<std::string_view>& fields, std::size_t line_no)
        : fields_(fields), line_no_(line_no) {}

    int integer(std::size_t i, const char* name) const {
        auto v = opt_integer(i, name);
        if (!v) fail(std::string("missing ") + name);
        return *v;
    }

    std::optional<int> opt_integer(std::size_t i, const char* name) const {
        const auto f = fields_[i];
        if (f.empty()) return std::nullopt;
        int value = 0;
        const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
        if (ec != std::errc{} || end != f.data() + f.size() || value < 0) {
            fail(std::string("bad ") + name + " '" + std::string(f) + "'");
        }
        return value;
    }

    bool flag(std::size_t i, const char* name) const {
        auto v = opt_flag(i, name);
        if (!v) fail(std::string("missing ") + name);
        return *v;
    }

    std::optional<bool> opt_flag(std::size_t i, const char* name) const {
        const auto f = fields_[i];
        if (f.empty()) return std::nullopt;
        if (f == "T") return true;
        if (f == "F") return false;
        fail(std::string("bad ") + name + " '" + std::string(f) + "', expected T or F");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("fixture line " + std::to_string(line_no_) + ": " + what, line_no_);
    }

private:
    const std::vector<std::string_view>& fields_;
    std::size_t line_no_;
};

std::string render(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
std::string render(const std::optional<bool>& v) { return v ? (*v ? "T" : "F") : std::string(); }
std::string render(bool v) { return v ? "T" : "F"; }

}  // namespace

std::vector<AtlasEntry> read_atlas(std::istream& in) {
    std::vector<AtlasEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            out.push_back({static_cast<int>(line_no), from_graph6(line)});
        } catch (const ParseError& e) {
            throw ParseError("atlas line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return out;
}

std::vector<AtlasEntry> load_atlas(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_atlas(in);
}

std::vector<FixtureRow> read_fixtures(std::istream& in) {
    std::vector<FixtureRow> rows;
    std::set<int> seen;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != kFixtureHeader) throw ParseError("fixture line " + std::to_string(line_no) + ": bad header", line_no);
            header_seen = true;
            continue;
        }

        const auto fields = split_tabs(line);
        const RowReader r(fields, line_no);
        if (fields.size() != kFixtureColumns) {
            r.fail("expected " + std::to_string(kFixtureColumns) + " fields, got " + std::to_string(fields.size()));
        }
        FixtureRow row;
        row.atlas_number = r.integer(0, "atlas");
        row.order = r.integer(1, "order");
        row.size = r.integer(2, "size");
        row.mr = r.integer(3, "mr");
        row.mr_by_hand = r.flag(4, "mr_by_hand");
        row.lb = r.integer(5, "lb");
        row.ub = r.integer(6, "ub");
        row.con = r.flag(7, "con");
        row.zfs_lb = r.opt_integer(8, "zfs_lb");
        row.diam_lb = r.opt_integer(9, "diam_lb");
        row.cc_ub = r.opt_integer(10, "cc_ub");
        row.np_ub = r.opt_integer(11, "np_ub");
        row.nop_ub = r.opt_integer(12, "nop_ub");
        row.path_ub = r.opt_integer(13, "path_ub");
        row.is_flag = r.opt_flag(14, "is");
        row.cv = r.opt_flag(15, "cv");
        row.tree = r.opt_flag(16, "tree");

        if (row.lb > row.ub) r.fail("lb " + std::to_string(row.lb) + " exceeds ub " + std::to_string(row.ub));
        if (row.mr < row.lb || row.mr > row.ub) r.fail("mr outside [lb, ub]");
        if (!seen.insert(row.atlas_number).second) r.fail("duplicate atlas number " + std::to_string(row.atlas_number));
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(),
              [](const FixtureRow& a, const FixtureRow& b) { return a.atlas_number < b.atlas_number; });
    return rows;
}

std::vector<FixtureRow> load_fixtures(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_fixtures(in);
}

void write_fixtures(std::ostream& out, const std::vector<FixtureRow>& rows) {
    out << kFixtureHeader << '\n';
    for (const auto& r : rows) {
        out << r.atlas_number << '\t' << r.order << '\t' << r.size << '\t' << r.mr << '\t' << render(r.mr_by_hand)
            << '\t' << r.lb << '\t' << r.ub << '\t' << render(r.con) << '\t' << render(r.zfs_lb) << '\t'
            << render(r.diam_lb) << '\t' << render(r.cc_ub) << '\t' << render(r.np_ub) << '\t' << render(r.nop_ub)
            << '\t' << render(r.path_ub) << '\t' << render(r.is_flag) << '\t' << render(r.cv) << '\t'
            << render(r.tree) << '\n';
    }
}

ForbiddenList load_forbidden_list(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_forbidden_list(in);
}

std::vector<WitnessRecord> load_witnesses(const std::filesystem::path& path, std::size_t atlas_size,
                                          const std::vector<FixtureRow>& fixtures) {
    auto in = open_input(path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto records = parse_witness_file(buf.str(), static_cast<int>(atlas_size));
    for (auto& rec : records) {
        const auto it = std::find_if(fixtures.begin(), fixtures.end(),
                                     [&](const FixtureRow& f) { return f.atlas_number == rec.atlas_number; });
        if (it != fixtures.end()) rec.claimed_rank = it->lb;
    }
    return records;
}

std::map<int, int> known_minimum_ranks(const std::vector<FixtureRow>& fixtures) {
    std::map<int, int> out;
    for (const auto& f : fixtures) out[f.atlas_number] = f.mr;
    return out;
}

BoundsRow compute_row(const AtlasEntry& entry, const ForbiddenList& list) { return combine(entry.graph, list); }

std::vector<BoundsRow> compute_all(const std::vector<AtlasEntry>& entries, const ForbiddenList& list, int jobs) {
    std::vector<BoundsRow> rows(entries.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) rows[i] = compute_row(entries[i], list);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) rows[i] = compute_row(entries[i], list);
    };
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    return rows;
}

std::string table_header() {
    return "atlas\torder\tsize\tlb\tub\tmr_exact\tcon\tzfs_lb\tdiam_lb\tcc_ub\tnp_ub\tnop_ub\tpath_ub\tis\tcv\ttree";
}

std::string table_row(int atlas_number, const BoundsRow& r) {
    std::ostringstream out;
    if (atlas_number > 0) out << atlas_number;
    out << '\t' << r.order << '\t' << r.size << '\t' << r.lb << '\t' << r.ub << '\t'
        << render(r.mr_exact) << '\t' << render(r.con) << '\t' << render(r.zfs_lb) << '\t' << render(r.diam_lb)
        << '\t' << render(r.cc_ub) << '\t' << render(r.np_ub) << '\t' << render(r.nop_ub) << '\t'
        << render(r.path_ub) << '\t' << render(r.is_flag) << '\t' << render(r.cv) << '\t' << render(r.tree);
    return out.str();
}

void write_table(std::ostream& out, const std::vector<AtlasEntry>& entries, const std::vector<BoundsRow>& rows) {
    out << table_header() << '\n';
    for (std::size_t i = 0; i < entries.size(); ++i) out << table_row(entries[i].atlas_number, rows[i]) << '\n';
}

DiffReport diff(const std::vector<FixtureRow>& fixtures, const std::map<int, BoundsRow>& computed) {
    DiffReport report;
    for (const auto& f : fixtures) {
        const auto it = computed.find(f.atlas_number);
        if (it == computed.end()) {
            throw std::invalid_argument("no computed row for atlas " + std::to_string(f.atlas_number));
        }
        const BoundsRow& c = it->second;
        ++report.rows_checked;

        auto check = [&](const char* column, const std::string& expected, const std::string& got, bool ok) {
            if (ok) return;
            report.mismatches.push_back({f.atlas_number, column, expected, got});
            ++report.per_column[column];
        };
        auto equal = [&](const char* column, const std::string& expected, const std::string& got) {
            check(column, expected, got, expected == got);
        };

        equal("order", std::to_string(f.order), std::to_string(c.order));
        equal("size", std::to_string(f.size), std::to_string(c.size));
        equal("con", render(f.con), render(c.con));
        equal("zfs_lb", render(f.zfs_lb), render(c.zfs_lb));
        equal("diam_lb", render(f.diam_lb), render(c.diam_lb));
        equal("cc_ub", render(f.cc_ub), render(c.cc_ub));
        equal("np_ub", render(f.np_ub), render(c.np_ub));
        equal("nop_ub", render(f.nop_ub), render(c.nop_ub));
        equal("path_ub", render(f.path_ub), render(c.path_ub));
        equal("is", render(f.is_flag), render(c.is_flag));
        equal("cv", render(f.cv), render(std::optional<bool>(c.cv)));
        equal("tree", render(f.tree), render(std::optional<bool>(c.tree)));
        equal("lb", std::to_string(f.lb), std::to_string(c.lb));
        check("ub", std::to_string(f.ub), std::to_string(c.ub), c.ub >= f.ub);
        check("mr_bracket", std::to_string(f.mr), std::to_string(c.ub), f.mr <= c.ub);
        if (c.mr_exact) {
            const char* column = !c.con ? "component_sum" : c.tree ? "tree_mr" : "mr";
            equal(column, std::to_string(f.mr), std::to_string(*c.mr_exact));
        }
    }
    return report;
}

}  // namespace minrank
