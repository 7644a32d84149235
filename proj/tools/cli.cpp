#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "minrank/bounds.hpp"
#include "minrank/catalog.hpp"
#include "minrank/clique_cover.hpp"
#include "minrank/error.hpp"
#include "minrank/graph6.hpp"
#include "minrank/witness.hpp"
#include "minrank/zero_forcing.hpp"

namespace minrank::cli {
namespace {

struct Paths {
    std::string atlas = "data/atlas.g6";
    std::string fixtures = "data/table1.tsv";
    std::string witnesses = "data/witnesses.txt";
    std::string forbidden = "data/forbidden_mr2.g6";
    std::string out;
};

struct Target {
    std::optional<std::string> graph6;
    std::optional<int> atlas;
};

/// Input problems that map to kUsageError.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph resolve(const Target& t, const Paths& paths) {
    if (t.graph6.has_value() == t.atlas.has_value()) throw UsageError("give exactly one of --graph6 or --atlas");
    if (t.graph6) return from_graph6(*t.graph6);
    const auto atlas = load_atlas(paths.atlas);
    if (*t.atlas < 1 || *t.atlas > static_cast<int>(atlas.size())) {
        throw UsageError("atlas number " + std::to_string(*t.atlas) + " outside 1.." + std::to_string(atlas.size()));
    }
    return atlas[static_cast<std::size_t>(*t.atlas - 1)].graph;
}

nlohmann::ordered_json to_json(int atlas_number, const BoundsRow& r) {
    auto opt = [](const auto& v) -> nlohmann::ordered_json {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j;
    if (atlas_number > 0) j["atlas"] = atlas_number;
    j["order"] = r.order;
    j["size"] = r.size;
    j["lb"] = r.lb;
    j["ub"] = r.ub;
    j["mr_exact"] = opt(r.mr_exact);
    j["con"] = r.con;
    j["zfs_lb"] = opt(r.zfs_lb);
    j["diam_lb"] = opt(r.diam_lb);
    j["cc_ub"] = opt(r.cc_ub);
    j["np_ub"] = opt(r.np_ub);
    j["nop_ub"] = opt(r.nop_ub);
    j["path_ub"] = opt(r.path_ub);
    j["is"] = opt(r.is_flag);
    j["cv"] = r.cv;
    j["tree"] = r.tree;
    return j;
}

/// 1-based labels, matching the data files.
std::vector<int> one_based(VertexSet s) {
    std::vector<int> out = s.to_vector();
    for (int& v : out) ++v;
    return out;
}

std::string vertex_list(VertexSet s) {
    std::string out;
    for (int v : s.to_vector()) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

/// Writes to --out when given, otherwise to `fallback`.
template <typename Fn>
void emit(const std::string& out_path, std::ostream& fallback, Fn&& write) {
    if (out_path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    write(file);
}

int cmd_bounds(const Target& target, const Paths& paths, bool json, std::ostream& out) {
    const Graph g = resolve(target, paths);
    const BoundsRow row = combine(g, load_forbidden_list(paths.forbidden));
    const int number = target.atlas.value_or(0);
    if (json) {
        out << to_json(number, row).dump(2) << '\n';
    } else {
        out << table_header() << '\n' << table_row(number, row) << '\n';
    }
    return kSuccess;
}

int cmd_table(const Paths& paths, bool json, int jobs, std::ostream& out) {
    const auto atlas = load_atlas(paths.atlas);
    const auto rows = compute_all(atlas, load_forbidden_list(paths.forbidden), jobs);
    emit(paths.out, out, [&](std::ostream& os) {
        if (json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < atlas.size(); ++i) arr.push_back(to_json(atlas[i].atlas_number, rows[i]));
            os << arr.dump(1) << '\n';
        } else {
            write_table(os, atlas, rows);
        }
    });
    return kSuccess;
}

int cmd_diff(const Paths& paths, int jobs, std::ostream& out) {
    const auto atlas = load_atlas(paths.atlas);
    const auto fixtures = load_fixtures(paths.fixtures);
    const auto rows = compute_all(atlas, load_forbidden_list(paths.forbidden), jobs);
    std::map<int, BoundsRow> computed;
    for (std::size_t i = 0; i < atlas.size(); ++i) computed.emplace(atlas[i].atlas_number, rows[i]);

    DiffReport report;
    try {
        report = diff(fixtures, computed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& m : report.mismatches) {
        out << m.atlas_number << '\t' << m.column << '\t' << m.expected << '\t' << m.computed << '\n';
    }
    out << "# rows checked: " << report.rows_checked << ", mismatches: " << report.mismatches.size() << '\n';
    for (const auto& [column, count] : report.per_column) out << "#   " << column << ": " << count << '\n';
    return report.ok() ? kSuccess : kCheckFailed;
}

int cmd_verify_witnesses(const Paths& paths, std::ostream& out) {
    const auto atlas = load_atlas(paths.atlas);
    const auto fixtures = load_fixtures(paths.fixtures);
    const auto records = load_witnesses(paths.witnesses, atlas.size(), fixtures);

    int failures = 0;
    std::set<int> seen;
    for (const auto& rec : records) {
        const WitnessReport report = verify_witness(rec, atlas[static_cast<std::size_t>(rec.atlas_number - 1)].graph);
        std::string reasons = report.reasons();
        auto add = [&](const char* why) { reasons += (reasons.empty() ? "" : ",") + std::string(why); };
        if (is_witness_exempt(rec.atlas_number)) add("unexpected");
        if (!seen.insert(rec.atlas_number).second) add("duplicate");
        if (!rec.claimed_rank) add("no-fixture");
        out << rec.atlas_number << '\t' << report.rank_found << '\t'
            << (reasons.empty() ? std::string("pass") : "fail(" + reasons + ")") << '\n';
        if (!reasons.empty()) ++failures;
    }
    out << "# " << records.size() - static_cast<std::size_t>(failures) << " of " << records.size()
        << " witnesses verified\n";
    return failures == 0 ? kSuccess : kCheckFailed;
}

int cmd_derive_forbidden(const Paths& paths, std::ostream& out, std::ostream& err) {
    const auto atlas = load_atlas(paths.atlas);
    const auto fixtures = load_fixtures(paths.fixtures);
    std::vector<Graph> corpus;
    corpus.reserve(atlas.size());
    for (const auto& e : atlas) corpus.push_back(e.graph);

    ForbiddenList list;
    try {
        list = derive_forbidden_list(corpus, known_minimum_ranks(fixtures));
    } catch (const FixtureGapError& e) {
        err << "derive-forbidden: " << e.what() << '\n';
        return kCheckFailed;
    }
    std::ostream& summary = paths.out.empty() ? err : out;
    emit(paths.out, out, [&](std::ostream& os) { write_forbidden_list(os, list); });
    summary << "# " << list.patterns.size() << " patterns, orders:";
    for (const auto& p : list.patterns) summary << ' ' << p.order();
    summary << '\n';
    return kSuccess;
}

int cmd_zf(const Target& target, const Paths& paths, bool json, std::ostream& out) {
    const Graph g = resolve(target, paths);
    const VertexSet set = minimum_zero_forcing_set(g);
    if (json) {
        out << nlohmann::json{{"zero_forcing_number", set.size()}, {"set", one_based(set)}}.dump() << '\n';
    } else {
        out << set.size() << '\t' << vertex_list(set) << '\n';
    }
    return kSuccess;
}

int cmd_cc(const Target& target, const Paths& paths, bool json, std::ostream& out) {
    const Graph g = resolve(target, paths);
    const auto cover = minimum_clique_cover(g);
    if (json) {
        nlohmann::json cliques = nlohmann::json::array();
        for (VertexSet c : cover) cliques.push_back(one_based(c));
        out << nlohmann::json{{"clique_cover_number", cover.size()}, {"cliques", cliques}}.dump() << '\n';
    } else {
        out << cover.size();
        for (VertexSet c : cover) out << '\t' << vertex_list(c);
        out << '\n';
    }
    return kSuccess;
}

int cmd_diam(const Target& target, const Paths& paths, bool json, std::ostream& out) {
    const Graph g = resolve(target, paths);
    if (!is_connected(g)) throw UsageError("diameter is undefined for a disconnected graph");
    const int d = diameter(g);
    if (json) {
        out << nlohmann::json{{"diameter", d}}.dump() << '\n';
    } else {
        out << d << '\n';
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum rank bounds for the graphs of order at most 7"};
    app.require_subcommand(1);

    Paths paths;
    Target target;
    bool json = false;
    int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

    auto add_paths = [&](CLI::App* sub) {
        sub->add_option("--atlas-file", paths.atlas, "Atlas corpus, graph6 per line");
        sub->add_option("--fixtures", paths.fixtures, "Reference table TSV");
        sub->add_option("--witnesses", paths.witnesses, "Witness matrix file");
        sub->add_option("--forbidden", paths.forbidden, "Forbidden induced subgraph list");
    };
    auto add_target = [&](CLI::App* sub) {
        sub->add_option("--graph6", target.graph6, "Graph as a graph6 string");
        sub->add_option("--atlas", target.atlas, "Graph by atlas number");
    };

    auto* bounds = app.add_subcommand("bounds", "All bound columns for one graph");
    add_target(bounds);
    add_paths(bounds);
    bounds->add_flag("--json", json, "JSON instead of TSV");

    auto* table = app.add_subcommand("table", "Bound table for the whole corpus");
    add_paths(table);
    table->add_option("--out", paths.out, "Output file (default: stdout)");
    table->add_flag("--json", json, "JSON instead of TSV");
    table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* diff_cmd = app.add_subcommand("diff", "Compare computed bounds with the reference table");
    add_paths(diff_cmd);
    diff_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-witnesses", "Check witness matrices exactly");
    add_paths(verify);

    auto* derive = app.add_subcommand("derive-forbidden", "Derive the forbidden subgraph list from the table");
    add_paths(derive);
    derive->add_option("--out", paths.out, "Output file (default: stdout)");

    auto* zf = app.add_subcommand("zf", "Minimum zero forcing set");
    auto* cc = app.add_subcommand("cc", "Minimum edge clique cover");
    auto* diam = app.add_subcommand("diam", "Diameter");
    for (auto* sub : {zf, cc, diam}) {
        add_target(sub);
        add_paths(sub);
        sub->add_flag("--json", json, "JSON output");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(target, paths, json, out);
        if (table->parsed()) return cmd_table(paths, json, jobs, out);
        if (diff_cmd->parsed()) return cmd_diff(paths, jobs, out);
        if (verify->parsed()) return cmd_verify_witnesses(paths, out);
        if (derive->parsed()) return cmd_derive_forbidden(paths, out, err);
        if (zf->parsed()) return cmd_zf(target, paths, json, out);
        if (cc->parsed()) return cmd_cc(target, paths, json, out);
        if (diam->parsed()) return cmd_diam(target, paths, json, out);
    } catch (const std::exception& e) {
        // Every remaining exception is an input problem: unreadable file, parse error, bad target.
        err << "minrank: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace minrank::cli
