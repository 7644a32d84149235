#ifndef MINRANK_CATALOG_HPP
#define MINRANK_CATALOG_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minrank/bounds.hpp"
#include "minrank/forbidden.hpp"
#include "minrank/graph.hpp"
#include "minrank/witness.hpp"

namespace minrank {

struct AtlasEntry {
    int atlas_number = 0;
    Graph graph;
};

/// One transcribed row of the reference table. Optional fields are blank cells.
struct FixtureRow {
    int atlas_number = 0;
    int order = 0;
    int size = 0;
    int mr = 0;
    bool mr_by_hand = false;
    int lb = 0;
    int ub = 0;
    bool con = false;
    std::optional<int> zfs_lb;
    std::optional<int> diam_lb;
    std::optional<int> cc_ub;
    std::optional<int> np_ub;
    std::optional<int> nop_ub;
    std::optional<int> path_ub;
    std::optional<bool> is_flag;
    std::optional<bool> cv;
    std::optional<bool> tree;

    friend bool operator==(const FixtureRow&, const FixtureRow&) = default;
};

/// graph6, one per line; line k is atlas graph k. ParseError carries the line number.
std::vector<AtlasEntry> read_atlas(std::istream& in);
std::vector<AtlasEntry> load_atlas(const std::filesystem::path& path);

/// Fixture TSV with a header line. Rows come back sorted by atlas number.
/// ParseError (line number) on malformed rows, lb > ub, or duplicates.
std::vector<FixtureRow> read_fixtures(std::istream& in);
std::vector<FixtureRow> load_fixtures(const std::filesystem::path& path);
void write_fixtures(std::ostream& out, const std::vector<FixtureRow>& rows);

ForbiddenList load_forbidden_list(const std::filesystem::path& path);

/// Reads the witness file and fills each record's claimed rank from the
/// fixture lower bound.
std::vector<WitnessRecord> load_witnesses(const std::filesystem::path& path, std::size_t atlas_size,
                                          const std::vector<FixtureRow>& fixtures);

std::map<int, int> known_minimum_ranks(const std::vector<FixtureRow>& fixtures);

BoundsRow compute_row(const AtlasEntry& entry, const ForbiddenList& list);

/// Rows for every entry, in input order. jobs <= 1 runs on the calling thread.
std::vector<BoundsRow> compute_all(const std::vector<AtlasEntry>& entries, const ForbiddenList& list, int jobs = 1);

/// Column header of the computed table.
std::string table_header();
/// One computed row as TSV (fixture schema without mr/mr_by_hand, plus mr_exact).
/// A non-positive atlas number leaves the first field blank.
std::string table_row(int atlas_number, const BoundsRow& row);
void write_table(std::ostream& out, const std::vector<AtlasEntry>& entries, const std::vector<BoundsRow>& rows);

struct Mismatch {
    int atlas_number = 0;
    std::string column;
    std::string expected;
    std::string computed;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct DiffReport {
    std::vector<Mismatch> mismatches;
    std::map<std::string, int> per_column;
    int rows_checked = 0;

    bool ok() const { return mismatches.empty(); }
};

/// Compares fixtures against computed rows keyed by atlas number.
///
/// Equality on order, size, Con, every bound column (presence and value), IS,
/// CV, Tree and LB. The computed UB may only be looser than the table's
/// (cut-vertex reductions are not implemented), so for UB the relation is
/// computed >= fixture, plus the bracket fixture mr <= computed UB. Where the
/// pipeline pins the rank exactly it must equal the fixture mr; these checks
/// are reported under "tree_mr", "component_sum" and "mr".
///
/// Throws std::invalid_argument if a fixture has no computed row.
DiffReport diff(const std::vector<FixtureRow>& fixtures, const std::map<int, BoundsRow>& computed);

}  // namespace minrank

#endif  // MINRANK_CATALOG_HPP
