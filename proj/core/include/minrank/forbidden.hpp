#ifndef MINRANK_FORBIDDEN_HPP
#define MINRANK_FORBIDDEN_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

/// Minimal forbidden induced subgraphs for minimum rank at most 2: each
/// pattern has mr >= 3 while all of its proper induced subgraphs have mr <= 2.
struct ForbiddenList {
    std::vector<Graph> patterns;
};

/// True iff g contains some pattern of the list as an induced subgraph.
bool is_forbidden_mr2(const Graph& g, const ForbiddenList& list);

/// Reads one graph6 string per line; blank lines and lines starting with '#'
/// are skipped. Throws ParseError with the 1-based line number.
ForbiddenList read_forbidden_list(std::istream& in);
void write_forbidden_list(std::ostream& out, const ForbiddenList& list);

/// Raised when deriving the list needs the minimum rank of a graph that has
/// no known value. `missing` holds the atlas numbers of those graphs.
class FixtureGapError : public std::runtime_error {
public:
    FixtureGapError(const std::string& what, std::vector<int> missing)
        : std::runtime_error(what), missing_(std::move(missing)) {}
    const std::vector<int>& missing() const { return missing_; }

private:
    std::vector<int> missing_;
};

/// Extracts the minimal forbidden family from a corpus in atlas order
/// (corpus[k-1] is atlas graph k) and known minimum ranks keyed by atlas
/// number.
///
/// A graph with known mr >= 3 is minimal when every one-vertex-deleted
/// subgraph has mr <= 2 (minimum rank is monotone under induced subgraphs).
/// Subgraph ranks are looked up through isomorphism against the corpus. A
/// subgraph with no known rank still disqualifies the candidate if it contains
/// a pattern already found, since candidates are visited in nondecreasing
/// order; otherwise it is a gap and FixtureGapError is thrown.
ForbiddenList derive_forbidden_list(const std::vector<Graph>& corpus, const std::map<int, int>& known_mr);

}  // namespace minrank

#endif  // MINRANK_FORBIDDEN_HPP
