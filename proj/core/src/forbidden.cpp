#include "minrank/forbidden.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "minrank/error.hpp"
#include "minrank/graph6.hpp"
#include "minrank/isomorphism.hpp"

namespace minrank {

bool is_forbidden_mr2(const Graph& g, const ForbiddenList& list) {
    return std::any_of(list.patterns.begin(), list.patterns.end(),
                       [&](const Graph& p) { return contains_induced(g, p); });
}

ForbiddenList read_forbidden_list(std::istream& in) {
    ForbiddenList list;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            list.patterns.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return list;
}

void write_forbidden_list(std::ostream& out, const ForbiddenList& list) {
    out << "# Minimal forbidden induced subgraphs for minimum rank <= 2, graph6, one per line\n";
    for (const Graph& p : list.patterns) out << to_graph6(p) << '\n';
}

namespace {

using Signature = std::tuple<int, int, std::vector<int>>;

Signature signature(const Graph& g) { return {g.order(), g.size(), g.degree_sequence()}; }

class AtlasIndex {
public:
    explicit AtlasIndex(const std::vector<Graph>& corpus) : corpus_(corpus) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            buckets_[signature(corpus[i])].push_back(static_cast<int>(i) + 1);
        }
    }

    /// Atlas number of the corpus graph isomorphic to g, or 0.
    int lookup(const Graph& g) const {
        const auto it = buckets_.find(signature(g));
        if (it == buckets_.end()) return 0;
        for (int k : it->second) {
            if (is_isomorphic(g, corpus_[static_cast<std::size_t>(k - 1)])) return k;
        }
        return 0;
    }

private:
    const std::vector<Graph>& corpus_;
    std::map<Signature, std::vector<int>> buckets_;
};

}  // namespace

ForbiddenList derive_forbidden_list(const std::vector<Graph>& corpus, const std::map<int, int>& known_mr) {
    const AtlasIndex index(corpus);
    ForbiddenList list;
    std::set<int> gaps;

    for (auto [atlas, mr] : known_mr) {
        if (mr < 3) continue;
        if (atlas < 1 || atlas > static_cast<int>(corpus.size())) continue;
        const Graph& g = corpus[static_cast<std::size_t>(atlas - 1)];

        bool minimal = true;
        std::vector<int> unresolved;
        for (int v = 0; v < g.order() && minimal; ++v) {
            const Graph sub = induced_subgraph(g, g.vertices() - VertexSet::single(v));
            const int k = index.lookup(sub);
            const auto known = known_mr.find(k);
            if (known != known_mr.end()) {
                minimal = known->second <= 2;
            } else if (is_forbidden_mr2(sub, list)) {
                minimal = false;
            } else {
                unresolved.push_back(k);
            }
        }
        if (!minimal) continue;
        if (!unresolved.empty()) {
            gaps.insert(unresolved.begin(), unresolved.end());
            continue;
        }
        const bool duplicate = std::any_of(list.patterns.begin(), list.patterns.end(),
                                           [&](const Graph& p) { return is_isomorphic(p, g); });
        if (!duplicate) list.patterns.push_back(g);
    }

    if (!gaps.empty()) {
        std::string what = "minimum rank unknown for atlas graphs needed to decide minimality:";
        for (int k : gaps) what += " " + (k == 0 ? std::string("(not in corpus)") : std::to_string(k));
        throw FixtureGapError(what, {gaps.begin(), gaps.end()});
    }
    return list;
}

}  // namespace minrank
