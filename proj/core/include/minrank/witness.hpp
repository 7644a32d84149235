#ifndef MINRANK_WITNESS_HPP
#define MINRANK_WITNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/rational_matrix.hpp"

namespace minrank {

/// A matrix claimed to realise the minimum rank of an atlas graph.
struct WitnessRecord {
    int atlas_number = 0;
    RationalMatrix matrix;
    /// Joined from the fixture lower bound after parsing; unset until then.
    std::optional<int> claimed_rank;
};

struct WitnessReport {
    int atlas_number = 0;
    bool symmetric_ok = false;
    bool pattern_ok = false;
    int rank_found = 0;
    bool rank_ok = false;

    bool pass() const { return symmetric_ok && pattern_ok && rank_ok; }
    /// Comma-separated failed checks ("symmetric", "pattern", "rank"); empty on pass.
    std::string reasons() const;
};

/// Atlas graphs whose minimum rank is settled by argument rather than by an
/// explicit matrix; a witness for any of them is unexpected.
inline constexpr std::array<int, 7> kWitnessExempt{558, 669, 678, 679, 791, 1086, 1135};

bool is_witness_exempt(int atlas_number);

/// Parses the witness text format:
///
///     atlas <k>
///     n <d>
///     <d rows of d rational tokens>
///     <blank line>
///
/// Lines starting with '#' are ignored anywhere. Atlas numbers must lie in
/// 1..max_atlas (pass 0 to skip that check). Throws ParseError with the
/// 1-based line number.
std::vector<WitnessRecord> parse_witness_file(std::string_view text, int max_atlas = 0);

/// Checks symmetry, the off-diagonal pattern against g up to isomorphism, and
/// the exact rank against the claimed rank. Failures are reported, not thrown.
WitnessReport verify_witness(const WitnessRecord& record, const Graph& g);

}  // namespace minrank

#endif  // MINRANK_WITNESS_HPP
