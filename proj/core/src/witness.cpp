#include "minrank/witness.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "minrank/error.hpp"
#include "minrank/isomorphism.hpp"

namespace minrank {

std::string WitnessReport::reasons() const {
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (ok) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(symmetric_ok, "symmetric");
    add(pattern_ok, "pattern");
    add(rank_ok, "rank");
    return out;
}

bool is_witness_exempt(int atlas_number) {
    return std::find(kWitnessExempt.begin(), kWitnessExempt.end(), atlas_number) != kWitnessExempt.end();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const std::size_t begin = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > begin) out.push_back(line.substr(begin, pos - begin));
    }
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("witness line " + std::to_string(line_no) + ": " + what, line_no);
}

int parse_keyword_int(const std::vector<std::string_view>& tokens, std::string_view keyword, std::size_t line_no) {
    if (tokens.size() != 2 || tokens[0] != keyword) {
        fail(line_no, "expected '" + std::string(keyword) + " <integer>'");
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), value);
    if (ec != std::errc{} || end != tokens[1].data() + tokens[1].size()) {
        fail(line_no, "bad integer '" + std::string(tokens[1]) + "'");
    }
    return value;
}

}  // namespace

std::vector<WitnessRecord> parse_witness_file(std::string_view text, int max_atlas) {
    enum class State { kAtlas, kDim, kRows };
    std::vector<WitnessRecord> records;
    State state = State::kAtlas;
    WitnessRecord current;
    int dim = 0;
    std::vector<std::vector<Rational>> rows;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') continue;
        const auto tokens = split_ws(line);

        switch (state) {
            case State::kAtlas:
                if (tokens.empty()) break;
                current = WitnessRecord{};
                current.atlas_number = parse_keyword_int(tokens, "atlas", line_no);
                if (current.atlas_number < 1 || (max_atlas > 0 && current.atlas_number > max_atlas)) {
                    fail(line_no, "unknown atlas number " + std::to_string(current.atlas_number));
                }
                state = State::kDim;
                break;
            case State::kDim:
                dim = parse_keyword_int(tokens, "n", line_no);
                if (dim < 1 || dim > kMaxOrder) fail(line_no, "dimension out of range");
                rows.clear();
                state = State::kRows;
                break;
            case State::kRows: {
                if (static_cast<int>(tokens.size()) != dim) {
                    fail(line_no, "matrix row " + std::to_string(rows.size() + 1) + " has " +
                                      std::to_string(tokens.size()) + " entries, expected " + std::to_string(dim));
                }
                std::vector<Rational> row;
                row.reserve(tokens.size());
                for (auto tok : tokens) {
                    try {
                        row.push_back(parse_rational(tok));
                    } catch (const ParseError& e) {
                        fail(line_no, e.what());
                    }
                }
                rows.push_back(std::move(row));
                if (static_cast<int>(rows.size()) == dim) {
                    current.matrix = RationalMatrix(rows);
                    records.push_back(std::move(current));
                    state = State::kAtlas;
                }
                break;
            }
        }
        if (nl == text.size()) break;
    }
    if (state == State::kDim) fail(line_no, "missing dimension line");
    if (state == State::kRows) fail(line_no, "matrix ends after " + std::to_string(rows.size()) + " rows");
    return records;
}

WitnessReport verify_witness(const WitnessRecord& record, const Graph& g) {
    WitnessReport report;
    report.atlas_number = record.atlas_number;
    report.symmetric_ok = is_symmetric(record.matrix);
    report.pattern_ok = report.symmetric_ok && record.matrix.dim() == g.order() &&
                        is_isomorphic(pattern_graph(record.matrix), g);
    report.rank_found = rank(record.matrix);
    report.rank_ok = record.claimed_rank.has_value() && report.rank_found == *record.claimed_rank;
    return report;
}

}  // namespace minrank
