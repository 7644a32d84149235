#include "minrank/graph6.hpp"

#include <stdexcept>

#include "minrank/error.hpp"

namespace minrank {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t payload_bytes(int n) {
    const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    const int head = static_cast<unsigned char>(text[0]);
    if (head < kBias || head > kMaxByte) {
        throw ParseError("graph6: byte 0 out of range (" + std::to_string(head) + ")", 0);
    }
    if (head == kMaxByte) {
        // 126 introduces the multi-byte order form, only needed beyond 62 vertices.
        throw ParseError("graph6: multi-byte order form is not supported", 0);
    }
    const int n = head - kBias;
    const std::size_t expected = 1 + payload_bytes(n);
    if (text.size() < expected) {
        throw ParseError("graph6: truncated payload, expected " + std::to_string(expected) + " bytes, got " +
                             std::to_string(text.size()),
                         text.size());
    }
    if (text.size() > expected) {
        throw ParseError("graph6: trailing bytes after payload", expected);
    }

    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t offset = 1 + bit / 6;
            const int byte = static_cast<unsigned char>(text[offset]);
            if (byte < kBias || byte > kMaxByte) {
                throw ParseError("graph6: byte " + std::to_string(offset) + " out of range (" +
                                     std::to_string(byte) + ")",
                                 offset);
            }
            if (((byte - kBias) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 single-byte order form holds at most 62 vertices");
    std::string out;
    out.reserve(1 + payload_bytes(n));
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace minrank
