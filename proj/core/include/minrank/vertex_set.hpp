#ifndef MINRANK_VERTEX_SET_HPP
#define MINRANK_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace minrank {

inline constexpr int kMaxOrder = 64;

/// A set of vertices of a graph of order at most 64, stored as one word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn(v) for each member of s in ascending order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
    for (auto b = s.bits(); b != 0; b &= b - 1) fn(std::countr_zero(b));
}

/// Visits the k-element subsets of `universe` in lexicographic order of their
/// sorted member lists. Stops early and returns true once fn returns true.
template <typename Fn>
bool for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
    const std::vector<int> members = universe.to_vector();
    if (k < 0 || k > static_cast<int>(members.size())) return false;
    const std::size_t m = members.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> idx(kk);
    for (std::size_t i = 0; i < kk; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (std::size_t i : idx) s.insert(members[i]);
        if (fn(s)) return true;
        std::size_t i = kk;
        while (i > 0 && idx[i - 1] == m - kk + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace minrank

#endif  // MINRANK_VERTEX_SET_HPP
