#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "sephyp/error.hpp"

namespace sephyp {

/// Largest supported ground set.
inline constexpr int max_vertices = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a bitmask. Vertex v is
/// bit v; the external (1-based) name of vertex v is v + 1.
///
/// k-sets (edges, non-edges, bases) are VertexSets whose size equals the
/// uniformity of the owning hypergraph.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// From 0-based vertex indices.
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs)
            s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(VertexSet other) const { return (bits_ & other.bits_) == 0; }
    /// Smallest element; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }
    /// Largest element; undefined on the empty set.
    constexpr int highest() const { return 63 - std::countl_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    constexpr bool operator==(const VertexSet&) const = default;

    /// 0-based elements in increasing order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (auto b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// 1-based elements in increasing order, as used in all I/O.
    std::vector<int> one_based() const {
        auto out = elements();
        for (int& v : out)
            ++v;
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (auto b = bits_; b != 0; b &= b - 1)
            f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing element sequences.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const auto diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    const int low = std::countr_zero(diff);
    const auto above = low >= 63 ? std::uint64_t{0} : ~((std::uint64_t{2} << low) - 1);
    if (a.contains(low))
        return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Hash-friendly numeric order; used for binary search, not for output.
struct BitsLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return a.bits() < b.bits(); }
};

/// "{1,3,5}" in 1-based names.
inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first)
            out += ',';
        out += std::to_string(v + 1);
        first = false;
    });
    out += '}';
    return out;
}

/// Saturating binomial coefficient.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is exact at every step
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t r2 = r / g;
        const std::uint64_t i2 = i / g;
        const std::uint64_t num2 = num / i2;
        if (r2 != 0 && num2 > cap / r2)
            return cap;
        r = r2 * num2;
    }
    return r;
}

/// Calls f(VertexSet) for every t-subset of `universe`, in lexicographic order.
/// Stops early if f returns false (when f returns bool).
template <typename F>
bool for_each_subset_of_size(VertexSet universe, int t, F&& f) {
    const auto elems = universe.elements();
    const int m = static_cast<int>(elems.size());
    if (t < 0 || t > m)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t bits = 0;
        for (int i : idx)
            bits |= std::uint64_t{1} << elems[static_cast<std::size_t>(i)];
        if constexpr (std::is_same_v<std::invoke_result_t<F, VertexSet>, bool>) {
            if (!f(VertexSet(bits)))
                return false;
        } else {
            f(VertexSet(bits));
        }
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - t + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

template <typename F>
bool for_each_kset(int n, int k, F&& f) {
    return for_each_subset_of_size(VertexSet::full(n), k, std::forward<F>(f));
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<VertexSet> all_ksets(int n, int k) {
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))));
    for_each_kset(n, k, [&](VertexSet s) { out.push_back(s); });
    return out;
}

} // namespace sephyp
