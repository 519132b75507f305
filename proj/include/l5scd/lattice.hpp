#pragma once

// Elements of Young's lattice L(m,n), rank arithmetic and the
// Gaussian-binomial rank-size oracle.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace l5scd {

inline constexpr int kParts = 5;

/// Largest box height whose points still pack into a 64-bit key.
inline constexpr int kMaxPackedN = 4095;

/// A weakly increasing 5-tuple (a1,...,a5) with a5 <= n.
struct LatticePoint {
    std::array<int, kParts> a{};

    constexpr int operator[](std::size_t idx) const { return a[idx]; }
    constexpr int& operator[](std::size_t idx) { return a[idx]; }

    auto operator<=>(const LatticePoint&) const = default;
};

struct AmbientParams {
    int m = kParts;
    int n = 0;

    void validate() const {
        if (m < 1) throw std::invalid_argument("L(m,n) needs m >= 1");
        if (n < 0) throw std::invalid_argument("L(m,n) needs n >= 0");
    }
};

/// Number of elements of L(m,n) at each rank 0..m*n.
struct RankProfile {
    std::vector<std::uint64_t> sizes;

    std::uint64_t total() const;
    std::uint64_t max_size() const;
    std::uint64_t at(long long rank) const {
        return rank < 0 || rank >= static_cast<long long>(sizes.size()) ? 0 : sizes[rank];
    }
    bool is_palindromic() const;
    bool is_unimodal() const;
};

constexpr int rank(const LatticePoint& p) {
    int r = 0;
    for (int v : p.a) r += v;
    return r;
}

/// Weakly increasing, non-negative and bounded by n.
constexpr bool is_valid(const LatticePoint& p, int n) {
    if (p.a[0] < 0 || p.a[kParts - 1] > n) return false;
    for (int c = 0; c + 1 < kParts; ++c)
        if (p.a[c] > p.a[c + 1]) return false;
    return true;
}

/// hi - lo is a single unit vector and hi is a lattice point of L(5,n).
constexpr bool covers(const LatticePoint& lo, const LatticePoint& hi, int n) {
    int moved = 0;
    for (int c = 0; c < kParts; ++c) {
        const int d = hi.a[c] - lo.a[c];
        if (d == 1) {
            ++moved;
        } else if (d != 0) {
            return false;
        }
    }
    return moved == 1 && is_valid(hi, n);
}

/// 12 bits per coordinate, a1 in the most significant slot, so numeric
/// order of keys equals lexicographic order of points.
constexpr std::uint64_t pack(const LatticePoint& p) {
    std::uint64_t key = 0;
    for (int v : p.a) key = (key << 12) | static_cast<std::uint64_t>(v & 0xfff);
    return key;
}

constexpr LatticePoint unpack(std::uint64_t key) {
    LatticePoint p;
    for (int c = kParts - 1; c >= 0; --c) {
        p.a[c] = static_cast<int>(key & 0xfff);
        key >>= 12;
    }
    return p;
}

std::string to_string(const LatticePoint& p);

/// binomial(n+m, m), throwing std::overflow_error if it does not fit.
std::uint64_t lattice_size(const AmbientParams& params);

/// Visits every weakly increasing m-tuple bounded by n in lexicographic order.
template <typename Visitor>
void for_each_tuple(const AmbientParams& params, Visitor&& visit) {
    params.validate();
    std::vector<int> t(params.m, 0);
    for (;;) {
        visit(std::span<const int>(t));
        // advance: bump the last coordinate that can grow, reset the tail to it
        int c = params.m - 1;
        while (c >= 0 && t[c] == params.n) --c;
        if (c < 0) return;
        const int v = t[c] + 1;
        for (int d = c; d < params.m; ++d) t[d] = v;
    }
}

/// All of L(5,n) in lexicographic order.
std::vector<LatticePoint> enumerate_lattice(int n);

/// Rank sizes via a DP over (largest allowed part, number of parts);
/// independent of enumeration. Throws std::overflow_error on overflow.
RankProfile rank_sizes(const AmbientParams& params);

}  // namespace l5scd
