#include "l5scd/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace l5scd {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("rank size exceeds 64-bit range");
    return out;
}

}  // namespace

std::uint64_t RankProfile::total() const {
    std::uint64_t sum = 0;
    for (auto s : sizes) sum = checked_add(sum, s);
    return sum;
}

std::uint64_t RankProfile::max_size() const {
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

bool RankProfile::is_palindromic() const {
    return std::equal(sizes.begin(), sizes.begin() + sizes.size() / 2, sizes.rbegin());
}

bool RankProfile::is_unimodal() const {
    std::size_t r = 1;
    while (r < sizes.size() && sizes[r - 1] <= sizes[r]) ++r;
    while (r < sizes.size() && sizes[r - 1] >= sizes[r]) ++r;
    return r >= sizes.size();
}

std::string to_string(const LatticePoint& p) {
    std::string s = "(";
    for (int c = 0; c < kParts; ++c) {
        if (c) s += ',';
        s += std::to_string(p.a[c]);
    }
    return s + ")";
}

std::uint64_t lattice_size(const AmbientParams& params) {
    params.validate();
    // binomial(n+m, m) built up multiplicatively; after step t, acc is
    // binomial(top - small + t, t), so each division is exact
    std::uint64_t acc = 1;
    const std::uint64_t small = static_cast<std::uint64_t>(std::min(params.m, params.n));
    const std::uint64_t top = static_cast<std::uint64_t>(params.n) + params.m;
    for (std::uint64_t t = 1; t <= small; ++t) {
        std::uint64_t factor = top - small + t;
        const std::uint64_t g = std::gcd(factor, t);
        factor /= g;
        // t/g divides acc because factor/g and t/g are coprime
        if (__builtin_mul_overflow(acc / (t / g), factor, &acc))
            throw std::overflow_error("binomial(n+m, m) exceeds 64-bit range");
    }
    return acc;
}

std::vector<LatticePoint> enumerate_lattice(int n) {
    const AmbientParams params{kParts, n};
    std::vector<LatticePoint> out;
    out.reserve(lattice_size(params));
    for_each_tuple(params, [&](std::span<const int> t) {
        LatticePoint p;
        std::copy(t.begin(), t.end(), p.a.begin());
        out.push_back(p);
    });
    return out;
}

RankProfile rank_sizes(const AmbientParams& params) {
    params.validate();
    const int m = params.m;
    const int n = params.n;
    const std::size_t width = static_cast<std::size_t>(m) * n + 1;

    // ways[c][r]: multisets of c parts drawn from 1..v with sum r, for the
    // current largest allowed part v. Zero parts pad a partition to m entries.
    std::vector<std::vector<std::uint64_t>> ways(m + 1, std::vector<std::uint64_t>(width, 0));
    ways[0][0] = 1;
    for (int v = 1; v <= n; ++v) {
        for (int c = 1; c <= m; ++c) {
            auto& row = ways[c];
            const auto& fewer = ways[c - 1];
            for (std::size_t r = v; r < width; ++r) row[r] = checked_add(row[r], fewer[r - v]);
        }
    }

    RankProfile profile;
    profile.sizes.assign(width, 0);
    for (int c = 0; c <= m; ++c)
        for (std::size_t r = 0; r < width; ++r)
            profile.sizes[r] = checked_add(profile.sizes[r], ways[c][r]);
    return profile;
}

}  // namespace l5scd
