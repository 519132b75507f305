#pragma once

// Independent checks of a chain decomposition of L(5,n): partition,
// saturation, symmetry, the chain/rank profile, and the weight
// generating-function coverage truncated at a maximum degree.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "l5scd/chain.hpp"

namespace l5scd {

struct Ladder;

inline constexpr std::size_t kSampleLimit = 20;

bool is_saturated(const Chain& chain, int n);
bool is_symmetric(const Chain& chain, int n);

/// Exponents of x0..x5 in the weight monomial of a point.
struct WeightExponents {
    std::array<int, kParts + 1> e{};

    int degree() const;
    auto operator<=>(const WeightExponents&) const = default;
};

/// (n - a5, a5 - a4, a4 - a3, a3 - a2, a2 - a1, a1)
WeightExponents weight(const LatticePoint& point, int n);

struct VerificationReport {
    int n = 0;
    std::uint64_t total_points = 0;
    std::size_t chain_count = 0;

    // bounded samples; the *_count fields hold the full tallies
    std::vector<LatticePoint> duplicates;
    std::vector<LatticePoint> missing;
    std::vector<LatticePoint> unexpected;
    std::vector<std::string> chain_failures;
    std::vector<std::string> profile_mismatches;
    std::uint64_t duplicate_count = 0;
    std::uint64_t missing_count = 0;
    std::uint64_t unexpected_count = 0;
    std::uint64_t chain_failure_count = 0;

    bool pass = false;

    void finalize();
    /// "n=.. points=.. chains=.. pass|FAIL" followed by details().
    std::string summary() const;
    /// One indented line per failure sample; empty on a pass.
    std::string details() const;
};

/// Saturation and symmetry of every chain, plus exact coverage of L(5,n).
VerificationReport verify_partition(std::span<const Chain> chains, int n);

/// Describes every rank r <= floor(5n/2) where the number of chains starting
/// at r differs from the first difference of the rank sizes.
std::vector<std::string> chain_profile_mismatches(std::span<const Chain> chains, int n);

bool verify_chain_profile(std::span<const Chain> chains, int n);

/// Maps each point of every raw parallel chain of L(5,n) to its weight
/// monomial and checks the degree-n monomials in six variables are each hit
/// exactly once. total_points counts the distinct monomials seen.
VerificationReport gf_degree_check(int n);

/// gf_degree_check for every n <= n_max, merged. Cumulatively this checks
/// that the generating function truncated at degree n_max has every
/// coefficient equal to 1.
VerificationReport gf_truncated_check(int n_max, unsigned threads = 1);

/// Point multisets of the ladder rows and the peeled chains coincide.
bool verify_peel_conservation(const Ladder& ladder, std::span<const Chain> peeled);

}  // namespace l5scd
