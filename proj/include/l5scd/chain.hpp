#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "l5scd/lattice.hpp"

namespace l5scd {

/// The nine parallel-chain families.
enum class FamilyId : int { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9 };

inline constexpr std::array<FamilyId, 9> kAllFamilies = {
    FamilyId::C1, FamilyId::C2, FamilyId::C3, FamilyId::C4, FamilyId::C5,
    FamilyId::C6, FamilyId::C7, FamilyId::C8, FamilyId::C9};

std::string_view family_name(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view name);

/// C7-C9 index their rows by a pair (q,p) of L(2,k) instead of a single p.
constexpr bool uses_pair_rows(FamilyId f) { return static_cast<int>(f) >= 7; }

/// Fixed (non-row) parameters of a family; unused ones stay 0.
struct FamilyParams {
    int i = 0;
    int j = 0;
    int k = 0;
    int u = 0;
    int w = 0;

    auto operator<=>(const FamilyParams&) const = default;
};

struct RowIndex {
    int p = 0;
    int q = 0;

    auto operator<=>(const RowIndex&) const = default;
};

struct FamilyInstance {
    FamilyId family = FamilyId::C1;
    FamilyParams params;
    RowIndex row;
    int n = 0;
};

enum class Orientation { LeftBottom, TopRight };

std::string_view orientation_name(Orientation o);

/// Where a chain came from. A raw parallel chain has peel_layer == -1.
struct Provenance {
    FamilyId family = FamilyId::C1;
    FamilyParams params;
    RowIndex row;
    int l2k_layer = 0;  // t of the L(2,k) chain, C7-C9 only
    int peel_layer = -1;
    Orientation orientation = Orientation::LeftBottom;
};

struct Chain {
    std::vector<LatticePoint> points;
    Provenance provenance;

    std::size_t size() const { return points.size(); }
    const LatticePoint& front() const { return points.front(); }
    const LatticePoint& back() const { return points.back(); }
};

/// A table row or peel step produced something that is not a saturated
/// chain of lattice points. Always a construction defect, never input error.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace l5scd
