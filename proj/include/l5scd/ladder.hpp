#pragma once

// Rectangles ("ladders") of parallel chains and recursive perimeter peeling
// into symmetric chains.

#include <optional>
#include <string>
#include <vector>

#include "l5scd/families.hpp"

namespace l5scd {

struct LadderKey {
    FamilyId family = FamilyId::C1;
    FamilyParams params;
    int n = 0;
    int l2k_layer = 0;  // t, C7-C9 only

    auto operator<=>(const LadderKey&) const = default;
};

std::string to_string(const LadderKey& key);

/// Parallel chains stacked so that row r+1 starts and ends one rank above row r.
struct Ladder {
    LadderKey key;
    std::vector<Chain> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Throws ConstructionError naming the ladder if any ladder invariant fails.
void check_ladder(const Ladder& ladder);

/// Ladders built from one (family, params): one for C1-C6, one per L(2,k)
/// chain for C7-C9. Checked with check_ladder.
std::vector<Ladder> ladders_for(const FamilyTuple& tuple, int n);

std::vector<Ladder> assemble_ladders(int n, unsigned threads = 1);

/// Splits the ladder into min(rows, columns) symmetric saturated chains by
/// removing perimeters layer by layer. Throws ConstructionError if a peeled
/// chain is not saturated and symmetric.
std::vector<Chain> peel(const Ladder& ladder, Orientation orientation);

enum class OrientationMode { Auto, LeftBottom, TopRight };

struct FallbackEvent {
    LadderKey key;
    std::string reason;
};

struct ScdOptions {
    OrientationMode orientation = OrientationMode::Auto;
    unsigned threads = 1;  // 0 = hardware concurrency
    std::optional<FamilyId> drop_family;  // fault injection for tests
};

struct ScdResult {
    int n = 0;
    std::vector<Chain> chains;
    std::vector<FallbackEvent> fallbacks;
    std::size_t ladder_count = 0;
};

/// Peels under the requested mode. Auto tries left-bottom first and records
/// a fallback event if it has to switch to top-right.
std::vector<Chain> peel_with_mode(const Ladder& ladder, OrientationMode mode,
                                  std::vector<FallbackEvent>& fallbacks);

/// The full symmetric chain decomposition of L(5,n), in canonical ladder order.
ScdResult scd(int n, const ScdOptions& options = {});

}  // namespace l5scd
