#pragma once

// The nine parameterized families of parallel chains in L(5,n) and the
// symmetric chain decomposition of L(2,k) used to index C7-C9 rows.

#include <vector>

#include "l5scd/chain.hpp"

namespace l5scd {

struct FamilyTuple {
    FamilyId family = FamilyId::C1;
    FamilyParams params;

    auto operator<=>(const FamilyTuple&) const = default;
};

/// Header condition of the family's table (inequality for C1-C6,
/// equality for C7-C9, together with the allowed range of u).
bool family_condition(FamilyId family, const FamilyParams& params, int n);

/// Every feasible (family, params) for this n, ordered by (family, i, j, k, u, w).
std::vector<FamilyTuple> enumerate_family_params(int n);

/// Largest p: k for C1/C2/C7-C9, 2k+u for C3-C6.
int max_row(FamilyId family, const FamilyParams& params);

bool row_in_range(FamilyId family, const FamilyParams& params, const RowIndex& row);

/// Expands one table into an explicit saturated chain. Throws
/// std::invalid_argument when the instance violates its table condition and
/// ConstructionError when an expanded step is not a covering step.
Chain materialize_chain(const FamilyInstance& instance);

/// Every raw parallel chain of every family for this n, in canonical order.
std::vector<Chain> materialize_all(int n);

struct GridPair {
    int q = 0;
    int p = 0;

    auto operator<=>(const GridPair&) const = default;
};

/// Symmetric chains (t,t),(t,t+1),...,(t,k-t),(t+1,k-t),...,(k-t,k-t)
/// for t = 0..floor(k/2); together they partition {0 <= q <= p <= k}.
std::vector<std::vector<GridPair>> l2k_scd(int k);

}  // namespace l5scd
