#include "l5scd/ladder.hpp"

#include <stdexcept>

#include "l5scd/parallel.hpp"
#include "l5scd/verify.hpp"

namespace l5scd {

std::string to_string(const LadderKey& key) {
    const auto& fp = key.params;
    std::string s = std::string(family_name(key.family)) + "(i=" + std::to_string(fp.i) +
                    ",j=" + std::to_string(fp.j) + ",k=" + std::to_string(fp.k) +
                    ",u=" + std::to_string(fp.u) + ",w=" + std::to_string(fp.w) + ")";
    if (uses_pair_rows(key.family)) s += " t=" + std::to_string(key.l2k_layer);
    return s + " n=" + std::to_string(key.n);
}

void check_ladder(const Ladder& ladder) {
    auto fail = [&](const std::string& what) {
        throw ConstructionError("ladder " + to_string(ladder.key) + ": " + what);
    };
    if (ladder.rows.empty() || ladder.rows.front().points.empty()) fail("empty ladder");

    const std::size_t width = ladder.column_count();
    const int n = ladder.key.n;
    for (std::size_t r = 0; r < ladder.rows.size(); ++r) {
        if (ladder.rows[r].size() != width)
            fail("row " + std::to_string(r) + " has " + std::to_string(ladder.rows[r].size()) +
                 " points, expected " + std::to_string(width));
        if (r == 0) continue;
        const Chain& below = ladder.rows[r - 1];
        const Chain& row = ladder.rows[r];
        if (!covers(below.front(), row.front(), n) || !covers(below.back(), row.back(), n))
            fail("rows " + std::to_string(r - 1) + " and " + std::to_string(r) +
                 " are not offset by a covering step at both ends");
    }
    if (rank(ladder.rows.front().front()) + rank(ladder.rows.back().back()) != kParts * n)
        fail("corner ranks do not sum to 5n");
}

std::vector<Ladder> ladders_for(const FamilyTuple& tuple, int n) {
    const auto [family, params] = tuple;
    auto row_chain = [&](int p, int q) { return materialize_chain({family, params, {p, q}, n}); };

    std::vector<Ladder> out;
    if (uses_pair_rows(family)) {
        const auto layers = l2k_scd(params.k);
        for (std::size_t t = 0; t < layers.size(); ++t) {
            Ladder ladder{{family, params, n, static_cast<int>(t)}, {}};
            for (const GridPair& gp : layers[t]) ladder.rows.push_back(row_chain(gp.p, gp.q));
            out.push_back(std::move(ladder));
        }
    } else {
        // rank grows with p everywhere except C2, whose first coordinate is k - p
        const int top = max_row(family, params);
        Ladder ladder{{family, params, n, 0}, {}};
        for (int r = 0; r <= top; ++r)
            ladder.rows.push_back(row_chain(family == FamilyId::C2 ? top - r : r, 0));
        out.push_back(std::move(ladder));
    }
    for (const auto& ladder : out) check_ladder(ladder);
    return out;
}

std::vector<Ladder> assemble_ladders(int n, unsigned threads) {
    const auto tuples = enumerate_family_params(n);
    auto per_tuple = parallel_map(tuples.size(), threads,
                                  [&](std::size_t idx) { return ladders_for(tuples[idx], n); });
    std::vector<Ladder> out;
    for (auto& group : per_tuple)
        for (auto& ladder : group) out.push_back(std::move(ladder));
    return out;
}

std::vector<Chain> peel(const Ladder& ladder, Orientation orientation) {
    const auto& rows = ladder.rows;
    const int n = ladder.key.n;
    const long long last_row = static_cast<long long>(ladder.row_count()) - 1;
    const long long last_col = static_cast<long long>(ladder.column_count()) - 1;

    auto at = [&](long long r, long long c) -> const LatticePoint& { return rows[r].points[c]; };

    std::vector<Chain> out;
    auto emit = [&](std::vector<LatticePoint> points, int layer) {
        Chain chain;
        chain.points = std::move(points);
        chain.provenance.family = ladder.key.family;
        chain.provenance.params = ladder.key.params;
        chain.provenance.l2k_layer = ladder.key.l2k_layer;
        chain.provenance.peel_layer = layer;
        chain.provenance.orientation = orientation;
        if (!is_saturated(chain, n) || !is_symmetric(chain, n))
            throw ConstructionError("ladder " + to_string(ladder.key) + ": peel layer " +
                                    std::to_string(layer) + " under " +
                                    std::string(orientation_name(orientation)) +
                                    " is not a symmetric saturated chain");
        out.push_back(std::move(chain));
    };

    for (long long t = 0;; ++t) {
        const long long r0 = t, r1 = last_row - t, c0 = t, c1 = last_col - t;
        if (r0 > r1 || c0 > c1) break;
        const int layer = static_cast<int>(t);
        std::vector<LatticePoint> corner, other;

        if (r0 == r1) {
            for (long long c = c0; c <= c1; ++c) corner.push_back(at(r0, c));
            emit(std::move(corner), layer);
            break;
        }
        if (c0 == c1) {
            for (long long r = r0; r <= r1; ++r) corner.push_back(at(r, c0));
            emit(std::move(corner), layer);
            break;
        }

        if (orientation == Orientation::LeftBottom) {
            for (long long r = r0; r <= r1; ++r) corner.push_back(at(r, c0));
            for (long long c = c0 + 1; c <= c1; ++c) corner.push_back(at(r1, c));
            for (long long c = c0 + 1; c <= c1; ++c) other.push_back(at(r0, c));
            for (long long r = r0 + 1; r < r1; ++r) other.push_back(at(r, c1));
        } else {
            for (long long c = c0; c <= c1; ++c) corner.push_back(at(r0, c));
            for (long long r = r0 + 1; r <= r1; ++r) corner.push_back(at(r, c1));
            for (long long r = r0 + 1; r <= r1; ++r) other.push_back(at(r, c0));
            for (long long c = c0 + 1; c < c1; ++c) other.push_back(at(r1, c));
        }
        emit(std::move(corner), layer);
        emit(std::move(other), layer);
    }
    return out;
}

std::vector<Chain> peel_with_mode(const Ladder& ladder, OrientationMode mode,
                                  std::vector<FallbackEvent>& fallbacks) {
    switch (mode) {
    case OrientationMode::LeftBottom:
        return peel(ladder, Orientation::LeftBottom);
    case OrientationMode::TopRight:
        return peel(ladder, Orientation::TopRight);
    case OrientationMode::Auto:
        break;
    }
    try {
        return peel(ladder, Orientation::LeftBottom);
    } catch (const ConstructionError& first) {
        try {
            auto chains = peel(ladder, Orientation::TopRight);
            fallbacks.push_back({ladder.key, first.what()});
            return chains;
        } catch (const ConstructionError& second) {
            throw ConstructionError(std::string("both orientations failed: ") + first.what() +
                                    "; " + second.what());
        }
    }
}

ScdResult scd(int n, const ScdOptions& options) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n > kMaxPackedN) throw std::invalid_argument("n exceeds the packed-key limit");

    std::vector<FamilyTuple> tuples;
    for (const auto& t : enumerate_family_params(n))
        if (!options.drop_family || t.family != *options.drop_family) tuples.push_back(t);

    struct Partial {
        std::vector<Chain> chains;
        std::vector<FallbackEvent> fallbacks;
        std::size_t ladders = 0;
    };
    auto partials = parallel_map(tuples.size(), options.threads, [&](std::size_t idx) {
        Partial part;
        for (const Ladder& ladder : ladders_for(tuples[idx], n)) {
            auto chains = peel_with_mode(ladder, options.orientation, part.fallbacks);
            for (auto& c : chains) part.chains.push_back(std::move(c));
            ++part.ladders;
        }
        return part;
    });

    ScdResult result;
    result.n = n;
    for (auto& part : partials) {
        for (auto& c : part.chains) result.chains.push_back(std::move(c));
        for (auto& f : part.fallbacks) result.fallbacks.push_back(std::move(f));
        result.ladder_count += part.ladders;
    }
    return result;
}

}  // namespace l5scd
