#include <algorithm>
#include <map>
#include <tuple>

#include "doctest.h"
#include "l5scd/ladder.hpp"
#include "l5scd/verify.hpp"

using namespace l5scd;

namespace {

LatticePoint pt(int a1, int a2, int a3, int a4, int a5) { return LatticePoint{{a1, a2, a3, a4, a5}}; }

using Dims = std::tuple<FamilyId, std::size_t, std::size_t>;

std::vector<Dims> dims(const std::vector<Ladder>& ladders) {
    std::vector<Dims> out;
    for (const auto& l : ladders) out.emplace_back(l.key.family, l.row_count(), l.column_count());
    return out;
}

Chain chain_of(std::vector<LatticePoint> pts) {
    Chain c;
    c.points = std::move(pts);
    return c;
}

// 2x2 ladder in L(5,2) whose left edge is fine but whose bottom row is not
// saturated, so only the top-right perimeter works.
Ladder lopsided_ladder() {
    Ladder l;
    l.key = {FamilyId::C1, {}, 2, 0};
    l.rows.push_back(chain_of({pt(0, 0, 1, 1, 2), pt(0, 0, 1, 2, 2)}));
    l.rows.push_back(chain_of({pt(1, 1, 1, 1, 1), pt(0, 1, 1, 2, 2)}));
    return l;
}

}  // namespace

TEST_CASE("assemble_ladders fixtures") {
    CHECK(dims(assemble_ladders(0)) == std::vector<Dims>{{FamilyId::C9, 1, 1}});
    CHECK(dims(assemble_ladders(2)) ==
          std::vector<Dims>{{FamilyId::C1, 1, 7}, {FamilyId::C3, 1, 11}, {FamilyId::C9, 3, 1}});

    const auto n3 = assemble_ladders(3);
    CHECK(dims(n3) == std::vector<Dims>{{FamilyId::C1, 1, 12},
                                        {FamilyId::C2, 1, 10},
                                        {FamilyId::C3, 1, 16},
                                        {FamilyId::C3, 2, 7},
                                        {FamilyId::C9, 1, 4}});
    CHECK(n3[2].key.params.u == 0);
    CHECK(n3[3].key.params.u == 1);
    std::size_t points = 0;
    for (const auto& l : n3) points += l.row_count() * l.column_count();
    CHECK(points == 56);
}

TEST_CASE("C2 rows run from p = k down to p = 0") {
    // first C2 ladder with k >= 1
    for (const auto& l : assemble_ladders(12)) {
        if (l.key.family != FamilyId::C2 || l.key.params.k == 0) continue;
        CHECK(l.rows.front().provenance.row.p == l.key.params.k);
        CHECK(l.rows.back().provenance.row.p == 0);
        return;
    }
    FAIL("no C2 ladder with k >= 1 at n=12");
}

TEST_CASE("ladders are thread-count independent") {
    const auto a = assemble_ladders(17, 1);
    const auto b = assemble_ladders(17, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        CHECK(a[idx].key == b[idx].key);
        REQUIRE(a[idx].row_count() == b[idx].row_count());
        for (std::size_t r = 0; r < a[idx].row_count(); ++r)
            CHECK(a[idx].rows[r].points == b[idx].rows[r].points);
    }
}

TEST_CASE("ladder invariants and endpoint rank pairing hold (n <= 30)") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& ladder : assemble_ladders(n)) {
            CAPTURE(to_string(ladder.key));
            CHECK_NOTHROW(check_ladder(ladder));
            const std::size_t last = ladder.row_count() - 1;
            for (std::size_t r = 0; r <= last; ++r)
                CHECK(rank(ladder.rows[r].front()) + rank(ladder.rows[last - r].back()) == 5 * n);
        }
    }
}

TEST_CASE("check_ladder rejects broken ladders") {
    Ladder l = lopsided_ladder();
    CHECK_THROWS_AS(check_ladder(l), ConstructionError);

    Ladder ragged;
    ragged.key = {FamilyId::C1, {}, 1, 0};
    ragged.rows.push_back(chain_of({pt(0, 0, 0, 0, 0), pt(0, 0, 0, 0, 1)}));
    ragged.rows.push_back(chain_of({pt(0, 0, 0, 0, 1)}));
    CHECK_THROWS_WITH_AS(check_ladder(ragged), doctest::Contains("row 1 has 1 points"),
                         ConstructionError);

    Ladder empty;
    CHECK_THROWS_AS(check_ladder(empty), ConstructionError);
}

TEST_CASE("peel fixtures") {
    SUBCASE("a one-row ladder is its own chain") {
        const auto ladders = assemble_ladders(2);
        const Ladder& c1 = ladders[0];
        const auto out = peel(c1, Orientation::LeftBottom);
        REQUIRE(out.size() == 1);
        CHECK(out[0].points == c1.rows[0].points);
        CHECK(verify_peel_conservation(c1, out));
    }
    SUBCASE("C9 column at n=2") {
        const auto ladders = assemble_ladders(2);
        const Ladder& c9 = ladders[2];
        for (Orientation o : {Orientation::LeftBottom, Orientation::TopRight}) {
            const auto out = peel(c9, o);
            REQUIRE(out.size() == 1);
            CHECK(out[0].points ==
                  std::vector<LatticePoint>{pt(0, 0, 1, 1, 2), pt(0, 1, 1, 1, 2), pt(0, 1, 1, 2, 2)});
            CHECK(rank(out[0].front()) + rank(out[0].back()) == 10);
        }
    }
    SUBCASE("C3 u=1 at n=3") {
        const auto ladders = assemble_ladders(3);
        const Ladder& c3 = ladders[3];
        const auto out = peel(c3, Orientation::LeftBottom);
        REQUIRE(out.size() == 2);
        CHECK(rank(out[0].front()) == 4);
        CHECK(rank(out[0].back()) == 11);
        CHECK(rank(out[1].front()) == 5);
        CHECK(rank(out[1].back()) == 10);
        // corner chain: row 0's first point, then all of row 1
        CHECK(out[0].front() == c3.rows[0].front());
        CHECK(std::equal(c3.rows[1].points.begin(), c3.rows[1].points.end(), out[0].points.begin() + 1));
        CHECK(verify_peel_conservation(c3, out));
        CHECK(out[0].provenance.peel_layer == 0);
        CHECK(out[1].provenance.orientation == Orientation::LeftBottom);
    }
}

TEST_CASE("peel properties on every ladder (n <= 24)") {
    std::size_t checked = 0;
    for (int n = 0; n <= 24; ++n) {
        for (const auto& ladder : assemble_ladders(n)) {
            CAPTURE(to_string(ladder.key));
            const auto out = peel(ladder, Orientation::LeftBottom);
            CHECK(out.size() == std::min(ladder.row_count(), ladder.column_count()));
            CHECK(verify_peel_conservation(ladder, out));
            for (const auto& c : out) {
                CHECK(is_saturated(c, n));
                CHECK(is_symmetric(c, n));
            }
            // the two extreme corners share the outermost chain
            const auto& lo = ladder.rows.front().front();
            const auto& hi = ladder.rows.back().back();
            CHECK(out[0].front() == lo);
            CHECK(out[0].back() == hi);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("the alternate orientation is also valid on every ladder (n <= 24)") {
    for (int n = 0; n <= 24; ++n)
        for (const auto& ladder : assemble_ladders(n)) {
            CAPTURE(to_string(ladder.key));
            const auto out = peel(ladder, Orientation::TopRight);
            CHECK(verify_peel_conservation(ladder, out));
        }
}

TEST_CASE("peel errors and orientation fallback") {
    const Ladder l = lopsided_ladder();
    CHECK_THROWS_AS(peel(l, Orientation::LeftBottom), ConstructionError);
    CHECK_NOTHROW(peel(l, Orientation::TopRight));

    std::vector<FallbackEvent> events;
    CHECK_THROWS_AS(peel_with_mode(l, OrientationMode::LeftBottom, events), ConstructionError);
    CHECK(events.empty());

    const auto out = peel_with_mode(l, OrientationMode::Auto, events);
    REQUIRE(events.size() == 1);
    CHECK(events[0].key == l.key);
    REQUIRE(out.size() == 2);
    CHECK(out[0].provenance.orientation == Orientation::TopRight);
    CHECK(verify_peel_conservation(l, out));

    // neither orientation: swap the columns of the top row
    Ladder hopeless = l;
    std::swap(hopeless.rows[0].points[0], hopeless.rows[0].points[1]);
    CHECK_THROWS_WITH_AS(peel_with_mode(hopeless, OrientationMode::Auto, events),
                         doctest::Contains("both orientations failed"), ConstructionError);
}

TEST_CASE("scd fixtures") {
    const auto n0 = scd(0);
    REQUIRE(n0.chains.size() == 1);
    CHECK(n0.chains[0].size() == 1);

    const auto n1 = scd(1);
    REQUIRE(n1.chains.size() == 1);
    CHECK(n1.chains[0].size() == 6);

    std::vector<std::size_t> sizes;
    for (const auto& c : scd(2).chains) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{7, 11, 3});

    const auto n3 = scd(3);
    CHECK(n3.chains.size() == 6);
    CHECK(n3.ladder_count == 5);
    std::size_t points = 0;
    std::map<std::pair<FamilyId, int>, int> breakdown;
    for (const auto& c : n3.chains) {
        points += c.size();
        ++breakdown[{c.provenance.family, c.provenance.params.u}];
    }
    CHECK(points == 56);
    CHECK(breakdown == std::map<std::pair<FamilyId, int>, int>{{{FamilyId::C1, 0}, 1},
                                                               {{FamilyId::C2, 0}, 1},
                                                               {{FamilyId::C3, 0}, 1},
                                                               {{FamilyId::C3, 1}, 2},
                                                               {{FamilyId::C9, 1}, 1}});
}

TEST_CASE("scd chain count equals the largest rank size (n <= 30)") {
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        const auto result = scd(n);
        CHECK(result.fallbacks.empty());
        CHECK(result.chains.size() == rank_sizes({kParts, n}).at(5 * n / 2));
    }
}

TEST_CASE("scd output is independent of the thread count") {
    const auto a = scd(21, {OrientationMode::Auto, 1, {}});
    const auto b = scd(21, {OrientationMode::Auto, 3, {}});
    REQUIRE(a.chains.size() == b.chains.size());
    for (std::size_t idx = 0; idx < a.chains.size(); ++idx) {
        CHECK(a.chains[idx].points == b.chains[idx].points);
        CHECK(a.chains[idx].provenance.family == b.chains[idx].provenance.family);
    }
}

TEST_CASE("scd argument checks and fault injection") {
    CHECK_THROWS_AS(scd(-1), std::invalid_argument);
    CHECK_THROWS_AS(scd(kMaxPackedN + 1), std::invalid_argument);
    const auto full = scd(6);
    const auto dropped = scd(6, {OrientationMode::Auto, 1, FamilyId::C3});
    CHECK(dropped.chains.size() < full.chains.size());
    for (const auto& c : dropped.chains) CHECK(c.provenance.family != FamilyId::C3);
}
