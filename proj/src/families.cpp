#include "l5scd/families.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace l5scd {

namespace {

// ---------------------------------------------------------------------------
// Affine expressions over the table symbols
// ---------------------------------------------------------------------------

enum Var { kI, kJ, kK, kU, kW, kP, kQ, kN, kVarCount };

struct Env {
    std::array<int, kVarCount> value{};
};

struct Affine {
    int constant = 0;
    std::array<int, kVarCount> coef{};

    int eval(const Env& env) const {
        int v = constant;
        for (int s = 0; s < kVarCount; ++s) v += coef[s] * env.value[s];
        return v;
    }
};

constexpr Affine symbol(Var v) {
    Affine a;
    a.coef[v] = 1;
    return a;
}

constexpr Affine lift(int c) {
    Affine a;
    a.constant = c;
    return a;
}

constexpr Affine operator+(Affine a, const Affine& b) {
    a.constant += b.constant;
    for (int s = 0; s < kVarCount; ++s) a.coef[s] += b.coef[s];
    return a;
}
constexpr Affine operator*(int c, Affine a) {
    a.constant *= c;
    for (auto& x : a.coef) x *= c;
    return a;
}
constexpr Affine operator-(const Affine& a) { return -1 * a; }
constexpr Affine operator-(const Affine& a, const Affine& b) { return a + (-b); }
constexpr Affine operator+(const Affine& a, int c) { return a + lift(c); }
constexpr Affine operator+(int c, const Affine& a) { return lift(c) + a; }
constexpr Affine operator-(const Affine& a, int c) { return a + lift(-c); }
constexpr Affine operator-(int c, const Affine& a) { return lift(c) - a; }

namespace sym {
constexpr Affine i = symbol(kI);
constexpr Affine j = symbol(kJ);
constexpr Affine k = symbol(kK);
constexpr Affine u = symbol(kU);
constexpr Affine w = symbol(kW);
constexpr Affine p = symbol(kP);
constexpr Affine q = symbol(kQ);
constexpr Affine n = symbol(kN);
constexpr Affine zero = lift(0);
}  // namespace sym

// ---------------------------------------------------------------------------
// Table encoding
// ---------------------------------------------------------------------------

/// One abbreviated segment between two printed rows. Coordinates are 1-based
/// to read like the tables.
struct Step {
    int coord = 0;
    Affine target;
    int partner = 0;  // nonzero: zigzag, coord leads and alternates with partner
    Affine partner_target;
};

Step move(int coord, Affine target) { return Step{coord, target, 0, {}}; }

Step zigzag(int leader, Affine leader_target, int partner, Affine partner_target) {
    return Step{leader, leader_target, partner, partner_target};
}

using Row = std::array<Affine, kParts>;

struct Table {
    Row start;
    std::vector<Step> steps;
    // C6 only: on equality in the header condition the chain begins at the
    // shaded row and continues from steps[resume_at].
    std::optional<Row> shaded_start;
    std::size_t resume_at = 0;
};

Table make_table(FamilyId family) {
    using namespace sym;
    switch (family) {
    case FamilyId::C1:
        return {{p, k, j + k, 1 + i + j + 2 * k, 1 + i + 2 * j + 2 * k},
                {move(3, 1 + i + j + k + p),
                 move(2, 1 + i + j + k),
                 move(1, 1 + i + k),
                 move(5, -k + n + p),
                 move(4, -k + n),
                 move(3, -j - k + n),
                 move(2, -1 - i - j - 2 * k + n),
                 move(1, -1 - i - 2 * j - 2 * k + n)},
                {}, 0};
    case FamilyId::C2:
        return {{k - p, k, j + k, 1 + i + j + 2 * k, 2 + i + 2 * j + 2 * k},
                {move(5, -1 - i - k + n),
                 move(4, -1 - i - j - k + n),
                 move(3, -1 - i - j - k + n - p),
                 move(2, -1 - i - j - 2 * k + n),
                 move(1, -1 - i - 2 * j - 2 * k + n),
                 move(5, n - p),
                 move(4, -k + n),
                 move(3, -1 - j - k + n)},
                {}, 0};
    case FamilyId::C3:
        return {{2 * j, i + 2 * j + p, i + 2 * j + 2 * k + u, 2 * i + 4 * j + 2 * k + u,
                 2 * i + 4 * j + 4 * k + 2 * u},
                {zigzag(1, i + 2 * j, 3, 2 * i + 2 * j + 2 * k + u),
                 move(5, -2 * j + n),
                 move(4, -i - 2 * j - 2 * k + n + p - u),
                 move(3, -i - 2 * j - 2 * k + n - u),
                 move(2, -2 * i - 4 * j - 2 * k + n - u),
                 move(1, -2 * i - 4 * j - 4 * k + n - 2 * u)},
                {}, 0};
    case FamilyId::C4:
        return {{1 + 2 * j, 1 + i + 2 * j + p, 1 + i + 2 * j + 2 * k + u,
                 2 + 2 * i + 4 * j + 2 * k + u, 3 + 2 * i + 4 * j + 4 * k + 2 * u},
                {zigzag(3, 1 + 2 * i + 2 * j + 2 * k + u, 1, 1 + i + 2 * j),
                 move(5, -1 - 2 * j + n),
                 move(4, -1 - i - 2 * j - 2 * k + n + p - u),
                 move(3, -1 - i - 2 * j - 2 * k + n - u),
                 move(2, -2 - 2 * i - 4 * j - 2 * k + n - u),
                 move(1, -3 - 2 * i - 4 * j - 4 * k + n - 2 * u)},
                {}, 0};
    case FamilyId::C5:
        return {{2 * j, 1 + i + 2 * j + p, 1 + i + 2 * j + 2 * k + u,
                 2 + 2 * i + 4 * j + 2 * k + u, 3 + 2 * i + 4 * j + 4 * k + 2 * u},
                {move(5, -1 - i - 2 * j + n),
                 move(4, -1 - i - 2 * j - 2 * k + n + p - u),
                 move(3, -2 - 2 * i - 2 * j - 2 * k + n - u),
                 move(2, -2 - 2 * i - 4 * j - 2 * k + n - u),
                 move(1, -2 - 2 * i - 4 * j - 4 * k + n - 2 * u),
                 zigzag(3, -1 - i - 2 * j - 2 * k + n - u, 5, -1 - 2 * j + n)},
                {}, 0};
    case FamilyId::C6:
        return {{1 + 2 * j, 2 + i + 2 * j + p, 2 + i + 2 * j + 2 * k + u,
                 4 + 2 * i + 4 * j + 2 * k + u, 6 + 2 * i + 4 * j + 4 * k + 2 * u},
                {move(5, -2 - i - 2 * j + n),
                 move(4, 5 + 2 * i + 4 * j + 2 * k + u),
                 move(4, -2 - i - 2 * j - 2 * k + n + p - u),
                 move(3, -3 - 2 * i - 2 * j - 2 * k + n - u),
                 move(2, -4 - 2 * i - 4 * j - 2 * k + n - u),
                 move(1, -5 - 2 * i - 4 * j - 4 * k + n - 2 * u),
                 zigzag(5, -1 - 2 * j + n, 3, -3 - i - 2 * j - 2 * k + n - u)},
                Row{1 + 2 * j, 2 + i + 2 * j + p, 2 + i + 2 * j + 2 * k + u,
                    5 + 2 * i + 4 * j + 2 * k + u, -2 - i - 2 * j + n},
                2};
    case FamilyId::C7:
        return {{1 + i, 2 + 2 * i + p + u + 2 * w, 3 + 3 * i + k + u + 2 * w,
                 4 + 4 * i + k + q + 2 * u + 4 * w, 4 + 4 * i + 2 * k + 2 * u + 4 * w},
                {move(1, 1 + i + u + 2 * w),
                 move(3, 3 + 3 * i + k + 2 * u + 4 * w),
                 move(5, 5 + 4 * i + 2 * k + 2 * u + 4 * w),
                 move(1, 1 + 2 * i + u + 2 * w),
                 move(5, 5 + 5 * i + 2 * k + 3 * u + 6 * w),
                 move(1, 2 + 2 * i + u + 2 * w)},
                {}, 0};
    case FamilyId::C8:
        return {{1 + i, 4 + 2 * i + p - u + 2 * w, 5 + 3 * i + k - u + 2 * w,
                 8 + 4 * i + k + q - 2 * u + 4 * w, 9 + 4 * i + 2 * k - 2 * u + 4 * w},
                {move(1, 3 + 2 * i - u + 2 * w),
                 move(5, 9 + 5 * i + 2 * k - 2 * u + 4 * w),
                 move(1, 4 + 2 * i - u + 2 * w),
                 move(3, 7 + 3 * i + k - 2 * u + 4 * w),
                 move(5, 10 + 5 * i + 2 * k - 3 * u + 6 * w)},
                {}, 0};
    case FamilyId::C9:
        return {{zero, p + u + 2 * w, k + u + 2 * w, k + q + 2 * u + 4 * w, 2 * k + 2 * u + 4 * w},
                {move(1, u + 2 * w),
                 move(3, k + 2 * u + 4 * w),
                 move(5, 2 * k + 3 * u + 6 * w)},
                {}, 0};
    }
    throw std::invalid_argument("unknown family");
}

const Table& table_for(FamilyId family) {
    static const std::array<Table, 9> tables = [] {
        std::array<Table, 9> t;
        for (FamilyId f : kAllFamilies) t[static_cast<int>(f) - 1] = make_table(f);
        return t;
    }();
    return tables[static_cast<int>(family) - 1];
}

/// Left-hand side of the C6 header inequality.
int c6_floor(const FamilyParams& fp) { return 2 * fp.u + 7 + 6 * fp.j + 4 * fp.k + 3 * fp.i; }

std::string describe(const FamilyInstance& inst) {
    const auto& fp = inst.params;
    return std::string(family_name(inst.family)) + "(i=" + std::to_string(fp.i) +
           ",j=" + std::to_string(fp.j) + ",k=" + std::to_string(fp.k) +
           ",u=" + std::to_string(fp.u) + ",w=" + std::to_string(fp.w) +
           ") p=" + std::to_string(inst.row.p) + " q=" + std::to_string(inst.row.q) +
           " n=" + std::to_string(inst.n);
}

class ChainBuilder {
public:
    ChainBuilder(const FamilyInstance& inst, LatticePoint start) : inst_(inst), cur_(start) {
        if (!is_valid(cur_, inst_.n))
            fail("start row " + to_string(cur_) + " is not a lattice point");
        points_.push_back(cur_);
    }

    void single(int coord, int target) {
        int& v = cur_[coord - 1];
        if (target < v)
            fail("coordinate " + std::to_string(coord) + " would decrease from " +
                 std::to_string(v) + " to " + std::to_string(target));
        while (v < target) bump(coord);
    }

    void alternate(int leader, int leader_target, int partner, int partner_target) {
        const int lead_steps = leader_target - cur_[leader - 1];
        const int partner_steps = partner_target - cur_[partner - 1];
        if (partner_steps < 0 || (lead_steps != partner_steps && lead_steps != partner_steps + 1))
            fail("zigzag on coordinates " + std::to_string(leader) + "/" +
                 std::to_string(partner) + " has step counts " + std::to_string(lead_steps) +
                 "/" + std::to_string(partner_steps));
        for (int s = 0; s < partner_steps; ++s) {
            bump(leader);
            bump(partner);
        }
        if (lead_steps > partner_steps) bump(leader);
    }

    std::vector<LatticePoint> take() && { return std::move(points_); }

private:
    void bump(int coord) {
        ++cur_[coord - 1];
        if (!covers(points_.back(), cur_, inst_.n))
            fail("step to " + to_string(cur_) + " is not a covering step");
        points_.push_back(cur_);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ConstructionError(describe(inst_) + ": " + what);
    }

    const FamilyInstance& inst_;
    LatticePoint cur_;
    std::vector<LatticePoint> points_;
};

}  // namespace

std::string_view family_name(FamilyId f) {
    static constexpr std::array<std::string_view, 9> names = {"C1", "C2", "C3", "C4", "C5",
                                                              "C6", "C7", "C8", "C9"};
    return names[static_cast<int>(f) - 1];
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (FamilyId f : kAllFamilies)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

std::string_view orientation_name(Orientation o) {
    return o == Orientation::LeftBottom ? "left-bottom" : "top-right";
}

bool family_condition(FamilyId family, const FamilyParams& fp, int n) {
    const auto [i, j, k, u, w] = fp;
    if (i < 0 || j < 0 || k < 0 || u < 0 || w < 0) return false;
    switch (family) {
    case FamilyId::C1:
        return u == 0 && w == 0 && 2 + 2 * i + 2 * j + 3 * k <= n;
    case FamilyId::C2:
        return u == 0 && w == 0 && 3 + 2 * i + 2 * j + 3 * k <= n;
    case FamilyId::C3:
        return u <= 1 && w == 0 && 2 * u + 1 + 6 * j + 4 * k + 3 * i <= n;
    case FamilyId::C4:
    case FamilyId::C5:
        return u <= 1 && w == 0 && 2 * u + 4 + 6 * j + 4 * k + 3 * i <= n;
    case FamilyId::C6:
        return u <= 1 && w == 0 && 2 * u + 7 + 6 * j + 4 * k + 3 * i <= n;
    case FamilyId::C7:
        return j == 0 && u == n % 2 && 6 + 3 * u + 6 * w + 6 * i + 2 * k == n;
    case FamilyId::C8:
        return j == 0 && u == n % 2 && 12 - 3 * u + 6 * w + 6 * i + 2 * k == n;
    case FamilyId::C9:
        return i == 0 && j == 0 && u == n % 2 && 2 * k + 3 * u + 6 * w == n;
    }
    return false;
}

std::vector<FamilyTuple> enumerate_family_params(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<FamilyTuple> out;
    for (FamilyId f : kAllFamilies) {
        const int fi = static_cast<int>(f);
        const int i_max = f == FamilyId::C9 ? 0 : n;
        const int j_max = fi <= 6 ? n : 0;
        const int u_lo = fi <= 2 ? 0 : fi <= 6 ? 0 : n % 2;
        const int u_hi = fi <= 2 ? 0 : fi <= 6 ? 1 : n % 2;
        const int w_max = fi >= 7 ? n : 0;
        for (int i = 0; i <= i_max; ++i)
            for (int j = 0; j <= j_max; ++j)
                for (int k = 0; k <= n; ++k)
                    for (int u = u_lo; u <= u_hi; ++u)
                        for (int w = 0; w <= w_max; ++w) {
                            const FamilyParams fp{i, j, k, u, w};
                            if (family_condition(f, fp, n)) out.push_back({f, fp});
                        }
    }
    return out;
}

int max_row(FamilyId family, const FamilyParams& params) {
    const int fi = static_cast<int>(family);
    return fi >= 3 && fi <= 6 ? 2 * params.k + params.u : params.k;
}

bool row_in_range(FamilyId family, const FamilyParams& params, const RowIndex& row) {
    const int top = max_row(family, params);
    if (row.p < 0 || row.p > top) return false;
    return uses_pair_rows(family) ? row.q >= 0 && row.q <= row.p : row.q == 0;
}

Chain materialize_chain(const FamilyInstance& inst) {
    if (!family_condition(inst.family, inst.params, inst.n))
        throw std::invalid_argument(describe(inst) + ": parameters violate the family condition");
    if (!row_in_range(inst.family, inst.params, inst.row))
        throw std::invalid_argument(describe(inst) + ": row index out of range");

    Env env;
    env.value = {inst.params.i, inst.params.j, inst.params.k, inst.params.u,
                 inst.params.w, inst.row.p,    inst.row.q,    inst.n};

    const Table& table = table_for(inst.family);
    const bool from_shaded = table.shaded_start && c6_floor(inst.params) == inst.n;
    const Row& start_row = from_shaded ? *table.shaded_start : table.start;

    LatticePoint start;
    for (int c = 0; c < kParts; ++c) start[c] = start_row[c].eval(env);

    ChainBuilder builder(inst, start);
    for (std::size_t s = from_shaded ? table.resume_at : 0; s < table.steps.size(); ++s) {
        const Step& step = table.steps[s];
        if (step.partner == 0) {
            builder.single(step.coord, step.target.eval(env));
        } else {
            builder.alternate(step.coord, step.target.eval(env), step.partner,
                              step.partner_target.eval(env));
        }
    }

    Chain chain;
    chain.points = std::move(builder).take();
    chain.provenance.family = inst.family;
    chain.provenance.params = inst.params;
    chain.provenance.row = inst.row;
    return chain;
}

std::vector<Chain> materialize_all(int n) {
    std::vector<Chain> out;
    for (const auto& [family, params] : enumerate_family_params(n)) {
        const int top = max_row(family, params);
        for (int p = 0; p <= top; ++p) {
            const int q_top = uses_pair_rows(family) ? p : 0;
            for (int q = 0; q <= q_top; ++q)
                out.push_back(materialize_chain({family, params, {p, q}, n}));
        }
    }
    return out;
}

std::vector<std::vector<GridPair>> l2k_scd(int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<std::vector<GridPair>> out;
    for (int t = 0; t <= k / 2; ++t) {
        std::vector<GridPair> chain;
        for (int p = t; p <= k - t; ++p) chain.push_back({t, p});
        for (int q = t + 1; q <= k - t; ++q) chain.push_back({q, k - t});
        out.push_back(std::move(chain));
    }
    return out;
}

}  // namespace l5scd
