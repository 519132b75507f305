#include "l5scd/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "l5scd/families.hpp"
#include "l5scd/ladder.hpp"
#include "l5scd/parallel.hpp"

namespace l5scd {

namespace {

template <typename T>
void sample(std::vector<T>& into, T value) {
    if (into.size() < kSampleLimit) into.push_back(std::move(value));
}

constexpr int kExponentBits = 10;

std::uint64_t pack_exponents(const WeightExponents& w) {
    std::uint64_t key = 0;
    for (int v : w.e) key = (key << kExponentBits) | static_cast<std::uint64_t>(v);
    return key;
}

WeightExponents unpack_exponents(std::uint64_t key) {
    WeightExponents w;
    for (int c = kParts; c >= 0; --c) {
        w.e[c] = static_cast<int>(key & ((1u << kExponentBits) - 1));
        key >>= kExponentBits;
    }
    return w;
}

/// Every weak composition of `degree` into six parts, ascending by packed key.
std::vector<std::uint64_t> all_monomials(int degree) {
    std::vector<std::uint64_t> out;
    WeightExponents w;
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == kParts) {
            w.e[slot] = left;
            out.push_back(pack_exponents(w));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            w.e[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::string point_list(const std::vector<LatticePoint>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
    return s;
}

}  // namespace

VerificationReport gf_degree_check(int n) {
    if (n < 0 || n >= (1 << kExponentBits)) throw std::invalid_argument("degree out of range");
    VerificationReport out;
    out.n = n;
    const auto chains = materialize_all(n);
    out.chain_count = chains.size();

    std::vector<std::uint64_t> keys;
    for (const auto& chain : chains) {
        for (const auto& pt : chain.points) {
            const WeightExponents w = weight(pt, n);
            const bool ok = w.degree() == n &&
                            std::all_of(w.e.begin(), w.e.end(), [](int v) { return v >= 0; });
            if (!ok) {
                ++out.unexpected_count;
                sample(out.unexpected, pt);
                continue;
            }
            keys.push_back(pack_exponents(w));
        }
    }
    std::sort(keys.begin(), keys.end());

    // weight is inverted by a_c = e5 + e4 + ... + e_{6-c}
    auto point_of = [&](std::uint64_t key) {
        const WeightExponents w = unpack_exponents(key);
        LatticePoint p;
        int acc = 0;
        for (int c = 0; c < kParts; ++c) {
            acc += w.e[kParts - c];
            p[c] = acc;
        }
        return p;
    };

    const auto expected = all_monomials(n);
    std::size_t e = 0;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        if (idx > 0 && keys[idx] == keys[idx - 1]) {
            ++out.duplicate_count;
            sample(out.duplicates, point_of(keys[idx]));
            continue;
        }
        ++out.total_points;
        while (e < expected.size() && expected[e] < keys[idx]) {
            ++out.missing_count;
            sample(out.missing, point_of(expected[e]));
            ++e;
        }
        if (e < expected.size() && expected[e] == keys[idx]) ++e;
    }
    for (; e < expected.size(); ++e) {
        ++out.missing_count;
        sample(out.missing, point_of(expected[e]));
    }
    out.finalize();
    return out;
}

bool is_saturated(const Chain& chain, int n) {
    if (chain.points.empty()) return false;
    if (!is_valid(chain.points.front(), n)) return false;
    for (std::size_t s = 1; s < chain.points.size(); ++s)
        if (!covers(chain.points[s - 1], chain.points[s], n)) return false;
    return true;
}

bool is_symmetric(const Chain& chain, int n) {
    return !chain.points.empty() && rank(chain.front()) + rank(chain.back()) == kParts * n;
}

int WeightExponents::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

WeightExponents weight(const LatticePoint& point, int n) {
    WeightExponents w;
    w.e[0] = n - point[kParts - 1];
    for (int c = 1; c < kParts; ++c) w.e[c] = point[kParts - c] - point[kParts - c - 1];
    w.e[kParts] = point[0];
    return w;
}

void VerificationReport::finalize() {
    pass = duplicate_count == 0 && missing_count == 0 && unexpected_count == 0 &&
           chain_failure_count == 0 && profile_mismatches.empty();
}

std::string VerificationReport::summary() const {
    return "n=" + std::to_string(n) + " points=" + std::to_string(total_points) +
           " chains=" + std::to_string(chain_count) + (pass ? " pass" : " FAIL") + details();
}

std::string VerificationReport::details() const {
    std::string s;
    if (duplicate_count) s += "\n  duplicates=" + std::to_string(duplicate_count) + ": " + point_list(duplicates);
    if (missing_count) s += "\n  missing=" + std::to_string(missing_count) + ": " + point_list(missing);
    if (unexpected_count) s += "\n  unexpected=" + std::to_string(unexpected_count) + ": " + point_list(unexpected);
    for (const auto& f : chain_failures) s += "\n  chain: " + f;
    for (const auto& f : profile_mismatches) s += "\n  profile: " + f;
    return s;
}

VerificationReport verify_partition(std::span<const Chain> chains, int n) {
    if (n < 0 || n > kMaxPackedN) throw std::invalid_argument("n out of range");
    VerificationReport report;
    report.n = n;
    report.chain_count = chains.size();

    std::vector<std::uint64_t> keys;
    for (std::size_t idx = 0; idx < chains.size(); ++idx) {
        const Chain& chain = chains[idx];
        report.total_points += chain.size();
        const bool saturated = is_saturated(chain, n);
        const bool symmetric = is_symmetric(chain, n);
        if (!saturated || !symmetric) {
            ++report.chain_failure_count;
            sample(report.chain_failures,
                   "chain " + std::to_string(idx) + (saturated ? "" : " not saturated") +
                       (symmetric ? "" : " not symmetric"));
        }
        for (const auto& pt : chain.points) {
            if (!is_valid(pt, n)) {
                ++report.unexpected_count;
                sample(report.unexpected, pt);
            } else {
                keys.push_back(pack(pt));
            }
        }
    }
    std::sort(keys.begin(), keys.end());

    const auto expected = enumerate_lattice(n);
    std::size_t e = 0;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        if (idx > 0 && keys[idx] == keys[idx - 1]) {
            ++report.duplicate_count;
            sample(report.duplicates, unpack(keys[idx]));
            continue;
        }
        while (e < expected.size() && pack(expected[e]) < keys[idx]) {
            ++report.missing_count;
            sample(report.missing, expected[e]);
            ++e;
        }
        if (e < expected.size() && pack(expected[e]) == keys[idx]) ++e;
    }
    for (; e < expected.size(); ++e) {
        ++report.missing_count;
        sample(report.missing, expected[e]);
    }
    report.finalize();
    return report;
}

std::vector<std::string> chain_profile_mismatches(std::span<const Chain> chains, int n) {
    const RankProfile profile = rank_sizes({kParts, n});
    const int middle = kParts * n / 2;
    std::vector<std::uint64_t> starts(middle + 1, 0);
    std::uint64_t late = 0;
    for (const auto& chain : chains) {
        if (chain.points.empty()) continue;
        const int r = rank(chain.front());
        if (r <= middle) {
            ++starts[r];
        } else {
            ++late;
        }
    }
    std::vector<std::string> out;
    for (int r = 0; r <= middle; ++r) {
        const std::uint64_t want = profile.at(r) - profile.at(r - 1);
        if (starts[r] != want)
            out.push_back("rank " + std::to_string(r) + ": " + std::to_string(starts[r]) +
                          " chains start here, expected " + std::to_string(want));
    }
    if (late) out.push_back(std::to_string(late) + " chains start above the middle rank");
    return out;
}

bool verify_chain_profile(std::span<const Chain> chains, int n) {
    return chain_profile_mismatches(chains, n).empty();
}

VerificationReport gf_truncated_check(int n_max, unsigned threads) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    if (n_max >= (1 << kExponentBits)) throw std::invalid_argument("n_max too large");

    const auto per_degree =
        parallel_map(static_cast<std::size_t>(n_max) + 1, threads,
                     [](std::size_t n) { return gf_degree_check(static_cast<int>(n)); });

    VerificationReport report;
    report.n = n_max;
    for (const auto& d : per_degree) {
        report.total_points += d.total_points;
        report.chain_count += d.chain_count;
        report.duplicate_count += d.duplicate_count;
        report.missing_count += d.missing_count;
        report.unexpected_count += d.unexpected_count;
        for (const auto& p : d.duplicates) sample(report.duplicates, p);
        for (const auto& p : d.missing) sample(report.missing, p);
        for (const auto& p : d.unexpected) sample(report.unexpected, p);
    }
    report.finalize();
    return report;
}

bool verify_peel_conservation(const Ladder& ladder, std::span<const Chain> peeled) {
    std::vector<std::uint64_t> before, after;
    for (const auto& row : ladder.rows)
        for (const auto& pt : row.points) before.push_back(pack(pt));
    for (const auto& chain : peeled)
        for (const auto& pt : chain.points) after.push_back(pack(pt));
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    return before == after;
}

}  // namespace l5scd
