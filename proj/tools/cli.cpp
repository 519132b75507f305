#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "l5scd/families.hpp"
#include "l5scd/ladder.hpp"
#include "l5scd/output.hpp"
#include "l5scd/parallel.hpp"
#include "l5scd/verify.hpp"

namespace l5scd::cli {

namespace {

OrientationMode parse_mode(const std::string& s) {
    if (s == "left-bottom") return OrientationMode::LeftBottom;
    if (s == "top-right") return OrientationMode::TopRight;
    return OrientationMode::Auto;
}

void report_fallbacks(const std::vector<FallbackEvent>& events, std::ostream& err) {
    for (const auto& ev : events)
        err << "orientation fallback: " << to_string(ev.key) << " (" << ev.reason << ")\n";
}

template <typename Map>
std::string braced(const Map& m) {
    std::string s = "{";
    for (const auto& [key, value] : m) {
        if (s.size() > 1) s += ", ";
        s += key + ":" + std::to_string(value);
    }
    return s + "}";
}

struct VerifyOutcome {
    std::string summary;
    std::string diagnostics;
    bool pass = false;
};

VerifyOutcome verify_one(int n, bool deep, const ScdOptions& options) {
    VerifyOutcome out;
    ScdResult result;
    try {
        result = scd(n, options);
    } catch (const ConstructionError& e) {
        out.summary = "n=" + std::to_string(n) + " construction error";
        out.diagnostics = std::string(e.what()) + "\n";
        return out;
    }
    for (const auto& ev : result.fallbacks)
        out.diagnostics += "orientation fallback: " + to_string(ev.key) + "\n";

    VerificationReport report = verify_partition(result.chains, n);
    report.profile_mismatches = chain_profile_mismatches(result.chains, n);
    report.finalize();

    bool pass = report.pass;
    if (deep) {
        const VerificationReport gf = gf_degree_check(n);
        if (!gf.pass) {
            pass = false;
            out.diagnostics += "weight coverage n=" + std::to_string(n) + gf.details() + "\n";
        }
        for (const Ladder& ladder : assemble_ladders(n)) {
            if (options.drop_family && ladder.key.family == *options.drop_family) continue;
            std::vector<FallbackEvent> ignored;
            try {
                const auto peeled = peel_with_mode(ladder, options.orientation, ignored);
                if (!verify_peel_conservation(ladder, peeled)) {
                    pass = false;
                    out.diagnostics += "peel conservation failed: " + to_string(ladder.key) + "\n";
                }
            } catch (const ConstructionError& e) {
                pass = false;
                out.diagnostics += std::string(e.what()) + "\n";
            }
        }
    }
    if (!report.pass) out.diagnostics += "n=" + std::to_string(n) + report.details() + "\n";

    out.pass = pass;
    out.summary = "n=" + std::to_string(n) + " points=" + std::to_string(report.total_points) +
                  " chains=" + std::to_string(report.chain_count) + (pass ? " pass" : " FAIL");
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric chain decomposition of Young's lattice L(5,n)", "l5scd"};
    app.require_subcommand(1);

    const std::vector<std::string> orientations = {"auto", "left-bottom", "top-right"};

    int n = 0;
    std::string format = "text";
    std::string orientation = "auto";
    unsigned threads = 1;
    auto* gen = app.add_subcommand("generate", "Write every symmetric chain of L(5,n)");
    gen->add_option("--n", n, "Box height")->required()->check(CLI::Range(0, kMaxPackedN));
    gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    gen->add_option("--orientation", orientation, "Peel orientation")
        ->check(CLI::IsMember(orientations));
    gen->add_option("--threads", threads, "Worker threads (0 = auto)");

    int n_lo = -1, n_hi = -1;
    bool deep = false;
    std::string drop;
    auto* ver = app.add_subcommand("verify", "Check the decomposition for a range of n");
    auto* single_n = ver->add_option("--n", n, "Single box height")->check(CLI::Range(0, kMaxPackedN));
    auto* lo_opt = ver->add_option("--n-lo", n_lo, "First n")->check(CLI::Range(0, kMaxPackedN));
    auto* hi_opt = ver->add_option("--n-hi", n_hi, "Last n")->check(CLI::Range(0, kMaxPackedN));
    single_n->excludes(lo_opt)->excludes(hi_opt);
    lo_opt->needs(hi_opt);
    hi_opt->needs(lo_opt);
    ver->add_flag("--deep", deep, "Also check weight coverage and peel conservation");
    ver->add_option("--orientation", orientation, "Peel orientation")
        ->check(CLI::IsMember(orientations));
    ver->add_option("--threads", threads, "Worker threads (0 = auto)");
    ver->add_option("--drop-family", drop, "Omit one family (fault injection)")->group("");

    auto* stats = app.add_subcommand("stats", "Family, ladder and chain statistics");
    stats->add_option("--n", n, "Box height")->required()->check(CLI::Range(0, kMaxPackedN));
    stats->add_option("--orientation", orientation, "Peel orientation")
        ->check(CLI::IsMember(orientations));
    stats->add_option("--threads", threads, "Worker threads (0 = auto)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*ver) {
            if (single_n->count() == 0 && lo_opt->count() == 0)
                throw CLI::ValidationError("verify", "give --n or --n-lo/--n-hi");
            if (single_n->count()) n_lo = n_hi = n;
            if (n_lo > n_hi) throw CLI::ValidationError("--n-lo", "must not exceed --n-hi");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    ScdOptions options;
    options.orientation = parse_mode(orientation);
    options.threads = threads;
    if (!drop.empty()) {
        options.drop_family = parse_family(drop);
        if (!options.drop_family) {
            err << "error: unknown family " << drop << "\n";
            return kExitUsage;
        }
    }

    if (*gen) {
        try {
            const ScdResult result = scd(n, options);
            report_fallbacks(result.fallbacks, err);
            out << render_chains(n, result.chains, *parse_format(format));
        } catch (const ConstructionError& e) {
            err << "error: " << e.what() << "\n";
            return kExitVerifyFailed;
        }
        return kExitOk;
    }

    if (*ver) {
        // fan out over n; within one n everything is sequential
        ScdOptions inner = options;
        inner.threads = 1;
        const auto outcomes =
            parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), threads, [&](std::size_t idx) {
                return verify_one(n_lo + static_cast<int>(idx), deep, inner);
            });
        bool all = true;
        for (const auto& o : outcomes) {
            err << o.diagnostics;
            out << o.summary << "\n";
            all = all && o.pass;
        }
        return all ? kExitOk : kExitVerifyFailed;
    }

    // stats
    ScdResult result;
    std::vector<Ladder> ladders;
    try {
        result = scd(n, options);
        ladders = assemble_ladders(n, threads);
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    report_fallbacks(result.fallbacks, err);

    std::map<std::string, std::size_t> families;
    for (const auto& t : enumerate_family_params(n)) ++families[std::string(family_name(t.family))];
    std::map<std::size_t, std::size_t> lengths;
    for (const auto& c : result.chains) ++lengths[c.size()];

    out << "n=" << n << "\n";
    out << "families " << braced(families) << "\n";
    out << "ladders " << ladders.size() << "\n";
    for (const auto& ladder : ladders)
        out << "  " << to_string(ladder.key) << " rows=" << ladder.row_count()
            << " columns=" << ladder.column_count() << "\n";
    out << "chains " << result.chains.size() << "\n";
    out << "chain lengths {";
    bool first = true;
    for (const auto& [len, count] : lengths) {
        out << (first ? "" : ", ") << len << ":" << count;
        first = false;
    }
    out << "}\n";
    out << "rank profile [";
    const RankProfile profile = rank_sizes({kParts, n});
    for (std::size_t r = 0; r < profile.sizes.size(); ++r) out << (r ? ", " : "") << profile.sizes[r];
    out << "]\n";
    return kExitOk;
}

}  // namespace l5scd::cli
