#include "l5scd/output.hpp"

#include <stdexcept>

#include "json.hpp"

namespace l5scd {

using ordered_json = nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "text") return Format::Text;
    return std::nullopt;
}

OutputRecord make_record(int n, std::size_t id, const Chain& chain) {
    return OutputRecord{n, id, chain.provenance, chain.points};
}

std::string to_json_line(const OutputRecord& record) {
    const Provenance& prov = record.provenance;
    ordered_json params = ordered_json::object();
    params["i"] = prov.params.i;
    params["j"] = prov.params.j;
    params["k"] = prov.params.k;
    params["u"] = prov.params.u;
    params["w"] = prov.params.w;
    if (uses_pair_rows(prov.family)) params["t"] = prov.l2k_layer;

    ordered_json points = ordered_json::array();
    for (const auto& pt : record.chain) points.push_back(pt.a);

    ordered_json j = ordered_json::object();
    j["n"] = record.n;
    j["id"] = record.id;
    j["family"] = family_name(prov.family);
    j["params"] = std::move(params);
    j["layer"] = prov.peel_layer;
    j["orientation"] = orientation_name(prov.orientation);
    j["chain"] = std::move(points);
    return j.dump();
}

OutputRecord parse_json_line(std::string_view line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
    try {
        OutputRecord rec;
        rec.n = j.at("n").get<int>();
        rec.id = j.at("id").get<std::size_t>();

        const auto family = parse_family(j.at("family").get<std::string>());
        if (!family) throw std::invalid_argument("unknown family");
        rec.provenance.family = *family;

        const auto& params = j.at("params");
        rec.provenance.params = {params.at("i").get<int>(), params.at("j").get<int>(),
                                 params.at("k").get<int>(), params.at("u").get<int>(),
                                 params.at("w").get<int>()};
        if (uses_pair_rows(*family)) rec.provenance.l2k_layer = params.at("t").get<int>();

        rec.provenance.peel_layer = j.at("layer").get<int>();
        const auto orient = j.at("orientation").get<std::string>();
        if (orient == orientation_name(Orientation::LeftBottom)) {
            rec.provenance.orientation = Orientation::LeftBottom;
        } else if (orient == orientation_name(Orientation::TopRight)) {
            rec.provenance.orientation = Orientation::TopRight;
        } else {
            throw std::invalid_argument("unknown orientation " + orient);
        }

        for (const auto& pt : j.at("chain")) {
            LatticePoint p;
            p.a = pt.get<std::array<int, kParts>>();
            rec.chain.push_back(p);
        }
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string to_text_line(const std::vector<LatticePoint>& chain) {
    std::string s;
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
        if (idx) s += " -> ";
        for (int c = 0; c < kParts; ++c) {
            if (c) s += ' ';
            s += std::to_string(chain[idx][c]);
        }
    }
    return s;
}

std::string render_chains(int n, const std::vector<Chain>& chains, Format format) {
    std::string out;
    for (std::size_t id = 0; id < chains.size(); ++id) {
        out += format == Format::Json ? to_json_line(make_record(n, id, chains[id]))
                                      : to_text_line(chains[id].points);
        out += '\n';
    }
    return out;
}

}  // namespace l5scd
