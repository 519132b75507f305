#include "doctest.h"
#include "l5scd/ladder.hpp"
#include "l5scd/output.hpp"

using namespace l5scd;

namespace {

LatticePoint pt(int a1, int a2, int a3, int a4, int a5) { return LatticePoint{{a1, a2, a3, a4, a5}}; }

}  // namespace

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("text") == Format::Text);
    CHECK_FALSE(parse_format("csv"));
}

TEST_CASE("text lines") {
    CHECK(to_text_line({pt(0, 0, 0, 0, 0)}) == "0 0 0 0 0");
    CHECK(to_text_line({pt(0, 0, 0, 0, 0), pt(0, 0, 0, 0, 1)}) == "0 0 0 0 0 -> 0 0 0 0 1");
    CHECK(to_text_line({}).empty());
    CHECK(render_chains(0, scd(0).chains, Format::Text) == "0 0 0 0 0\n");
}

TEST_CASE("json line layout") {
    const auto chains = scd(1).chains;
    REQUIRE(chains.size() == 1);
    const std::string line = to_json_line(make_record(1, 0, chains[0]));
    CHECK(line.rfind(R"({"n":1,"id":0,"family":")", 0) == 0);
    CHECK(line.find(R"("chain":[[0,0,0,0,0],[0,0,0,0,1],)") != std::string::npos);
    CHECK(line.back() == '}');
    CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("pair-row families carry the layer index in params") {
    const auto chains = scd(2).chains;
    const std::string c9 = to_json_line(make_record(2, 2, chains[2]));
    CHECK(c9.find(R"("family":"C9")") != std::string::npos);
    CHECK(c9.find(R"("t":)") != std::string::npos);
    const std::string c1 = to_json_line(make_record(2, 0, chains[0]));
    CHECK(c1.find(R"("t":)") == std::string::npos);
}

TEST_CASE("json round-trips byte for byte (n <= 8)") {
    for (int n = 0; n <= 8; ++n) {
        const auto chains = scd(n).chains;
        for (std::size_t id = 0; id < chains.size(); ++id) {
            const std::string line = to_json_line(make_record(n, id, chains[id]));
            const OutputRecord back = parse_json_line(line);
            REQUIRE(to_json_line(back) == line);
            CHECK(back.n == n);
            CHECK(back.id == id);
            CHECK(back.chain == chains[id].points);
            CHECK(back.provenance.family == chains[id].provenance.family);
            CHECK(back.provenance.params == chains[id].provenance.params);
        }
    }
}

TEST_CASE("render_chains emits one record per line") {
    const auto chains = scd(4).chains;
    const std::string text = render_chains(4, chains, Format::Json);
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == chains.size());
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(parse_json_line("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_line("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_line(R"({"n":1,"id":0,"family":"C10","params":{},"layer":0,)"
                                    R"("orientation":"left-bottom","chain":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json_line(R"({"n":1,"id":0,"family":"C1",)"
                                    R"("params":{"i":0,"j":0,"k":0,"u":0,"w":0},"layer":0,)"
                                    R"("orientation":"sideways","chain":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json_line(R"({"n":1,"id":0,"family":"C1",)"
                                    R"("params":{"i":0,"j":0,"k":0,"u":0,"w":0},"layer":0,)"
                                    R"("orientation":"left-bottom","chain":[[0,0,0]]})"),
                    std::invalid_argument);
}
