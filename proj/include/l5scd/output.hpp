#pragma once

// Line-oriented serialization of symmetric chains.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l5scd/chain.hpp"

namespace l5scd {

enum class Format { Json, Text };

std::optional<Format> parse_format(std::string_view name);

struct OutputRecord {
    int n = 0;
    std::size_t id = 0;
    Provenance provenance;
    std::vector<LatticePoint> chain;
};

OutputRecord make_record(int n, std::size_t id, const Chain& chain);

/// One JSON object, fixed field order, no trailing newline:
/// {"n":..,"id":..,"family":..,"params":{..},"layer":..,"orientation":..,"chain":[[..],..]}
std::string to_json_line(const OutputRecord& record);

/// Inverse of to_json_line. Throws std::invalid_argument on malformed input.
OutputRecord parse_json_line(std::string_view line);

/// "a1 a2 a3 a4 a5 -> ..." with no trailing newline.
std::string to_text_line(const std::vector<LatticePoint>& chain);

/// Whole generate output: one line per chain, each newline-terminated.
std::string render_chains(int n, const std::vector<Chain>& chains, Format format);

}  // namespace l5scd
