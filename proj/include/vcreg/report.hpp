#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vcreg/bitset.hpp"
#include "vcreg/rational.hpp"

namespace vcreg {

// nlohmann::json keeps object keys sorted, which the byte-reproducibility
// contract relies on
using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "vcreg 0.1.0";

std::uint64_t fnv64(const void* data, std::size_t len);
std::uint64_t fnv64_file(const std::string& path);
std::string hex64(std::uint64_t v);

// Embedded in every report; re-running the recorded command reproduces the
// report byte for byte.  Timing never enters a report (stderr only) and
// --jobs is an execution detail, stripped from the recorded parameters.
Json make_manifest(const std::string& command, const std::vector<std::string>& params,
                   const std::vector<std::string>& input_paths,
                   std::optional<std::uint64_t> seed);

std::string dump_report(const Json& j);

Json rat_json(const Rat& r);
Json set_json(const VertexSet& s);

}  // namespace vcreg
