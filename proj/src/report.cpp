#include "vcreg/report.hpp"

#include <fstream>
#include <sstream>

#include "vcreg/errors.hpp"

namespace vcreg {

std::uint64_t fnv64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    return fnv64(s.data(), s.size());
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)v);
    return buf;
}

Json make_manifest(const std::string& command, const std::vector<std::string>& params,
                   const std::vector<std::string>& input_paths,
                   std::optional<std::uint64_t> seed) {
    Json m;
    m["command"] = command;
    m["parameters"] = params;
    Json inputs = Json::array();
    for (const auto& p : input_paths)
        inputs.push_back({{"path", p}, {"fnv64", hex64(fnv64_file(p))}});
    m["inputs"] = inputs;
    if (seed) m["seed"] = *seed;
    m["version"] = kToolVersion;
    return m;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

Json rat_json(const Rat& r) { return rational_str(r); }

Json set_json(const VertexSet& s) {
    Json arr = Json::array();
    s.for_each([&](std::int64_t v) { arr.push_back(v); });
    return arr;
}

}  // namespace vcreg
