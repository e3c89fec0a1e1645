#pragma once

#include <string>
#include <vector>

#include "vcreg/rational.hpp"

namespace vcreg {

struct SweepConfig {
    std::string command = "partition";  // the only templated command so far
    int k = 2;
    std::vector<std::string> families;
    std::vector<int> ns;
    std::vector<Rat> epsilons;
    std::uint64_t seed = 0;
};

struct SweepRow {
    std::string family;
    int n = 0;
    int k = 2;
    std::string epsilon;
    std::string status;  // ok | refused | error
    std::int64_t packing = 0;
    int K = 0;
    std::string fraction;
    double runtime_ms = 0;
};

SweepConfig parse_sweep_config(const std::string& json_text);

// grid cells run concurrently up to the jobs bound; row order is the grid
// order regardless of scheduling
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int jobs);

// schema v1; pinned by a golden-file test
inline constexpr const char* kSweepCsvHeader =
    "family,n,k,epsilon,status,S,K,fraction,runtime_ms";

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace vcreg
