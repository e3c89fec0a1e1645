#include "vcreg/sweep.hpp"

#include <chrono>
#include <sstream>

#include "vcreg/errors.hpp"
#include "vcreg/families.hpp"
#include "vcreg/regularity.hpp"
#include "vcreg/report.hpp"

#ifdef VCREG_HAVE_OPENMP
#include <omp.h>
#endif

namespace vcreg {

SweepConfig parse_sweep_config(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(std::string("bad sweep config: ") + e.what());
    }
    SweepConfig cfg;
    if (j.contains("command")) cfg.command = j["command"].get<std::string>();
    if (cfg.command != "partition")
        throw Error("unsupported sweep command: " + cfg.command);
    if (j.contains("k")) cfg.k = j["k"].get<int>();
    if (cfg.k != 2) throw Error("sweep currently drives k = 2 instances");
    if (!j.contains("families") || !j.contains("n") || !j.contains("epsilon"))
        throw Error("sweep config needs families, n, epsilon arrays");
    for (const auto& f : j["families"]) cfg.families.push_back(f.get<std::string>());
    for (const auto& n : j["n"]) cfg.ns.push_back(n.get<int>());
    for (const auto& e : j["epsilon"])
        cfg.epsilons.push_back(parse_rational(e.get<std::string>()));
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int jobs) {
    struct Cell {
        std::string family;
        int n;
        Rat eps;
    };
    std::vector<Cell> cells;
    for (const auto& f : cfg.families)
        for (int n : cfg.ns)
            for (const auto& e : cfg.epsilons) cells.push_back({f, n, e});

    std::vector<SweepRow> rows(cells.size());
#ifdef VCREG_HAVE_OPENMP
    int prev = omp_get_max_threads();
    if (jobs > 0) omp_set_num_threads(1);  // cells are the parallel unit here
#endif
    std::int64_t total = std::int64_t(cells.size());
#ifdef VCREG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : prev)
#endif
    for (std::int64_t i = 0; i < total; ++i) {
        const Cell& c = cells[i];
        SweepRow& row = rows[i];
        row.family = c.family;
        row.n = c.n;
        row.k = cfg.k;
        row.epsilon = rational_str(c.eps);
        auto t0 = std::chrono::steady_clock::now();
        try {
            Graph g = make_family(c.family, c.n, cfg.seed);
            UltraStrongResult usp = ultra_strong_partition(g, c.eps);
            row.status = "ok";
            row.packing = std::int64_t(usp.packing.centers.size());
            row.K = usp.report.K;
            row.fraction = rational_str(usp.report.fraction);
        } catch (const Refusal&) {
            row.status = "refused";
            row.fraction = "";
        } catch (const std::exception&) {
            row.status = "error";
            row.fraction = "";
        }
        auto t1 = std::chrono::steady_clock::now();
        row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
#ifdef VCREG_HAVE_OPENMP
    omp_set_num_threads(prev);
#endif
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const auto& r : rows) {
        out << r.family << "," << r.n << "," << r.k << "," << r.epsilon << ","
            << r.status << "," << r.packing << "," << r.K << "," << r.fraction << ","
            << r.runtime_ms << "\n";
    }
    return out.str();
}

}  // namespace vcreg
