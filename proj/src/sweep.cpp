#include "cwid/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace cwid {

namespace {

constexpr const char* kToolVersion = "cwid 1.0.0";

CodeParams params_for(const SweepConfig& cfg, const std::string& scheme, uint64_t ko, uint64_t koo) {
    if (scheme == "c1") return construction1_full_params(cfg.c1_p, ko, koo, cfg.variant);
    if (scheme == "c2") return construction2_full_params(cfg.c2_p, cfg.c2_m, ko, koo, cfg.variant);
    if (scheme == "ppm-bench") return ppm_bench_params(cfg.ppm_q, ko, koo);
    throw std::invalid_argument("run_sweep: unknown scheme " + scheme);
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    SweepResult result;
    for (const auto& scheme : cfg.schemes) {
        uint64_t p = scheme == "c1" ? cfg.c1_p : (scheme == "c2" ? cfg.c2_p : cfg.ppm_q);
        int m = scheme == "c2" ? cfg.c2_m : 1;
        for (uint64_t ko : cfg.ko_values) {
            for (uint64_t koo : cfg.koo_values) {
                try {
                    CodeParams params = params_for(cfg, scheme, ko, koo);
                    IdMetrics metrics = id_metrics(params, cfg.precision_bits);
                    result.rows.push_back(SweepRow{scheme, p, m, ko, koo, params, metrics});
                } catch (const std::exception& e) {
                    result.skips.push_back(SweepSkip{scheme, ko, koo, e.what()});
                }
            }
        }
    }
    return result;
}

CsvTable sweep_to_csv(const SweepResult& result) {
    CsvTable table;
    table.header = {"scheme", "p", "m", "k_o", "k_oo", "S", "log2N", "W", "K", "R_ID", "E2", "gap"};
    for (const auto& row : result.rows) {
        const unsigned f = row.metrics.precision_bits;
        double log2n = row.params.N.log2_fixed(f).to_double() / std::ldexp(1.0, int(f));
        table.rows.push_back({row.scheme, std::to_string(row.p), std::to_string(row.m),
                              std::to_string(row.ko), std::to_string(row.koo),
                              std::to_string(row.params.S), format_real(log2n),
                              std::to_string(row.params.W), std::to_string(row.params.K),
                              format_real(row.metrics.r_id), format_real(row.metrics.e2),
                              format_real(row.metrics.capacity_gap)});
    }
    return table;
}

void emit_plotdata(const SweepResult& result, const std::string& csv_path) {
    write_text(csv_path, csv_to_string(sweep_to_csv(result)));

    Json manifest;
    manifest["tool_version"] = kToolVersion;
    std::vector<std::string> schemes;
    for (const auto& row : result.rows)
        if (schemes.empty() || schemes.back() != row.scheme) schemes.push_back(row.scheme);
    manifest["schemes"] = schemes;
    manifest["rows"] = result.rows.size();

    // capacity line r + 2 e2 = 1, sampled exactly
    Json line = Json::array();
    for (int j = 0; j <= 16; ++j) {
        BigRat r(BigInt(j), BigUint(16));
        BigRat e2 = (BigRat(1) - r) / BigRat(2);
        line.push_back(Json{{"r_id", r.to_string()}, {"e2", e2.to_string()}});
    }
    manifest["bound_line"] = std::move(line);

    Json skips = Json::array();
    for (const auto& s : result.skips)
        skips.push_back(Json{{"scheme", s.scheme}, {"k_o", s.ko}, {"k_oo", s.koo}, {"reason", s.reason}});
    manifest["skips"] = std::move(skips);

    std::vector<IdMetrics> all;
    for (const auto& row : result.rows) all.push_back(row.metrics);
    CapacityLineReport check = capacity_line_check(all);
    manifest["capacity_line"] = Json{{"within", check.within_count}, {"total", check.rows.size()}};

    write_text(csv_path + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace cwid
