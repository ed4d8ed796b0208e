#pragma once
// Rate/error-exponent sweep over the three construction families, with CSV
// output and a JSON manifest carrying the capacity-line samples in exact
// rational form.

#include <cstdint>
#include <string>
#include <vector>

#include "cwid/concat.hpp"
#include "cwid/id_system.hpp"
#include "cwid/io.hpp"

namespace cwid {

struct SweepConfig {
    std::vector<std::string> schemes = {"c1", "c2", "ppm-bench"};
    uint64_t c1_p = 23;
    uint64_t c2_p = 5;
    int c2_m = 2;
    uint64_t ppm_q = 23;
    OuterVariant variant = OuterVariant::dext_rs;  // c1/c2; the benchmark always uses extended RS
    std::vector<uint64_t> ko_values = {1, 2, 3, 4, 5};
    std::vector<uint64_t> koo_values = {2, 4, 8, 16, 32, 64};
    unsigned precision_bits = 96;
};

struct SweepRow {
    std::string scheme;
    uint64_t p = 0;
    int m = 0;
    uint64_t ko = 0;
    uint64_t koo = 0;
    CodeParams params;
    IdMetrics metrics;
};

struct SweepSkip {
    std::string scheme;
    uint64_t ko = 0;
    uint64_t koo = 0;
    std::string reason;
};

struct SweepResult {
    std::vector<SweepRow> rows;       // scheme order, then ko, then koo ascending
    std::vector<SweepSkip> skips;
};

SweepResult run_sweep(const SweepConfig& cfg);

CsvTable sweep_to_csv(const SweepResult& result);

// Writes the CSV and a companion manifest (<csv_path>.manifest.json).
void emit_plotdata(const SweepResult& result, const std::string& csv_path);

}  // namespace cwid
