#pragma once
// File formats: the family JSON schema shared by the CLI and tests, report
// serialization, and a small CSV writer/parser for sweep tables. All output
// is byte-stable for identical inputs.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwid/bounds.hpp"
#include "cwid/cwc.hpp"
#include "cwid/id_system.hpp"

namespace cwid {

using Json = nlohmann::ordered_json;

// reals print with 12 significant digits everywhere
std::string format_real(double v);
// rounds a double to its 12-significant-digit printed value
double round_real(double v);

Json family_to_json(const CwcFamily& fam);
CwcFamily family_from_json(const Json& j);
void write_family(const CwcFamily& fam, const std::string& path);
CwcFamily read_family(const std::string& path);

Json report_to_json(const VerificationReport& rep,
                    const std::optional<CyclicCorrelations>& cyclic,
                    const CodeParams& claimed);
Json bound_report_to_json(const BoundReport& rep);
Json metrics_to_json(const IdMetrics& m, const CodeParams& params);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_to_string(const CsvTable& table);
CsvTable csv_from_string(const std::string& text);

}  // namespace cwid
