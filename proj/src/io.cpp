#include "cwid/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cwid {

std::string format_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round_real(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_real(v).c_str(), nullptr);
}

namespace {

Json params_to_json(const CodeParams& p) {
    return Json{{"S", p.S}, {"N", p.N.to_string()}, {"W", p.W}, {"K", p.K}};
}

CodeParams params_from_json(const Json& j) {
    CodeParams p;
    p.S = j.at("S").get<int64_t>();
    p.W = j.at("W").get<int64_t>();
    p.K = j.at("K").get<int64_t>();
    std::string n = j.at("N").get<std::string>();
    auto caret = n.find('^');
    if (caret != std::string::npos) {
        p.N = CodeSize::power(std::stoull(n.substr(0, caret)), std::stoull(n.substr(caret + 1)));
    } else {
        p.N = CodeSize(BigUint::from_string(n));
    }
    return p;
}

}  // namespace

Json family_to_json(const CwcFamily& fam) {
    Json j;
    j["blocklength"] = fam.blocklength;
    j["claimed"] = params_to_json(fam.claimed);
    Json supports = Json::array();
    for (const auto& cw : fam.codewords) supports.push_back(cw.support);
    j["supports"] = std::move(supports);
    return j;
}

CwcFamily family_from_json(const Json& j) {
    CwcFamily fam;
    fam.blocklength = j.at("blocklength").get<int64_t>();
    fam.claimed = params_from_json(j.at("claimed"));
    for (const auto& sup : j.at("supports"))
        fam.codewords.push_back(make_codeword(fam.blocklength, sup.get<std::vector<int64_t>>()));
    return fam;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_family(const CwcFamily& fam, const std::string& path) {
    write_text(path, family_to_json(fam).dump(2) + "\n");
}

CwcFamily read_family(const std::string& path) {
    return family_from_json(Json::parse(read_text(path)));
}

Json report_to_json(const VerificationReport& rep,
                    const std::optional<CyclicCorrelations>& cyclic,
                    const CodeParams& claimed) {
    Json j;
    Json actual{{"S", rep.S}, {"N", rep.N}, {"W_min", rep.W_min}, {"W_max", rep.W_max},
                {"K_actual", rep.K_actual}};
    if (rep.min_distance)
        actual["min_distance"] = *rep.min_distance;
    else
        actual["min_distance"] = nullptr;
    j["actual"] = std::move(actual);
    j["claimed"] = params_to_json(claimed);
    j["K_attained"] = rep.K_attained;
    j["pass"] = rep.pass;
    j["failures"] = rep.failures;
    if (cyclic) j["cyclic"] = Json{{"max_auto", cyclic->max_auto}, {"max_cross", cyclic->max_cross}};
    return j;
}

Json bound_report_to_json(const BoundReport& rep) {
    Json j;
    j["S"] = rep.S;
    j["W"] = rep.W;
    j["K"] = rep.K;
    j["johnson"] = rep.johnson.to_string();
    if (rep.correlation) {
        j["correlation"] = rep.correlation->to_string();
        j["best_ell"] = rep.best_ell;
        j["best_dprime"] = rep.best_dprime;
    } else {
        j["correlation"] = nullptr;
    }
    j["n_id_bound"] = rep.n_id_bound.to_string();
    return j;
}

Json metrics_to_json(const IdMetrics& m, const CodeParams& params) {
    Json j = params_to_json(params);
    j["n_id"] = round_real(m.n_id);
    j["r_id"] = round_real(m.r_id);
    if (m.e2_infinite) {
        j["e2"] = "inf";
        j["capacity_gap"] = "-inf";
        j["note"] = "K = 0 degenerate";
    } else {
        j["e2"] = round_real(m.e2);
        j["capacity_gap"] = round_real(m.capacity_gap);
    }
    j["lambda2"] = BigRat(BigInt(params.K), BigUint(uint64_t(params.W))).to_string();
    j["precision_bits"] = m.precision_bits;
    return j;
}

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) emit_row(row);
    return out;
}

CsvTable csv_from_string(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

}  // namespace cwid
