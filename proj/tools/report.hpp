#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "powersum/powersum.hpp"
#include "powersum/types.hpp"

namespace powersum::cli {

using Json = nlohmann::ordered_json;

#ifndef POWERSUM_VERSION
#define POWERSUM_VERSION "0.0.0"
#endif
inline constexpr const char* kToolVersion = POWERSUM_VERSION;

Json complex_json(Complex z);
Json complex_list_json(const ComplexList& zs);
Json certificate_json(const BoundCertificate& cert);

/// The one output schema every command emits: the command name, an echo of
/// the parsed inputs, a command-specific body, certificates and residuals
/// (possibly empty), the tool version, and the seed when randomness was
/// involved. Key order is fixed.
struct ReportEnvelope {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<BoundCertificate> certificates;
    std::vector<double> residuals;
    bool has_seed = false;
    std::uint64_t seed = 0;
};

std::string render_json_report(const ReportEnvelope& envelope);

/// Plain CSV: header row plus data rows, no quoting (cells are numeric).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv_table(const CsvTable& table);

}  // namespace powersum::cli
