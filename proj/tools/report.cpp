#include "report.hpp"

namespace powersum::cli {

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json complex_list_json(const ComplexList& zs) {
    Json arr = Json::array();
    for (const Complex& z : zs) arr.push_back(complex_json(z));
    return arr;
}

Json certificate_json(const BoundCertificate& cert) {
    Json j = Json::object();
    j["scale"] = cert.scale;
    j["constant"] = cert.constant;
    j["observed_max"] = cert.observed_max;
    j["ratio"] = cert.ratio;
    j["slack"] = cert.slack;
    j["holds"] = cert.holds;
    return j;
}

std::string render_json_report(const ReportEnvelope& envelope) {
    Json j = Json::object();
    j["command"] = envelope.command;
    j["inputs"] = envelope.inputs;
    j["outputs"] = envelope.outputs;
    Json certs = Json::array();
    for (const BoundCertificate& c : envelope.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = certs;
    j["residuals"] = envelope.residuals;
    j["tool_version"] = kToolVersion;
    if (envelope.has_seed) j["seed"] = envelope.seed;
    return j.dump(2) + "\n";
}

std::string render_csv_table(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace powersum::cli
