#include "oscbound/records.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace oscb {

std::string RunRecord::to_json() const {
    nlohmann::json j;  // object keys are sorted -> stable order
    j["method"] = method;
    j["representation"] = representation;
    j["sigma"] = sigma;
    j["state"] = state;
    j["order"] = order;
    j["precision_bits"] = precision_bits;
    j["b"] = b.str();
    j["b_hex"] = b.hex();
    j["scan_lo"] = scan_lo.str();
    j["scan_lo_hex"] = scan_lo.hex();
    j["scan_hi"] = scan_hi.str();
    j["scan_hi_hex"] = scan_hi.hex();
    j["wall_time_s"] = wall_time_s;
    j["tool_version"] = kToolVersion;
    for (const auto& [name, value] : results) {
        j["result." + name] = value.str();
        j["result_hex." + name] = value.hex();
    }
    return j.dump(2) + "\n";
}

RunRecord RunRecord::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RunRecord r;
    r.method = j.at("method").get<std::string>();
    r.representation = j.at("representation").get<std::string>();
    r.sigma = j.at("sigma").get<int>();
    r.state = j.at("state").get<int>();
    r.order = j.at("order").get<int>();
    r.precision_bits = j.at("precision_bits").get<long>();
    r.b = Real::from_hex(j.at("b_hex").get<std::string>());
    r.scan_lo = Real::from_hex(j.at("scan_lo_hex").get<std::string>());
    r.scan_hi = Real::from_hex(j.at("scan_hi_hex").get<std::string>());
    r.wall_time_s = j.at("wall_time_s").get<double>();
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.rfind("result_hex.", 0) == 0)
            r.results.emplace_back(key.substr(11), Real::from_hex(it.value().get<std::string>()));
    }
    return r;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << content;
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " -> " + path);
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<Real>>& rows,
                      int digits) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].str(digits);
        }
        out += '\n';
    }
    return out;
}

}  // namespace oscb
