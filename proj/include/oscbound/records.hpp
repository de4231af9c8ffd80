#ifndef OSCBOUND_RECORDS_HPP
#define OSCBOUND_RECORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

inline constexpr const char* kToolVersion = "oscbound 1.0.0";

// Serialized run: parameters + named results. Values are stored both as
// 20-digit decimals and exact hex floats, so a rerun at equal precision
// reproduces the record bit-exactly.
struct RunRecord {
    std::string method;          // emm | oppq-am | oppq-bm-curve | ...
    std::string representation;  // psi | psi-chain | phi | psi2 | weight
    int sigma = 0;
    int state = 0;
    int order = 0;
    long precision_bits = 0;
    Real b;
    Real scan_lo, scan_hi;
    std::vector<std::pair<std::string, Real>> results;
    double wall_time_s = 0;

    std::string to_json() const;  // flat object, keys sorted
    static RunRecord from_json(const std::string& text);
};

// temp file + rename, same directory
void write_file_atomic(const std::string& path, const std::string& content);

// comma separator, header row, unix newlines, 20 significant digits
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<Real>>& rows, int digits = 20);

}  // namespace oscb

#endif
