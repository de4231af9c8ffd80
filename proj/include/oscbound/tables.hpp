#ifndef OSCBOUND_TABLES_HPP
#define OSCBOUND_TABLES_HPP

#include <string>
#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

enum class TableId { T1, T2, T3, T4, T5, T6, T7, FIG1 };

TableId table_from_string(const std::string& s);
std::string table_name(TableId id);

struct VerifyOptions {
    int max_order = 150;        // skip rows above this expansion order
    long precision_bits = 0;    // 0 = per-row defaults
    bool quiet = false;
};

struct RowReport {
    std::string label;
    bool pass = false;
    std::string detail;
};

// Runs every (non-skipped) row of the table against the embedded expected
// values; prints one line per row unless quiet.
std::vector<RowReport> verify_table(TableId id, const VerifyOptions& opt);

// All rows passed?
bool all_passed(const std::vector<RowReport>& rows);

}  // namespace oscb

#endif
