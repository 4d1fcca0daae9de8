#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "magmakit/io.hpp"

namespace mk {

struct SuiteResult {
    Report report;
    std::vector<std::string> failed;  // theorem ids
    bool ok() const { return failed.empty(); }
};

// ln-theorems (default max-n 25), zn-theorems (12), worked-examples (max-n unused)
SuiteResult run_suite(std::string_view suite, unsigned max_n = 0);
const std::vector<std::string>& suite_names();

// printed reference tables for L_n(m), as Cayley text
struct ReferenceTable {
    unsigned n, m;
    std::string_view text;
};
const std::vector<ReferenceTable>& ln_reference_tables();

// the named N-structures behind the worked-examples suite
NStructure worked_structure(std::string_view name);
const std::vector<std::string>& worked_structure_names();

}  // namespace mk
