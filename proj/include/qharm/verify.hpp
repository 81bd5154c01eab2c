#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qharm/report.hpp"

namespace qharm {

/// Overrides for a verification suite; fields left unset keep the suite's
/// pinned defaults (the acceptance configuration).
struct VerifyOptions {
    bool has_n = false;
    int n_lo = 0, n_hi = 0;
    bool has_deg = false;
    int deg = 0;
    std::uint64_t seed = 0x5EED5EEDULL;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite; throws IndexOutOfRange for an unknown name.
Report run_suite(const std::string& name, const VerifyOptions& opts = {});

/// All suites, in registry order.
std::vector<Report> run_all_suites(const VerifyOptions& opts = {});

} // namespace qharm
