#pragma once

#include <string>
#include <vector>

#include "lvf/report.hpp"
#include "lvf/suite_config.hpp"

namespace lvf {

const std::vector<std::string>& suite_names();

/// Runs the named suite. Throws InvalidArgument for an unknown suite or bad parameters.
Report run_suite(const SuiteConfig& cfg);

} // namespace lvf
