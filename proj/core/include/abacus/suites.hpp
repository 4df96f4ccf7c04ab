#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abacus/report.hpp"

namespace abacus {

struct SuiteOptions {
  int g = 2;
  long trials = 100;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();  // without "all"

Report divided_power_suite(const SuiteOptions& o);
Report fourier_suite(const SuiteOptions& o);
Report scholl_suite(const SuiteOptions& o);
Report suh_suite(const SuiteOptions& o);
Report lifting_suite(const SuiteOptions& o);
Report hochschild_suite(const SuiteOptions& o);

// name is one of suite_names() or "all"
Report run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace abacus
