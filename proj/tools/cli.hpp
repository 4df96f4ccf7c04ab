#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abacus::cli {

enum class Command { numerology, projectors, lift, verify, bound };

struct RunConfig {
  Command command = Command::verify;
  int g = 2;
  std::uint64_t seed = 0;
  long trials = 100;
  std::string output = "-";  // "-" is standard output
  std::string format = "json";
  std::string suite = "all";
  std::string formula = "kuenneth";
  std::optional<std::pair<long, long>> w;
  std::optional<std::array<long, 2>> bound_m;
  std::optional<std::array<long, 3>> bound_n;
  std::vector<long> denominators{3, 4};
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

// Throws ConfigError on invalid input.
RunConfig parse_args(int argc, const char* const* argv);
void validate(const RunConfig& c);

// Writes the report to `out` (or to c.output) and returns the exit status.
int run(const RunConfig& c, std::ostream& out);

// argv in, exit status out; usage errors go to `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abacus::cli
