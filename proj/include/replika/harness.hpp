#pragma once

// Command implementations behind the replika CLI. Every command produces a
// JSON report; `run` parses arguments and maps outcomes to exit codes
// (0 pass, 1 verification failure, 2 usage or parse error).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "replika/linalg.hpp"
#include "replika/quiver.hpp"

namespace replika::harness {

struct RunConfig {
  std::string command;
  std::string quiver_path;
  int m = 1;
  std::uint32_t prime = kDefaultPrime;
  std::optional<std::uint32_t> crosscheck;
  std::uint64_t seed = 0;
  std::optional<int> pd_bound;
  std::string out = "json";
  std::string target;
  std::string tilting_id;
  int summand = 0;
  std::string direction = "up";
  int samples = 50;
};

struct Outcome {
  nlohmann::json report;
  bool pass = true;
  std::string dot;  // graph commands only
};

// Raised for bad command lines and unusable inputs (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Quiver load_quiver(const std::string& path);

Outcome cmd_build(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);
Outcome cmd_enumerate(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);
Outcome cmd_complements(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);
Outcome cmd_mutate(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);
Outcome cmd_verify(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);
Outcome cmd_cluster(const RunConfig& cfg, const Quiver& q, std::uint32_t prime);

// Runs the configured command, with the two-prime comparison if requested.
Outcome execute(const RunConfig& cfg);

// Drops matrix payloads and the prime, leaving the field-independent data.
nlohmann::json dimensions_only(const nlohmann::json& report);

// Re-checks exactness of a short exact sequence dumped by cmd_mutate.
bool check_sequence(const Quiver& q, int m, std::uint32_t prime, const nlohmann::json& dump);

std::string render_text(const nlohmann::json& report);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace replika::harness
