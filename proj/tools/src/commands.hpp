#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "lejalab/potential.hpp"

namespace lejalab::cli {

enum class ExitCode : int { ok = 0, internal = 1, invalid_input = 2, numerical_failure = 3 };

// Everything `report` needs; embedded verbatim in report.json so a run can be replayed.
struct RunConfig {
  SetSpec set = SetSpec::segment();
  std::vector<SchemeKind> kinds{SchemeKind::leja};
  std::vector<std::size_t> ns{8, 16, 32, 64, 128};
  std::size_t mesh_factor = 30;
  std::vector<double> delta_ladder = default_delta_ladder();
  std::optional<std::uint64_t> seed;
  std::string green = "auto";
  std::size_t candidates = 0;
  std::filesystem::path out;
};

Json config_to_json(const RunConfig& config);
RunConfig config_from_json(const Json& j);
// Sorts and deduplicates the size list, checks kinds and the Green method.
void normalize(RunConfig& config);

// "auto" picks the closed form when one exists.
GreenModel make_green(const SetSpec& set, const std::string& method, std::size_t charges = 256);

std::vector<std::size_t> available_sizes(const Scheme& scheme, const std::optional<std::string>& ns);

// Writes every artifact into config.out and returns the report document.
Json run_report(const RunConfig& config);

// Full command line entry point. Errors are reported as one JSON object on `err`.
int run(int argc, const char* const* argv, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& err);

}  // namespace lejalab::cli
