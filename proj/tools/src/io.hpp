#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "lejalab/conformal.hpp"
#include "lejalab/geometry.hpp"
#include "lejalab/lebesgue.hpp"
#include "lejalab/nodes.hpp"
#include "lejalab/separation.hpp"

namespace lejalab::cli {

using Json = nlohmann::ordered_json;

// SetSpec <-> JSON. Accepts an inline JSON object or a path to a file holding one.
Json set_to_json(const SetSpec& set);
SetSpec set_from_json(const Json& j);
SetSpec load_set(const std::string& file_or_inline);

Json point_to_json(Complex z);
Complex point_from_json(const Json& j);

// nodes.json: {"set", "kind", "n", "candidates", "start", "seed", "points"}.
Json scheme_to_json(const Scheme& scheme, std::size_t n);
Scheme scheme_from_json(const Json& j);
Scheme load_scheme(const std::filesystem::path& path);

Json green_to_json(const GreenModel& model);
Json level_to_json(const LevelCurve& curve);

Json read_json_file(const std::filesystem::path& path);
// Writes `text` to path, or to stdout when path is empty or "-".
void write_text(const std::filesystem::path& path, const std::string& text);
std::string dump(const Json& j);

// Numbers in CSV cells: 17 significant digits, "nan"/"inf" spelled out.
std::string format_number(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable lebesgue_table(const std::vector<LebesgueResult>& results);
CsvTable sproduct_table(const std::vector<SProductReport>& reports);
CsvTable separation_table(const std::vector<SeparationReport>& reports);
CsvTable level_table(const LevelCurve& curve);

// "8,16,32" or octave ranges "8..128" (8,16,...,128); sorted, deduplicated.
std::vector<std::size_t> parse_sizes(const std::string& text);
std::vector<double> parse_reals(const std::string& text);

}  // namespace lejalab::cli
