#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace lejalab::cli {
namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidInput(what + ": unknown field '" + key + "'");
  }
}

std::vector<Complex> points_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidInput(std::string("field '") + key + "' must be an array of [x, y] pairs");
  }
  std::vector<Complex> out;
  out.reserve(j.at(key).size());
  for (const auto& p : j.at(key)) out.push_back(point_from_json(p));
  return out;
}

Json points_to_json(const std::vector<Complex>& points) {
  Json arr = Json::array();
  for (const auto& z : points) arr.push_back(point_to_json(z));
  return arr;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0) {
    throw InvalidInput("expected a positive integer, got '" + s + "'");
  }
  return v;
}

std::string quote_csv(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json point_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("a point must be a pair [x, y] of numbers, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json set_to_json(const SetSpec& set) {
  Json j;
  j["kind"] = std::string(to_string(set.kind));
  switch (set.kind) {
    case SetKind::segment:
      break;
    case SetKind::circle:
      j["radius"] = set.radius;
      if (set.center != Complex{}) j["center"] = point_to_json(set.center);
      break;
    case SetKind::circular_arc:
      j["radius"] = set.radius;
      j["span_rad"] = set.span;
      if (set.center != Complex{}) j["center"] = point_to_json(set.center);
      break;
    case SetKind::polyline_arc:
      j["vertices"] = points_to_json(set.vertices);
      break;
    case SetKind::samples:
      j["points"] = points_to_json(set.vertices);
      break;
  }
  if (set.affine) {
    j["affine"] = {{"scale", set.affine->scale},
                   {"rot_rad", set.affine->rotation},
                   {"shift", point_to_json(set.affine->shift)}};
  }
  return j;
}

SetSpec set_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("set must be a JSON object");
  const auto kind = set_kind_from_string(get<std::string>(j, "kind"));
  SetSpec set;
  switch (kind) {
    case SetKind::segment:
      reject_unknown(j, {"kind", "affine"}, "segment");
      set = SetSpec::segment();
      break;
    case SetKind::circle:
      reject_unknown(j, {"kind", "radius", "center", "affine"}, "circle");
      set = SetSpec::circle(get<double>(j, "radius"),
                            j.contains("center") ? point_from_json(j["center"]) : Complex{});
      break;
    case SetKind::circular_arc:
      reject_unknown(j, {"kind", "radius", "span_rad", "center", "affine"}, "circular_arc");
      set = SetSpec::circular_arc(get<double>(j, "radius"), get<double>(j, "span_rad"),
                                  j.contains("center") ? point_from_json(j["center"]) : Complex{});
      break;
    case SetKind::polyline_arc:
      reject_unknown(j, {"kind", "vertices", "affine"}, "polyline_arc");
      set = SetSpec::polyline_arc(points_from_json(j, "vertices"));
      break;
    case SetKind::samples:
      reject_unknown(j, {"kind", "points", "affine"}, "samples");
      set = SetSpec::samples(points_from_json(j, "points"));
      break;
  }
  if (j.contains("affine")) {
    const Json& a = j["affine"];
    if (!a.is_object()) throw InvalidInput("affine must be an object");
    reject_unknown(a, {"scale", "rot_rad", "shift"}, "affine");
    Similarity map;
    map.scale = a.contains("scale") ? get<double>(a, "scale") : 1.0;
    map.rotation = a.contains("rot_rad") ? get<double>(a, "rot_rad") : 0.0;
    map.shift = a.contains("shift") ? point_from_json(a["shift"]) : Complex{};
    set = set.with_affine(map);
  }
  validate(set);
  return set;
}

SetSpec load_set(const std::string& file_or_inline) {
  const std::string text = trim(file_or_inline);
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("inline set JSON: ") + e.what());
    }
    return set_from_json(j);
  }
  return set_from_json(read_json_file(text));
}

Json scheme_to_json(const Scheme& scheme, std::size_t n) {
  const auto row = scheme.row(n);
  Json j;
  j["set"] = set_to_json(scheme.set());
  j["kind"] = std::string(to_string(scheme.kind()));
  j["n"] = n;
  if (scheme.kind() == SchemeKind::leja) {
    j["candidates"] = scheme.candidates();
    j["start"] = scheme.start_label();
  } else {
    j["candidates"] = nullptr;
    j["start"] = nullptr;
  }
  if (scheme.seed()) {
    j["seed"] = *scheme.seed();
  } else {
    j["seed"] = nullptr;
  }
  j["points"] = points_to_json(row);
  return j;
}

Scheme scheme_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("nodes file must hold a JSON object");
  reject_unknown(j, {"set", "kind", "n", "candidates", "start", "seed", "points"}, "nodes");
  if (!j.contains("set")) throw InvalidInput("missing field 'set'");
  const SetSpec set = set_from_json(j["set"]);
  const SchemeKind kind = scheme_kind_from_string(get<std::string>(j, "kind"));
  auto points = points_from_json(j, "points");
  if (j.contains("n") && get<std::size_t>(j, "n") != points.size()) {
    throw InvalidInput("field 'n' disagrees with the number of points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      (void)parameter_of(set, points[i]);
    } catch (const InvalidInput& e) {
      throw InvalidInput("point " + std::to_string(i) + " is not on the set: " + e.what());
    }
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j["seed"].is_null()) seed = get<std::uint64_t>(j, "seed");
  if (kind == SchemeKind::leja) {
    const std::size_t candidates =
        j.contains("candidates") && !j["candidates"].is_null() ? get<std::size_t>(j, "candidates")
                                                                : 0;
    const std::string start =
        j.contains("start") && !j["start"].is_null() ? get<std::string>(j, "start") : "auto";
    return Scheme::from_sequence(set, std::move(points), candidates, start);
  }
  return Scheme::from_row(kind, set, std::move(points), seed);
}

Scheme load_scheme(const std::filesystem::path& path) {
  return scheme_from_json(read_json_file(path));
}

Json green_to_json(const GreenModel& model) {
  Json j;
  j["method"] = std::string(to_string(model.method()));
  j["set"] = set_to_json(model.set());
  j["capacity"] = model.capacity();
  j["charges"] = points_to_json(model.charges());
  return j;
}

Json level_to_json(const LevelCurve& curve) {
  Json j;
  j["delta"] = curve.delta;
  j["level"] = std::log1p(curve.delta);
  j["closed"] = curve.closed;
  j["resolution"] = curve.resolution;
  j["tolerance"] = curve.tolerance;
  j["polygon"] = points_to_json(curve.polyline);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("'" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("write failed for '" + path.string() + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::logic_error("CSV row width mismatch");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quote_csv(cells[i]);
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

CsvTable lebesgue_table(const std::vector<LebesgueResult>& results) {
  CsvTable t({"n", "lambda", "lambda_root", "argmax_re", "argmax_im", "mesh_size"});
  for (const auto& r : results) {
    t.add({std::to_string(r.n), format_number(r.lambda), format_number(r.lambda_root),
           format_number(r.argmax.real()), format_number(r.argmax.imag()),
           std::to_string(r.mesh_size)});
  }
  return t;
}

CsvTable sproduct_table(const std::vector<SProductReport>& reports) {
  CsvTable t({"n", "k", "delta", "card_A", "log_S", "s_root"});
  for (const auto& r : reports) {
    t.add({std::to_string(r.n), std::to_string(r.k), format_number(r.delta),
           std::to_string(r.members.size()), format_number(r.log_s), format_number(r.s_root)});
  }
  return t;
}

CsvTable separation_table(const std::vector<SeparationReport>& reports) {
  CsvTable t({"n", "min_ratio", "k", "j", "rule", "delta"});
  for (const auto& r : reports) {
    t.add({std::to_string(r.n), format_number(r.min_ratio), std::to_string(r.k),
           std::to_string(r.j), std::string(to_string(r.rule)), format_number(r.delta)});
  }
  return t;
}

CsvTable level_table(const LevelCurve& curve) {
  CsvTable t({"re", "im"});
  for (const auto& z : curve.polyline) t.add({format_number(z.real()), format_number(z.imag())});
  return t;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::set<std::size_t> sizes;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const std::size_t lo = parse_size(trim(item.substr(0, dots)));
      const std::size_t hi = parse_size(trim(item.substr(dots + 2)));
      if (hi < lo) throw InvalidInput("empty size range '" + item + "'");
      for (std::size_t n = lo; n <= hi; n *= 2) sizes.insert(n);
    } else {
      sizes.insert(parse_size(item));
    }
  }
  if (sizes.empty()) throw InvalidInput("no row sizes given");
  return {sizes.begin(), sizes.end()};
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v)) {
      throw InvalidInput("expected a number, got '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty number list");
  return out;
}

}  // namespace lejalab::cli
