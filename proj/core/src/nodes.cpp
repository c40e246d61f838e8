#include "lejalab/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lejalab/parallel.hpp"

namespace lejalab {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t resolve_start(const BoundaryMesh& mesh, const LejaStart& start) {
  if (const auto* index = std::get_if<std::size_t>(&start)) {
    if (*index >= mesh.size()) throw InvalidInput("Leja start index is outside the mesh");
    return *index;
  }
  if (const auto* point = std::get_if<Complex>(&start)) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    double spacing = 0.0;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      const double d = std::abs(mesh.points[i] - *point);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
      if (i > 0) spacing = std::max(spacing, std::abs(mesh.points[i] - mesh.points[i - 1]));
    }
    if (best_d > spacing) throw InvalidInput("Leja start point is not on the candidate mesh");
    return best;
  }
  Complex centroid{0.0, 0.0};
  for (const auto& p : mesh.points) centroid += p;
  centroid /= static_cast<double>(mesh.size());
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double d = std::abs(mesh.points[i] - centroid);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::string describe_start(const LejaStart& start) {
  if (const auto* index = std::get_if<std::size_t>(&start)) return "index:" + std::to_string(*index);
  if (const auto* point = std::get_if<Complex>(&start)) {
    std::ostringstream os;
    os.precision(17);
    os << "point:" << point->real() << "," << point->imag();
    return os.str();
  }
  return "auto";
}

}  // namespace

LejaSequence leja_sequence(const BoundaryMesh& mesh, std::size_t n, LejaStart start,
                           TieBreak /*tie_break*/) {
  if (n == 0) throw InvalidInput("Leja sequence length must be positive");
  if (mesh.size() < 4 * n) {
    throw InvalidInput("Leja generation needs at least 4n = " + std::to_string(4 * n) +
                       " candidates, mesh has " + std::to_string(mesh.size()));
  }
  const auto& cand = mesh.points;
  const std::size_t m = cand.size();

  LejaSequence seq;
  seq.points.reserve(n);
  seq.indices.reserve(n);
  std::size_t current = resolve_start(mesh, start);
  seq.points.push_back(cand[current]);
  seq.indices.push_back(current);

  // logsum[i] = sum_j log|cand[i] - z_j|; -inf marks chosen candidates and
  // their duplicates.
  std::vector<double> logsum(m, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const Complex last = cand[current];
    logsum[current] = -std::numeric_limits<double>::infinity();
    const auto best = parallel_argmax(m, [&](std::size_t i) {
      logsum[i] += std::log(std::abs(cand[i] - last));
      return logsum[i];
    });
    if (best.index >= m || best.value == -std::numeric_limits<double>::infinity()) {
      throw InvalidInput("Leja sequence of length " + std::to_string(n) +
                         " exceeds the number of distinct candidates");
    }
    current = best.index;
    seq.points.push_back(cand[current]);
    seq.indices.push_back(current);
  }
  return seq;
}

std::vector<Complex> leja_generate(const BoundaryMesh& mesh, std::size_t n, LejaStart start,
                                   TieBreak tie_break) {
  return leja_sequence(mesh, n, start, tie_break).points;
}

std::size_t default_leja_candidates(std::size_t n) { return std::max<std::size_t>(4096, 8 * n * n); }

std::vector<Complex> chebyshev_nodes(const SetSpec& set, std::size_t n) {
  if (set.kind != SetKind::segment) throw InvalidInput("Chebyshev nodes are defined on a segment");
  if (n == 0) throw InvalidInput("Chebyshev node count must be positive");
  validate(set);
  std::vector<Complex> out(n);
  const auto nn = static_cast<long long>(n);
  for (long long k = 1; k <= nn; ++k) {
    // cos((2k-1) pi / 2n) written as a sine of an exactly symmetric argument.
    const double x = std::sin(kPi * static_cast<double>(nn - 2 * k + 1) / static_cast<double>(2 * nn));
    const Complex z{x, 0.0};
    out[static_cast<std::size_t>(k - 1)] = set.affine ? set.affine->apply(z) : z;
  }
  return out;
}

std::vector<Complex> equispaced_nodes(const SetSpec& set, std::size_t n) {
  if (n == 0) throw InvalidInput("equispaced node count must be positive");
  validate(set);
  if (n == 1) return {point_at(set, 0.5)};
  return build_mesh(set, n, Clustering::uniform).points;
}

std::vector<Complex> random_nodes(const SetSpec& set, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random node count must be positive");
  validate(set);
  std::mt19937_64 gen(seed);
  std::vector<Complex> out;
  out.reserve(n);
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > 64 * n + 1024) throw NumericalFailure("random_nodes: too many collisions");
    const double s = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const Complex z = point_at(set, s);
    if (std::find(out.begin(), out.end(), z) != out.end()) continue;
    out.push_back(z);
  }
  return out;
}

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::leja: return "leja";
    case SchemeKind::chebyshev: return "chebyshev";
    case SchemeKind::equispaced: return "equispaced";
    case SchemeKind::random: return "random";
    case SchemeKind::user: return "user";
  }
  return "unknown";
}

SchemeKind scheme_kind_from_string(std::string_view name) {
  for (SchemeKind k : {SchemeKind::leja, SchemeKind::chebyshev, SchemeKind::equispaced,
                       SchemeKind::random, SchemeKind::user}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown scheme kind '" + std::string(name) + "'");
}

Scheme Scheme::generate(SchemeKind kind, const SetSpec& set, const std::vector<std::size_t>& ns,
                        const SchemeOptions& options) {
  if (ns.empty()) throw InvalidInput("scheme needs at least one row size");
  validate(set);
  std::vector<std::size_t> sizes = ns;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() == 0) throw InvalidInput("row sizes must be positive");

  Scheme s;
  s.kind_ = kind;
  s.set_ = set;
  s.seed_ = options.seed;
  switch (kind) {
    case SchemeKind::leja: {
      const std::size_t n = sizes.back();
      s.candidates_ = options.candidates ? options.candidates : default_leja_candidates(n);
      const auto clustering = set.closed() ? Clustering::uniform : Clustering::endpoint_clustered;
      const auto mesh = build_mesh(set, s.candidates_, clustering);
      s.sequence_ = leja_generate(mesh, n, options.start);
      s.start_label_ = describe_start(options.start);
      break;
    }
    case SchemeKind::chebyshev:
      for (auto n : sizes) s.rows_[n] = chebyshev_nodes(set, n);
      break;
    case SchemeKind::equispaced:
      for (auto n : sizes) s.rows_[n] = equispaced_nodes(set, n);
      break;
    case SchemeKind::random:
      if (!options.seed) throw InvalidInput("random schemes require a seed");
      for (auto n : sizes) s.rows_[n] = random_nodes(set, n, *options.seed);
      break;
    case SchemeKind::user:
      throw InvalidInput("user schemes are loaded, not generated");
  }
  return s;
}

Scheme Scheme::from_sequence(const SetSpec& set, std::vector<Complex> sequence,
                             std::size_t candidates, std::string start) {
  if (sequence.empty()) throw InvalidInput("empty Leja sequence");
  Scheme s;
  s.kind_ = SchemeKind::leja;
  s.set_ = set;
  s.candidates_ = candidates;
  s.start_label_ = std::move(start);
  s.sequence_ = std::move(sequence);
  return s;
}

Scheme Scheme::from_row(SchemeKind kind, const SetSpec& set, std::vector<Complex> row,
                        std::optional<std::uint64_t> seed) {
  if (row.empty()) throw InvalidInput("empty node row");
  if (kind == SchemeKind::leja) return from_sequence(set, std::move(row));
  Scheme s;
  s.kind_ = kind;
  s.set_ = set;
  s.seed_ = seed;
  const std::size_t n = row.size();
  s.rows_[n] = std::move(row);
  return s;
}

bool Scheme::has_row(std::size_t n) const {
  if (n == 0) return false;
  if (kind_ == SchemeKind::leja) return n <= sequence_.size();
  return rows_.count(n) > 0;
}

std::vector<Complex> Scheme::row(std::size_t n) const {
  if (!has_row(n)) throw InvalidInput("scheme has no row of size " + std::to_string(n));
  if (kind_ == SchemeKind::leja) {
    return {sequence_.begin(), sequence_.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  return rows_.at(n);
}

std::size_t Scheme::max_n() const {
  if (kind_ == SchemeKind::leja) return sequence_.size();
  return rows_.empty() ? 0 : rows_.rbegin()->first;
}

}  // namespace lejalab
