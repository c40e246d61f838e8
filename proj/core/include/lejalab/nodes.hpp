#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lejalab/error.hpp"
#include "lejalab/geometry.hpp"

namespace lejalab {

/// Where a Leja sequence starts: the default picks the mesh point farthest
/// from the mesh centroid (lowest index on ties).
struct AutoStart {};
using LejaStart = std::variant<AutoStart, std::size_t, Complex>;

enum class TieBreak { lowest_index };

struct LejaSequence {
  std::vector<Complex> points;
  /// Mesh index of each point.
  std::vector<std::size_t> indices;
};

/// Greedy Leja sequence over mesh candidates. Step k picks the candidate
/// maximizing sum_j log|z - z_j| (exact ties go to the lowest index).
/// Running log-sums make the total cost O(n m).
LejaSequence leja_sequence(const BoundaryMesh& mesh, std::size_t n, LejaStart start = AutoStart{},
                           TieBreak tie_break = TieBreak::lowest_index);

std::vector<Complex> leja_generate(const BoundaryMesh& mesh, std::size_t n,
                                   LejaStart start = AutoStart{},
                                   TieBreak tie_break = TieBreak::lowest_index);

/// Candidate mesh size used for a Leja target n: max(4096, 8 n^2).
std::size_t default_leja_candidates(std::size_t n);

/// cos((2k - 1) pi / (2n)), k = 1..n, descending; segment sets only.
std::vector<Complex> chebyshev_nodes(const SetSpec& set, std::size_t n);

/// Equally spaced in the set's natural parameter. On the segment this is
/// -1 + 2(k - 1)/(n - 1); n = 1 gives the parameter midpoint.
std::vector<Complex> equispaced_nodes(const SetSpec& set, std::size_t n);

/// n distinct uniform draws of the natural parameter from a seeded
/// mt19937_64 (53-bit mantissa mapping, identical on every platform).
std::vector<Complex> random_nodes(const SetSpec& set, std::size_t n, std::uint64_t seed);

enum class SchemeKind { leja, chebyshev, equispaced, random, user };

std::string_view to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(std::string_view name);

struct SchemeOptions {
  std::optional<std::uint64_t> seed;
  /// Leja candidate mesh size; 0 selects default_leja_candidates(max n).
  std::size_t candidates = 0;
  LejaStart start = AutoStart{};
};

/// Triangular array of interpolation nodes. Leja schemes hold one sequence
/// whose prefixes are the rows; other kinds hold independent rows.
class Scheme {
 public:
  static Scheme generate(SchemeKind kind, const SetSpec& set, const std::vector<std::size_t>& ns,
                         const SchemeOptions& options = {});
  static Scheme from_sequence(const SetSpec& set, std::vector<Complex> sequence,
                              std::size_t candidates = 0, std::string start = "auto");
  static Scheme from_row(SchemeKind kind, const SetSpec& set, std::vector<Complex> row,
                         std::optional<std::uint64_t> seed = std::nullopt);

  SchemeKind kind() const { return kind_; }
  const SetSpec& set() const { return set_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  std::size_t candidates() const { return candidates_; }
  const std::string& start_label() const { return start_label_; }

  bool has_row(std::size_t n) const;
  /// Row n; throws InvalidInput if it is not available.
  std::vector<Complex> row(std::size_t n) const;
  /// Largest available row size.
  std::size_t max_n() const;

 private:
  SchemeKind kind_ = SchemeKind::leja;
  SetSpec set_;
  std::optional<std::uint64_t> seed_;
  std::size_t candidates_ = 0;
  std::string start_label_ = "auto";
  std::vector<Complex> sequence_;
  std::map<std::size_t, std::vector<Complex>> rows_;
};

}  // namespace lejalab
