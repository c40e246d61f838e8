#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lejalab/error.hpp"

namespace lejalab {

enum class SetKind { segment, circle, circular_arc, polyline_arc, samples };

std::string_view to_string(SetKind kind);
SetKind set_kind_from_string(std::string_view name);

/// Similarity z -> scale * exp(i*rotation) * z + shift. Shear is not
/// representable on purpose.
struct Similarity {
  double scale = 1.0;
  double rotation = 0.0;
  Complex shift{0.0, 0.0};

  Complex apply(Complex z) const;
  Complex invert(Complex z) const;
  /// Image of a displacement (no translation).
  Complex apply_linear(Complex v) const;
};

/// Description of a compact set in the plane. The base shapes are:
///   segment       [-1, 1] on the real axis
///   circle        |z - center| = radius
///   circular_arc  center + radius * exp(i t), t in [-span/2, span/2]
///   polyline_arc  simple open polyline through `vertices`
///   samples       open polyline through raw `vertices` (not checked for
///                 self-intersection)
/// and the optional similarity is applied on top.
struct SetSpec {
  SetKind kind = SetKind::segment;
  double radius = 1.0;
  double span = 0.0;
  Complex center{0.0, 0.0};
  std::vector<Complex> vertices;
  std::optional<Similarity> affine;

  static SetSpec segment();
  static SetSpec circle(double radius, Complex center = {});
  static SetSpec circular_arc(double radius, double span, Complex center = {});
  static SetSpec polyline_arc(std::vector<Complex> vertices);
  static SetSpec samples(std::vector<Complex> points);

  SetSpec with_affine(const Similarity& map) const;
  bool closed() const { return kind == SetKind::circle; }
};

/// Throws InvalidInput with a description of the first violated invariant.
void validate(const SetSpec& spec);

/// Point at natural parameter s in [0, 1]: the affine coordinate along the
/// segment, the angle fraction on circles and arcs, the normalized arclength
/// on polylines. Closed curves treat s modulo 1.
Complex point_at(const SetSpec& spec, double s);

/// Inverse of point_at. Throws InvalidInput if z is farther than
/// `tolerance` (in base-shape units) from the set.
double parameter_of(const SetSpec& spec, Complex z, double tolerance = 1e-9);

/// Distance from z to the set, measured in the plane.
double distance_to_set(const SetSpec& spec, Complex z);

struct Box {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

Box bounding_box(const SetSpec& spec);
double diameter(const SetSpec& spec);

enum class Clustering { uniform, endpoint_clustered };

/// Ordered discretization of the boundary of a compact set.
struct BoundaryMesh {
  std::vector<Complex> points;
  std::vector<double> params;
  bool closed = false;
  SetSpec source;

  std::size_t size() const { return points.size(); }
};

/// m points of the set ordered by parameter. Endpoint clustering grades the
/// parameter with a cosine law so that spacing near open-arc endpoints is
/// O(1/m^2); closed curves are always sampled uniformly. Deterministic.
BoundaryMesh build_mesh(const SetSpec& spec, std::size_t m,
                        Clustering clustering = Clustering::uniform);

/// Contiguous sub-mesh between indices i and j (in either order).
BoundaryMesh subarc(const BoundaryMesh& mesh, std::size_t i, std::size_t j);

/// Lower estimate of the quasiconformal arc constant
///   max diam(L(z, w)) / |z - w|
/// over mesh point pairs. Meshes above 512 points are scanned on a strided
/// subsample of 512 indices.
double qc_constant_estimate(const BoundaryMesh& mesh);

}  // namespace lejalab
