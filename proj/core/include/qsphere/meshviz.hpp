#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsphere/constructors.hpp"

namespace qsphere {

using Vec3 = std::array<double, 3>;

/// Axis-aligned sampling box split into resolution^3 cells.
struct GridSpec {
  Vec3 lo{-2.0, -2.0, -2.0};
  Vec3 hi{2.0, 2.0, 2.0};
  int resolution = 64;

  /// Throws PreconditionError unless lo < hi on every axis and
  /// 8 <= resolution <= 512.
  void validate() const;
  Vec3 cell_size() const;
  double cell_diagonal() const;
};

struct Mesh {
  std::vector<Vec3> vertices;
  /// Unit normals along grad F; averaged face normals where the gradient
  /// collapses.
  std::vector<Vec3> normals;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  /// 1 where the gradient collapsed (near a singular point of the surface).
  std::vector<std::uint8_t> singular;

  bool empty() const { return triangles.empty(); }
};

struct PolygonizeOptions {
  /// Worker threads for corner evaluation; 0 means QSPHERE_THREADS or the
  /// hardware concurrency.
  int threads = 0;
};

/// Worker count from QSPHERE_THREADS (if set and positive), else the
/// hardware concurrency.
int default_worker_count();

/// Triangulates the zero set of the affine polynomial over the grid.
/// Each cube is split into six tetrahedra around its main diagonal, so the
/// triangulation is consistent across neighbouring cells and has no
/// ambiguous cases. Vertices sit on sign-changing edges after linear
/// interpolation and one secant step. Output is independent of the number
/// of threads.
Mesh polygonize(const MultiPoly& affine, const GridSpec& grid, const PolygonizeOptions& options = {});
Mesh polygonize(const Surface& s, const GridSpec& grid, const PolygonizeOptions& options = {});

struct NormalSample {
  Vec3 normal{0.0, 0.0, 0.0};
  /// |grad F| below the tolerance; `normal` is zero then.
  bool singular = false;
};

std::vector<NormalSample> gradient_normals(const MultiPoly& affine, std::span<const Vec3> points,
                                           double tolerance = 1e-9);
std::vector<NormalSample> gradient_normals(const Surface& s, std::span<const Vec3> points,
                                           double tolerance = 1e-9);

/// A box that contains the real part of the surface for the one-point and
/// two-point families (symmetric about z = p/2 for the latter); [-2, 2]^3
/// otherwise.
GridSpec suggest_grid(const Surface& s, int resolution);

/// Wavefront OBJ text: v, vn and f records with 1-based indices.
std::string render_obj(const Mesh& mesh);
/// Throws IoError if the file cannot be written.
void export_obj(const Mesh& mesh, const std::string& path);
/// Reads v and f records back (normals are ignored). Throws ParseError.
Mesh parse_obj(std::string_view text);

}  // namespace qsphere
