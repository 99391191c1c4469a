#pragma once

// Geometry checks on meshes, shared by unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <utility>

#include "qsphere/meshviz.hpp"

inline double max_radial_error(const qsphere::Mesh& m) {
  double worst = 0.0;
  for (const auto& v : m.vertices) worst = std::max(worst, std::abs(std::hypot(v[0], v[1], v[2]) - 1.0));
  return worst;
}

// Every undirected edge is shared by exactly two triangles, with opposite
// orientations.
inline bool is_closed_manifold(const qsphere::Mesh& m) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) ++directed[{t[k], t[(k + 1) % 3]}];
  }
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    const auto back = directed.find({edge.second, edge.first});
    if (back == directed.end() || back->second != 1) return false;
  }
  return true;
}

// Nearest-neighbour lookups over a bucket grid.
class PointIndex {
 public:
  PointIndex(const std::vector<qsphere::Vec3>& pts, double cell) : pts_(pts), cell_(cell) {
    for (std::size_t i = 0; i < pts.size(); ++i) buckets_[key(bucket_of(pts[i]))].push_back(i);
  }

  double nearest(const qsphere::Vec3& p) const {
    const auto b = bucket_of(p);
    double best = INFINITY;
    for (int ring = 0; ring < 64; ++ring) {
      for (int i = -ring; i <= ring; ++i) {
        for (int j = -ring; j <= ring; ++j) {
          for (int k = -ring; k <= ring; ++k) {
            if (std::max({std::abs(i), std::abs(j), std::abs(k)}) != ring) continue;
            const auto it = buckets_.find(key({b[0] + i, b[1] + j, b[2] + k}));
            if (it == buckets_.end()) continue;
            for (std::size_t idx : it->second) {
              const auto& q = pts_[idx];
              best = std::min(best, std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]));
            }
          }
        }
      }
      // Anything in a farther ring is at least ring * cell away.
      if (best <= ring * cell_) return best;
    }
    return best;
  }

 private:
  std::array<long, 3> bucket_of(const qsphere::Vec3& p) const {
    return {static_cast<long>(std::floor(p[0] / cell_)), static_cast<long>(std::floor(p[1] / cell_)),
            static_cast<long>(std::floor(p[2] / cell_))};
  }
  static std::uint64_t key(const std::array<long, 3>& b) {
    const auto u = [](long v) { return static_cast<std::uint64_t>(v + (1L << 20)) & 0x1fffff; };
    return (u(b[0]) << 42) | (u(b[1]) << 21) | u(b[2]);
  }

  const std::vector<qsphere::Vec3>& pts_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Symmetric Hausdorff distance between the vertex set and its mirror image
// under z -> p - z.
inline double reflected_hausdorff(const qsphere::Mesh& m, double p) {
  std::vector<qsphere::Vec3> mirrored;
  mirrored.reserve(m.vertices.size());
  for (const auto& v : m.vertices) mirrored.push_back({v[0], v[1], p - v[2]});
  const PointIndex original(m.vertices, 0.02);
  const PointIndex reflected(mirrored, 0.02);
  double worst = 0.0;
  for (const auto& v : m.vertices) worst = std::max(worst, reflected.nearest(v));
  for (const auto& v : mirrored) worst = std::max(worst, original.nearest(v));
  return worst;
}
