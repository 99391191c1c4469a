#include "qsphere/meshviz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace qsphere {
namespace {

// Floating-point copy of a trivariate polynomial; the single conversion
// point from exact coefficients.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& f) {
    if (f.arity() != 3) throw ArityError("mesh evaluation needs a polynomial in x, y, z");
    for (const auto& [e, c] : f.terms()) {
      coeffs_.push_back(c.get_d());
      exps_.push_back({e[0], e[1], e[2]});
      for (int v = 0; v < 3; ++v) max_deg_ = std::max<int>(max_deg_, e[v]);
    }
  }

  double operator()(const Vec3& p) const {
    double pw[3][64];
    const int top = std::min(max_deg_, 63);
    for (int v = 0; v < 3; ++v) {
      pw[v][0] = 1.0;
      for (int k = 1; k <= top; ++k) pw[v][k] = pw[v][k - 1] * p[v];
    }
    double acc = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      acc += coeffs_[t] * pw[0][exps_[t][0]] * pw[1][exps_[t][1]] * pw[2][exps_[t][2]];
    }
    return acc;
  }

 private:
  std::vector<double> coeffs_;
  std::vector<std::array<std::uint16_t, 3>> exps_;
  int max_deg_ = 0;
};

struct Gradient {
  explicit Gradient(const MultiPoly& f)
      : dx(partial(f, 0)), dy(partial(f, 1)), dz(partial(f, 2)) {}
  Vec3 operator()(const Vec3& p) const { return {dx(p), dy(p), dz(p)}; }
  CompiledPoly dx, dy, dz;
};

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Six tetrahedra sharing the diagonal 0-7; corner c has offset (c&1, c>>1&1, c>>2&1).
// Cells with an odd index along an axis use the pattern mirrored across that
// axis (corner c becomes c ^ mask). Faces still match between neighbours and
// the decomposition is symmetric under reflection in any grid plane.
constexpr std::array<std::array<int, 4>, 6> kTets{{
    {0, 1, 3, 7}, {0, 1, 5, 7}, {0, 2, 3, 7}, {0, 2, 6, 7}, {0, 4, 5, 7}, {0, 4, 6, 7},
}};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

void GridSpec::validate() const {
  for (int a = 0; a < 3; ++a) {
    if (!(lo[a] < hi[a])) throw PreconditionError("bounds min < max", "empty extent on axis " + std::to_string(a));
  }
  if (resolution < 8 || resolution > 512) {
    throw PreconditionError("8 <= resolution <= 512", "got " + std::to_string(resolution));
  }
}

Vec3 GridSpec::cell_size() const {
  return {(hi[0] - lo[0]) / resolution, (hi[1] - lo[1]) / resolution, (hi[2] - lo[2]) / resolution};
}

double GridSpec::cell_diagonal() const { return norm(cell_size()); }

int default_worker_count() {
  if (const char* env = std::getenv("QSPHERE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Mesh polygonize(const MultiPoly& affine, const GridSpec& grid, const PolygonizeOptions& options) {
  grid.validate();
  const CompiledPoly f(affine);
  const int res = grid.resolution;
  const int side = res + 1;
  const Vec3 h = grid.cell_size();
  const auto corner_position = [&](int i, int j, int k) -> Vec3 {
    return {grid.lo[0] + i * h[0], grid.lo[1] + j * h[1], grid.lo[2] + k * h[2]};
  };
  const auto global_index = [side](int i, int j, int k) -> std::uint64_t {
    return (static_cast<std::uint64_t>(k) * side + j) * side + i;
  };

  Mesh mesh;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;
  const std::uint64_t corner_count = static_cast<std::uint64_t>(side) * side * side;

  const auto edge_point = [&](std::uint64_t ga, Vec3 pa, double fa, std::uint64_t gb, Vec3 pb,
                              double fb) -> std::uint32_t {
    const std::uint64_t key = std::min(ga, gb) * corner_count + std::max(ga, gb);
    if (auto it = edge_vertex.find(key); it != edge_vertex.end()) return it->second;
    // Always interpolate from the non-positive end so mirrored edges agree.
    if (fa > 0) {
      std::swap(pa, pb);
      std::swap(fa, fb);
    }
    // Linear interpolation, then one secant step on the bracketing half.
    const double t = fa / (fa - fb);
    Vec3 p{pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]), pa[2] + t * (pb[2] - pa[2])};
    const double fp = f(p);
    if (fp != 0.0 && t > 0.0 && t < 1.0) {
      const bool same_side_as_a = (fp > 0) == (fa > 0);
      const Vec3& qa = same_side_as_a ? p : pa;
      const Vec3& qb = same_side_as_a ? pb : p;
      const double ga_val = same_side_as_a ? fp : fa;
      const double gb_val = same_side_as_a ? fb : fp;
      const double s = ga_val / (ga_val - gb_val);
      if (std::isfinite(s)) {
        p = {qa[0] + s * (qb[0] - qa[0]), qa[1] + s * (qb[1] - qa[1]), qa[2] + s * (qb[2] - qa[2])};
      }
    }
    const auto index = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(p);
    edge_vertex.emplace(key, index);
    return index;
  };

  // Corner values are computed a slab of layers at a time, in parallel; cell
  // extraction then walks the slab in index order so output is deterministic.
  const int workers = std::max(1, options.threads > 0 ? options.threads : default_worker_count());
  constexpr int kSlab = 16;
  const std::size_t layer_size = static_cast<std::size_t>(side) * side;
  std::vector<double> layers;
  int first_layer = 0;
  for (int k0 = 0; k0 < res; k0 += kSlab) {
    const int k1 = std::min(res, k0 + kSlab);
    first_layer = k0;
    layers.assign(layer_size * static_cast<std::size_t>(k1 - k0 + 1), 0.0);
    const auto fill = [&](int worker) {
      for (int k = k0 + worker; k <= k1; k += workers) {
        for (int j = 0; j < side; ++j)
          for (int i = 0; i < side; ++i) {
            layers[static_cast<std::size_t>(k - k0) * layer_size + static_cast<std::size_t>(j) * side + i] =
                f(corner_position(i, j, k));
          }
      }
    };
    if (workers == 1) {
      fill(0);
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(fill, w);
    }
    const auto value = [&](int i, int j, int k) {
      return layers[static_cast<std::size_t>(k - first_layer) * layer_size + static_cast<std::size_t>(j) * side + i];
    };

    for (int k = k0; k < k1; ++k)
      for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
          std::array<double, 8> v;
          std::array<Vec3, 8> p;
          std::array<std::uint64_t, 8> g;
          bool any_pos = false;
          bool any_neg = false;
          for (int c = 0; c < 8; ++c) {
            const int ci = i + (c & 1);
            const int cj = j + ((c >> 1) & 1);
            const int ck = k + ((c >> 2) & 1);
            v[c] = value(ci, cj, ck);
            p[c] = corner_position(ci, cj, ck);
            g[c] = global_index(ci, cj, ck);
            (v[c] > 0 ? any_pos : any_neg) = true;
          }
          if (!any_pos || !any_neg) continue;

          const int mask = (i & 1) | ((j & 1) << 1) | ((k & 1) << 2);
          for (const auto& tet : kTets) {
            std::array<int, 4> pos{}, neg{};
            int np = 0, nn = 0;
            for (int c0 : tet) {
              const int c = c0 ^ mask;
              if (v[c] > 0) {
                pos[np++] = c;
              } else {
                neg[nn++] = c;
              }
            }
            if (np == 0 || nn == 0) continue;
            const auto cut = [&](int a, int b) { return edge_point(g[a], p[a], v[a], g[b], p[b], v[b]); };

            Vec3 toward_positive{0, 0, 0};
            for (int q = 0; q < np; ++q)
              for (int a = 0; a < 3; ++a) toward_positive[a] += p[pos[q]][a] / np;
            for (int q = 0; q < nn; ++q)
              for (int a = 0; a < 3; ++a) toward_positive[a] -= p[neg[q]][a] / nn;

            const auto emit = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
              const Vec3 normal = cross(sub(mesh.vertices[b], mesh.vertices[a]), sub(mesh.vertices[c], mesh.vertices[a]));
              if (norm(normal) <= 1e-12 * h[0] * h[1]) return;
              if (dot(normal, toward_positive) < 0) std::swap(b, c);
              mesh.triangles.push_back({a, b, c});
            };
            if (np == 1 || nn == 1) {
              const int apex = np == 1 ? pos[0] : neg[0];
              const auto& others = np == 1 ? neg : pos;
              emit(cut(apex, others[0]), cut(apex, others[1]), cut(apex, others[2]));
            } else {
              const std::uint32_t a = cut(pos[0], neg[0]);
              const std::uint32_t b = cut(pos[0], neg[1]);
              const std::uint32_t c = cut(pos[1], neg[1]);
              const std::uint32_t d = cut(pos[1], neg[0]);
              emit(a, b, c);
              emit(a, c, d);
            }
          }
        }
  }

  // Drop vertices that only belonged to degenerate triangles.
  std::vector<std::uint32_t> remap(mesh.vertices.size(), UINT32_MAX);
  std::vector<Vec3> kept;
  for (auto& tri : mesh.triangles)
    for (auto& idx : tri) {
      if (remap[idx] == UINT32_MAX) {
        remap[idx] = static_cast<std::uint32_t>(kept.size());
        kept.push_back(mesh.vertices[idx]);
      }
      idx = remap[idx];
    }
  mesh.vertices = std::move(kept);

  // Normals from the gradient; face-averaged where the gradient collapses.
  const Gradient grad(affine);
  std::vector<double> grad_norms;
  mesh.normals.resize(mesh.vertices.size());
  for (std::size_t vtx = 0; vtx < mesh.vertices.size(); ++vtx) {
    mesh.normals[vtx] = grad(mesh.vertices[vtx]);
    grad_norms.push_back(norm(mesh.normals[vtx]));
  }
  double typical = 0.0;
  if (!grad_norms.empty()) {
    std::vector<double> sorted = grad_norms;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
    typical = sorted[sorted.size() / 2];
  }
  const double collapse = 1e-3 * typical;
  mesh.singular.assign(mesh.vertices.size(), 0);
  std::vector<Vec3> face_sum(mesh.vertices.size(), Vec3{0, 0, 0});
  for (const auto& tri : mesh.triangles) {
    const Vec3 n = cross(sub(mesh.vertices[tri[1]], mesh.vertices[tri[0]]), sub(mesh.vertices[tri[2]], mesh.vertices[tri[0]]));
    for (auto idx : tri)
      for (int a = 0; a < 3; ++a) face_sum[idx][a] += n[a];
  }
  for (std::size_t vtx = 0; vtx < mesh.vertices.size(); ++vtx) {
    Vec3 n = mesh.normals[vtx];
    if (grad_norms[vtx] <= collapse || grad_norms[vtx] == 0.0) {
      mesh.singular[vtx] = 1;
      n = face_sum[vtx];
    }
    const double len = norm(n);
    mesh.normals[vtx] = len > 0 ? Vec3{n[0] / len, n[1] / len, n[2] / len} : Vec3{0.0, 0.0, 1.0};
  }
  return mesh;
}

Mesh polygonize(const Surface& s, const GridSpec& grid, const PolygonizeOptions& options) {
  return polygonize(s.affine(), grid, options);
}

std::vector<NormalSample> gradient_normals(const MultiPoly& affine, std::span<const Vec3> points, double tolerance) {
  const Gradient grad(affine);
  std::vector<NormalSample> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const Vec3 g = grad(p);
    const double len = norm(g);
    NormalSample sample;
    if (len < tolerance) {
      sample.singular = true;
    } else {
      sample.normal = {g[0] / len, g[1] / len, g[2] / len};
    }
    out.push_back(sample);
  }
  return out;
}

std::vector<NormalSample> gradient_normals(const Surface& s, std::span<const Vec3> points, double tolerance) {
  return gradient_normals(s.affine(), points, tolerance);
}

GridSpec suggest_grid(const Surface& s, int resolution) {
  GridSpec grid;
  grid.resolution = resolution;
  if (s.provenance == Provenance::TwoPoint && s.p) {
    // Section circles have |rho_T| <= 1: center (rho_T/2, p/2), radius <= sqrt(1/4 + p^2/4).
    const double p = s.p->get_d();
    const double r = std::sqrt(0.25 + 0.25 * p * p);
    const double reach = 1.1 * (0.5 + r);
    grid.lo = {-reach, -reach, p / 2 - 1.1 * r};
    grid.hi = {reach, reach, p / 2 + 1.1 * r};
  } else if (s.provenance == Provenance::OnePoint) {
    // Along a unit direction d the nonzero points satisfy t^n = -f_n(d).
    const int n = s.order / 2;
    const CompiledPoly f_n(s.affine().homogeneous_part(n));
    double reach = 0.0;
    constexpr int kSamples = 4000;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < kSamples; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / kSamples;
      const double r = std::sqrt(1.0 - z * z);
      const Vec3 d{r * std::cos(golden * i), r * std::sin(golden * i), z};
      reach = std::max(reach, std::pow(std::abs(f_n(d)), 1.0 / n));
    }
    reach = 1.15 * std::max(reach, 0.1);
    grid.lo = {-reach, -reach, -reach};
    grid.hi = {reach, reach, reach};
  }
  return grid;
}

std::string render_obj(const Mesh& mesh) {
  std::string out = "# qsphere mesh\n";
  for (const auto& v : mesh.vertices) out += "v " + fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]) + "\n";
  for (const auto& n : mesh.normals) out += "vn " + fmt(n[0]) + " " + fmt(n[1]) + " " + fmt(n[2]) + "\n";
  const bool with_normals = mesh.normals.size() == mesh.vertices.size() && !mesh.normals.empty();
  for (const auto& t : mesh.triangles) {
    out += "f";
    for (auto idx : t) {
      const std::string i = std::to_string(idx + 1);
      out += " " + (with_normals ? i + "//" + i : i);
    }
    out += "\n";
  }
  return out;
}

void export_obj(const Mesh& mesh, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << render_obj(mesh);
  if (!file) throw IoError("write to '" + path + "' failed");
}

Mesh parse_obj(std::string_view text) {
  Mesh mesh;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "v") {
      Vec3 v;
      if (!(row >> v[0] >> v[1] >> v[2])) throw ParseError("bad vertex record: " + line);
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<std::uint32_t, 3> tri{};
      for (auto& idx : tri) {
        std::string token;
        if (!(row >> token)) throw ParseError("face with fewer than 3 vertices: " + line);
        const long value = std::strtol(token.c_str(), nullptr, 10);
        if (value < 1 || static_cast<std::size_t>(value) > mesh.vertices.size()) {
          throw ParseError("face index out of range: " + line);
        }
        idx = static_cast<std::uint32_t>(value - 1);
      }
      mesh.triangles.push_back(tri);
    }
  }
  return mesh;
}

}  // namespace qsphere
