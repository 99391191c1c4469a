#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "common.hpp"
#include "json.hpp"

namespace qsphere::cli {
namespace {

using nlohmann::json;

struct OnePointSpec {
  const char* figure;
  const char* panel;
  int n;
  const char* f_n;
  const char* note;
};

// Representative tangent cones. Set 2 has fixed cones; sets 1, 3 and 4 only
// fix how the cone splits, so the forms below are representatives.
constexpr OnePointSpec kOnePoint[] = {
    {"1", "a", 2, "x*y", "two planes"},
    {"1", "b", 3, "x*y*z", "three planes"},
    {"1", "c", 4, "x*y*z*(x + y + z)", "four planes"},
    {"1", "d", 5, "x*y*z*(x - y)*(x + y)", "five planes"},
    {"1", "e", 6, "x*y*z*(x - y)*(x + y)*(y - z)", "six planes"},
    {"2", "a", 2, "x^2 + y^2 - z^2", "listed cone"},
    {"2", "b", 2, "-(x^2 + y^2 - z^2)", "listed cone"},
    {"2", "c", 3, "-2*x^3 - x^2*z + 2*y^2*z + x*z^2", "listed cone"},
    {"3", "a", 3, "z*(x^2 + y^2 - z^2)", "plane and quadric cone"},
    {"3", "b", 3, "x*(x^2 + y^2 - 2*z^2)", "plane and quadric cone"},
    {"3", "c", 3, "(x + y)*(x^2 - y^2 + 2*z^2)", "plane and quadric cone"},
    {"4", "a", 4, "(x^2 + y^2 - z^2)*(x^2 - y^2 + z^2)", "two quadric cones"},
    {"4", "b", 4, "(x^2 + y^2 - 4*z^2)*(4*x^2 - y^2 - z^2)", "two quadric cones"},
    {"4", "c", 4, "x*y*(x^2 + y^2 - z^2)", "two planes and a quadric cone"},
    {"4", "d", 4, "z*(x - y)*(x^2 - 2*y^2 + z^2)", "two planes and a quadric cone"},
};

struct TwoPointSpec {
  const char* figure;
  const char* panel;
  int n;
  const char* reference_cone;
};

constexpr TwoPointSpec kTwoPoint[] = {
    {"7", "a", 2, "x*y - 2*z^2"},
    {"7", "b", 4, "x^3*y - x*y^3 - 4*z^4"},
    {"7", "c", 6, "3*x^5*y - 10*x^3*y^3 + 3*x*y^5 - 32*z^6"},
    {"8", "a", 3, "x^2*y - y^3 + 8*z^3"},
    {"8", "b", 5, "x^4*y - 10*x^2*y^3 + y^5 + 32*z^5"},
    {"8", "c", 7, "x^6*y - 35*x^4*y^3 + 21*x^2*y^5 - y^7 + 128*z^7"},
};

json grid_json(const GridSpec& g) {
  return {{"lo", {g.lo[0], g.lo[1], g.lo[2]}}, {"hi", {g.hi[0], g.hi[1], g.hi[2]}}, {"resolution", g.resolution}};
}

json mesh_entry(const Surface& s, const GridSpec& grid, const Mesh& mesh, const std::string& file) {
  const auto singular = std::count(mesh.singular.begin(), mesh.singular.end(), std::uint8_t{1});
  return {{"kind", "mesh"},
          {"file", file},
          {"order", s.order},
          {"q", absolute_multiplicity(s)},
          {"grid", grid_json(grid)},
          {"vertices", mesh.vertices.size()},
          {"triangles", mesh.triangles.size()},
          {"singular_vertices", singular}};
}

std::string write_artifact(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  std::ostringstream sink;
  write_text((dir / name).string(), text, sink);
  return name;
}

}  // namespace

std::string reproduce(const ReproduceOptions& options) {
  const std::filesystem::path dir(options.outdir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create directory '" + options.outdir + "'");

  json artifacts = json::array();
  const PolygonizeOptions poly{options.threads};

  for (const auto& entry : kOnePoint) {
    const MultiPoly f = parse_polynomial(entry.f_n, 3);
    const Surface s = one_point_surface(entry.n, HomogeneousForm(f, entry.n));
    const GridSpec grid = suggest_grid(s, options.resolution);
    const Mesh mesh = polygonize(s, grid, poly);
    const std::string name = std::string("fig") + entry.figure + entry.panel + ".obj";
    write_artifact(dir, name, render_obj(mesh));
    json e = mesh_entry(s, grid, mesh, name);
    e["figure"] = entry.figure;
    e["panel"] = entry.panel;
    e["family"] = "one-point";
    e["parameters"] = {{"n", entry.n}, {"f_n", to_string(f)}};
    e["cone_type"] = entry.note;
    e["origin_multiplicity"] = point_multiplicity(s, affine_point(0, 0, 0)).multiplicity;
    artifacts.push_back(std::move(e));
  }

  for (int n = 2; n <= 6; ++n) {
    const PlaneCurve curve = polar_family_curve(n);
    const auto lines = polar_sample(n);
    const MultiPoly affine = curve.affine();
    double residual = 0.0;
    for (const auto& line : lines) {
      for (const auto& [x, y] : line.points) residual = std::max(residual, std::abs(eval<double>(affine, {x, y})));
    }
    const std::string name = "fig5" + std::string(1, static_cast<char>('a' + n - 2)) + ".svg";
    write_artifact(dir, name, render_svg(lines));
    artifacts.push_back({{"figure", "5"},
                         {"panel", std::string(1, static_cast<char>('a' + n - 2))},
                         {"kind", "curve"},
                         {"file", name},
                         {"family", "polar"},
                         {"parameters", {{"n", n}}},
                         {"equation", to_string(affine)},
                         {"order", curve.order},
                         {"circularity", curve.circularity},
                         {"polylines", lines.size()},
                         {"max_residual", residual}});
  }

  for (const auto& entry : kTwoPoint) {
    const TwoPointParams params{entry.n, Rational(2)};
    const Surface s = two_point_surface(params);
    const GridSpec grid = suggest_grid(s, options.resolution);
    const Mesh mesh = polygonize(s, grid, poly);
    const std::string name = std::string("fig") + entry.figure + entry.panel + ".obj";
    write_artifact(dir, name, render_obj(mesh));
    const MultiPoly cone = tangent_cone_two_point(params).poly();
    const MultiPoly reference = parse_polynomial(entry.reference_cone, 3);
    json e = mesh_entry(s, grid, mesh, name);
    e["figure"] = entry.figure;
    e["panel"] = entry.panel;
    e["family"] = "two-point";
    e["parameters"] = {{"n", entry.n}, {"p", "2"}};
    e["tangent_cone"] = to_string(cone);
    e["reference_cone"] = to_string(reference);
    e["reference_proportional"] = proportional(cone, reference);
    artifacts.push_back(std::move(e));
  }

  const json skipped = json::array({{{"figure", "2"},
                                     {"panel", "d"},
                                     {"reason", "cone coefficients involve sqrt(3), outside exact rational arithmetic"}}});
  const json manifest{{"generator", "qsphere 0.1.0"}, {"artifacts", artifacts}, {"skipped", skipped}};
  const std::string text = manifest.dump(2) + "\n";
  write_artifact(dir, "manifest.json", text);
  return text;
}

}  // namespace qsphere::cli
