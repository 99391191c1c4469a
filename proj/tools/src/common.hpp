#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsphere/qsphere.hpp"

namespace qsphere::cli {

// Where a command gets its surface from: a JSON file or a family constructor.
struct SurfaceArgs {
  std::string in;
  std::string family;
  int n = 0;
  int q = 0;
  std::string p = "1";
  std::string fn;
  std::string affine;
  std::string g_lead;
  std::vector<std::string> g_middle;
  std::vector<std::string> f_tail;
};

Surface build_surface(const SurfaceArgs& args);

std::string read_text(const std::string& path);
/// Writes to `out` when path is empty or "-".
void write_text(const std::string& path, const std::string& text, std::ostream& out);

/// "x,y,z" of rationals.
AffinePoint parse_affine_point(const std::string& text);
std::string point_text(const ProjectivePoint& p);

/// Primitive integer multiple with a positive lexicographically leading
/// coefficient.
MultiPoly normalized(const MultiPoly& f);

std::string fixed12(double v);

struct ReproduceOptions {
  std::string outdir;
  int resolution = 64;
  int threads = 0;
};
/// Writes all figure artifacts plus manifest.json; returns the manifest text.
std::string reproduce(const ReproduceOptions& options);

}  // namespace qsphere::cli
