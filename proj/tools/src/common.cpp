#include "common.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsphere::cli {
namespace {

MultiPoly ternary(const std::string& text) { return parse_polynomial(text, 3); }

}  // namespace

Surface build_surface(const SurfaceArgs& a) {
  if (!a.in.empty()) {
    if (!a.family.empty()) throw PreconditionError("one surface source", "--in and --family are exclusive");
    return surface_from_json(read_text(a.in));
  }
  if (a.family == "two-point") {
    TwoPointParams params{a.n, parse_rational(a.p)};
    return two_point_surface(params);
  }
  if (a.family == "one-point") {
    if (a.fn.empty()) throw PreconditionError("f_n given", "--fn is required for the one-point family");
    return one_point_surface(a.n, HomogeneousForm(ternary(a.fn), a.n));
  }
  if (a.family == "general") {
    const int n = a.n;
    const int q = a.q;
    if (q < 1) throw PreconditionError("q >= 1", "got q = " + std::to_string(q));
    if (n < 2 * q) throw PreconditionError("n >= 2q", "got n = " + std::to_string(n) + ", q = " + std::to_string(q));
    const HomogeneousForm lead(ternary(a.g_lead.empty() ? "1" : a.g_lead), n - 2 * q);
    std::vector<HomogeneousForm> middle;
    for (std::size_t j = 1; j < static_cast<std::size_t>(q); ++j) {
      const std::string text = j <= a.g_middle.size() ? a.g_middle[j - 1] : "0";
      middle.emplace_back(ternary(text), n - 2 * q + static_cast<int>(j));
    }
    if (a.g_middle.size() > middle.size()) {
      throw PreconditionError("q - 1 middle forms", "got " + std::to_string(a.g_middle.size()));
    }
    std::vector<HomogeneousForm> tail;
    for (int j = q; j <= n; ++j) {
      const std::size_t idx = static_cast<std::size_t>(j - q);
      tail.emplace_back(ternary(idx < a.f_tail.size() ? a.f_tail[idx] : "0"), n - j);
    }
    if (a.f_tail.size() > tail.size()) {
      throw PreconditionError("n - q + 1 tail forms", "got " + std::to_string(a.f_tail.size()));
    }
    return general_q_spherical(n, q, lead, middle, tail);
  }
  if (a.family == "custom") {
    if (a.affine.empty()) throw PreconditionError("polynomial given", "--affine is required for a custom surface");
    return surface_from_affine(ternary(a.affine));
  }
  if (a.family.empty()) throw PreconditionError("surface given", "pass --in FILE or --family");
  throw PreconditionError("known family", "unknown family '" + a.family + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw IoError("read from '" + path + "' failed");
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + path + "' failed");
}

AffinePoint parse_affine_point(const std::string& text) {
  AffinePoint p;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) throw ParseError("point must be 'x,y,z': '" + text + "'");
    p[static_cast<std::size_t>(i)] = parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma + 1;
  }
  return p;
}

std::string point_text(const ProjectivePoint& p) {
  if (p[0] != 0) {
    return "(" + to_string(Rational(p[1] / p[0])) + ", " + to_string(Rational(p[2] / p[0])) + ", " +
           to_string(Rational(p[3] / p[0])) + ")";
  }
  return "(" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + " : " + to_string(p[3]) + ")";
}

MultiPoly normalized(const MultiPoly& f) {
  MultiPoly g = primitive_part(f);
  if (!g.is_zero() && sgn(g.terms().rbegin()->second) < 0) g = -g;
  return g;
}

std::string fixed12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", std::abs(v) < 5e-13 ? 0.0 : v);
  return buf;
}

}  // namespace qsphere::cli
