#include "qsphere/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsphere {
namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw ArityError("unsupported arity " + std::to_string(arity));
  }
}

bool divides(const Exponents& small, const Exponents& big) {
  for (int i = 0; i < kMaxArity; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) { check_arity(arity); }

MultiPoly MultiPoly::constant(int arity, const Rational& value) {
  MultiPoly p(arity);
  p.add_term(Exponents{}, value);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw std::out_of_range("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(arity, e, 1);
}

MultiPoly MultiPoly::monomial(int arity, const Exponents& exps, const Rational& coeff) {
  MultiPoly p(arity);
  for (int i = arity; i < kMaxArity; ++i) {
    if (exps[i] != 0) throw ArityError("exponent set beyond arity");
  }
  p.add_term(exps, coeff);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

int MultiPoly::min_total_degree() const {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, degree_of(e));
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return degree_of(t.first) == d; });
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void MultiPoly::check_same_arity(const MultiPoly& other, const char* op) const {
  if (arity_ != other.arity_) {
    throw ArityError(std::string(op) + ": arity mismatch (" + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_arity(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_arity(other, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_arity(b, "mul");
  MultiPoly out(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxArity; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly pow(const MultiPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  MultiPoly result = MultiPoly::constant(a.arity(), 1);
  MultiPoly base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly partial(const MultiPoly& a, int var) {
  if (var < 0 || var >= a.arity()) throw std::out_of_range("partial: variable index out of range");
  MultiPoly out(a.arity());
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly partial(const MultiPoly& a, const Exponents& orders) {
  MultiPoly out = a;
  for (int v = 0; v < kMaxArity; ++v) {
    for (int k = 0; k < orders[v]; ++k) {
      out = partial(out, v);
      if (out.is_zero()) return out;
    }
  }
  return out;
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> substitutions) {
  if (static_cast<int>(substitutions.size()) != f.arity()) {
    throw ArityError("compose: need one substitution per variable");
  }
  const int target = substitutions.front().arity();
  for (const auto& s : substitutions) {
    if (s.arity() != target) throw ArityError("compose: substitutions differ in arity");
  }
  std::vector<std::vector<MultiPoly>> powers(substitutions.size());
  for (std::size_t v = 0; v < substitutions.size(); ++v) {
    powers[v].push_back(MultiPoly::constant(target, 1));
    for (int e = 1; e <= f.degree_in(static_cast<int>(v)); ++e) {
      powers[v].push_back(powers[v].back() * substitutions[v]);
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t v = 0; v < substitutions.size(); ++v) {
      if (e[v] != 0) term *= powers[v][e[v]];
    }
    out += term;
  }
  return out;
}

MultiPoly sum_of_squares(int arity) {
  MultiPoly out(arity);
  for (int v = 0; v < arity; ++v) {
    Exponents e{};
    e[v] = 2;
    out.add_term(e, 1);
  }
  return out;
}

MultiPoly absolute_quadric(int arity) {
  if (arity != 3 && arity != 4) throw ArityError("absolute_quadric: arity must be 3 or 4");
  MultiPoly out(arity);
  for (int v = arity - 3; v < arity; ++v) {
    Exponents e{};
    e[v] = 2;
    out.add_term(e, 1);
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  if (f.arity() != g.arity()) throw ArityError("divide_exact: arity mismatch");
  const auto& [lead_g, lead_c] = *g.terms().rbegin();
  MultiPoly quotient(f.arity());
  MultiPoly remainder = f;
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_rc] = *remainder.terms().rbegin();
    // In any monomial order LT(q*g) = LT(q)*LT(g), so an exact quotient
    // exists only if every successive leading term is divisible.
    if (!divides(lead_g, lead_r)) return std::nullopt;
    Exponents shift;
    for (int i = 0; i < kMaxArity; ++i) shift[i] = static_cast<std::uint16_t>(lead_r[i] - lead_g[i]);
    const MultiPoly step = MultiPoly::monomial(f.arity(), shift, lead_rc / lead_c);
    quotient += step;
    remainder -= step * g;
  }
  return quotient;
}

MultiPoly homogenize(const MultiPoly& f, int n) {
  if (f.arity() >= kMaxArity) throw ArityError("homogenize: no room for x0");
  if (f.total_degree() > n) {
    throw PreconditionError("deg f <= n", "degree " + std::to_string(f.total_degree()) +
                                               " exceeds homogenizing degree " + std::to_string(n));
  }
  MultiPoly out(f.arity() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents h{};
    h[0] = static_cast<std::uint16_t>(n - degree_of(e));
    for (int i = 0; i < f.arity(); ++i) h[i + 1] = e[i];
    out.add_term(h, c);
  }
  return out;
}

MultiPoly dehomogenize(const MultiPoly& f) {
  if (f.arity() < 3) throw ArityError("dehomogenize: need arity >= 3");
  MultiPoly out(f.arity() - 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents a{};
    for (int i = 1; i < f.arity(); ++i) a[i - 1] = e[i];
    out.add_term(a, c);
  }
  return out;
}

MultiPoly primitive_part(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    const Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return f * scale;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  const Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
  for (auto ia = a.terms().begin(), ib = b.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ratio * ib->second) return false;
  }
  return true;
}

HomogeneousForm::HomogeneousForm(MultiPoly poly, int degree) : poly_(std::move(poly)), degree_(degree) {
  if (degree < 0) throw PreconditionError("degree >= 0", "negative form degree");
  for (const auto& [e, c] : poly_.terms()) {
    if (degree_of(e) != degree) {
      throw PreconditionError("homogeneous of degree " + std::to_string(degree),
                              "found a term of degree " + std::to_string(degree_of(e)));
    }
  }
}

HomogeneousForm::HomogeneousForm(MultiPoly poly)
    : HomogeneousForm(poly, std::max(poly.total_degree(), 0)) {}

X0Decomposition decompose_by_x0(const MultiPoly& f, int n) {
  if (f.arity() < 3) throw ArityError("decompose_by_x0: need arity >= 3");
  if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != n)) {
    throw PreconditionError("F homogeneous of degree n",
                            "polynomial is not homogeneous of degree " + std::to_string(n));
  }
  std::vector<MultiPoly> parts(static_cast<std::size_t>(n) + 1, MultiPoly(f.arity() - 1));
  for (const auto& [e, c] : f.terms()) {
    Exponents rest{};
    for (int i = 1; i < f.arity(); ++i) rest[i - 1] = e[i];
    parts[e[0]].add_term(rest, c);
  }
  X0Decomposition out;
  out.order = n;
  for (int j = 0; j <= n; ++j) out.parts.emplace_back(std::move(parts[j]), n - j);
  return out;
}

MultiPoly reassemble(const X0Decomposition& decomposition) {
  const int arity = decomposition.parts.empty() ? 3 : decomposition.parts.front().arity() + 1;
  MultiPoly out(arity);
  for (std::size_t j = 0; j < decomposition.parts.size(); ++j) {
    for (const auto& [e, c] : decomposition.parts[j].poly().terms()) {
      Exponents h{};
      h[0] = static_cast<std::uint16_t>(j);
      for (int i = 0; i + 1 < arity; ++i) h[i + 1] = e[i];
      out.add_term(h, c);
    }
  }
  return out;
}

int a2_multiplicity(const MultiPoly& f) {
  if (f.is_zero()) return kInfiniteMultiplicity;
  const MultiPoly a2 = sum_of_squares(f.arity());
  int m = 0;
  MultiPoly current = f;
  while (auto quotient = divide_exact(current, a2)) {
    current = std::move(*quotient);
    ++m;
  }
  return m;
}

int isotropic_multiplicity(const MultiPoly& homogeneous_f) {
  if (homogeneous_f.is_zero()) return kInfiniteMultiplicity;
  const int n = homogeneous_f.total_degree();
  const X0Decomposition parts = decompose_by_x0(homogeneous_f, n);
  // A2^(q-j) | f_{n-j} for all j < q  <=>  q <= m_j + j for all j < q;
  // the binding j always satisfies j <= q, so q = min_j (m_j + j).
  int q = kInfiniteMultiplicity;
  for (int j = 0; j <= n; ++j) {
    const int m = a2_multiplicity(parts.parts[static_cast<std::size_t>(j)]);
    if (m != kInfiniteMultiplicity) q = std::min(q, m + j);
  }
  return q;
}

}  // namespace qsphere
