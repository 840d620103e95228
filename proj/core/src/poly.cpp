#include "affconj/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affconj {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational inv = leading().reciprocal();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

namespace {

void append_term(std::ostringstream& os, const Rational& c, std::size_t degree, bool first) {
  const bool negative = c.sign() < 0;
  const Rational mag = c.abs();
  if (negative)
    os << '-';
  else if (!first)
    os << '+';
  if (degree == 0) {
    os << mag;
    return;
  }
  if (!mag.is_one()) os << mag << '*';
  os << 'x';
  if (degree > 1) os << '^' << degree;
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    append_term(os, coeffs_[k], k, first);
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  std::vector<Rational> rem = p.coefficients();
  const int dq = q.degree();
  if (p.degree() < dq) return {Poly(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
  const Rational inv_lead = q.leading().reciprocal();
  const auto& qc = q.coefficients();
  for (int k = p.degree(); k >= dq; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(k - dq)] = c;
    for (int j = 0; j <= dq; ++j)
      rem[static_cast<std::size_t>(k - dq + j)] -= c * qc[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly poly_divexact(const Poly& p, const Poly& q) {
  auto [quot, rem] = poly_divmod(p, q);
  if (!rem.is_zero())
    throw std::logic_error("poly_divexact: " + q.to_string() + " does not divide " + p.to_string());
  return quot;
}

Rational poly_eval(const Poly& p, const Rational& at) { return p.eval(at); }

Poly poly_pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<SquarefreeFactor> out;
  const Poly f = p.monic();
  if (f.is_constant()) return out;

  const Poly fp = f.derivative();
  Poly a = poly_gcd(f, fp);
  Poly b = poly_divexact(f, a);
  Poly c = poly_divexact(fp, a) - b.derivative();
  unsigned j = 1;
  while (!b.is_constant()) {
    Poly d = poly_gcd(b, c);
    if (!d.is_constant()) out.push_back({d, j});
    Poly b_next = poly_divexact(b, d);
    c = poly_divexact(c, d) - b_next.derivative();
    b = std::move(b_next);
    ++j;
  }
  return out;
}

std::vector<Poly> coprime_base(const std::vector<Poly>& polys) {
  std::vector<Poly> base;
  for (const Poly& p : polys) {
    if (p.is_zero()) continue;
    for (const auto& sf : squarefree_decomposition(p)) base.push_back(sf.factor);
  }
  // Split any non-coprime pair until the list is pairwise coprime.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Poly g = poly_gcd(base[i], base[j]);
        if (g.is_constant()) continue;
        Poly a = poly_divexact(base[i], g);
        Poly b = poly_divexact(base[j], g);
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Poly* q : {&g, &a, &b})
          if (!q->is_constant()) base.push_back(q->monic());
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end(), poly_less);
  return base;
}

std::string factored_string(const Poly& monic_poly) {
  auto parts = squarefree_decomposition(monic_poly);
  if (parts.empty()) return "1";
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.multiplicity > b.multiplicity; });
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += '*';
    out += '(' + part.factor.to_string() + ')';
    if (part.multiplicity > 1) out += '^' + std::to_string(part.multiplicity);
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

}  // namespace affconj
