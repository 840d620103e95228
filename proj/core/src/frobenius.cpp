#include "affconj/frobenius.hpp"

#include <stdexcept>

namespace affconj {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix characteristic_matrix(const Matrix& a) {
  const std::size_t n = a.rows();
  PolyMatrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? Poly{0, 1} : Poly()) - Poly::constant(a(i, j));
  return m;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Scale the row to integer coefficients with content 1.
void normalize_row_content(std::vector<Poly>& row) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& p : row)
    for (const auto& c : p.coefficients()) {
      num_gcd = gcd_z(num_gcd, c.numerator());
      den_lcm = lcm_z(den_lcm, c.denominator());
    }
  if (num_gcd == 0) return;
  const Rational scale(den_lcm, num_gcd);
  if (scale.is_one()) return;
  for (auto& p : row) p *= scale;
}

void swap_columns(PolyMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// Returns true once row t and column t are zero apart from the pivot.
bool clear_pivot_cross(PolyMatrix& m, std::size_t t) {
  const std::size_t n = m.size();
  bool clean = true;
  const Poly pivot = m[t][t];
  for (std::size_t i = t + 1; i < n; ++i) {
    if (m[i][t].is_zero()) continue;
    const Poly q = poly_divmod(m[i][t], pivot).first;
    for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
    if (!m[i][t].is_zero()) clean = false;
  }
  for (std::size_t j = t + 1; j < n; ++j) {
    if (m[t][j].is_zero()) continue;
    const Poly q = poly_divmod(m[t][j], pivot).first;
    for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
    if (!m[t][j].is_zero()) clean = false;
  }
  return clean;
}

Poly poly_determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return Poly::constant(1);
  if (k == 1) return m[rows[0]][cols[0]];
  // Laplace expansion along the first selected row.
  Poly det;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const Poly& entry = m[rows[0]][cols[c]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    Poly term = entry * poly_determinant(m, sub_rows, sub_cols);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t InvariantFactors::size() const {
  std::size_t n = 0;
  for (const auto& f : chain) n += static_cast<std::size_t>(f.degree());
  return n;
}

std::string InvariantFactors::to_string() const {
  if (chain.empty()) return "none";
  std::string out;
  for (const auto& f : chain) {
    if (!out.empty()) out += ", ";
    out += factored_string(f);
  }
  return out;
}

InvariantFactors smith_invariant_factors(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("smith_invariant_factors: matrix is not square");
  const std::size_t n = a.rows();
  PolyMatrix m = characteristic_matrix(a);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: a nonzero entry of minimal degree in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!m[i][j].is_zero() && (pi == n || m[i][j].degree() < m[pi][pj].degree())) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw std::logic_error("smith_invariant_factors: xI - A is singular");
      std::swap(m[t], m[pi]);
      swap_columns(m, t, pj);

      const bool clean = clear_pivot_cross(m, t);
      for (std::size_t i = t; i < n; ++i) normalize_row_content(m[i]);
      if (!clean) continue;

      // The pivot must divide the whole trailing block; if not, fold the
      // offending row into row t and go again.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!poly_divmod(m[i][j], m[t][t]).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) m[t][j] += m[bad][j];
    }
  }

  InvariantFactors out;
  for (std::size_t t = 0; t < n; ++t) {
    Poly f = m[t][t].monic();
    if (!f.is_constant()) out.chain.push_back(std::move(f));
  }
  return out;
}

InvariantFactors minors_gcd_invariant_factors(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minors_gcd_invariant_factors: matrix is not square");
  const std::size_t n = a.rows();
  if (n > 6) throw std::invalid_argument("minors_gcd_invariant_factors: dimension cap is 6");
  const PolyMatrix m = characteristic_matrix(a);

  InvariantFactors out;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly d;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (d.is_constant() && !d.is_zero()) return;
        d = poly_gcd(d, poly_determinant(m, rows, cols));
      });
    });
    Poly f = poly_divexact(d, prev);
    if (!f.is_constant()) out.chain.push_back(f.monic());
    prev = d;
  }
  return out;
}

bool similar(const Matrix& a, const Matrix& c) {
  if (!a.is_square() || !c.is_square()) throw std::invalid_argument("similar: matrices must be square");
  if (a.rows() != c.rows()) return false;
  return smith_invariant_factors(a) == smith_invariant_factors(c);
}

Matrix frobenius_form(const InvariantFactors& factors) {
  std::vector<Matrix> blocks;
  for (const auto& f : factors.chain) blocks.push_back(companion(f));
  return block_diag(blocks);
}

}  // namespace affconj
