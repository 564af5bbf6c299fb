#include "degen/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace degen {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor_fraction(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector make_rat_vector(std::initializer_list<long> values) {
  RatVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
  return primitive(std::move(out));
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatMatrix RatMatrix::from_literal(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  for (const auto& row : rows) r.push_back(make_int_vector(row));
  return from_int_rows(r);
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (other(k, j) != 0) p(i, j) += a * other(k, j);
    }
  return p;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatVector RatMatrix::operator*(const IntVector& v) const { return (*this) * to_rational(v); }

RatMatrix RatMatrix::operator*(const Rational& scalar) const {
  RatMatrix p = *this;
  for (auto& x : p.entries_) x *= scalar;
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix s = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) s.entries_[k] += other.entries_[k];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const { return *this + other * Rational(-1); }

bool RatMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return is_integer(q); });
}

std::vector<IntVector> RatMatrix::integer_rows() const {
  if (!is_integral()) throw std::invalid_argument("matrix has non-integer entries");
  std::vector<IntVector> out(rows_, IntVector(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).get_num();
  return out;
}

std::vector<IntVector> RatMatrix::integer_columns() const { return transpose().integer_rows(); }

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
  RatMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
  RatMatrix m(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = below(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// LatticeMap

LatticeMap::LatticeMap(RatMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_integral()) throw std::invalid_argument("lattice map must have integer entries");
}

IntVector LatticeMap::apply(const IntVector& v) const {
  if (v.size() != source_rank()) throw std::invalid_argument("lattice map: dimension mismatch");
  IntVector out(target_rank());
  for (std::size_t i = 0; i < target_rank(); ++i)
    for (std::size_t j = 0; j < source_rank(); ++j)
      if (matrix_(i, j) != 0) out[i] += matrix_(i, j).get_num() * v[j];
  return out;
}

RatVector LatticeMap::apply(const RatVector& v) const { return matrix_ * v; }

// ---------------------------------------------------------------------------
// Integer normal forms.  Work on dense Integer row vectors.

namespace {

using IntRows = std::vector<IntVector>;

IntRows to_int_rows(const RatMatrix& m) {
  if (!m.is_integral()) throw std::invalid_argument("normal form requires integer entries");
  return m.integer_rows();
}

RatMatrix from_int(const IntRows& rows, std::size_t cols) { return RatMatrix::from_int_rows(rows, cols); }

IntRows identity_rows(std::size_t n) {
  IntRows id(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// row_a -= q * row_b
void sub_mul(IntVector& a, const IntVector& b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] != 0) mpz_submul(a[k].get_mpz_t(), q.get_mpz_t(), b[k].get_mpz_t());
}

void negate(IntVector& a) {
  for (auto& x : a) x = -x;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// In-place row HNF of h with the same row operations applied to u (if given).
void hnf_in_place(IntRows& h, std::size_t cols, IntRows* u) {
  std::size_t pivot_row = 0;
  const std::size_t nrows = h.size();
  for (std::size_t col = 0; col < cols && pivot_row < nrows; ++col) {
    while (true) {
      // smallest nonzero |entry| at or below pivot_row
      std::size_t best = nrows;
      for (std::size_t i = pivot_row; i < nrows; ++i)
        if (h[i][col] != 0 && (best == nrows || abs(h[i][col]) < abs(h[best][col]))) best = i;
      if (best == nrows) break;
      if (best != pivot_row) {
        std::swap(h[best], h[pivot_row]);
        if (u) std::swap((*u)[best], (*u)[pivot_row]);
      }
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
        if (h[i][col] == 0) continue;
        Integer q = trunc_div(h[i][col], h[pivot_row][col]);
        sub_mul(h[i], h[pivot_row], q);
        if (u) sub_mul((*u)[i], (*u)[pivot_row], q);
        if (h[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) {
      negate(h[pivot_row]);
      if (u) negate((*u)[pivot_row]);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(h[i][col], h[pivot_row][col]);
      sub_mul(h[i], h[pivot_row], q);
      if (u) sub_mul((*u)[i], (*u)[pivot_row], q);
    }
    ++pivot_row;
  }
}

}  // namespace

HermiteResult hermite_normal_form(const RatMatrix& m) {
  IntRows h = to_int_rows(m);
  IntRows u = identity_rows(m.rows());
  hnf_in_place(h, m.cols(), &u);
  return {from_int(h, m.cols()), from_int(u, m.rows())};
}

std::vector<IntVector> hnf_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntRows h = rows;
  hnf_in_place(h, cols, nullptr);
  IntRows out;
  for (auto& r : h)
    if (!is_zero(r)) out.push_back(std::move(r));
  return out;
}

SmithResult smith_normal_form(const RatMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntRows d = to_int_rows(m);
  IntRows u = identity_rows(r);
  IntRows vt = identity_rows(c);  // rows of vt are columns of v

  auto col_sub = [&](std::size_t a, std::size_t b, const Integer& q) {  // col_a -= q*col_b
    for (std::size_t i = 0; i < r; ++i)
      if (d[i][b] != 0) mpz_submul(d[i][a].get_mpz_t(), q.get_mpz_t(), d[i][b].get_mpz_t());
    sub_mul(vt[a], vt[b], q);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < r; ++i) std::swap(d[i][a], d[i][b]);
    std::swap(vt[a], vt[b]);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d[i][j] != 0 && (bi == r || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == r) break;
      if (bi != t) {
        std::swap(d[bi], d[t]);
        std::swap(u[bi], u[t]);
      }
      if (bj != t) col_swap(bj, t);
      bool done = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d[i][t] == 0) continue;
        Integer q = trunc_div(d[i][t], d[t][t]);
        sub_mul(d[i], d[t], q);
        sub_mul(u[i], u[t], q);
        if (d[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d[t][j] == 0) continue;
        Integer q = trunc_div(d[t][j], d[t][t]);
        col_sub(j, t, q);
        if (d[t][j] != 0) done = false;
      }
      if (!done) continue;
      // enforce divisibility of the remaining block by the pivot
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      for (std::size_t k = 0; k < c; ++k) d[t][k] += d[bad][k];
      for (std::size_t k = 0; k < r; ++k) u[t][k] += u[bad][k];
    }
    if (d[t][t] < 0) {
      negate(d[t]);
      negate(u[t]);
    }
  }
  IntRows v(c, IntVector(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) v[i][j] = vt[j][i];
  return {from_int(d, c), from_int(u, r), from_int(v, c)};
}

std::vector<Integer> elementary_divisors(const RatMatrix& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i).get_num());
  return out;
}

std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t cols) {
  // U * rows^T = H; rows of U opposite zero rows of H span the saturated kernel.
  IntRows at(cols, IntVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("kernel_basis: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) at[j][i] = rows[i][j];
  }
  IntRows u = identity_rows(cols);
  hnf_in_place(at, rows.size(), &u);
  IntRows kernel;
  for (std::size_t i = 0; i < cols; ++i)
    if (is_zero(at[i])) kernel.push_back(u[i]);
  return hnf_rows(kernel, cols);
}

std::vector<IntVector> kernel_basis(const LatticeMap& m) {
  return kernel_basis(m.matrix().integer_rows(), m.source_rank());
}

// ---------------------------------------------------------------------------
// Rational elimination

RowEchelon reduced_row_echelon(const RatMatrix& m) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t i = pr; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pr]);
    Rational inv = 1 / rows[pr][col];
    for (auto& x : rows[pr]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pr || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t k = col; k < m.cols(); ++k)
        if (rows[pr][k] != 0) rows[i][k] -= f * rows[pr][k];
    }
    pivots.push_back(col);
    ++pr;
  }
  rows.resize(pr);
  return {RatMatrix::from_rows(rows, m.cols()), pivots};
}

std::size_t rank(const RatMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  // fraction-free elimination on a copy
  IntRows a = rows;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t sel = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == a.size()) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      Integer f = a[i][col], p = a[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        a[i][k] *= p;
        mpz_submul(a[i][k].get_mpz_t(), f.get_mpz_t(), a[r][k].get_mpz_t());
      }
      a[i] = primitive(std::move(a[i]));
    }
    ++r;
  }
  return r;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] -= f * a[col][k];
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e = reduced_row_echelon(m.hstack(RatMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool is_unimodular(const RatMatrix& m) {
  if (m.rows() != m.cols() || !m.is_integral()) return false;
  Rational d = determinant(m);
  return d == 1 || d == -1;
}

std::optional<AffineSpace> solve_affine(const RatMatrix& m, const RatVector& target) {
  if (target.size() != m.rows()) throw std::invalid_argument("solve_affine: target length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = target[i];
  }
  RowEchelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSpace sol;
  sol.point.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) sol.point[e.pivots[i]] = e.reduced(i, m.cols());
  // kernel of m: clear denominators row-wise (row scaling keeps the kernel)
  std::vector<IntVector> int_rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector r = m.row(i);
    if (!is_zero(r)) int_rows.push_back(primitive_integer(r));
  }
  sol.directions = kernel_basis(int_rows, m.cols());
  return sol;
}

RatVector reduce_modulo(const RatVector& v, const RowEchelon& span) {
  RatVector out = v;
  for (std::size_t i = 0; i < span.pivots.size(); ++i) {
    Rational c = out[span.pivots[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (span.reduced(i, k) != 0) out[k] -= c * span.reduced(i, k);
  }
  return out;
}

}  // namespace degen
