#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degen {

using Integer = mpz_class;
// mpq_class keeps every arithmetic result in lowest terms with a positive
// denominator; values built from a raw numerator/denominator pair must go
// through make_rational.
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
bool is_integer(const Rational& q);
Rational floor_fraction(const Rational& q);  // q - floor(q), in [0,1)

IntVector make_int_vector(std::initializer_list<long> values);
RatVector make_rat_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);
IntVector primitive(IntVector v);
// Smallest positive integer multiple of v that is an integer vector, made primitive.
IntVector primitive_integer(const RatVector& v);
Integer gcd_of(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix from_int_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static RatMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static RatMatrix from_literal(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVector operator*(const RatVector& v) const;
  RatVector operator*(const IntVector& v) const;
  RatMatrix operator*(const Rational& scalar) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const = default;

  bool is_integral() const;
  std::vector<IntVector> integer_rows() const;
  std::vector<IntVector> integer_columns() const;
  RatMatrix hstack(const RatMatrix& right) const;
  RatMatrix vstack(const RatMatrix& below) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// An integer matrix read as a homomorphism Z^source -> Z^target (columns are images of basis vectors).
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(RatMatrix m);
  const RatMatrix& matrix() const { return matrix_; }
  std::size_t source_rank() const { return matrix_.cols(); }
  std::size_t target_rank() const { return matrix_.rows(); }
  IntVector apply(const IntVector& v) const;
  RatVector apply(const RatVector& v) const;
  LatticeMap transpose() const { return LatticeMap(matrix_.transpose()); }

 private:
  RatMatrix matrix_;
};

struct HermiteResult {
  RatMatrix h;
  RatMatrix u;
};

struct SmithResult {
  RatMatrix d;
  RatMatrix u;
  RatMatrix v;
};

struct AffineSpace {
  RatVector point;
  std::vector<IntVector> directions;
};

// Row-style HNF: u*m = h, pivots positive, entries above a pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const RatMatrix& m);
// u*m*v = d with d_1 | d_2 | ... on the diagonal.
SmithResult smith_normal_form(const RatMatrix& m);
std::vector<Integer> elementary_divisors(const RatMatrix& m);

// Saturated lattice basis of ker(m), HNF-reduced.
std::vector<IntVector> kernel_basis(const LatticeMap& m);
std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t cols);
// Rows of the HNF of the given vectors, zero rows dropped.
std::vector<IntVector> hnf_rows(const std::vector<IntVector>& rows, std::size_t cols);

std::optional<AffineSpace> solve_affine(const RatMatrix& m, const RatVector& target);

struct RowEchelon {
  RatMatrix reduced;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};
RowEchelon reduced_row_echelon(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
bool is_unimodular(const RatMatrix& m);

// Subtracts rational multiples of the RREF rows so that v vanishes on the pivot columns.
RatVector reduce_modulo(const RatVector& v, const RowEchelon& span);

}  // namespace degen
