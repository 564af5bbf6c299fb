#pragma once

#include <string>
#include <vector>

#include "degen/linalg.hpp"

namespace degen {

// An element of {0} ∪ (Q/Z ⊕ Z^m), written additively on units: the root part k/r stands
// for exp(2πik/r) and the generic part is an exponent vector over formal generic
// generators.  Multiplication adds units and is absorbed by zero.
class UnitValue {
 public:
  UnitValue() : UnitValue(Rational(0), {}) {}  // the unit 1
  UnitValue(const Rational& root, std::vector<long> generic);

  static UnitValue zero();
  static UnitValue one() { return UnitValue(); }
  static UnitValue root_of_unity(const Rational& k_over_r) { return UnitValue(k_over_r, {}); }
  static UnitValue generator(std::size_t index);  // the index-th generic generator

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && root_ == 0 && generic_.empty(); }
  const Rational& root() const { return root_; }              // in [0, 1)
  const std::vector<long>& generic() const { return generic_; }  // trailing zeros trimmed

  UnitValue operator*(const UnitValue& other) const;
  // Throws std::domain_error on zero.
  UnitValue inverse() const;
  UnitValue operator/(const UnitValue& other) const { return *this * other.inverse(); }

  bool operator==(const UnitValue& other) const = default;
  bool operator<(const UnitValue& other) const;

  // "0", "1", "w^1/3", "w^1/3*g[1,0,2]" style text for reports.
  std::string to_string() const;

 private:
  bool zero_ = false;
  Rational root_;
  std::vector<long> generic_;
};

}  // namespace degen
