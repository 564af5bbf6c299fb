#include "degen/unit_value.hpp"

#include <stdexcept>

namespace degen {
namespace {

void trim(std::vector<long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

UnitValue::UnitValue(const Rational& root, std::vector<long> generic)
    : root_(root), generic_(std::move(generic)) {
  root_.canonicalize();
  root_ = floor_fraction(root_);
  trim(generic_);
}

UnitValue UnitValue::zero() {
  UnitValue z;
  z.zero_ = true;
  return z;
}

UnitValue UnitValue::generator(std::size_t index) {
  std::vector<long> g(index + 1);
  g[index] = 1;
  return UnitValue(Rational(0), std::move(g));
}

UnitValue UnitValue::operator*(const UnitValue& other) const {
  if (zero_ || other.zero_) return zero();
  std::vector<long> g(std::max(generic_.size(), other.generic_.size()));
  for (std::size_t i = 0; i < generic_.size(); ++i) g[i] += generic_[i];
  for (std::size_t i = 0; i < other.generic_.size(); ++i) g[i] += other.generic_[i];
  return UnitValue(root_ + other.root_, std::move(g));
}

UnitValue UnitValue::inverse() const {
  if (zero_) throw std::domain_error("zero has no inverse");
  std::vector<long> g(generic_.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = -generic_[i];
  return UnitValue(-root_, std::move(g));
}

bool UnitValue::operator<(const UnitValue& other) const {
  if (zero_ != other.zero_) return zero_;
  if (generic_ != other.generic_) return generic_ < other.generic_;
  return root_ < other.root_;
}

std::string UnitValue::to_string() const {
  if (zero_) return "0";
  if (is_one()) return "1";
  std::string out;
  if (root_ != 0) out = "w^" + degen::to_string(root_);
  if (!generic_.empty()) {
    if (!out.empty()) out += "*";
    out += "g[";
    for (std::size_t i = 0; i < generic_.size(); ++i) out += (i ? "," : "") + std::to_string(generic_[i]);
    out += "]";
  }
  return out;
}

}  // namespace degen
