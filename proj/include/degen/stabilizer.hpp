#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "degen/linalg.hpp"
#include "degen/symmetric.hpp"
#include "degen/unit_value.hpp"

namespace degen {

// A point of the 0-cycle on the fiber chain Δ⁰, Δ^{i_1}, .., Δ^{i_r}.  component is the chain
// index l (0 for Δ⁰, l for Δ^{i_l}); position is the C*-coordinate on the open part.
struct CyclePoint {
  std::size_t component = 0;
  UnitValue position;
  std::string a1;  // coordinate on the A¹ factor, compared only for equality
  std::size_t multiplicity = 1;
  bool operator==(const CyclePoint&) const = default;
};

struct CycleConfiguration {
  std::size_t n = 0;
  std::vector<std::size_t> I_t;  // strictly increasing subset of {1..n+1}
  std::vector<CyclePoint> points;
  bool operator==(const CycleConfiguration&) const = default;
};

// Invariant factors d_1 | d_2 | .. with every d_i >= 2.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Normalizes any list of cyclic orders to invariant-factor form.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool operator==(const FiniteAbelianGroup&) const = default;
  std::string to_string() const;  // "1" or "Z/3 x Z/3"

 private:
  std::vector<Integer> factors_;
};

// Degree of the cycle on each component of the chain: Δ⁰ gets i_1 - 1, Δ^{i_l} gets
// i_{l+1} - i_l with i_{r+1} = n + 1.  I_t = ∅ gives the single component Δ⁰ of degree n.
std::vector<std::size_t> fiber_degrees(std::size_t n, const std::vector<std::size_t>& I_t);

// Well-formed and the multiplicity totals per component match fiber_degrees.
bool check_stability(const CycleConfiguration& c);

class UnstableConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Order of the group of shifts ρ ∈ Q/Z permuting the records of one component.
std::size_t component_shift_order(const CycleConfiguration& c, std::size_t component);
// Product over l = 1..r-1 of the shift groups.  Throws UnstableConfiguration.
FiniteAbelianGroup torus_stabilizer(const CycleConfiguration& c);

struct QuotientPoint {
  std::size_t n = 0;
  std::vector<UnitValue> f;               // f_0..f_n
  std::vector<std::string> a1_coords;     // per slot 1..n
  std::vector<std::size_t> slot_component;  // per slot 1..n
  std::vector<std::size_t> slot_record;     // index into the configuration's points
};

// Slots in canonical order: components in chain order; inside a component, records by
// multiplicity descending, each orbit of the component's shift group laid out as
// base, base + ρ, base + 2ρ, .. and each record repeated multiplicity times.
std::vector<std::size_t> canonical_slots(const CycleConfiguration& c);
// Throws UnstableConfiguration; slots must list every record multiplicity times with
// components in chain order.
QuotientPoint quotient_point_from_slots(const CycleConfiguration& c, const std::vector<std::size_t>& slots);
QuotientPoint project_to_quotient(const CycleConfiguration& c);

// stab0 is not normal in stab, or stab / stab0 is not abelian.
class QuotientStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BruteForceBoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SymStabilizers {
  std::vector<Permutation> stab;   // sorted one-line notation, 0-based
  std::vector<Permutation> stab0;  // trivial-angle part
  std::vector<std::vector<std::size_t>> young_blocks;  // orbits of stab0 on slots
  bool stab0_is_young = false;
  bool stab0_is_normal = false;
  FiniteAbelianGroup quotient;  // stab / stab0
};

// Fixed-point criterion on the quotient chart; jobs > 1 splits the search over s(1).
// Throws BruteForceBoundExceeded when n > bound and QuotientStructureError when stab / stab0
// is not an abelian group.
SymStabilizers sym_stabilizers(const QuotientPoint& q, std::size_t bound = 9, std::size_t jobs = 1);

struct ComparisonReport {
  bool pass = false;
  FiniteAbelianGroup torus;
  SymStabilizers sym;
  bool blocks_preserved = false;  // every s in stab keeps slots inside their component
};
ComparisonReport verify_comparison(const CycleConfiguration& c, std::size_t bound = 9, std::size_t jobs = 1);

// Closure of a set of permutations under composition, sorted.
std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t n);
// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5 6)".
Permutation parse_cycles(const std::string& text, std::size_t n);
std::string cycle_string(const Permutation& p);

}  // namespace degen
