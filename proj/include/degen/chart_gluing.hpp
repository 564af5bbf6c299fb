#pragma once

#include <cstdint>
#include <vector>

#include "degen/linalg.hpp"
#include "degen/stabilizer.hpp"
#include "degen/symmetric.hpp"

namespace degen {

// Independent fixed-point test on X(Δ^(n)): s fixes q̃ ∈ U_δ iff q̃ lies in U_τ with
// τ = δ ∩ ρ_N(s)δ and χ^m(q̃) = χ^{ρ_N(s)ᵀ m}(q̃) for generators m of τ^∨ ∩ M, plus
// s-invariance of the A¹-coordinates.  Coordinates f_k are the values of the dual basis of
// the rays of δ^(n); unit values are instantiated in F_p with p ≡ 1 mod (root orders).
class ChartGluingOracle {
 public:
  explicit ChartGluingOracle(std::size_t n);  // 2 <= n <= 5
  std::size_t n() const { return n_; }
  std::vector<Permutation> stabilizer(const QuotientPoint& q, std::uint64_t seed) const;

 private:
  struct Entry {
    Permutation s;
    std::vector<IntVector> coefficients;         // of m in the f-basis, per generator of τ^∨
    std::vector<IntVector> pulled_coefficients;  // of ρ_N(s)ᵀ m
  };
  std::size_t n_;
  std::vector<Entry> entries_;
};

}  // namespace degen
