#pragma once

#include <vector>

#include "degen/cone.hpp"
#include "degen/fan.hpp"
#include "degen/linalg.hpp"
#include "degen/polyhedron.hpp"

namespace degen {

// One-line notation, 0-based: p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);  // a ∘ b
Permutation inverse_permutation(const Permutation& p);
// Word k_1..k_m (1-based adjacent transpositions (k k+1)) with s = τ_{k_m} ∘ .. ∘ τ_{k_1}.
std::vector<std::size_t> adjacent_word(const Permutation& s);

// Matrices of (k k+1), k = 1..n-1, on N̄ = Z^{n-1} and on N = Z ⊕ N̄ ⊕ Z.
RatMatrix reflection_Nbar(std::size_t n, std::size_t k);
RatMatrix reflection_N(std::size_t n, std::size_t k);
RatMatrix action_Nbar(std::size_t n, const Permutation& s);
RatMatrix action_N(std::size_t n, const Permutation& s);

// v_s = (s(1) - 1, .., s(n-1) - (n-1)).
RatVector permutahedron_vertex(const Permutation& s);
// Positive Weyl chamber δ̄^(n) in N̄: columns e_1 + .. + e_j.
Cone delta_bar(std::size_t n);
// B_e: columns e_k - e_{k+1} (k < n-1) and e_{n-1}.
RatMatrix edge_matrix(std::size_t n);

struct SymmetricModel {
  std::size_t n = 0;
  std::vector<RatMatrix> perm_action_Nbar;  // (k k+1), k = 1..n-1
  std::vector<RatMatrix> perm_action_N;
  Cone delta_n;
  Cone delta_bar;
  Cone sigma_cone;  // σ^(n)
  Fan Delta_fan;    // S_n-orbit of δ^(n)
  LatticePolyhedron permutahedron;
  LatticePolyhedron tildeP_n;  // σ^(n)∨ + ιP^(n)
  RatMatrix Be;
};

// 2 <= n <= 6.
SymmetricModel build_symmetric(std::size_t n);

}  // namespace degen
