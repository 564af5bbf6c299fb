#pragma once

#include <vector>

#include "degen/cone.hpp"
#include "degen/linalg.hpp"
#include "degen/polyhedron.hpp"
#include "degen/toric_git.hpp"

namespace degen {

// Coordinates: M[n] = (s; t_1..t_{n+1}), M_W[n] = (s_1..s_n; t_1..t_{n+1}).  Tail coordinate r
// (0-based) is t_{r+1}.
struct DegenerationBundle {
  std::size_t n = 0;
  Cone sigma_dual;   // σ[n]^∨, generated by x, y, t_1..t_{n+1}
  Cone sigma;        // σ[n]
  RatMatrix P_matrix;  // (n+2) x n, P[n] = P_matrix · □_n
  LatticePolyhedron tildeP_X;
  Cone sigmaW_dual;  // σ_W[n]^∨, 3n+1 generators
  Cone sigmaW;       // σ_W[n]
  RatMatrix L_matrix;  // (2n+1) x n², P_W[n] = L_matrix · □_{n²}
  LatticePolyhedron tildeP_W;  // exact vertex set, built as a Minkowski sum of the n factor copies of P̃[n]
  LatticeMap alpha_X;  // n x (n+2)
  LatticeMap alpha_W;  // n x (2n+1)
  RatVector b_X;       // (1, .., n) / (n+1)
  RatVector b_W;       // (n, 2n, .., n²) / (n+1)
  LatticeMap pi;       // (n+1) x (2n+1)
  RatMatrix Qprime;    // (n+1) x (n+1), transpose(pi) Qprime = kernel basis of alpha_W
  RatVector u_vector;  // first n coordinates of L (w_1; ..; w_n)
  std::vector<RatVector> w_vectors;  // w_1..w_n
  RatVector tail;      // constant last n+1 coordinates of P_b[n]
};

DegenerationBundle build_bundle(std::size_t n);

Linearization ghh_linearization_X(const DegenerationBundle& b);
Linearization ghh_linearization_W(const DegenerationBundle& b);

// v_{I,j} = (e_I; e_j) in N_W[n]; I ⊆ {1..n} given 1-based, j ∈ {0..n} indexes t_{j+1}.
IntVector v_ray(std::size_t n, const std::vector<std::size_t>& I, std::size_t j);
// σ_W[n] from the v_{I,j} description.
Cone sigmaW_from_rays(std::size_t n);
// Closed forms for the support constant and margin of D_{I,j}.
Rational closed_form_d(std::size_t n, std::size_t card_I, std::size_t j);
Rational closed_form_margin(std::size_t n, std::size_t card_I, std::size_t j);

// R_i[n] = □_n ∩ {sum c = i n/(n+1)}, i = 1..n.
LatticePolyhedron hyperplane_cut(std::size_t n, std::size_t i);
// P_b[n] = P_W[n] ∩ alpha_W^{-1}(-b_W), computed as the Minkowski sum of the images of the
// R_i[n] under the column blocks of L[n] (the slice of □_{n²} is R_1 x .. x R_n).
LatticePolyhedron polytope_b(const DegenerationBundle& b);
// The same slice computed directly from the facets of P_W[n] = L[n] □_{n²}; small n only.
LatticePolyhedron polytope_b_direct(const DegenerationBundle& b);

// Chart cone σ_{1..n}^∨ in M_W[n]; its generators w_1..w_{2n+1} are the chart coordinates.
Cone chart_cone_dual(std::size_t n);
// δ^(n) in N = Z ⊕ N̄ ⊕ Z.
Cone delta_cone(std::size_t n);
// σ^(n) from its generator display.
Cone sigma_small(std::size_t n);
// The (n+1) x (2n+1) matrix π.
LatticeMap pi_matrix(std::size_t n);

}  // namespace degen
