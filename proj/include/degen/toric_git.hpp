#pragma once

#include <vector>

#include "degen/cone.hpp"
#include "degen/linalg.hpp"
#include "degen/polyhedron.hpp"

namespace degen {

// alpha: M -> M_G, b in M_G ⊗ Q.  A character m is invariant when alpha(m) + b = 0.
struct Linearization {
  LatticeMap alpha;
  RatVector b;
};

// P̃_b = P̃ ∩ alpha^{-1}(-b) in two coordinate systems.  Quotient coordinates z are fixed by
// the HNF kernel basis K of alpha (the columns of `basis`) and the solution `origin` of
// alpha(x) = -b that vanishes on the pivot columns of K: x = origin + K z.
struct QuotientPolyhedron {
  LatticePolyhedron ambient;
  LatticePolyhedron local;
  RatMatrix basis;
  RatVector origin;
  RatMatrix to_local;  // left inverse of basis: z = to_local (x - origin)
};

struct QuotientCoordinates {
  RatMatrix basis;
  RatVector origin;  // zero vector when alpha(x) = -b has no solution
  RatMatrix to_local;
};
QuotientCoordinates quotient_coordinates(const Linearization& lin);

QuotientPolyhedron quotient_polyhedron(const LatticePolyhedron& p, const Linearization& lin);

struct SplitQuotient {
  LatticePolyhedron polytopal;  // conv(vertex candidates of p) ∩ alpha^{-1}(-b)
  Cone conical;                 // recession(p) ∩ ker(alpha) ⊗ R
};
// Throws std::domain_error on an empty quotient.
SplitQuotient split_quotient(const LatticePolyhedron& p, const Linearization& lin);

struct RayConstant {
  IntVector ray;
  Rational d;
};
// d_v = min(0, min over vertex candidates of <v, x>) for each extreme ray v of the dual of the
// recession cone.  The minimum of a linear form over conv(candidates) is attained at a
// candidate, so no hull is needed.
std::vector<RayConstant> support_constants(const LatticePolyhedron& p);
Rational support_constant(const LatticePolyhedron& p, const IntVector& v);

struct RayDatum {
  IntVector ray;
  Rational support_constant;
  Rational margin;
  bool unstable = false;
};
// margin = min over vertices m of polytope_b of <v, m> - d_v.  Restricting to the polytopal
// part is enough: <v, .> >= 0 on the conical part since v lies in the dual of the recession
// cone, so the minimum over P_b + conical part is attained on P_b.
std::vector<RayDatum> ray_margins(const LatticePolyhedron& polytope_b, const std::vector<RayConstant>& constants);
std::vector<RayDatum> unstable_rays(const LatticePolyhedron& p, const Linearization& lin);

struct InvariantMonomial {
  IntVector quotient_exponent;  // generator of (proj(chart^∨))^∨ in M'
  IntVector lifted;             // transpose(proj) applied to it, in M
  IntVector chart_exponents;    // lifted = sum_i chart_exponents[i] * chart generator i
};
// chart is a monomial cone in M whose generators, in order, are the chart coordinates.
// Throws std::domain_error if a lift is not a nonnegative integer combination of them.
std::vector<InvariantMonomial> chart_invariants(const Cone& chart, const LatticeMap& proj);

}  // namespace degen
