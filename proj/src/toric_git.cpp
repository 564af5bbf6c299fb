#include "degen/toric_git.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace degen {
namespace {

RatVector negated(const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

void check_linearization(const LatticePolyhedron& p, const Linearization& lin) {
  if (lin.alpha.source_rank() != p.ambient_rank())
    throw std::invalid_argument("linearization source rank differs from polyhedron rank");
  if (lin.b.size() != lin.alpha.target_rank()) throw std::invalid_argument("b has wrong length");
}

// Nonnegative integer c with sum c_i g_i = target and sum c_i <= budget, if any.
bool find_combination(const std::vector<IntVector>& gens, const IntVector& target, std::size_t budget,
                      IntVector& coeffs) {
  if (is_zero(target)) return true;
  if (budget == 0) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntVector rest(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) rest[k] = target[k] - gens[i][k];
    coeffs[i] += 1;
    if (find_combination(gens, rest, budget - 1, coeffs)) return true;
    coeffs[i] -= 1;
  }
  return false;
}

}  // namespace

QuotientCoordinates quotient_coordinates(const Linearization& lin) {
  const std::size_t d = lin.alpha.source_rank();
  const RatVector target = negated(lin.b);
  QuotientCoordinates q;
  std::vector<IntVector> k = kernel_basis(lin.alpha);
  q.basis = RatMatrix::from_columns(k, d);
  q.to_local = RatMatrix(k.size(), d);
  q.origin = RatVector(d);
  auto sol = solve_affine(lin.alpha.matrix(), target);
  if (k.empty()) {
    if (sol) q.origin = sol->point;
    return q;
  }
  RowEchelon e = reduced_row_echelon(RatMatrix::from_int_rows(k, d));
  RatMatrix square(k.size(), k.size());
  for (std::size_t r = 0; r < k.size(); ++r)
    for (std::size_t c = 0; c < k.size(); ++c) square(r, c) = Rational(k[c][e.pivots[r]]);
  RatMatrix inv = *inverse(square);
  for (std::size_t r = 0; r < k.size(); ++r)
    for (std::size_t c = 0; c < k.size(); ++c) q.to_local(r, e.pivots[c]) = inv(r, c);
  if (sol) q.origin = reduce_modulo(sol->point, e);
  return q;
}

QuotientPolyhedron quotient_polyhedron(const LatticePolyhedron& p, const Linearization& lin) {
  check_linearization(p, lin);
  QuotientCoordinates coords = quotient_coordinates(lin);
  QuotientPolyhedron q;
  q.basis = std::move(coords.basis);
  q.origin = std::move(coords.origin);
  q.to_local = std::move(coords.to_local);
  q.ambient = affine_slice(p, lin.alpha.matrix(), negated(lin.b));
  if (q.ambient.is_empty()) {
    q.local = LatticePolyhedron::empty(q.basis.cols());
  } else {
    q.local = affine_transform(q.ambient, 1, q.to_local, q.origin);
  }
  return q;
}

SplitQuotient split_quotient(const LatticePolyhedron& p, const Linearization& lin) {
  check_linearization(p, lin);
  const std::size_t d = p.ambient_rank();
  LatticePolyhedron polytope(d, p.vertex_candidates());
  SplitQuotient out;
  out.polytopal = affine_slice(polytope, lin.alpha.matrix(), negated(lin.b));
  if (out.polytopal.is_empty()) throw std::domain_error("empty quotient");
  out.conical = canonical_form(intersect(p.recession_generators(), Cone(d, {}, kernel_basis(lin.alpha))));
  return out;
}

Rational support_constant(const LatticePolyhedron& p, const IntVector& v) {
  Rational best = 0;
  for (const auto& x : p.vertex_candidates()) best = std::min(best, dot(v, x));
  return best;
}

std::vector<RayConstant> support_constants(const LatticePolyhedron& p) {
  std::vector<RayConstant> out;
  const Cone dual = dual_cone(p.recession_generators());
  for (const auto& v : dual.rays()) out.push_back(RayConstant{v, support_constant(p, v)});
  return out;
}

std::vector<RayDatum> ray_margins(const LatticePolyhedron& polytope_b, const std::vector<RayConstant>& constants) {
  if (polytope_b.is_empty()) throw std::domain_error("empty quotient");
  std::vector<RayDatum> out;
  for (const auto& c : constants) {
    Rational best;
    bool first = true;
    for (const auto& m : polytope_b.vertices()) {
      Rational val = dot(c.ray, m);
      if (first || val < best) best = val;
      first = false;
    }
    Rational margin = best - c.d;
    out.push_back(RayDatum{c.ray, c.d, margin, margin > 0});
  }
  return out;
}

std::vector<RayDatum> unstable_rays(const LatticePolyhedron& p, const Linearization& lin) {
  SplitQuotient split = split_quotient(p, lin);
  return ray_margins(split.polytopal, support_constants(p));
}

std::vector<InvariantMonomial> chart_invariants(const Cone& chart, const LatticeMap& proj) {
  if (proj.source_rank() != chart.ambient_rank()) throw std::invalid_argument("chart_invariants: rank mismatch");
  const auto& gens = chart.generators();
  const std::size_t d = chart.ambient_rank();
  Cone image = image_cone(proj, dual_cone(chart));
  LatticeMap lift = proj.transpose();
  RatMatrix g = RatMatrix::from_columns(gens, d);
  const bool independent = rank(gens, d) == gens.size();
  std::vector<InvariantMonomial> out;
  const Cone invariants = dual_cone(image);
  for (const auto& m : invariants.rays()) {
    InvariantMonomial inv{m, lift.apply(m), IntVector(gens.size())};
    bool ok = false;
    if (independent) {
      if (auto sol = solve_affine(g, to_rational(inv.lifted))) {
        ok = std::all_of(sol->point.begin(), sol->point.end(), [](const Rational& x) { return is_integer(x) && x >= 0; });
        if (ok)
          for (std::size_t i = 0; i < gens.size(); ++i) inv.chart_exponents[i] = sol->point[i].get_num();
      }
    } else {
      ok = find_combination(gens, inv.lifted, 2 * d, inv.chart_exponents);
    }
    if (!ok) throw std::domain_error("invariant monomial is not expressible in chart coordinates");
    out.push_back(std::move(inv));
  }
  return out;
}

}  // namespace degen
