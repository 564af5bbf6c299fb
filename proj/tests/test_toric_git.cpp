#include <doctest.h>

#include <set>

#include "degen/degeneration.hpp"
#include "degen/toric_git.hpp"

using namespace degen;

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) I.push_back(i + 1);
    out.push_back(I);
  }
  return out;
}

const RayDatum& datum_for(const std::vector<RayDatum>& data, const IntVector& v) {
  auto it = std::find_if(data.begin(), data.end(), [&](const RayDatum& d) { return d.ray == v; });
  REQUIRE(it != data.end());
  return *it;
}

}  // namespace

TEST_CASE("base recovery quotient of the expanded degeneration at n = 1") {
  const auto b = build_bundle(1);
  const Linearization lin = ghh_linearization_X(b);
  CHECK(lin.b == RatVector{make_rational(1, 2)});
  const QuotientPolyhedron q = quotient_polyhedron(b.tildeP_X, lin);
  REQUIRE_FALSE(q.ambient.is_empty());
  CHECK(q.ambient.vertices().size() == 1);
  CHECK(q.local.ambient_rank() == 2);
  CHECK(q.local.vertices().size() == 1);
  const Cone rec = q.local.recession();
  CHECK(rec.is_pointed());
  CHECK(rec.is_full_dimensional());
  CHECK(rec.rays().size() == 2);
  CHECK(is_smooth(rec));

  const SplitQuotient split = split_quotient(b.tildeP_X, lin);
  CHECK(split.polytopal.vertices().size() == 1);
  CHECK(split.conical.dimension() == 2);
  CHECK(minkowski_sum(split.polytopal, LatticePolyhedron(3, {RatVector(3)}, split.conical)) == q.ambient);
}

TEST_CASE("quotient of the self-product at n = 2") {
  const auto b = build_bundle(2);
  const Linearization lin = ghh_linearization_W(b);
  CHECK(lin.b == RatVector{make_rational(2, 3), make_rational(4, 3)});
  const QuotientPolyhedron q = quotient_polyhedron(b.tildeP_W, lin);
  std::set<RatVector> projections;
  for (const auto& v : q.ambient.vertices()) projections.insert({v[0], v[1]});
  const RatVector u{make_rational(-5, 3), make_rational(-1, 3)};
  const RatVector su{make_rational(-1, 3), make_rational(-5, 3)};
  CHECK(projections == std::set<RatVector>{u, su});

  const SplitQuotient split = split_quotient(b.tildeP_W, lin);
  CHECK(split.polytopal == polytope_b(b));
  CHECK(minkowski_sum(split.polytopal, LatticePolyhedron(5, {RatVector(5)}, split.conical)) == q.ambient);
  // Local coordinates map back onto the ambient slice.
  for (const auto& z : q.local.vertices()) {
    RatVector x = q.origin;
    const RatVector kz = q.basis * z;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += kz[i];
    CHECK(q.ambient.contains(x));
    CHECK(b.alpha_W.apply(x) == RatVector{make_rational(-2, 3), make_rational(-4, 3)});
  }
}

TEST_CASE("quotient outside the moment image is empty") {
  const auto b = build_bundle(2);
  const LatticePolyhedron bounded = linear_image(b.L_matrix, LatticePolyhedron::cube(4));
  const Linearization far{b.alpha_W, {Rational(100), Rational(100)}};
  CHECK(quotient_polyhedron(bounded, far).ambient.is_empty());
  CHECK_THROWS_AS(split_quotient(bounded, far), std::domain_error);

  // Trivial recession gives a zero conical part.
  const SplitQuotient split = split_quotient(bounded, ghh_linearization_W(b));
  CHECK(split.conical.rays().empty());
  CHECK(split.conical.lineality_basis().empty());
}

TEST_CASE("split quotient sums back to the quotient") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto b = build_bundle(n);
    const Linearization lin = ghh_linearization_W(b);
    const QuotientPolyhedron q = quotient_polyhedron(b.tildeP_W, lin);
    const SplitQuotient split = split_quotient(b.tildeP_W, lin);
    const std::size_t d = 2 * n + 1;
    CHECK(minkowski_sum(split.polytopal, LatticePolyhedron(d, {RatVector(d)}, split.conical)) == q.ambient);
    CHECK(split.polytopal.is_bounded());
  }
}

TEST_CASE("support constants of the product polyhedron") {
  const auto b2 = build_bundle(2);
  CHECK(support_constant(b2.tildeP_W, v_ray(2, {1}, 1)) == -1);
  for (std::size_t j = 0; j <= 2; ++j) CHECK(support_constant(b2.tildeP_W, v_ray(2, {}, j)) == 0);
  const auto b3 = build_bundle(3);
  CHECK(support_constant(b3.tildeP_W, v_ray(3, {1, 2}, 1)) == -4);

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto b = build_bundle(n);
    const auto constants = support_constants(b.tildeP_W);
    CHECK(constants.size() == (std::size_t(1) << n) * (n + 1));
    for (const auto& I : subsets(n))
      for (std::size_t j = 0; j <= n; ++j) {
        const IntVector v = v_ray(n, I, j);
        auto it = std::find_if(constants.begin(), constants.end(), [&](const RayConstant& c) { return c.ray == v; });
        REQUIRE(it != constants.end());
        CHECK(it->d == closed_form_d(n, I.size(), j));
        CHECK(it->d == -Rational(static_cast<long>((n - j) * I.size())));
      }
  }
}

TEST_CASE("unstable rays and margins") {
  const auto b2 = build_bundle(2);
  const auto data = unstable_rays(b2.tildeP_W, ghh_linearization_W(b2));
  CHECK(datum_for(data, v_ray(2, {1}, 1)).margin == 0);
  CHECK_FALSE(datum_for(data, v_ray(2, {1}, 1)).unstable);
  CHECK(datum_for(data, v_ray(2, {}, 1)).margin == make_rational(2, 3));
  CHECK(datum_for(data, v_ray(2, {}, 1)).unstable);
  CHECK(datum_for(data, v_ray(2, {1, 2}, 1)).margin == make_rational(2, 3));

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto b = build_bundle(n);
    const auto all = unstable_rays(b.tildeP_W, ghh_linearization_W(b));
    CHECK(all.size() == (std::size_t(1) << n) * (n + 1));
    for (const auto& I : subsets(n))
      for (std::size_t j = 0; j <= n; ++j) {
        const RayDatum& d = datum_for(all, v_ray(n, I, j));
        const long c = static_cast<long>(I.size()), jj = static_cast<long>(j), nn = static_cast<long>(n);
        const Rational expected = make_rational((jj - c) * ((jj - c) * nn + nn - 2 * c), 2 * (nn + 1));
        CHECK(d.margin == expected);
        CHECK(d.margin == closed_form_margin(n, I.size(), j));
        CHECK(d.margin >= 0);
        CHECK((d.margin == 0) == (j == I.size()));
        CHECK(d.unstable == (d.margin > 0));
      }
  }
}

TEST_CASE("chart invariants on the product chart") {
  const auto invariants = chart_invariants(chart_cone_dual(2), pi_matrix(2));
  std::set<IntVector> exponents;
  for (const auto& inv : invariants) exponents.insert(inv.chart_exponents);
  const std::set<IntVector> expected{make_int_vector({0, 0, 1, 0, 0}), make_int_vector({1, 0, 0, 1, 0}),
                                     make_int_vector({0, 1, 0, 0, 1})};
  CHECK(exponents == expected);

  const auto b2 = build_bundle(2);
  for (const auto& inv : invariants) CHECK(is_zero(b2.alpha_W.apply(inv.lifted)));

  const auto self = chart_invariants(chart_cone_dual(2), LatticeMap(RatMatrix::identity(5)));
  std::set<IntVector> units;
  for (const auto& inv : self) units.insert(inv.chart_exponents);
  CHECK(units.size() == 5);
  for (const auto& e : units) CHECK(std::count(e.begin(), e.end(), Integer(1)) == 1);

  for (std::size_t n = 2; n <= 3; ++n) {
    CHECK(image_cone(pi_matrix(n), dual_cone(chart_cone_dual(n))) == delta_cone(n));
    const auto inv_n = chart_invariants(chart_cone_dual(n), pi_matrix(n));
    CHECK(inv_n.size() == n + 1);
    std::vector<IntVector> quotient_exponents;
    for (const auto& inv : inv_n) quotient_exponents.push_back(inv.quotient_exponent);
    CHECK(Cone(n + 1, quotient_exponents) == dual_cone(delta_cone(n)));
  }
}

TEST_CASE("GHH characters become integral on the (n+1)-st power") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto b = build_bundle(n);
    const Rational k(static_cast<long>(n + 1));
    CHECK(b.b_X.size() == n);
    CHECK(b.b_W.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(is_integer(k * b.b_X[i]));
      CHECK(is_integer(k * b.b_W[i]));
      CHECK(b.b_X[i] == make_rational(static_cast<long>(i + 1), static_cast<long>(n + 1)));
      CHECK(b.b_W[i] == make_rational(static_cast<long>((i + 1) * n), static_cast<long>(n + 1)));
    }
  }
}
