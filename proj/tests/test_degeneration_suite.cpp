#include <doctest.h>

#include <set>

#include "degen/degeneration.hpp"
#include "degen/symmetric.hpp"
#include "degen/toric_git.hpp"
#include "degen/verify.hpp"

using namespace degen;

namespace {

RatMatrix power(const RatMatrix& m, int k) {
  RatMatrix out = RatMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

void check_coxeter(const std::vector<RatMatrix>& gens) {
  const std::size_t d = gens.empty() ? 0 : gens[0].rows();
  const RatMatrix id = RatMatrix::identity(d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CHECK(power(gens[i], 2) == id);
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int order = j == i + 1 ? 3 : 2;
      CHECK(power(gens[i] * gens[j], order) == id);
      CHECK_FALSE(power(gens[i] * gens[j], 1) == id);
    }
  }
}

// Drops the first and last coordinates of N = Z ⊕ N̄ ⊕ Z.
RatMatrix projection_to_Nbar(std::size_t n) {
  RatMatrix p(n - 1, n + 1);
  for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = 1;
  return p;
}

}  // namespace

TEST_CASE("bundle dimensions and displayed values") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto b = build_bundle(n);
    CHECK(b.pi.target_rank() == n + 1);
    CHECK(b.pi.source_rank() == 2 * n + 1);
    CHECK(b.alpha_W.target_rank() == n);
    CHECK(b.alpha_W.source_rank() == 2 * n + 1);
    CHECK(b.alpha_X.target_rank() == n);
    CHECK(b.alpha_X.source_rank() == n + 2);
    CHECK(b.L_matrix.rows() == 2 * n + 1);
    CHECK(b.L_matrix.cols() == n * n);
    CHECK(b.sigma.rays().size() == 2 * (n + 1));
    CHECK(b.sigma_dual.generators().size() == n + 3);
    CHECK(b.sigmaW == sigmaW_from_rays(n));
    CHECK(b.sigmaW_dual.generators().size() == 3 * n + 1);
  }
  CHECK(build_bundle(2).b_X == RatVector{make_rational(1, 3), make_rational(2, 3)});
  CHECK(build_bundle(3).b_W == RatVector{make_rational(3, 4), make_rational(6, 4), make_rational(9, 4)});
  CHECK_THROWS_AS(build_bundle(0), std::invalid_argument);
  CHECK_THROWS_AS(build_symmetric(1), std::invalid_argument);
}

TEST_CASE("w vectors lie on their hyperplanes and u has the displayed differences") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = build_bundle(n);
    REQUIRE(b.w_vectors.size() == n);
    for (std::size_t i = 1; i <= n; ++i) {
      Rational sum = 0;
      for (const auto& x : b.w_vectors[i - 1]) sum += x;
      CHECK(sum == make_rational(static_cast<long>(i * n), static_cast<long>(n + 1)));
      const LatticePolyhedron cut = hyperplane_cut(n, i);
      for (const auto& v : cut.vertices()) {
        Rational s = 0;
        for (const auto& x : v) s += x;
        CHECK(s == make_rational(static_cast<long>(i * n), static_cast<long>(n + 1)));
      }
    }
    // Consecutive entries of u differ by 1 + 1/(n+1).
    const RatVector& u = b.u_vector;
    REQUIRE(u.size() == n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      CHECK(u[i + 1] - u[i] == 1 + make_rational(1, static_cast<long>(n + 1)));
  }
  const auto b2 = build_bundle(2);
  CHECK(b2.w_vectors[0] == RatVector{make_rational(2, 3), Rational(0)});
  CHECK(b2.w_vectors[1] == RatVector{Rational(1), make_rational(1, 3)});
}

TEST_CASE("the slice of P_W agrees with the Minkowski construction") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto b = build_bundle(n);
    CHECK(polytope_b(b) == polytope_b_direct(b));
  }
}

TEST_CASE("symmetric model examples") {
  const auto m3 = build_symmetric(3);
  std::set<RatVector> expected;
  for (auto [a, c] : std::vector<std::pair<long, long>>{{0, 0}, {1, -1}, {2, 0}, {0, 1}, {1, 1}, {2, -1}})
    expected.insert(make_rat_vector({a, c}));
  std::set<RatVector> vertices(m3.permutahedron.vertices().begin(), m3.permutahedron.vertices().end());
  CHECK(vertices == expected);
  std::set<RatVector> formula;
  for (const auto& s : all_permutations(3)) formula.insert(permutahedron_vertex(s));
  CHECK(formula == expected);

  const RatMatrix t = reflection_N(2, 1);
  CHECK(t == RatMatrix::from_literal({{1, -1, 0}, {0, -1, 0}, {0, 1, 1}}));
  CHECK(t * t == RatMatrix::identity(3));
  CHECK(build_symmetric(2).sigma_cone.rays().size() == 4);
}

TEST_CASE("Coxeter relations on both representations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto m = build_symmetric(n);
    REQUIRE(m.perm_action_Nbar.size() == n - 1);
    REQUIRE(m.perm_action_N.size() == n - 1);
    check_coxeter(m.perm_action_Nbar);
    check_coxeter(m.perm_action_N);
  }
}

TEST_CASE("permutation actions are homomorphisms and the projection is equivariant") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    const RatMatrix p = projection_to_Nbar(n);
    for (std::size_t a = 0; a < perms.size(); a += 1 + perms.size() / 8)
      for (std::size_t c = 0; c < perms.size(); c += 1 + perms.size() / 8) {
        const auto& s = perms[a];
        const auto& t = perms[c];
        CHECK(action_N(n, compose(s, t)) == action_N(n, s) * action_N(n, t));
        CHECK(action_Nbar(n, compose(s, t)) == action_Nbar(n, s) * action_Nbar(n, t));
      }
    for (const auto& s : perms) CHECK(p * action_N(n, s) == action_Nbar(n, s) * p);
  }
}

TEST_CASE("the dual of sigma^(n) is invariant under the contragredient action") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto m = build_symmetric(n);
    const Cone dual = dual_cone(m.sigma_cone);
    for (const auto& s : all_permutations(n)) {
      const auto inv = inverse(action_N(n, s));
      REQUIRE(inv);
      CHECK(image_cone(inv->transpose(), dual) == dual);
      CHECK(image_cone(action_N(n, s), m.sigma_cone) == m.sigma_cone);
    }
  }
}

TEST_CASE("normal cone at the identity vertex is delta^(n)") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto m = build_symmetric(n);
    const auto& verts = m.tildeP_n.vertices();
    const auto it = std::find(verts.begin(), verts.end(), RatVector(n + 1));
    REQUIRE(it != verts.end());
    CHECK(m.tildeP_n.normal_cone(static_cast<std::size_t>(it - verts.begin())) == m.delta_n);
    CHECK(m.delta_n == delta_cone(n));
    CHECK(m.Delta_fan.canonical().maximal_cones.size() == verts.size());
  }
}

TEST_CASE("every check passes for small n") {
  for (const auto& check : check_names()) {
    const auto [lo, hi] = check_range(check);
    for (std::size_t n = lo; n <= std::min<std::size_t>(hi, 3); ++n) {
      const VerificationReport r = verify(n, check);
      INFO(check << " n=" << n << " witness " << r.witness.dump());
      CHECK(r.status == "pass");
      CHECK(r.check == check);
      CHECK(r.n == n);
    }
  }
  CHECK_THROWS_AS(verify(2, "no_such_check"), std::invalid_argument);
  CHECK_THROWS_AS(verify(99, "conical_part"), std::invalid_argument);
  CHECK_THROWS_AS(verify(1, "normal_fan"), std::invalid_argument);
}

TEST_CASE("unstable locus report lists every pair") {
  const VerificationReport r = verify(2, "unstable_locus");
  CHECK(r.status == "pass");
  std::size_t rows = 0;
  for (const auto& e : r.witness.at("rays")) {
    ++rows;
    CHECK(e.contains("margin"));
  }
  CHECK(rows == 12);
}
