#include <doctest.h>

#include <random>

#include "degen/degeneration.hpp"
#include "degen/linalg.hpp"

using namespace degen;

namespace {

bool is_hermite_shaped(const RatMatrix& h) {
  std::size_t last_pivot = 0;
  bool first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      for (std::size_t r2 = r; r2 < h.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < h.cols(); ++c2)
          if (h(r2, c2) != 0) return false;
      return true;
    }
    if (!first && c <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t r2 = 0; r2 < r; ++r2)
      if (h(r2, c) < 0 || h(r2, c) >= h(r, c)) return false;
    last_pivot = c;
    first = false;
  }
  return true;
}

bool is_diagonal_chain(const RatMatrix& d) {
  Rational prev = 1;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
    }
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    const Rational x = d(i, i);
    if (x < 0) return false;
    if (prev == 0 && x != 0) return false;
    if (x != 0 && prev != 0 && mpz_class(x.get_num() % prev.get_num()) != 0) return false;
    prev = x;
  }
  return true;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// gcd of all k x k minors of m, by brute force over row and column subsets.
Integer minor_gcd(const RatMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<bool> rsel(m.rows()), csel(m.cols());
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      RatMatrix sub(k, k);
      std::size_t i = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rsel[r]) continue;
        std::size_t j = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (csel[c]) sub(i, j++) = m(r, c);
        ++i;
      }
      mpz_class det = determinant(sub).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

}  // namespace

TEST_CASE("hermite normal form of the identity is trivial") {
  const auto r = hermite_normal_form(RatMatrix::identity(3));
  CHECK(r.h == RatMatrix::identity(3));
  CHECK(r.u == RatMatrix::identity(3));
}

TEST_CASE("hermite normal form of a 2x2 integer matrix") {
  const RatMatrix m = RatMatrix::from_literal({{2, 4}, {1, 3}});
  const auto r = hermite_normal_form(m);
  CHECK(r.u * m == r.h);
  CHECK(is_unimodular(r.u));
  CHECK(is_hermite_shaped(r.h));
  CHECK(r.h == RatMatrix::from_literal({{1, 1}, {0, 2}}));
}

TEST_CASE("hermite normal form of the product weight matrix has rank two") {
  const RatMatrix a = RatMatrix::from_literal({{0, 0, 1, -1, 0}, {0, 0, 0, 1, -1}});
  const auto r = hermite_normal_form(a);
  CHECK(r.u * a == r.h);
  CHECK(is_hermite_shaped(r.h));
  CHECK(rank(r.h) == 2);
  CHECK(build_bundle(2).alpha_W.matrix() == a);
}

TEST_CASE("smith normal form examples") {
  const RatMatrix d23 = RatMatrix::diagonal(make_rat_vector({2, 3}));
  const auto s = smith_normal_form(d23);
  CHECK(s.u * d23 * s.v == s.d);
  CHECK(s.d == RatMatrix::diagonal(make_rat_vector({1, 6})));
  CHECK(elementary_divisors(d23) == std::vector<Integer>{1, 6});

  const RatMatrix zero(2, 3);
  const auto z = smith_normal_form(zero);
  CHECK(z.d == zero);

  const RatMatrix pi = pi_matrix(2).matrix();
  CHECK(pi.rows() == 3);
  CHECK(pi.cols() == 5);
  const auto sp = smith_normal_form(pi);
  CHECK(sp.u * pi * sp.v == sp.d);
  CHECK(elementary_divisors(pi) == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("kernel basis examples") {
  const auto k = kernel_basis(build_bundle(2).alpha_W);
  std::vector<IntVector> expected{make_int_vector({1, 0, 0, 0, 0}), make_int_vector({0, 1, 0, 0, 0}),
                                  make_int_vector({0, 0, 1, 1, 1})};
  CHECK(k == expected);
  CHECK(kernel_basis(LatticeMap(RatMatrix::identity(4))).empty());

  for (std::size_t n = 1; n <= 5; ++n) {
    RatMatrix ones(1, n + 1);
    for (std::size_t c = 0; c <= n; ++c) ones(0, c) = 1;
    const auto basis = kernel_basis(LatticeMap(ones));
    REQUIRE(basis.size() == n);
    for (const auto& v : basis) CHECK(is_zero(LatticeMap(ones).apply(v)));
    // Saturation: the basis spans a primitive sublattice (gcd of maximal minors is 1).
    CHECK(minor_gcd(RatMatrix::from_int_rows(basis), n) == 1);
    // The basis spans the same lattice as e_i - e_{n+1}.
    std::vector<IntVector> reference;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n + 1);
      e[i] = 1;
      e[n] = -1;
      reference.push_back(e);
    }
    CHECK(hnf_rows(reference, n + 1) == hnf_rows(basis, n + 1));
  }
}

TEST_CASE("solve_affine examples") {
  const RatVector v{make_rational(1, 2), Rational(-3), Rational(7)};
  const auto id = solve_affine(RatMatrix::identity(3), v);
  REQUIRE(id);
  CHECK(id->point == v);
  CHECK(id->directions.empty());

  const auto bundle = build_bundle(2);
  RatVector target;
  for (const auto& x : bundle.b_W) target.push_back(-x);
  CHECK(bundle.b_W == RatVector{make_rational(2, 3), make_rational(4, 3)});
  const auto plane = solve_affine(bundle.alpha_W.matrix(), target);
  REQUIRE(plane);
  CHECK(plane->directions.size() == 3);
  CHECK(bundle.alpha_W.apply(plane->point) == target);

  const auto line = solve_affine(RatMatrix::from_literal({{1, 1}}), make_rat_vector({1}));
  REQUIRE(line);
  CHECK(line->point == make_rat_vector({1, 0}));
  REQUIRE(line->directions.size() == 1);
  CHECK((line->directions[0] == make_int_vector({1, -1}) || line->directions[0] == make_int_vector({-1, 1})));

  CHECK_FALSE(solve_affine(RatMatrix::from_literal({{1, 1}, {2, 2}}), make_rat_vector({1, 3})));
}

TEST_CASE("rational canonicalization") {
  CHECK(make_rational(2, 6) == make_rational(1, 3));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(parse_rational("0/3") == 0);
  CHECK(parse_rational(" 6/-4 ") == make_rational(-3, 2));
  CHECK(floor_fraction(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("random hermite and smith contracts") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + trial % 7, cols = 2 + (trial * 3) % 7;
    const RatMatrix m = random_matrix(rng, rows, cols, -6, 6);

    const auto h = hermite_normal_form(m);
    CHECK(h.u * m == h.h);
    CHECK(is_unimodular(h.u));
    CHECK(is_hermite_shaped(h.h));
    CHECK(rank(h.h) == rank(m));

    const auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(is_diagonal_chain(s.d));
    // Determinantal divisors: d_1 .. d_k = gcd of k x k minors.
    if (rows <= 5 && cols <= 5) {
      Integer prefix = 1;
      for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        prefix *= Integer(s.d(k - 1, k - 1).get_num());
        CHECK(minor_gcd(m, k) == abs(prefix));
      }
    }

    const auto kb = kernel_basis(LatticeMap(m));
    CHECK(kb.size() == cols - rank(m));
    for (const auto& v : kb) CHECK(is_zero(LatticeMap(m).apply(v)));
    if (!kb.empty()) CHECK(minor_gcd(RatMatrix::from_int_rows(kb), kb.size()) == 1);
  }
}

TEST_CASE("random 8x8 inverse and determinant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = random_matrix(rng, 8, 8, -4, 4);
    const auto inv = inverse(m);
    if (determinant(m) == 0) {
      CHECK_FALSE(inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(m * *inv == RatMatrix::identity(8));
    CHECK(determinant(m) * determinant(*inv) == 1);
    CHECK(determinant(m.transpose()) == determinant(m));
  }
}
