#include "degen/degeneration.hpp"

#include <stdexcept>

namespace degen {
namespace {

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector e(dim);
  e[i] = 1;
  return e;
}

// Images of the vertices of □_k under m.
std::vector<RatVector> cube_images(const RatMatrix& m) {
  const std::size_t k = m.cols();
  std::vector<RatVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    RatVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1U;
    out.push_back(m * c);
  }
  return out;
}

// ι_i : M[n] -> M_W[n], s -> s_i, t_r -> t_r.
RatMatrix factor_embedding(std::size_t n, std::size_t i) {
  RatMatrix m(2 * n + 1, n + 2);
  m(i, 0) = 1;
  for (std::size_t r = 0; r <= n; ++r) m(n + r, 1 + r) = 1;
  return m;
}

}  // namespace

IntVector v_ray(std::size_t n, const std::vector<std::size_t>& I, std::size_t j) {
  if (j > n) throw std::invalid_argument("v_ray: j out of range");
  IntVector v(2 * n + 1);
  for (auto i : I) {
    if (i < 1 || i > n) throw std::invalid_argument("v_ray: index out of range");
    v[i - 1] = 1;
  }
  v[n + j] = 1;
  return v;
}

Cone sigmaW_from_rays(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
    for (std::size_t j = 0; j <= n; ++j) {
      std::vector<std::size_t> I;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) I.push_back(i + 1);
      rays.push_back(v_ray(n, I, j));
    }
  return Cone(2 * n + 1, rays);
}

Rational closed_form_d(std::size_t n, std::size_t card_I, std::size_t j) {
  return -(Rational(static_cast<long>(n)) - static_cast<long>(j)) * static_cast<long>(card_I);
}

Rational closed_form_margin(std::size_t n, std::size_t card_I, std::size_t j) {
  Rational diff = Rational(static_cast<long>(j)) - static_cast<long>(card_I);
  Rational nn = static_cast<long>(n);
  return diff * (diff * nn + nn - 2 * Rational(static_cast<long>(card_I))) / (2 * (nn + 1));
}

LatticePolyhedron hyperplane_cut(std::size_t n, std::size_t i) {
  RatMatrix ones(1, n);
  for (std::size_t j = 0; j < n; ++j) ones(0, j) = 1;
  return affine_slice(LatticePolyhedron::cube(n), ones,
                      {make_rational(static_cast<long>(i * n), static_cast<long>(n + 1))});
}

LatticePolyhedron polytope_b(const DegenerationBundle& b) {
  const std::size_t n = b.n;
  LatticePolyhedron sum;
  for (std::size_t i = 1; i <= n; ++i) {
    RatMatrix block(2 * n + 1, n);
    for (std::size_t r = 0; r < 2 * n + 1; ++r)
      for (std::size_t c = 0; c < n; ++c) block(r, c) = b.L_matrix(r, (i - 1) * n + c);
    LatticePolyhedron piece = linear_image(block, hyperplane_cut(n, i));
    sum = i == 1 ? piece : minkowski_sum(sum, piece);
  }
  return sum;
}

LatticePolyhedron polytope_b_direct(const DegenerationBundle& b) {
  LatticePolyhedron pw = linear_image(b.L_matrix, LatticePolyhedron(b.n * b.n, cube_images(RatMatrix::identity(b.n * b.n))));
  RatVector target(b.n);
  for (std::size_t i = 0; i < b.n; ++i) target[i] = -b.b_W[i];
  return affine_slice(pw, b.alpha_W.matrix(), target);
}

Cone chart_cone_dual(std::size_t n) {
  const std::size_t d = 2 * n + 1;
  std::vector<IntVector> w;
  for (std::size_t j = 1; j <= n; ++j) {
    IntVector v(d);
    v[j - 1] = 1;
    for (std::size_t r = j; r <= n; ++r) v[n + r] = -1;
    w.push_back(std::move(v));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    IntVector v(d);
    v[k - 1] = -1;
    for (std::size_t r = k - 1; r <= n; ++r) v[n + r] = 1;
    w.push_back(std::move(v));
  }
  w.push_back(unit(d, 2 * n));
  return Cone(d, w);
}

Cone delta_cone(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v(n + 1);
    v[0] = 1;
    for (std::size_t i = 1; i <= j; ++i) v[i] = 1;
    rays.push_back(std::move(v));
  }
  rays.push_back(unit(n + 1, n));
  return Cone(n + 1, rays);
}

Cone sigma_small(std::size_t n) {
  std::vector<IntVector> rays{unit(n + 1, 0), unit(n + 1, n)};
  for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
    IntVector pos(n + 1), neg(n + 1);
    pos[0] = 1;
    neg[n] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((mask >> i) & 1U) {
        pos[1 + i] = 1;
        neg[1 + i] = -1;
      }
    rays.push_back(std::move(pos));
    rays.push_back(std::move(neg));
  }
  return Cone(n + 1, rays);
}

LatticeMap pi_matrix(std::size_t n) {
  RatMatrix m(n + 1, 2 * n + 1);
  m(0, n - 1) = -1;
  for (std::size_t r = 0; r <= n; ++r) m(0, n + r) = 1;
  for (std::size_t k = 1; k < n; ++k) {
    m(k, k - 1) = 1;
    m(k, n - 1) = -1;
  }
  m(n, n - 1) = 1;
  return LatticeMap(m);
}

DegenerationBundle build_bundle(std::size_t n) {
  if (n < 1 || n > 5) throw std::invalid_argument("build_bundle: n must be in 1..5");
  DegenerationBundle b;
  b.n = n;
  const std::size_t dx = n + 2, dw = 2 * n + 1;
  const Rational np1 = static_cast<long>(n + 1);

  std::vector<IntVector> xgens;
  IntVector x(dx, Integer(1));
  x[0] = -1;
  xgens.push_back(x);
  xgens.push_back(unit(dx, 0));
  for (std::size_t i = 1; i < dx; ++i) xgens.push_back(unit(dx, i));
  b.sigma_dual = Cone(dx, xgens);
  b.sigma = dual_cone(b.sigma_dual);

  b.P_matrix = RatMatrix(dx, n);
  for (std::size_t k = 1; k <= n; ++k) {
    b.P_matrix(0, k - 1) = -1;
    for (std::size_t r = k; r <= n; ++r) b.P_matrix(1 + r, k - 1) = 1;
  }
  b.tildeP_X = LatticePolyhedron(dx, cube_images(b.P_matrix), b.sigma_dual);

  std::vector<IntVector> wgens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(dw);
    v[i] = -1;
    for (std::size_t r = 0; r <= n; ++r) v[n + r] = 1;
    wgens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) wgens.push_back(unit(dw, i));
  for (std::size_t r = 0; r <= n; ++r) wgens.push_back(unit(dw, n + r));
  b.sigmaW_dual = Cone(dw, wgens);
  b.sigmaW = dual_cone(b.sigmaW_dual);

  b.L_matrix = RatMatrix(dw, n * n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t col = (k - 1) * n + (i - 1);
      b.L_matrix(i - 1, col) = -1;
      for (std::size_t r = k; r <= n; ++r) b.L_matrix(n + r, col) = 1;
    }

  LatticePolyhedron factor = canonicalize(b.tildeP_X);
  for (std::size_t i = 0; i < n; ++i) {
    LatticePolyhedron copy = linear_image(factor_embedding(n, i), factor);
    b.tildeP_W = i == 0 ? copy : minkowski_sum(b.tildeP_W, copy);
  }

  RatMatrix ax(n, dx), aw(n, dw);
  for (std::size_t i = 0; i < n; ++i) {
    ax(i, 1 + i) = 1;
    ax(i, 2 + i) = -1;
    aw(i, n + i) = 1;
    aw(i, n + i + 1) = -1;
  }
  b.alpha_X = LatticeMap(ax);
  b.alpha_W = LatticeMap(aw);
  for (std::size_t i = 1; i <= n; ++i) {
    b.b_X.push_back(Rational(static_cast<long>(i)) / np1);
    b.b_W.push_back(Rational(static_cast<long>(i * n)) / np1);
  }

  b.pi = pi_matrix(n);
  RatMatrix rhs(dw, n + 1);
  for (std::size_t i = 0; i < n; ++i) rhs(i, i) = 1;
  for (std::size_t r = 0; r <= n; ++r) rhs(n + r, n) = 1;
  RatMatrix pit = b.pi.matrix().transpose();
  b.Qprime = RatMatrix(n + 1, n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    auto sol = solve_affine(pit, rhs.column(c));
    if (!sol || !sol->directions.empty()) throw std::logic_error("basis change Q' is not uniquely determined");
    for (std::size_t r = 0; r <= n; ++r) b.Qprime(r, c) = sol->point[r];
  }

  for (std::size_t i = 1; i <= n; ++i) {
    RatVector w(n);
    for (std::size_t j = 1; j < i; ++j) w[j - 1] = 1;
    w[i - 1] = Rational(static_cast<long>(n - i + 1)) / np1;
    b.w_vectors.push_back(std::move(w));
  }
  b.u_vector = RatVector(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& w : b.w_vectors) b.u_vector[j] -= w[j];
  const Rational step = 1 + 1 / np1;
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (b.u_vector[j + 1] - b.u_vector[j] != step) throw std::logic_error("u does not have constant differences");
  if (b.u_vector[n - 1] != -1 / np1) throw std::logic_error("u has the wrong last entry");

  for (std::size_t r = 0; r <= n; ++r)
    b.tail.push_back(Rational(static_cast<long>(n * r * (r + 1))) / (2 * np1));
  return b;
}

Linearization ghh_linearization_X(const DegenerationBundle& b) { return Linearization{b.alpha_X, b.b_X}; }
Linearization ghh_linearization_W(const DegenerationBundle& b) { return Linearization{b.alpha_W, b.b_W}; }

}  // namespace degen
