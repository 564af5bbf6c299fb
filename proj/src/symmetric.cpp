#include "degen/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "degen/degeneration.hpp"

namespace degen {

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

std::vector<std::size_t> adjacent_word(const Permutation& s) {
  // Bubble-sorting the one-line array of s with swaps at positions k_1, .., k_m gives
  // s ∘ τ_{k_1} ∘ .. ∘ τ_{k_m} = id, so s = τ_{k_m} ∘ .. ∘ τ_{k_1}.
  Permutation a = s;
  std::vector<std::size_t> word;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        word.push_back(i + 1);
      }
  return word;
}

RatMatrix reflection_Nbar(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw std::invalid_argument("reflection index out of range");
  const std::size_t d = n - 1;
  RatMatrix m = RatMatrix::identity(d);
  if (k + 1 < n) {
    m(k - 1, k - 1) = 0;
    m(k, k) = 0;
    m(k - 1, k) = 1;
    m(k, k - 1) = 1;
  } else {
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -1;
  }
  return m;
}

RatMatrix reflection_N(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw std::invalid_argument("reflection index out of range");
  const std::size_t d = n + 1;
  RatMatrix m = RatMatrix::identity(d);
  if (k + 1 < n) {
    m(k, k) = 0;
    m(k + 1, k + 1) = 0;
    m(k, k + 1) = 1;
    m(k + 1, k) = 1;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, n - 1) = -1;
    m(n - 1, n - 1) = -1;
    m(n, n - 1) = 1;
  }
  return m;
}

namespace {

RatMatrix action_from_word(std::size_t d, std::size_t n, const Permutation& s,
                           RatMatrix (*reflection)(std::size_t, std::size_t)) {
  if (s.size() != n) throw std::invalid_argument("permutation has the wrong size");
  RatMatrix m = RatMatrix::identity(d);
  for (std::size_t k : adjacent_word(s)) m = reflection(n, k) * m;
  return m;
}

}  // namespace

RatMatrix action_Nbar(std::size_t n, const Permutation& s) { return action_from_word(n - 1, n, s, reflection_Nbar); }
RatMatrix action_N(std::size_t n, const Permutation& s) { return action_from_word(n + 1, n, s, reflection_N); }

RatVector permutahedron_vertex(const Permutation& s) {
  RatVector v(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    v[i] = Rational(static_cast<long>(s[i])) - static_cast<long>(i);
  return v;
}

Cone delta_bar(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    IntVector v(n - 1);
    for (std::size_t i = 0; i <= j; ++i) v[i] = 1;
    rays.push_back(std::move(v));
  }
  return Cone(n - 1, rays);
}

RatMatrix edge_matrix(std::size_t n) {
  const std::size_t d = n - 1;
  RatMatrix m(d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    m(k, k) = 1;
    m(k + 1, k) = -1;
  }
  m(d - 1, d - 1) = 1;
  return m;
}

SymmetricModel build_symmetric(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("build_symmetric: n must be in 2..6");
  SymmetricModel m;
  m.n = n;
  for (std::size_t k = 1; k < n; ++k) {
    m.perm_action_Nbar.push_back(reflection_Nbar(n, k));
    m.perm_action_N.push_back(reflection_N(n, k));
  }
  m.delta_n = delta_cone(n);
  m.delta_bar = delta_bar(n);
  m.sigma_cone = sigma_small(n);
  m.Be = edge_matrix(n);

  const auto perms = all_permutations(n);
  std::vector<RatVector> vs, lifted;
  m.Delta_fan.ambient_rank = n + 1;
  for (const auto& s : perms) {
    RatVector v = permutahedron_vertex(s);
    RatVector iv(n + 1);
    std::copy(v.begin(), v.end(), iv.begin() + 1);
    vs.push_back(std::move(v));
    lifted.push_back(std::move(iv));
    m.Delta_fan.maximal_cones.push_back(image_cone(action_N(n, s), m.delta_n));
  }
  m.Delta_fan = m.Delta_fan.canonical();
  m.permutahedron = LatticePolyhedron(n - 1, vs);
  m.tildeP_n = LatticePolyhedron(n + 1, lifted, dual_cone(m.sigma_cone));
  return m;
}

}  // namespace degen
