#include "degen/chart_gluing.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "degen/cone.hpp"
#include "degen/degeneration.hpp"

namespace degen {
namespace {

IntVector times_transpose(const RatMatrix& m, const IntVector& v) {
  IntVector out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out[c] += m(r, c).get_num() * v[r];
  return out;
}

class PrimeField {
 public:
  PrimeField(const Integer& root_order, std::mt19937_64& rng) : order_(root_order) {
    std::uniform_int_distribution<unsigned long> dist(1UL << 40, 1UL << 50);
    do p_ = order_ * dist(rng) + 1;
    while (mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0);
    std::vector<Integer> primes;
    Integer m = order_;
    for (Integer q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
    for (;;) {
      omega_ = power(random_unit(rng), (p_ - 1) / order_);
      bool primitive = true;
      for (const auto& q : primes) primitive = primitive && power(omega_, order_ / q) != 1;
      if (primitive) break;
    }
  }

  Integer random_unit(std::mt19937_64& rng) const {
    std::uniform_int_distribution<unsigned long> dist(2, p_.get_ui() - 1);
    return Integer(dist(rng)) % p_;
  }
  Integer power(const Integer& base, const Integer& e) const {
    Integer out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
    return out;
  }
  Integer mul(const Integer& a, const Integer& b) const { return (a * b) % p_; }
  Integer root(const Rational& k_over_r) const {
    return power(omega_, Integer(k_over_r.get_num() * (order_ / k_over_r.get_den())));
  }

 private:
  Integer order_;
  Integer p_;
  Integer omega_;
};

// Π value_k^{c_k}; undefined when a zero value carries a negative exponent.
std::optional<Integer> evaluate(const PrimeField& field, const std::vector<std::optional<Integer>>& values,
                                const IntVector& c) {
  Integer out = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!values[k]) {
      if (c[k] < 0) return std::nullopt;
      return Integer(0);
    }
    out = field.mul(out, field.power(*values[k], c[k]));
  }
  return out;
}

}  // namespace

ChartGluingOracle::ChartGluingOracle(std::size_t n) : n_(n) {
  if (n < 2 || n > 5) throw std::invalid_argument("chart gluing oracle supports 2 <= n <= 5");
  const Cone delta = delta_cone(n);
  // Rays of δ^(n) in construction order; f_k is the dual basis vector of ray k.
  const auto& rays = delta.generators();
  const RatMatrix ray_matrix = RatMatrix::from_columns(rays, n + 1);
  const RatMatrix dual_basis = *inverse(ray_matrix);  // rows are f_0..f_n
  for (const auto& s : all_permutations(n)) {
    const RatMatrix rho = action_N(n, s);
    const Cone tau = intersect(delta, image_cone(rho, delta));
    Entry e{s, {}, {}};
    for (std::size_t k = 0; k <= n; ++k) {
      IntVector f(n + 1);
      for (std::size_t j = 0; j <= n; ++j) f[j] = dual_basis(k, j).get_num();
      std::vector<IntVector> gens{f};
      bool orthogonal = true;
      for (const auto& r : tau.rays()) orthogonal = orthogonal && dot(f, r) == 0;
      for (const auto& l : tau.lineality_basis()) orthogonal = orthogonal && dot(f, l) == 0;
      if (orthogonal) {
        IntVector neg(n + 1);
        for (std::size_t j = 0; j <= n; ++j) neg[j] = -f[j];
        gens.push_back(std::move(neg));
      }
      for (const auto& m : gens) {
        e.coefficients.push_back(times_transpose(ray_matrix, m));
        e.pulled_coefficients.push_back(times_transpose(ray_matrix, times_transpose(rho, m)));
      }
    }
    entries_.push_back(std::move(e));
  }
}

std::vector<Permutation> ChartGluingOracle::stabilizer(const QuotientPoint& q, std::uint64_t seed) const {
  if (q.n != n_ || q.f.size() != n_ + 1) throw std::invalid_argument("quotient point has the wrong size");
  Integer order = 1;
  std::size_t generics = 0;
  for (const auto& f : q.f)
    if (!f.is_zero()) {
      mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), f.root().get_den().get_mpz_t());
      generics = std::max(generics, f.generic().size());
    }
  std::mt19937_64 rng(seed);
  const PrimeField field(order, rng);
  std::vector<Integer> generic_values;
  for (std::size_t i = 0; i < generics; ++i) generic_values.push_back(field.random_unit(rng));

  std::vector<std::optional<Integer>> values;
  for (const auto& f : q.f) {
    if (f.is_zero()) {
      values.emplace_back();
      continue;
    }
    Integer v = field.root(f.root());
    for (std::size_t i = 0; i < f.generic().size(); ++i)
      v = field.mul(v, field.power(generic_values[i], Integer(static_cast<long>(f.generic()[i]))));
    values.emplace_back(v);
  }

  std::vector<Permutation> out;
  for (const auto& e : entries_) {
    bool fixed = true;
    for (std::size_t i = 0; i < n_ && fixed; ++i) fixed = q.a1_coords[e.s[i]] == q.a1_coords[i];
    for (std::size_t g = 0; g < e.coefficients.size() && fixed; ++g) {
      const auto a = evaluate(field, values, e.coefficients[g]);
      const auto b = evaluate(field, values, e.pulled_coefficients[g]);
      fixed = a && b && *a == *b;
    }
    if (fixed) out.push_back(e.s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degen
