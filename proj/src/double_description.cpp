#include "degen/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace degen {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset operator&(const Bitset& o) const {
    Bitset r;
    r.words_.resize(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bitset zeros;
};

IntVector combine_rows(const std::vector<IntVector>& basis, const IntVector& coeffs, std::size_t dim) {
  IntVector out(dim);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t i = 0; i < dim; ++i)
      if (basis[j][i] != 0) mpz_addmul(out[i].get_mpz_t(), coeffs[j].get_mpz_t(), basis[j][i].get_mpz_t());
  }
  return out;
}

// Extreme rays of the pointed cone {w : A w >= 0}, A of full column rank r.
std::vector<IntVector> pointed_double_description(const std::vector<IntVector>& rows, std::size_t r) {
  const std::size_t m = rows.size();
  // initial simplicial cone from the first r independent rows in insertion order
  std::vector<std::size_t> chosen;
  std::vector<IntVector> chosen_rows;
  for (std::size_t i = 0; i < m && chosen.size() < r; ++i) {
    chosen_rows.push_back(rows[i]);
    if (rank(chosen_rows, r) == chosen_rows.size()) {
      chosen.push_back(i);
    } else {
      chosen_rows.pop_back();
    }
  }
  if (chosen.size() != r) throw std::logic_error("double description: constraint matrix is not of full rank");
  auto inv = inverse(RatMatrix::from_int_rows(chosen_rows));
  if (!inv) throw std::logic_error("double description: singular initial basis");

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < r; ++k) {
    Ray ray{primitive_integer(inv->column(k)), Bitset(m)};
    for (std::size_t j = 0; j < r; ++j)
      if (j != k) ray.zeros.set(chosen[j]);
    rays.push_back(std::move(ray));
  }
  std::vector<bool> is_chosen(m, false);
  for (auto i : chosen) is_chosen[i] = true;

  std::vector<Integer> values;
  for (std::size_t i = 0; i < m; ++i) {
    if (is_chosen[i]) continue;
    const IntVector& a = rows[i];
    values.assign(rays.size(), Integer(0));
    bool any_negative = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      values[k] = dot(a, rays[k].v);
      if (values[k] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (values[k] == 0) rays[k].zeros.set(i);
      continue;
    }
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] > 0) pos.push_back(k);
      if (values[k] < 0) neg.push_back(k);
    }
    std::vector<Ray> fresh;
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (r >= 2 && common.count() < r - 2) continue;
        if (r >= 3) {
          std::vector<IntVector> face_rows;
          for (auto idx : common.indices()) face_rows.push_back(rows[idx]);
          if (rank(face_rows, r) != r - 2) continue;
        }
        IntVector v(r);
        for (std::size_t c = 0; c < r; ++c) {
          v[c] = values[p] * rays[q].v[c];
          mpz_submul(v[c].get_mpz_t(), values[q].get_mpz_t(), rays[p].v[c].get_mpz_t());
        }
        common.set(i);
        fresh.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    }
    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + fresh.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] < 0) continue;
      if (values[k] == 0) rays[k].zeros.set(i);
      next.push_back(std::move(rays[k]));
    }
    for (auto& f : fresh) next.push_back(std::move(f));
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.v));
  return out;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ConeGenerators solve_homogeneous_system(std::size_t dim, const std::vector<IntVector>& inequalities,
                                        const std::vector<IntVector>& equations) {
  for (const auto& a : inequalities)
    if (a.size() != dim) throw std::invalid_argument("inequality has wrong dimension");
  for (const auto& e : equations)
    if (e.size() != dim) throw std::invalid_argument("equation has wrong dimension");

  // x = sum_j z_j B_j over a lattice basis B of the equation kernel
  std::vector<IntVector> basis;
  if (equations.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = kernel_basis(equations, dim);
  }
  const std::size_t k = basis.size();
  ConeGenerators out;
  if (k == 0) return out;

  std::vector<IntVector> reduced;
  for (const auto& a : inequalities) {
    IntVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, basis[j]);
    if (!is_zero(row)) reduced.push_back(primitive(std::move(row)));
  }

  for (const auto& l : kernel_basis(reduced, k)) out.lineality.push_back(primitive(combine_rows(basis, l, dim)));

  std::vector<IntVector> rowspace = hnf_rows(reduced, k);
  const std::size_t r = rowspace.size();
  if (r == 0) return out;

  std::vector<IntVector> pointed_rows;
  pointed_rows.reserve(reduced.size());
  for (const auto& a : reduced) {
    IntVector row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = dot(a, rowspace[j]);
    pointed_rows.push_back(primitive(std::move(row)));
  }
  std::sort(pointed_rows.begin(), pointed_rows.end(), lex_less);
  pointed_rows.erase(std::unique(pointed_rows.begin(), pointed_rows.end()), pointed_rows.end());

  for (const auto& w : pointed_double_description(pointed_rows, r)) {
    IntVector z = combine_rows(rowspace, w, k);
    out.rays.push_back(primitive(combine_rows(basis, z, dim)));
  }
  return out;
}

}  // namespace degen
