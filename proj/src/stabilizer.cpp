#include "degen/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace degen {
namespace {

bool valid_I_t(std::size_t n, const std::vector<std::size_t>& I_t) {
  for (std::size_t k = 0; k < I_t.size(); ++k) {
    if (I_t[k] < 1 || I_t[k] > n + 1) return false;
    if (k > 0 && I_t[k] <= I_t[k - 1]) return false;
  }
  return true;
}

bool contains_index(const std::vector<std::size_t>& I_t, std::size_t i) {
  return std::binary_search(I_t.begin(), I_t.end(), i);
}

void require_stable(const CycleConfiguration& c) {
  if (!check_stability(c)) throw UnstableConfiguration("configuration is not stable");
}

std::vector<std::size_t> records_on(const CycleConfiguration& c, std::size_t component) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (c.points[i].component == component) out.push_back(i);
  return out;
}

using RecordKey = std::tuple<std::vector<long>, Rational, std::string, std::size_t>;

RecordKey key_of(const CyclePoint& p, const Rational& shift = 0) {
  UnitValue moved = p.position * UnitValue::root_of_unity(shift);
  return {moved.generic(), moved.root(), p.a1, p.multiplicity};
}

// The shifts ρ that permute the records of one component.
std::vector<Rational> valid_shifts(const CycleConfiguration& c, std::size_t component) {
  const auto recs = records_on(c, component);
  if (recs.empty()) return {Rational(0)};
  std::set<RecordKey> original;
  for (auto i : recs) original.insert(key_of(c.points[i]));
  const CyclePoint& base = c.points[recs.front()];
  std::set<Rational> shifts;
  for (auto i : recs) {
    const CyclePoint& q = c.points[i];
    if (q.position.generic() != base.position.generic() || q.a1 != base.a1 || q.multiplicity != base.multiplicity)
      continue;
    Rational rho = floor_fraction(q.position.root() - base.position.root());
    std::set<RecordKey> moved;
    for (auto k : recs) moved.insert(key_of(c.points[k], rho));
    if (moved == original) shifts.insert(rho);
  }
  return {shifts.begin(), shifts.end()};
}

// R(a, b) for 1-based slots: f_a .. f_{b-1} for a < b, 1 for a = b, the inverse of R(b, a)
// for a > b when that is a unit, undefined otherwise.
class RatioTable {
 public:
  explicit RatioTable(const QuotientPoint& q) : n_(q.n), table_((q.n + 1) * (q.n + 1)) {
    for (std::size_t a = 1; a <= n_; ++a) {
      UnitValue acc = UnitValue::one();
      at(a, a) = acc;
      for (std::size_t b = a + 1; b <= n_; ++b) {
        acc = acc * q.f[b - 1];
        at(a, b) = acc;
        if (!acc.is_zero()) at(b, a) = acc.inverse();
      }
    }
  }
  const std::optional<UnitValue>& operator()(std::size_t a, std::size_t b) const { return table_[a * (n_ + 1) + b]; }
  bool equals(std::size_t a, std::size_t b, const UnitValue& v) const {
    const auto& r = (*this)(a, b);
    return r && *r == v;
  }

 private:
  std::optional<UnitValue>& at(std::size_t a, std::size_t b) { return table_[a * (n_ + 1) + b]; }
  std::size_t n_;
  std::vector<std::optional<UnitValue>> table_;
};

class FixedPointSearch {
 public:
  FixedPointSearch(const QuotientPoint& q, const RatioTable& r) : q_(q), r_(r), s_(q.n + 1), used_(q.n + 1) {}

  // All s with s(1) = first that satisfy criteria (a)-(d).
  std::vector<Permutation> run(std::size_t first) {
    out_.clear();
    if (!q_.f[0].is_zero() && !r_.equals(1, first, UnitValue::one())) return out_;
    if (q_.a1_coords[first - 1] != q_.a1_coords[0]) return out_;
    s_[1] = first;
    used_[first] = true;
    extend(1);
    used_[first] = false;
    return out_;
  }

 private:
  void extend(std::size_t i) {
    const std::size_t n = q_.n;
    if (i == n) {
      if (!q_.f[n].is_zero() && !r_.equals(s_[n], n, UnitValue::one())) return;
      Permutation p(n);
      for (std::size_t k = 1; k <= n; ++k) p[k - 1] = s_[k] - 1;
      out_.push_back(std::move(p));
      return;
    }
    for (std::size_t next = 1; next <= n; ++next) {
      if (used_[next] || q_.a1_coords[next - 1] != q_.a1_coords[i]) continue;
      if (!r_.equals(s_[i], next, q_.f[i])) continue;
      s_[i + 1] = next;
      used_[next] = true;
      extend(i + 1);
      used_[next] = false;
    }
  }

  const QuotientPoint& q_;
  const RatioTable& r_;
  std::vector<std::size_t> s_;
  std::vector<bool> used_;
  std::vector<Permutation> out_;
};

std::size_t permutation_order(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size());
  std::size_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

// Invariant factors of an abelian group from the orders of its elements: for each prime p,
// log_p #{x : x^{p^k} = 1} - log_p #{x : x^{p^{k-1}} = 1} counts cyclic p-factors of order >= p^k.
FiniteAbelianGroup abelian_structure(const std::vector<std::size_t>& element_orders) {
  std::size_t total = element_orders.size();
  std::vector<Integer> cyclic;
  std::size_t m = total;
  for (std::size_t p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    std::vector<std::size_t> logs{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (auto o : element_orders)
        if (pk % o == 0) ++count;
      std::size_t lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    // at_least[k] = number of factors of order >= p^k
    for (std::size_t k = 1; k < logs.size(); ++k) {
      std::size_t at_least = logs[k] - logs[k - 1];
      std::size_t next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      Integer pk = 1;
      for (std::size_t e = 0; e < k; ++e) pk *= static_cast<unsigned long>(p);
      for (std::size_t c = next; c < at_least; ++c) cyclic.push_back(pk);
    }
  }
  return FiniteAbelianGroup::from_cyclic_orders(cyclic);
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  FiniteAbelianGroup g;
  if (orders.empty()) return g;
  RatVector diag;
  for (const auto& o : orders) {
    if (o <= 0) throw std::invalid_argument("cyclic orders must be positive");
    diag.push_back(Rational(o));
  }
  for (const auto& d : elementary_divisors(RatMatrix::diagonal(diag)))
    if (d > 1) g.factors_.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " x Z/" : "Z/") + factors_[i].get_str();
  return out;
}

std::vector<std::size_t> fiber_degrees(std::size_t n, const std::vector<std::size_t>& I_t) {
  if (!valid_I_t(n, I_t)) throw std::invalid_argument("I_t must be a strictly increasing subset of 1..n+1");
  if (I_t.empty()) return {n};
  std::vector<std::size_t> out{I_t.front() - 1};
  for (std::size_t l = 0; l < I_t.size(); ++l) out.push_back((l + 1 < I_t.size() ? I_t[l + 1] : n + 1) - I_t[l]);
  return out;
}

bool check_stability(const CycleConfiguration& c) {
  if (c.n < 1 || !valid_I_t(c.n, c.I_t)) return false;
  const auto degrees = fiber_degrees(c.n, c.I_t);
  std::vector<std::size_t> totals(degrees.size());
  std::set<std::tuple<std::size_t, UnitValue, std::string>> seen;
  for (const auto& p : c.points) {
    if (p.component >= degrees.size() || p.position.is_zero() || p.multiplicity == 0) return false;
    if (!seen.insert({p.component, p.position, p.a1}).second) return false;
    totals[p.component] += p.multiplicity;
  }
  return totals == degrees;
}

std::size_t component_shift_order(const CycleConfiguration& c, std::size_t component) {
  return valid_shifts(c, component).size();
}

FiniteAbelianGroup torus_stabilizer(const CycleConfiguration& c) {
  require_stable(c);
  std::vector<Integer> orders;
  for (std::size_t l = 1; l < c.I_t.size(); ++l)
    orders.push_back(static_cast<unsigned long>(component_shift_order(c, l)));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

std::vector<std::size_t> canonical_slots(const CycleConfiguration& c) {
  require_stable(c);
  const std::size_t components = fiber_degrees(c.n, c.I_t).size();
  std::vector<std::size_t> slots;
  for (std::size_t l = 0; l < components; ++l) {
    auto recs = records_on(c, l);
    const std::size_t order = component_shift_order(c, l);
    std::sort(recs.begin(), recs.end(), [&](std::size_t a, std::size_t b) {
      const auto& pa = c.points[a];
      const auto& pb = c.points[b];
      if (pa.multiplicity != pb.multiplicity) return pa.multiplicity > pb.multiplicity;
      return key_of(pa) < key_of(pb);
    });
    std::map<RecordKey, std::size_t> by_key;
    for (auto i : recs) by_key[key_of(c.points[i])] = i;
    std::set<std::size_t> placed;
    for (auto base : recs) {
      if (placed.count(base)) continue;
      for (std::size_t k = 0; k < order; ++k) {
        const std::size_t rec = by_key.at(key_of(c.points[base], make_rational(static_cast<long>(k), static_cast<long>(order))));
        placed.insert(rec);
        for (std::size_t m = 0; m < c.points[rec].multiplicity; ++m) slots.push_back(rec);
      }
    }
  }
  return slots;
}

QuotientPoint quotient_point_from_slots(const CycleConfiguration& c, const std::vector<std::size_t>& slots) {
  require_stable(c);
  const std::size_t n = c.n;
  if (slots.size() != n) throw std::invalid_argument("slot list must have n entries");
  std::vector<std::size_t> count(c.points.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (slots[k] >= c.points.size()) throw std::invalid_argument("slot refers to a missing record");
    ++count[slots[k]];
    if (k > 0 && c.points[slots[k]].component < c.points[slots[k - 1]].component)
      throw std::invalid_argument("slots must follow the chain order of components");
  }
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (count[i] != c.points[i].multiplicity) throw std::invalid_argument("slots must repeat each record by its multiplicity");

  std::size_t fresh = 0;
  for (const auto& p : c.points) fresh = std::max(fresh, p.position.generic().size());

  QuotientPoint q;
  q.n = n;
  q.slot_record = slots;
  for (auto s : slots) {
    q.a1_coords.push_back(c.points[s].a1);
    q.slot_component.push_back(c.points[s].component);
  }
  q.f.push_back(contains_index(c.I_t, 1) ? UnitValue::zero() : UnitValue::generator(fresh));
  for (std::size_t k = 1; k < n; ++k) {
    const auto& a = c.points[slots[k - 1]];
    const auto& b = c.points[slots[k]];
    q.f.push_back(a.component == b.component ? a.position / b.position : UnitValue::zero());
  }
  q.f.push_back(contains_index(c.I_t, n + 1) ? UnitValue::zero()
                                             : c.points[slots[n - 1]].position * UnitValue::generator(fresh + 1));
  return q;
}

QuotientPoint project_to_quotient(const CycleConfiguration& c) {
  return quotient_point_from_slots(c, canonical_slots(c));
}

SymStabilizers sym_stabilizers(const QuotientPoint& q, std::size_t bound, std::size_t jobs) {
  const std::size_t n = q.n;
  if (n > bound) throw BruteForceBoundExceeded("n exceeds the brute-force bound");
  if (q.f.size() != n + 1 || q.a1_coords.size() != n) throw std::invalid_argument("malformed quotient point");
  const RatioTable r(q);

  SymStabilizers out;
  std::vector<std::vector<Permutation>> parts(n + 1);
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        FixedPointSearch search(q, r);
        for (std::size_t first = 1 + w; first <= n; first += jobs) parts[first] = search.run(first);
      });
  }
  for (auto& part : parts) out.stab.insert(out.stab.end(), part.begin(), part.end());
  std::sort(out.stab.begin(), out.stab.end());

  for (const auto& s : out.stab) {
    bool trivial_angle = true;
    for (std::size_t i = 0; i < n && trivial_angle; ++i)
      if (s[i] != i) trivial_angle = r.equals(i + 1, s[i] + 1, UnitValue::one());
    if (trivial_angle) out.stab0.push_back(s);
  }

  // Orbits of stab0.
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of[i] != n) continue;
    std::vector<std::size_t> block;
    for (const auto& h : out.stab0)
      if (block_of[h[i]] == n) {
        block_of[h[i]] = out.young_blocks.size();
        block.push_back(h[i]);
      }
    std::sort(block.begin(), block.end());
    out.young_blocks.push_back(std::move(block));
  }
  Integer young_order = 1;
  for (const auto& b : out.young_blocks)
    for (std::size_t k = 2; k <= b.size(); ++k) young_order *= static_cast<unsigned long>(k);
  out.stab0_is_young = young_order == static_cast<unsigned long>(out.stab0.size());

  // stab0 is normal when every s permutes its orbits; the quotient then acts on the blocks.
  std::set<std::vector<std::size_t>> induced;
  out.stab0_is_normal = true;
  for (const auto& s : out.stab) {
    std::vector<std::size_t> image(out.young_blocks.size());
    for (std::size_t b = 0; b < out.young_blocks.size(); ++b) {
      const auto& block = out.young_blocks[b];
      image[b] = block_of[s[block.front()]];
      for (auto i : block)
        if (block_of[s[i]] != image[b]) out.stab0_is_normal = false;
    }
    induced.insert(std::move(image));
  }
  if (!out.stab0_is_young || !out.stab0_is_normal)
    throw QuotientStructureError("trivial-angle stabilizer is not a normal Young subgroup");
  if (induced.size() * out.stab0.size() != out.stab.size())
    throw QuotientStructureError("cosets of the trivial-angle stabilizer do not match block permutations");

  std::vector<std::vector<std::size_t>> elems(induced.begin(), induced.end());
  auto mul = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (mul(elems[i], elems[j]) != mul(elems[j], elems[i])) throw QuotientStructureError("stab / stab0 is not abelian");
  std::vector<std::size_t> orders;
  for (const auto& e : elems) orders.push_back(permutation_order(e));
  out.quotient = abelian_structure(orders);
  return out;
}

ComparisonReport verify_comparison(const CycleConfiguration& c, std::size_t bound, std::size_t jobs) {
  ComparisonReport rep;
  rep.torus = torus_stabilizer(c);
  const QuotientPoint q = project_to_quotient(c);
  rep.sym = sym_stabilizers(q, bound, jobs);
  rep.blocks_preserved = true;
  for (const auto& s : rep.sym.stab)
    for (std::size_t i = 0; i < c.n; ++i)
      if (q.slot_component[s[i]] != q.slot_component[i]) rep.blocks_preserved = false;
  rep.pass = rep.blocks_preserved && rep.torus == rep.sym.quotient;
  return rep;
}

std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& h : generators) {
        Permutation p = compose(h, g);
        if (group.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

Permutation parse_cycles(const std::string& text, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<bool> moved(n);
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const std::size_t end = text.find(')', pos);
    if (end == std::string::npos) throw std::invalid_argument("unbalanced cycle notation");
    std::istringstream in(text.substr(pos + 1, end - pos - 1));
    std::vector<std::size_t> cycle;
    for (std::size_t x; in >> x;) {
      if (x < 1 || x > n || moved[x - 1]) throw std::invalid_argument("bad point in cycle notation");
      moved[x - 1] = true;
      cycle.push_back(x - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    pos = end + 1;
  }
  return p;
}

std::string cycle_string(const Permutation& p) {
  std::vector<bool> seen(p.size());
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += (j == i ? "" : " ") + std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace degen
