#include "degen/config_fuzzer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

namespace degen {
namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct ComponentBuilder {
  std::size_t component;
  std::vector<CyclePoint> points;
  std::set<std::pair<UnitValue, std::string>> used;

  bool add(const UnitValue& pos, const std::string& a1, std::size_t mult) {
    if (!used.insert({pos, a1}).second) return false;
    points.push_back(CyclePoint{component, pos, a1, mult});
    return true;
  }
};

}  // namespace

std::uint64_t fuzz_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("DEGEN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

CycleConfiguration random_stable_configuration(std::size_t n, std::mt19937_64& rng) {
  static const char* const labels[] = {"a", "b", "c"};
  CycleConfiguration c;
  c.n = n;
  for (std::size_t i = 1; i <= n + 1; ++i)
    if (uniform(rng, 0, 9) < 4) c.I_t.push_back(i);
  const auto degrees = fiber_degrees(n, c.I_t);
  std::size_t next_generic = 0;
  for (std::size_t l = 0; l < degrees.size(); ++l) {
    ComponentBuilder b{l, {}, {}};
    std::vector<std::size_t> generics_here;
    std::size_t remaining = degrees[l];
    while (remaining > 0) {
      const std::size_t size = uniform(rng, 1, std::min<std::size_t>(4, remaining));
      const std::size_t mult = uniform(rng, 1, remaining / size);
      std::size_t generic;
      if (!generics_here.empty() && uniform(rng, 0, 2) == 0) {
        generic = generics_here[uniform(rng, 0, generics_here.size() - 1)];
      } else {
        generic = next_generic++;
        generics_here.push_back(generic);
      }
      const std::string a1 = labels[uniform(rng, 0, 2)];
      const Rational base = make_rational(static_cast<long>(uniform(rng, 0, 11)), 12);
      const bool irregular = size > 1 && uniform(rng, 0, 4) == 0;
      std::vector<UnitValue> positions;
      for (std::size_t k = 0; k < size; ++k) {
        Rational root = irregular ? make_rational(static_cast<long>(uniform(rng, 0, 11)), 12)
                                  : base + make_rational(static_cast<long>(k), static_cast<long>(size));
        positions.push_back(UnitValue::generator(generic) * UnitValue::root_of_unity(root));
      }
      std::set<std::pair<UnitValue, std::string>> fresh;
      bool ok = true;
      for (const auto& p : positions) ok = ok && !b.used.count({p, a1}) && fresh.insert({p, a1}).second;
      if (!ok) continue;
      for (const auto& p : positions) b.add(p, a1, mult);
      remaining -= size * mult;
    }
    for (auto& p : b.points) c.points.push_back(std::move(p));
  }
  std::shuffle(c.points.begin(), c.points.end(), rng);
  return c;
}

std::vector<std::size_t> shuffled_slots(const CycleConfiguration& c, std::mt19937_64& rng) {
  const std::size_t components = fiber_degrees(c.n, c.I_t).size();
  std::vector<std::size_t> slots;
  for (std::size_t l = 0; l < components; ++l) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < c.points.size(); ++i)
      if (c.points[i].component == l)
        for (std::size_t m = 0; m < c.points[i].multiplicity; ++m) block.push_back(i);
    std::shuffle(block.begin(), block.end(), rng);
    slots.insert(slots.end(), block.begin(), block.end());
  }
  return slots;
}

FuzzSummary fuzz_comparison(std::size_t n, std::size_t runs, std::uint64_t seed, std::size_t jobs) {
  std::mt19937_64 rng(seed);
  std::vector<CycleConfiguration> configs;
  for (std::size_t i = 0; i < runs; ++i) configs.push_back(random_stable_configuration(n, rng));
  std::vector<char> ok(runs);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < std::max<std::size_t>(1, jobs); ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next++) < runs;) {
          try {
            ok[i] = verify_comparison(configs[i]).pass;
          } catch (const std::exception&) {
            ok[i] = false;
          }
        }
      });
  }
  FuzzSummary s{n, runs, 0, {}};
  for (std::size_t i = 0; i < runs; ++i) {
    if (ok[i])
      ++s.passed;
    else
      s.failures.push_back(configs[i]);
  }
  return s;
}

}  // namespace degen
