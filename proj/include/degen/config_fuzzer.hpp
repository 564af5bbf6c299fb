#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "degen/stabilizer.hpp"

namespace degen {

// DEGEN_SEED when set and numeric, otherwise fallback.
std::uint64_t fuzz_seed(std::uint64_t fallback = 20240917);

// A random stable configuration: random I_t, and on each component a mix of full shift
// orbits of size 1..4 (possibly interleaved into larger orbits), irregular point sets,
// repeated multiplicities and A¹ labels.
CycleConfiguration random_stable_configuration(std::size_t n, std::mt19937_64& rng);

// Another slot order obeying the block condition: records of each component shuffled.
std::vector<std::size_t> shuffled_slots(const CycleConfiguration& c, std::mt19937_64& rng);

struct FuzzSummary {
  std::size_t n = 0;
  std::size_t runs = 0;
  std::size_t passed = 0;
  std::vector<CycleConfiguration> failures;
};
// verify_comparison on `runs` random configurations; configurations are processed by `jobs`
// workers and reported in generation order.
FuzzSummary fuzz_comparison(std::size_t n, std::size_t runs, std::uint64_t seed, std::size_t jobs = 1);

}  // namespace degen
