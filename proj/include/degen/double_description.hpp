#pragma once

#include <vector>

#include "degen/linalg.hpp"

namespace degen {

struct ConeGenerators {
  std::vector<IntVector> rays;       // primitive; extreme rays of a pointed complement of the lineality
  std::vector<IntVector> lineality;  // saturated lattice basis
};

// Generators of {x in Q^dim : <a,x> >= 0 for a in inequalities, <e,x> = 0 for e in equations}.
// Equations are eliminated by passing to a lattice basis of their kernel, the lineality
// space is split off, and the double description method runs on the pointed remainder
// with rows inserted in lexicographic order.
ConeGenerators solve_homogeneous_system(std::size_t dim, const std::vector<IntVector>& inequalities,
                                        const std::vector<IntVector>& equations);

}  // namespace degen
