#pragma once

#include <vector>

#include "wcq/hopf.hpp"

namespace wcq {

// Projection onto the eps-free (classical) subalgebra: kills keys whose first
// entry is eps, sends the rest to their bar with sign (-1)^epsCount.
MComb phi(const MComb& u);

// Kernel basis at a truncation: the leading-eps keys themselves, plus the
// binomial combinations M_a + (-1)^{epsCount+1} M_{bar a} for keys that start
// positive but still contain an eps.
std::vector<MComb> kernelBasis(size_t maxLen, unsigned long maxEntry);

struct KernelReport {
  size_t spanDim = 0;
  size_t rank = 0;
  size_t kernelDim = 0;
  size_t basisCount = 0;
  bool allAnnihilated = false;
  bool pass() const { return kernelDim == basisCount && allAnnihilated; }
};

// Exact-rank check that the listed kernel basis spans the whole kernel of the
// projection restricted to the truncated span, and is annihilated by it.
KernelReport verifyKernelTruncation(size_t maxLen, unsigned long maxEntry);

}  // namespace wcq
