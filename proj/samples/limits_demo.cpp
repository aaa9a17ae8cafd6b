// Spectral mean/variance and distance to the normal and Poisson limits
// along a few size ladders.
#include <cstdio>
#include <vector>

#include "lapcoef/lapcoef.hpp"

using namespace lapcoef;

int main() {
  const std::vector<std::size_t> ladder{25, 100, 400};
  for (Family f : {Family::cycle, Family::wheel, Family::complete}) {
    const auto rows = sweep(FamilySpec{f, ladder.front(), 0, std::nullopt}, ladder, 2);
    for (const auto& r : rows) {
      std::printf("%-9s n=%-4zu mu=%10.4f sigma2=%10.4f clt=%.4f llt=%.4f", r.family.c_str(), r.n, r.mu, r.sigma2,
                  r.clt_distance, r.llt_distance);
      if (r.poisson_distance) std::printf(" poisson=%.4f", *r.poisson_distance);
      std::printf("  %s\n", r.verdict.c_str());
    }
  }
}
