// Exact local minimum degree of small Paley graphs against the sqrt(p) - 3/2 bound.

#include <cstdio>

#include "lcdeg/lcdeg.hpp"

int main() {
  std::printf("%4s %9s %10s %12s %12s  %s\n", "p", "delta_loc", "bound", "min|SuOdd|", "min|SuEven|",
              "witness");
  for (std::uint64_t p : {5, 13, 17}) {
    const auto ctx = lcdeg::paley_graph(p);
    const auto r = lcdeg::verify_paley_theorem(ctx, {30, 4});
    std::printf("%4llu %9zu %10.3f %12zu %12zu  %s\n", static_cast<unsigned long long>(p), *r.delta_loc,
                r.bound, *r.min_odd_size, *r.min_even_size, r.witness.to_string().c_str());
  }

  const auto ctx = lcdeg::paley_graph(13);
  const auto s = lcdeg::VertexSet::from_indices(13, {0, 1, 3});
  const auto cs = lcdeg::char_sum(ctx, s);
  std::printf("\nPal_13, S = %s: sum = %lld, |S u Odd(S)| = %zu, |S u Even(S)| = %zu, Weil rhs = %.3f\n",
              s.to_string().c_str(), static_cast<long long>(cs.sum), cs.odd_size, cs.even_size, cs.weil_rhs);
  return 0;
}
