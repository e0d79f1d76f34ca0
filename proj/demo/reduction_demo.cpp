// Composes the Hamming [7,4] code with a random circulant gadget and compares
// delta_loc + 1 of the composed graph with the code's minimum distance.

#include <cstdio>

#include "lcdeg/lcdeg.hpp"

int main() {
  const auto a = lcdeg::BinaryMatrix::from_rows({"1000", "0100", "0010", "0001", "1101", "1011", "0111"});
  const std::size_t n = a.rows() - a.cols();
  const auto b = lcdeg::gadget_code_search(10, n + 3, 5000, 1);
  if (!b) {
    std::puts("no gadget found");
    return 1;
  }
  const auto run = lcdeg::run_reduction(a, *b, 0);
  const auto& pre = *run.preconditions;
  std::printf("composed graph: %zu vertices, gadget delta_loc %zu (needs > %zu), min degree %zu\n",
              run.instance->composed.order(), pre.gadget_delta_loc, pre.required_above, pre.composed_min_degree);
  if (!run.report) {
    std::puts("preconditions failed");
    return 1;
  }
  const auto& r = *run.report;
  std::printf("d_min = %zu, delta_loc + 1 = %zu, method %s, falsifier trials %llu, equal: %s\n", r.d_min,
              r.delta_loc_plus_1, std::string(lcdeg::to_string(r.method)).c_str(),
              static_cast<unsigned long long>(r.falsifier_trials), r.equal ? "yes" : "no");
  return r.equal ? 0 : 1;
}
