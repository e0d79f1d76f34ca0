#include <gtest/gtest.h>

#include "lcdeg/reduction.hpp"

using namespace lcdeg;

namespace {

// J - I on four vertices: (I; B) is the extended Hamming [8,4,4] code.
BinaryMatrix extended_hamming_b() { return BinaryMatrix::from_rows({"0111", "1011", "1101", "1110"}); }

bool edge_rule(const ReductionInstance& inst, Vertex a, Vertex b) {
  const auto& la = inst.labels[a];
  const auto& lb = inst.labels[b];
  // Code-graph edge: one endpoint is a column x in V1L, the other a row copy at y = u.
  auto code_edge = [&](const VertexLabel& col, const VertexLabel& row) {
    return col.part == Part::left_code && row.part == Part::gadget_copy && col.y == row.y &&
           inst.aprime.at(row.x, col.x);
  };
  auto gadget_edge = [&](const VertexLabel& p, const VertexLabel& q) {
    return p.part == Part::right_copy && q.part == Part::gadget_copy && p.x == q.x &&
           inst.gadget.has_edge(p.y, q.y);
  };
  return code_edge(la, lb) || code_edge(lb, la) || gadget_edge(la, lb) || gadget_edge(lb, la);
}

}  // namespace

TEST(CodeGraph, Examples) {
  EXPECT_EQ(code_graph(BinaryMatrix::from_rows({"1"})), complete_graph(2));
  const Graph m = code_graph(BinaryMatrix::identity(3));
  EXPECT_EQ(m.edge_count(), 3u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(m.degree(v), 1u);
  const Graph g = code_graph(BinaryMatrix::from_rows({"110", "011"}));
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(GadgetGraph, Examples) {
  EXPECT_EQ(delta_loc_bipartite(gadget_graph(BinaryMatrix::identity(3))).value, 1u);
  EXPECT_EQ(delta_loc_bipartite(gadget_graph(BinaryMatrix::from_rows({"11", "11"}))).value, 1u);
  EXPECT_EQ(delta_loc_bipartite(gadget_graph(BinaryMatrix::from_rows({"0"}))).value, 0u);
  EXPECT_EQ(delta_loc_bipartite(gadget_graph(extended_hamming_b())).value, 3u);
  const Graph rect = gadget_graph(BinaryMatrix::from_rows({"101", "011"}));
  EXPECT_EQ(rect.order(), 5u);
  EXPECT_EQ(rect.bipartition()->left.count(), 2u);
}

TEST(Compose, SingleEdgeExample) {
  const auto inst = compose(BinaryMatrix::from_rows({"1"}), gadget_graph(BinaryMatrix::from_rows({"1"})), 0);
  EXPECT_EQ(inst.v1l.count(), 1u);
  EXPECT_EQ(inst.v1r.count(), 1u);
  EXPECT_EQ(inst.v2.count(), 1u);
  EXPECT_EQ(inst.composed.edge_count(), 2u);
}

TEST(Compose, ZeroCodeLeavesV1LIsolated) {
  const auto inst = compose(BinaryMatrix(1, 1), gadget_graph(BinaryMatrix::from_rows({"1"})), 0);
  EXPECT_EQ(inst.composed.degree(0), 0u);
}

TEST(Compose, SetSizes) {
  const auto b = BinaryMatrix::from_rows({"110", "011", "101"});
  const auto inst = compose(BinaryMatrix::identity(2), gadget_graph(b), 0);
  EXPECT_EQ(inst.composed.order(), 14u);
  EXPECT_EQ(inst.v1l.count(), 2u);
  EXPECT_EQ(inst.v1r.count(), 6u);
  EXPECT_EQ(inst.v2.count(), 6u);
  EXPECT_THROW(compose(BinaryMatrix::identity(2), gadget_graph(b), 3), InputError);
  EXPECT_THROW(compose(BinaryMatrix::identity(2), cycle_graph(4), 0), InputError);
}

TEST(Compose, EdgeRuleExactly) {
  Rng rng(4);
  const auto b = gadget_code_search(6, 3, 2000, 2);
  ASSERT_TRUE(b.has_value());
  BinaryMatrix ap(3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) ap.set(r, c, rng.coin());
  const auto inst = compose(ap, gadget_graph(*b), 2);
  const auto n = inst.composed.order();
  EXPECT_EQ(n, 4u + 3u * 12u);
  EXPECT_TRUE(inst.composed.bipartition().has_value());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) EXPECT_EQ(inst.composed.has_edge(a, c), edge_rule(inst, a, c));
}

TEST(Compose, V1LSubsetsEncodeCodewords) {
  const auto ap = BinaryMatrix::from_rows({"1101", "1011", "0111"});
  const auto inst = compose(ap, gadget_graph(extended_hamming_b()), 0);
  for (std::uint64_t x = 1; x < 16; ++x) {
    VertexSet d(inst.composed.order());
    BitVector msg(4);
    for (std::size_t j = 0; j < 4; ++j)
      if ((x >> j) & 1) {
        d.set(j);
        msg.set(j);
      }
    EXPECT_EQ(closed_odd_size(inst.composed, d), msg.count() + gf2_mul(ap, msg).count());
  }
}

TEST(Preconditions, Examples) {
  const auto matching = compose(BinaryMatrix::from_rows({"111", "110", "011"}),
                                gadget_graph(BinaryMatrix::identity(3)), 0);
  const auto r = verify_preconditions(matching);
  EXPECT_EQ(r.gadget_delta_loc, 1u);
  EXPECT_FALSE(r.gadget_ok);

  const auto iso = compose(BinaryMatrix(1, 1), gadget_graph(BinaryMatrix::from_rows({"1"})), 0);
  EXPECT_EQ(verify_preconditions(iso).composed_min_degree, 0u);
  EXPECT_TRUE(verify_preconditions(iso).degree_ok);
}

TEST(Reduction, RepetitionCodeExact) {
  const auto a = BinaryMatrix::from_rows({"1", "1"});
  const auto run = run_reduction(a, extended_hamming_b(), 0);
  ASSERT_TRUE(run.preconditions.has_value());
  EXPECT_TRUE(run.preconditions->passed());
  ASSERT_TRUE(run.report.has_value());
  EXPECT_EQ(run.report->method, ReductionMethod::exact);
  EXPECT_EQ(run.report->d_min, 2u);
  EXPECT_EQ(run.report->delta_loc_plus_1, 2u);
  EXPECT_TRUE(run.report->equal);
}

TEST(Reduction, KernelShortCircuits) {
  const auto run = run_reduction(BinaryMatrix::from_rows({"11", "11", "00"}), extended_hamming_b(), 0);
  EXPECT_FALSE(run.instance.has_value());
  ASSERT_TRUE(run.report.has_value());
  EXPECT_EQ(run.report->method, ReductionMethod::short_circuit);
  EXPECT_EQ(run.report->d_min, 0u);
  EXPECT_TRUE(run.report->equal);
}

TEST(Reduction, ExactAndTheoremAssistedAgree) {
  const auto a = BinaryMatrix::from_rows({"10", "01", "11"});
  const auto form = systematic_form(a);
  const auto inst = compose(form.aprime, gadget_graph(extended_hamming_b()), 1);
  ASSERT_TRUE(verify_preconditions(inst).passed());
  ReductionOptions exact;
  const auto e = verify_reduction(inst, a, exact);
  ReductionOptions assisted;
  assisted.oneside_cap = 4;
  assisted.falsifier_trials = 30000;
  const auto t = verify_reduction(inst, a, assisted);
  EXPECT_EQ(e.method, ReductionMethod::exact);
  EXPECT_EQ(t.method, ReductionMethod::theorem_assisted);
  EXPECT_EQ(e.delta_loc_plus_1, t.delta_loc_plus_1);
  EXPECT_EQ(e.d_min, 2u);
  EXPECT_TRUE(e.equal);
  EXPECT_TRUE(t.equal);
  EXPECT_FALSE(t.falsifier_hit.has_value());
  EXPECT_EQ(t.falsifier_trials, 30000u);
}

TEST(Reduction, WitnessUpperBound) {
  const auto a = BinaryMatrix::from_rows({"100", "010", "001", "110", "011"});
  const auto form = systematic_form(a);
  const auto inst = compose(form.aprime, gadget_graph(extended_hamming_b()), 0);
  const auto dm = min_distance(BinaryMatrix::stack(BinaryMatrix::identity(3), form.aprime));
  VertexSet d(inst.composed.order());
  for (auto j : dm.message.indices()) d.set(j);
  EXPECT_EQ(closed_odd_size(inst.composed, d), dm.distance);
}

TEST(Reduction, PaleyGadgetIsNonBipartite) {
  const auto inst = compose_with_paley(BinaryMatrix::from_rows({"1"}), 5);
  EXPECT_FALSE(inst.bipartite_gadget);
  EXPECT_EQ(inst.composed.order(), 6u);
  EXPECT_FALSE(find_bipartition(inst.composed).has_value());
}
