// Copyright 2026 The lcdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON views of the report types (nlohmann/json). Vertex sets serialise as
// sorted index arrays, bit vectors over messages as "0101" strings.

#include <string>

#include "json.hpp"
#include "lcdeg/codes.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/graph_io.hpp"
#include "lcdeg/lll_bounds.hpp"
#include "lcdeg/locmindeg.hpp"
#include "lcdeg/paley.hpp"
#include "lcdeg/reduction.hpp"

namespace lcdeg {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return Json(s.indices()); }

inline Json to_json(const DeltaLocResult& r) {
  return Json{{"delta_loc", r.value},
              {"witness", to_json(r.witness)},
              {"witness_size", r.value + 1},
              {"sets_examined", r.sets_examined},
              {"method", std::string(to_string(r.method))}};
}

inline Json to_json(const OrbitReport& r) {
  return Json{{"orbit_size", r.orbit_size},
              {"min_degree_over_orbit", r.min_degree_over_orbit},
              {"generator_sequence", r.generator_sequence},
              {"truncated", r.truncated}};
}

inline Json to_json(const CharSumReport& r) {
  return Json{{"s", to_json(r.s)},       {"sum", r.sum},
              {"odd_size", r.odd_size},   {"even_size", r.even_size},
              {"weil_rhs", r.weil_rhs}};
}

inline Json to_json(const CheckSummary& c) {
  Json j{{"checked", c.checked}, {"passed", c.passed()}};
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  return j;
}

inline Json to_json(const PaleyTheoremReport& r) {
  Json j{{"p", r.p}, {"mode", std::string(to_string(r.mode))}, {"bound", r.bound},
         {"lemma_bound", r.lemma_bound}};
  j["delta_loc"] = r.delta_loc ? Json(*r.delta_loc) : Json(nullptr);
  j["witness_set"] = r.witness.size() ? to_json(r.witness) : Json::array();
  j["min_odd_size"] = r.min_odd_size ? Json(*r.min_odd_size) : Json(nullptr);
  j["min_even_size"] = r.min_even_size ? Json(*r.min_even_size) : Json(nullptr);
  j["holds"] = r.holds;
  j["lemma_holds"] = r.lemma_holds;
  j["sets_examined"] = r.sets_examined;
  if (r.mode == PaleyTheoremReport::Mode::not_falsified) j["falsifier_trials"] = r.falsifier_trials;
  return j;
}

inline Json to_json(const BinaryMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_bit_string());
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

/// {rows, cols, kernel_dim, min_distance, witness_message}
inline Json code_report(const BinaryMatrix& a, const MinDistance& d) {
  return Json{{"rows", a.rows()},
              {"cols", a.cols()},
              {"kernel_dim", kernel_dim(a)},
              {"min_distance", d.distance},
              {"witness_message", d.message.to_bit_string()}};
}

inline Json to_json(const PreconditionReport& p) {
  return Json{{"gadget_delta_loc", p.gadget_delta_loc},
              {"required_above", p.required_above},
              {"gadget_ok", p.gadget_ok},
              {"composed_min_degree", p.composed_min_degree},
              {"degree_ok", p.degree_ok},
              {"passed", p.passed()}};
}

inline Json to_json(const ReductionReport& r) {
  Json j{{"delta_loc_plus_1", r.delta_loc_plus_1},
         {"d_min", r.d_min},
         {"d_min_message", r.d_min_message.to_bit_string()},
         {"equal", r.equal},
         {"method", std::string(to_string(r.method))}};
  if (r.method != ReductionMethod::short_circuit) {
    j["witness"] = to_json(r.witness);
    j["sets_examined"] = r.sets_examined;
  }
  if (r.method == ReductionMethod::theorem_assisted) {
    j["v1l_minimum"] = *r.v1l_minimum;
    j["falsifier_trials"] = r.falsifier_trials;
    j["falsifier_hit"] = r.falsifier_hit ? to_json(*r.falsifier_hit) : Json(nullptr);
  }
  return j;
}

/// Bundle manifest {k, n, u, vertex index maps}.
inline Json manifest(const ReductionInstance& inst) {
  Json labels = Json::array();
  for (std::size_t v = 0; v < inst.labels.size(); ++v) {
    const auto& l = inst.labels[v];
    labels.push_back(Json{{"vertex", v}, {"part", std::string(to_string(l.part))}, {"x", l.x}, {"y", l.y}});
  }
  return Json{{"k", inst.k},
              {"n", inst.n},
              {"u", inst.u},
              {"bipartite_gadget", inst.bipartite_gadget},
              {"order", inst.composed.order()},
              {"V1L", to_json(inst.v1l)},
              {"V1R", to_json(inst.v1r)},
              {"V2", to_json(inst.v2)},
              {"vertex_labels", labels}};
}

inline Json to_json(const EntropyCondition& c) {
  return Json{{"c", c.c}, {"worst_d", c.worst_d}, {"margin", c.margin}};
}

inline Json to_json(const EmpiricalProfile& p) {
  Json hist = Json::object();
  for (auto [value, count] : p.histogram) hist[std::to_string(value)] = count;
  Json j{{"kind", std::string(to_string(p.kind))},
         {"size", p.size},
         {"order", p.order},
         {"samples", p.samples},
         {"histogram", hist},
         {"c", p.c},
         {"exceeding", p.exceeding},
         {"fraction_exceeding", p.fraction_exceeding()},
         {"min_degree_respected", p.min_degree_respected}};
  j["oracles_agree"] = p.oracles_agree ? Json(*p.oracles_agree) : Json(nullptr);
  return j;
}

}  // namespace lcdeg
