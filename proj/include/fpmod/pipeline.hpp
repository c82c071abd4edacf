#pragma once

#include "fpmod/simplicial.hpp"

#include <json.hpp>

#include <string>

namespace fpmod {

using Json = nlohmann::json;

// Ring specs:
//   {"type": "integers"} | {"type": "rationals"} | {"type": "primefield", "p": 7}
//   {"type": "poly", "coeff": {...}, "vars": ["x","y"], "order": "degrevlex"|"lex"}
//   {"type": "residue", "base": {...}, "ideal": ["6"]}
RingHandle ring_from_json(const Json& spec);

// Rows of element literals (strings, or plain integers). cols_hint settles the
// width of a matrix with no rows.
Mat mat_from_json(const RingHandle& r, const Json& rows, int cols_hint = -1);

Json mat_to_json(const Mat& m);
Json presentation_to_json(const Presentation& p);
Json morphism_to_json(const Morphism& phi);
Json decomposition_to_json(const Decomposition& d);

// Functor expressions used in pipeline steps:
//   Cokernel | Kernel | DefectOfHoms | HomR | Hom | Tensor
//   | LDerived(q, expr) | RDerived(q, expr) | Compose(expr, slot, expr)
//   | Ext(q) | Tor(q)
FunctorHandle parse_functor_expression(const std::string& text);

// {"facets": [[0,1,2], ...]}, or the bare facet list.
SimplicialComplex simplicial_from_json(const Json& doc);

// Runs a pipeline document: an ambient ring, named definitions (presentations,
// morphisms, matrices), a step list, and the names to emit. exit_code 0 when
// everything ran, 2 when a step surfaces an unsolvable division or lift as
// data, 1 on faults; faulting documents carry an "error" object (with a JSON
// pointer for schema violations, a step index for execution faults) instead of
// "outputs".
struct PipelineResult {
  int exit_code = 0;
  Json document;
};
PipelineResult run_pipeline(const Json& doc);

}  // namespace fpmod
