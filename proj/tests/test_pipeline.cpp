#include <doctest.h>

#include "fpmod/pipeline.hpp"

using namespace fpmod;

namespace {

Json ext_doc() {
  return Json{
      {"ring", {{"type", "integers"}}},
      {"defs",
       {{"Z6", {{"gens", 1}, {"relations", {{"6"}}}}},
        {"Z", {{"gens", 1}}}}},
      {"steps",
       {{{"op", "functor_obj"}, {"functor", "Ext(1)"}, {"args", {"Z6", "Z"}}, {"bind", "E"}},
        {{"op", "canonical_decomposition"}, {"args", {"E"}}, {"bind", "ext1"}}}},
      {"outputs", {"ext1"}}};
}

}  // namespace

TEST_CASE("ring specs round trip through parse and print") {
  RingHandle z = ring_from_json(Json{{"type", "integers"}});
  CHECK(print_element(*z, parse_element(*z, "-7")) == "-7");

  RingHandle f7 = ring_from_json(Json{{"type", "primefield"}, {"p", 7}});
  CHECK(print_element(*f7, parse_element(*f7, "9")) == "2");

  RingHandle r = ring_from_json(Json{{"type", "poly"},
                                     {"coeff", {{"type", "rationals"}}},
                                     {"vars", {"x", "y"}}});
  Element e = parse_element(*r, "x*y - 2");
  CHECK(elements_equal(parse_element(*r, print_element(*r, e)), e));

  RingHandle z6 = ring_from_json(
      Json{{"type", "residue"}, {"base", {{"type", "integers"}}}, {"ideal", {"6"}}});
  CHECK(is_zero(parse_element(*z6, "12")));
}

TEST_CASE("matrix json keeps shape and entries") {
  RingHandle z = make_integers();
  Mat m = mat_from_json(z, Json::parse(R"([["1","-2"],["0","5"]])"));
  CHECK(m.rows == 2);
  CHECK(m.cols == 2);
  CHECK(mat_to_json(m) == Json::parse(R"([["1","-2"],["0","5"]])"));

  Mat empty = mat_from_json(z, Json::array(), 3);
  CHECK(empty.rows == 0);
  CHECK(empty.cols == 3);

  CHECK_THROWS(mat_from_json(z, Json::parse(R"([["1"],["2","3"]])")));
}

TEST_CASE("functor expressions cover the grammar") {
  RingHandle z = make_integers();
  Presentation z6 = make_presentation(z, 1, mat_from_ints(z, {{6}}));
  Presentation zz = free_presentation(z, 1);

  FunctorHandle ext1 = parse_functor_expression("Ext(1)");
  Decomposition d = canonical_decomposition(functor_obj(ext1, {slot_object(z6), slot_object(zz)}));
  CHECK(d == Decomposition{{mpz_class(6)}, 0});

  FunctorHandle tor1 = parse_functor_expression("LDerived(1, Tensor)");
  Presentation via_expr = functor_obj(tor1, {slot_object(z6), slot_object(z6)});
  Presentation direct = functor_obj(tor_functor(1), {slot_object(z6), slot_object(z6)});
  CHECK(presentations_equal(via_expr, direct));

  FunctorHandle hh = parse_functor_expression("Compose(Hom, 1, Tensor)");
  CHECK(functor_arity(*hh) == 3);

  CHECK(functor_arity(*parse_functor_expression(" RDerived( 2 , Hom ) ")) == 2);
  CHECK_THROWS(parse_functor_expression("Frobenius"));
  CHECK_THROWS(parse_functor_expression("Ext(1) junk"));
  CHECK_THROWS(parse_functor_expression("Compose(Hom, Tensor)"));
}

TEST_CASE("pipeline computes a first extension group") {
  PipelineResult res = run_pipeline(ext_doc());
  CHECK(res.exit_code == 0);
  CHECK(res.document["outputs"]["ext1"] == Json{{"factors", {6}}, {"rank", 0}});
}

TEST_CASE("pipeline computes a homomorphism group") {
  Json doc{
      {"ring", {{"type", "integers"}}},
      {"defs",
       {{"Z4", {{"gens", 1}, {"relations", {{"4"}}}}},
        {"Z6", {{"gens", 1}, {"relations", {{"6"}}}}}}},
      {"steps",
       {{{"op", "functor_obj"}, {"functor", "Hom"}, {"args", {"Z4", "Z6"}}, {"bind", "H"}},
        {{"op", "canonical_decomposition"}, {"args", {"H"}}, {"bind", "hom"}}}},
      {"outputs", {"hom"}}};
  PipelineResult res = run_pipeline(doc);
  CHECK(res.exit_code == 0);
  CHECK(res.document["outputs"]["hom"] == Json{{"factors", {2}}, {"rank", 0}});
}

TEST_CASE("empty steps give empty outputs") {
  Json doc{{"ring", {{"type", "integers"}}}};
  PipelineResult res = run_pipeline(doc);
  CHECK(res.exit_code == 0);
  CHECK(res.document["outputs"] == Json::object());
}

TEST_CASE("unsolvable division is data with exit code 2") {
  Json doc{{"ring", {{"type", "integers"}}},
           {"defs",
            {{"b", {{"entries", {{"1"}}}}},
             {"a", {{"entries", {{"2"}}}}}}},
           {"steps", {{{"op", "right_divide"}, {"args", {"b", "a"}}, {"bind", "x"}}}},
           {"outputs", {"x"}}};
  PipelineResult res = run_pipeline(doc);
  CHECK(res.exit_code == 2);
  CHECK(res.document["outputs"]["x"] == Json{{"unsolvable", true}});

  // Consuming the unsolvable value downstream is a fault.
  doc["steps"].push_back(Json{{"op", "theta_transpose"}, {"args", {"x"}}, {"bind", "y"}});
  PipelineResult fault = run_pipeline(doc);
  CHECK(fault.exit_code == 1);
  CHECK(fault.document["error"]["step"] == 1);
}

TEST_CASE("schema violations carry json pointers") {
  PipelineResult no_ring = run_pipeline(Json{{"steps", Json::array()}});
  CHECK(no_ring.exit_code == 1);
  CHECK(no_ring.document["error"]["pointer"] == "/ring");

  Json bad_op{{"ring", {{"type", "integers"}}},
              {"steps", {{{"op", "frobenius_twist"}}}}};
  PipelineResult res = run_pipeline(bad_op);
  CHECK(res.exit_code == 1);
  CHECK(res.document["error"]["pointer"] == "/steps/0/op");

  Json bad_arg{{"ring", {{"type", "integers"}}},
               {"steps", {{{"op", "theta_transpose"}, {"args", {"nope"}}}}}};
  CHECK(run_pipeline(bad_arg).document["error"]["pointer"] == "/steps/0/args/0");

  Json bad_ring{{"ring", {{"type", "quaternions"}}}};
  CHECK(run_pipeline(bad_ring).document["error"]["pointer"] == "/ring/type");
}

TEST_CASE("shape faults report the step index") {
  Json doc{{"ring", {{"type", "integers"}}},
           {"defs", {{"Z6", {{"gens", 1}, {"relations", {{"6"}}}}}}},
           {"steps",
            {{{"op", "functor_obj"}, {"functor", "Ext(1)"}, {"args", {"Z6"}}, {"bind", "E"}}}}};
  PipelineResult res = run_pipeline(doc);
  CHECK(res.exit_code == 1);
  CHECK(res.document["error"]["step"] == 0);
  CHECK(!res.document["error"].contains("pointer"));
}

TEST_CASE("matrix level ops work over the document ring") {
  Json doc{{"ring", {{"type", "integers"}}},
           {"defs",
            {{"a", {{"entries", Json::array({{"1", "2"}, {"3", "4"}})}}},
             {"m", {{"entries", Json::array({{"2", "0"}, {"0", "2"}})}}}}},
           {"steps",
            {{{"op", "mat_mul"}, {"args", {"a", "m"}}, {"bind", "am"}},
             {{"op", "decide_zero"}, {"args", {"am", "m"}}, {"bind", "dz"}},
             {{"op", "smith_normal_form"}, {"args", {"a"}}, {"bind", "snf"}}}},
           {"outputs", {"am", "dz", "snf"}}};
  PipelineResult res = run_pipeline(doc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.document["outputs"]["am"] == Json::parse(R"([["2","4"],["6","8"]])"));
  CHECK(res.document["outputs"]["dz"]["is_zero"] == true);
  CHECK(res.document["outputs"]["snf"]["d"] == Json::parse(R"([["1","0"],["0","2"]])"));
}

TEST_CASE("long exact sequence serializes with connecting tags") {
  Json doc{
      {"ring", {{"type", "integers"}}},
      {"defs",
       {{"A", {{"gens", 1}, {"relations", {{"2"}}}}},
        {"B", {{"gens", 1}, {"relations", {{"4"}}}}},
        {"C", {{"gens", 1}, {"relations", {{"2"}}}}},
        {"L", {{"gens", 1}, {"relations", {{"2"}}}}},
        {"i", {{"source", "A"}, {"target", "B"}, {"matrix", {{"2"}}}}},
        {"p", {{"source", "B"}, {"target", "C"}, {"matrix", {{"1"}}}}}}},
      {"steps",
       {{{"op", "long_exact_homology_seq"},
         {"functor", "Tensor"},
         {"fix", {nullptr, "L"}},
         {"args", {"i", "p"}},
         {"degree", 1},
         {"bind", "les"}},
        {{"op", "verify_exactness"}, {"args", {"les"}}, {"bind", "audit"}}}},
      {"outputs", {"les", "audit"}}};
  PipelineResult res = run_pipeline(doc);
  REQUIRE(res.exit_code == 0);

  const Json& les = res.document["outputs"]["les"];
  REQUIRE(les.is_array());
  REQUIRE(les.size() == 6);
  for (const Json& entry : les) {
    CHECK(entry.contains("module"));
    CHECK(entry.contains("map"));
    CHECK(entry.contains("is_connecting"));
  }
  // One connecting map at this window size: Tor_1 of the tail into degree 0.
  for (size_t k = 0; k < les.size(); ++k)
    CHECK(les[k]["is_connecting"] == (k == 2));
  CHECK(les.back()["map"].is_null());
  // Every term of the sequence is an order-two group.
  for (const Json& entry : les)
    CHECK(entry["module"]["gens"] == 1);

  CHECK(res.document["outputs"]["audit"]["exact"] == true);
}

TEST_CASE("simplicial steps run over the document ring") {
  Json doc{{"ring", {{"type", "integers"}}},
           {"steps",
            {{{"op", "simplicial_homology"},
              {"facets", {{0, 1}, {1, 2}, {0, 2}}},
              {"degree", 1},
              {"bind", "H1"}},
             {{"op", "canonical_decomposition"}, {"args", {"H1"}}, {"bind", "d"}},
             {{"op", "simplicial_chain_complex"},
              {"facets", {{0, 1, 2}}},
              {"bind", "chain"}},
             {{"op", "verify_exactness"}, {"args", {"chain"}}, {"bind", "audit"}}}},
           {"outputs", {"d", "audit"}}};
  PipelineResult res = run_pipeline(doc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.document["outputs"]["d"] == Json{{"factors", Json::array()}, {"rank", 1}});
  // The solid triangle has trivial reduced homology but H_0 = Z: not exact at
  // the augmentation end.
  CHECK(res.document["outputs"]["audit"]["exact"] == false);
}

TEST_CASE("resolution and slicing steps compose") {
  Json doc{{"ring", {{"type", "integers"}}},
           {"defs", {{"M", {{"gens", 2}, {"relations", Json::array({{"4", "0"}, {"0", "6"}})}}}}},
           {"steps",
            {{{"op", "resolution_of_module"}, {"args", {"M"}}, {"length", 2}, {"bind", "res"}},
             {{"op", "obj_slice"}, {"args", {"res"}}, {"position", 1}, {"bind", "F0"}},
             {{"op", "mor_slice"}, {"args", {"res"}}, {"position", 1}, {"bind", "d1"}},
             {{"op", "morphism_is_valid"}, {"args", {"d1"}}, {"bind", "ok"}}}},
           {"outputs", {"F0", "ok"}}};
  PipelineResult res = run_pipeline(doc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.document["outputs"]["F0"]["gens"] == 2);
  CHECK(res.document["outputs"]["ok"] == true);
}

TEST_CASE("poly rings flow through the pipeline") {
  Json doc{{"ring",
            {{"type", "poly"}, {"coeff", {{"type", "rationals"}}}, {"vars", {"x", "y"}}}},
           {"defs", {{"K", {{"gens", 1}, {"relations", {{"x"}, {"y"}}}}}}},
           {"steps",
            {{{"op", "functor_obj"}, {"functor", "RDerived(2, HomR)"}, {"args", {"K"}}, {"bind", "E2"}},
             {{"op", "better_generators"}, {"args", {"E2"}}, {"bind", "E2r"}}}},
           {"outputs", {"E2r"}}};
  PipelineResult res = run_pipeline(doc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.document["outputs"]["E2r"]["gens"] == 1);
}
