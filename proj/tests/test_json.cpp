#include <doctest.h>

#include "qawa/json_io.hpp"
#include "qawa/presets.hpp"
#include "qawa/random_elements.hpp"
#include "qawa/suites.hpp"

using namespace qawa;
using nlohmann::json;

TEST_CASE("scalar and permutation JSON") {
  CHECK(io::scalar_to_json(Scalar(-2, 3)) == json("-2/3"));
  CHECK(io::scalar_from_json(json("7")) == Scalar(7));
  CHECK_THROWS(io::scalar_from_json(json("1/0")));
  CHECK_THROWS(io::scalar_from_json(json(1.5)));
  Permutation w({2, 3, 1});
  CHECK(io::permutation_from_json(io::permutation_to_json(w)) == w);
  CHECK_THROWS(io::permutation_from_json(json::array({1, 1})));
}

TEST_CASE("algebra spec JSON round-trips and validates") {
  for (const auto& name : presets::names()) {
    auto alg = presets::by_name(name);
    json j = io::algebra_to_json(alg->data());
    AlgebraData back = io::algebra_from_json(j);
    CHECK(Algebra::validate(back).empty());
    auto reloaded = Algebra::load(back, name);
    CHECK(reloaded->dim() == alg->dim());
    for (int i = 0; i < alg->dim(); ++i)
      CHECK(reloaded->dual_basis(i) == alg->dual_basis(i));
  }
}

TEST_CASE("element JSON round-trips") {
  auto alg = presets::by_name("ext2");
  auto ctx = make_affine_context(alg, 3, Scalar(2, 3));
  ElementGen gen(211);
  for (int rep = 0; rep < 10; ++rep) {
    AffineElement x = gen.affine(ctx);
    CHECK(io::affine_from_json(ctx, io::affine_to_json(x)) == x);
    LaurentElement f = gen.laurent(alg, 3);
    CHECK(io::laurent_from_json(alg, 3, io::laurent_to_json(f)) == f);
  }
}

TEST_CASE("cyclotomic polynomial JSON") {
  auto alg = presets::by_name("ext2");
  CyclotomicPoly f;
  f.d = 2;
  f.coeffs = {alg->unit(), alg->basis_element(3)};
  json j = io::cyclotomic_poly_to_json(f);
  CyclotomicPoly back = io::cyclotomic_poly_from_json(alg, j);
  CHECK(back.d == 2);
  CHECK(back.coeffs == f.coeffs);
  CHECK_THROWS(io::cyclotomic_poly_from_json(alg, json{{"d", 2}, {"coeffs", json::array()}}));
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
  SuiteConfig cfg;
  cfg.algebra = presets::by_name("kc2");
  cfg.n = 2;
  cfg.z = Scalar(2, 3);
  cfg.seed = 42;
  cfg.random_count = 8;
  SuiteReport a = run_suite(cfg);
  SuiteReport b = run_suite(cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].suite == b.entries[i].suite);
    CHECK(a.entries[i].name == b.entries[i].name);
    CHECK(a.entries[i].indices == b.entries[i].indices);
    CHECK(a.entries[i].pass == b.entries[i].pass);
  }
  CHECK(a.all_pass());
}

TEST_CASE("relation report JSON shape") {
  auto ctx = make_affine_context(presets::by_name("trivial"), 2, Scalar(1));
  json j = io::relation_report_to_json(check_defining_relations(ctx));
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  for (const auto& entry : j) {
    CHECK(entry.contains("relation"));
    CHECK(entry.contains("indices"));
    CHECK(entry.at("status") == "pass");
    CHECK(entry.at("difference-term-count") == 0);
  }
}
