#include "util.hpp"

#include <filesystem>
#include <fstream>

#include "gd/serialize.hpp"
#include "gd/verify.hpp"

using namespace gdt;

TEST_CASE("theorem names round trip") {
  for (TheoremId t : all_theorems()) {
    const auto back = theorem_from_string(to_string(t));
    REQUIRE(back);
    CHECK(*back == t);
  }
  CHECK_FALSE(theorem_from_string("nope"));
  CHECK(parse_theorems("label,both").size() == 2);
  CHECK(parse_theorems("").empty());
  CHECK_THROWS_AS(parse_theorems("label,nope"), Error);
}

TEST_CASE("verify rejects the wrong instance kind") {
  const Instance g = std::make_shared<const Groupoid>(cyclic_group(2));
  CHECK_THROWS_AS(verify(TheoremId::label, g), Error);
}

TEST_CASE("every theorem runs on its own suite instance") {
  for (TheoremId t : all_theorems()) {
    const Instance inst = suite_instance(t, 42, 0);
    CHECK(kind_of(inst) == instance_kind(t));
    CHECK_NOTHROW(verify(t, inst));
  }
}

TEST_CASE("suite instances are deterministic") {
  for (TheoremId t : all_theorems()) {
    CHECK(to_json(suite_instance(t, 7, 3)) == to_json(suite_instance(t, 7, 3)));
    CHECK(cell_seed(7, t, 3) != cell_seed(8, t, 3));
  }
}

TEST_CASE("parallel and serial suites agree") {
  SuiteOptions o;
  o.seed = 42;
  o.count = 30;
  const SuiteReport par = run_suite(o);
  const SuiteReport ser = run_suite_serial(o);
  CHECK(par == ser);
  CHECK(to_json(par) == to_json(ser));
  CHECK(par.cells() == 30 * all_theorems().size());
  o.model_level = true;
  CHECK(run_suite(o) == run_suite_serial(o));
}

TEST_CASE("suite filter") {
  SuiteOptions o;
  o.count = 5;
  o.filter = {TheoremId::commut};
  const SuiteReport r = run_suite(o);
  CHECK(r.theorems.size() == 1);
  CHECK(r.theorems.at("commut").holds == 5);
}

TEST_CASE("model-level cells are not falsifications") {
  SuiteOptions o;
  o.count = 40;
  o.filter = {TheoremId::flacara, TheoremId::rollar};
  o.model_level = true;
  const SuiteReport r = run_suite(o);
  CHECK(r.theorems.at("flacara").model_level > 0);
  for (const auto& [name, t] : r.theorems) CHECK(t.faithful_violations <= t.violated);
}

TEST_CASE("known false corollaries show up in the suite") {
  SuiteOptions o;
  o.count = 100;
  o.filter = {TheoremId::garbanzos, TheoremId::secinta, TheoremId::sentintaa};
  const SuiteReport r = run_suite(o);
  CHECK(r.faithful_violation());
  CHECK(r.theorems.at("garbanzos").faithful_violations > 0);
  // only the minimal-image and minimal-preimage clauses are violated
  for (const auto& [name, t] : r.theorems)
    for (const auto& [clause, c] : t.clauses)
      if (c[1] > 0) CHECK((clause.find("minimal image") != std::string::npos ||
                           clause.find("minimal preimage") != std::string::npos));
}

TEST_CASE("minimized witnesses still violate") {
  for (std::size_t k = 0; k < 30; ++k) {
    const Instance inst = suite_instance(TheoremId::garbanzos, 42, k);
    const Verdict v = verify(TheoremId::garbanzos, inst);
    if (!v.faithful_violation() || !v.minimized) continue;
    const Instance small = instance_from_json(*v.minimized);
    CHECK_FALSE(validate_instance(small));
    CHECK(verify(TheoremId::garbanzos, small, {.minimize = false}).faithful_violation());
    CHECK(v.minimized->dump().size() <= to_json(inst).dump().size());
  }
}

TEST_CASE("fixture coverage statuses reproduce") {
  const std::filesystem::path dir = GD_FIXTURES;
  std::ifstream in(dir / "coverage.json");
  const json cov = json::parse(in);
  std::set<std::string> covered;
  for (const auto& [file, entry] : cov.items()) {
    const auto t = theorem_from_string(entry.at("theorem").get<std::string>());
    REQUIRE(t);
    covered.insert(to_string(*t));
    const Verdict v = verify(*t, load_instance(dir / file), {.minimize = false});
    CAPTURE(file);
    CHECK(to_string(v.status) == entry.at("status").get<std::string>());
  }
  for (TheoremId t : all_theorems()) CHECK(covered.count(to_string(t)));
}

TEST_CASE("bornology option switches to model level") {
  const Instance inst = suite_instance(TheoremId::flacara, 42, 1);
  const Verdict all = verify(TheoremId::flacara, inst);
  CHECK(all.mode == Mode::faithful);
  CHECK(all.bornology == "all");
  const Verdict core = verify(TheoremId::flacara, inst, {.bornology = "core=0"});
  CHECK(core.bornology == "core=0");
}
