#include "util.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gd/serialize.hpp"

using namespace gdt;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fixture corpus round trips byte for byte") {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(GD_FIXTURES)) {
    if (e.path().extension() != ".json" || e.path().filename() == "coverage.json") continue;
    ++n;
    CAPTURE(e.path().string());
    const Instance inst = load_instance(e.path());
    CHECK_FALSE(validate_instance(inst));
    CHECK(dump_canonical(to_json(inst)) == slurp(e.path()));
    CHECK(to_json(instance_from_json(to_json(inst))) == to_json(inst));
  }
  CHECK(n >= 70);
}

TEST_CASE("generated instances round trip") {
  for (const char* kind : {"groupoid", "action", "morphism", "gvm_action", "actor", "actor_action"}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.seed = seed;
      spec.topo = static_cast<Topo>(seed % 3);
      const Instance a = generate(spec);
      const json j = to_json(a);
      const Instance b = instance_from_json(j);
      CHECK(kind_of(a) == kind_of(b));
      CHECK(to_json(b) == j);
    }
  }
}

TEST_CASE("space JSON: opens and basis forms") {
  const json opens = {{"kind", "space"}, {"points", {"a", "b"}}, {"opens", {{0}}}};
  const FiniteSpace S = space_from_json(opens);
  CHECK(S.is_open(make_subset(2, {0})));
  CHECK_FALSE(S.is_open(make_subset(2, {1})));
  CHECK(space_from_json(to_json(S)) == S);
  // {0} and {1} without {0,1}
  const json bad = {{"kind", "space"}, {"points", {"a", "b", "c"}}, {"opens", {{0}, {1}}}};
  CHECK_THROWS_AS(space_from_json(bad), Error);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS(instance_from_json(json{{"kind", "groupoid"}}));
  CHECK_THROWS(instance_from_json(json{{"kind", "unknown"}}));
  json g = to_json(cyclic_group(2));
  g["inv"] = {0, 7};
  CHECK_THROWS(instance_from_json(g));
}

TEST_CASE("invalid axioms load but fail validation") {
  json g = to_json(cyclic_group(2));
  g["mul"] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  const Instance inst = instance_from_json(g);
  const Report r = validate_instance(inst);
  CHECK(r);
}

TEST_CASE("bornology and id parsing") {
  const FiniteSpace S = FiniteSpace::from_opens(3, {make_subset(3, {0})});
  CHECK(parse_bornology("all", S).is_all());
  // closure of {1} is the complement of the open {0}
  const Bornology b = parse_bornology("core=1", S);
  CHECK(b.bound() == make_subset(3, {1, 2}));
  CHECK_THROWS_AS(parse_bornology("core=9", S), Error);
  CHECK_THROWS_AS(parse_bornology("some", S), Error);
  CHECK(parse_ids("0,2", 3) == make_subset(3, {0, 2}));
  CHECK(parse_ids("", 3).none());
  CHECK_THROWS(parse_ids("x", 3));
}

TEST_CASE("nested references resolve relative to the file") {
  const fs::path dir = fs::temp_directory_path() / "gd_nested";
  fs::create_directories(dir);
  const ActionPtr a = std::make_shared<const Action>(canonical_action(std::make_shared<const Groupoid>(pair_groupoid(2))));
  {
    std::ofstream(dir / "g.json") << dump_canonical(to_json(a->gpd()));
    json j = to_json(*a);
    j["groupoid"] = "g.json";
    std::ofstream(dir / "a.json") << dump_canonical(j);
  }
  const Instance inst = load_instance(dir / "a.json");
  CHECK(to_json(inst) == to_json(*a));
  fs::remove_all(dir);
}
