// gd: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 violated / invalid, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "gd/dynamics.hpp"
#include "gd/generate.hpp"
#include "gd/serialize.hpp"
#include "gd/verify.hpp"

using namespace gd;

namespace {

void emit(const json& j) { std::cout << dump_canonical(j); }

ActionPtr load_action(const std::string& file) {
  const Instance inst = load_instance(file);
  if (const auto* a = std::get_if<ActionPtr>(&inst)) return *a;
  throw Error(file + ": expected an action, got " + kind_of(inst));
}

json labelled(const Subset& s, const FiniteSpace& space) {
  json ids = members(s), labels = json::array();
  for_each_member(s, [&](Index i) { labels.push_back(space.label(i)); });
  return {{"ids", ids}, {"labels", labels}};
}

int cmd_validate(const std::string& file) {
  const Instance inst = load_instance(file);
  const Report r = validate_instance(inst);
  json j = {{"kind", kind_of(inst)}, {"valid", !r}};
  if (r) {
    j["clause"] = r->clause;
    j["witness"] = r->witness;
  }
  emit(j);
  return r ? 1 : 0;
}

int cmd_classify(const std::string& file, const std::string& born) {
  const ActionPtr a = load_action(file);
  if (auto r = validate_instance(a)) throw Error("invalid action: " + r->clause + " " + r->witness);
  const DynProfile p = classify(*a);
  const Bornology b = parse_bornology(born, a->gpd().arrows());
  const PointClasses pc = point_classes(*a, b);
  const auto& S = a->space();
  json j;
  j["profile"] = {{"T", p.T},     {"PT", p.PT},   {"WPT", p.WPT}, {"TT1", p.TT1},
                  {"TT2", p.TT2}, {"TT3", p.TT3}, {"RT", p.RT},   {"minimal", p.minimal}};
  if (p.pt_witness) j["pt_witness"] = *p.pt_witness;
  if (p.wpt_witness) j["wpt_witness"] = *p.wpt_witness;
  j["witnesses"] = p.witnesses;
  j["open_groupoid"] = is_open_groupoid(a->gpd());
  j["bornology"] = to_json(b);
  j["mode"] = b.is_all() ? "faithful" : "model_level";
  j["points"] = {{"fixed", labelled(pc.fixed, S)},
                 {"recurrent", labelled(pc.recurrent, S)},
                 {"wandering", labelled(pc.wandering, S)},
                 {"nonwandering", labelled(pc.nonwandering, S)},
                 {"periodic", labelled(pc.periodic, S)},
                 {"weakly_periodic", labelled(pc.weakly_periodic, S)},
                 {"almost_periodic", labelled(pc.almost_periodic, S)}};
  json limits = json::array();
  for (const auto& L : pc.limit_sets) limits.push_back(members(L));
  j["limit_sets"] = limits;
  emit(j);
  return 0;
}

int cmd_recurrence(const std::string& file, const std::string& M, const std::string& N) {
  const ActionPtr a = load_action(file);
  const Subset m = parse_ids(M, a->size()), n = parse_ids(N, a->size());
  const Subset rec = recurrence_set(*a, m, n);
  emit({{"M", members(m)}, {"N", members(n)}, {"recurrence_set", labelled(rec, a->gpd().arrows())}});
  return 0;
}

int cmd_pullback(const std::string& gfile, const std::string& pifile) {
  const Instance inst = load_instance(gfile);
  const auto* g = std::get_if<GroupoidPtr>(&inst);
  if (!g) throw Error(gfile + ": expected a groupoid, got " + kind_of(inst));
  // {"pi": [unit arrow ids], "A": optional space}
  const json pj = read_json_file(pifile);
  Table pi;
  for (const auto& v : pj.at("pi")) pi.push_back(v.get<Index>());
  const FiniteSpace A = pj.contains("A") ? space_from_json(pj["A"]) : FiniteSpace::discrete(pi.size());
  const auto pb = build_pullback(*g, A, pi);
  json triples = json::array();
  for (const auto& [a, xi, b] : pb.triples) triples.push_back({a, xi, b});
  emit({{"groupoid", to_json(*pb.realized)}, {"triples", triples}, {"Pi", pb.Pi}});
  return 0;
}

int cmd_compose(bool morphisms, const std::string& f1, const std::string& f2) {
  const Instance a = load_instance(f1), b = load_instance(f2);
  if (morphisms) {
    const auto* m1 = std::get_if<ActionMorphism>(&a);
    const auto* m2 = std::get_if<ActionMorphism>(&b);
    if (!m1 || !m2) throw Error("compose --morphisms expects two action_morphism files");
    emit(to_json(compose_morphisms(*m2, *m1)));
    return 0;
  }
  if (const auto* p1 = std::get_if<Actor>(&a)) {
    const auto* p2 = std::get_if<Actor>(&b);
    if (!p2) throw Error("compose --actors expects two actors or two actor_actions");
    emit(to_json(compose_actors(*p2, *p1)));
    return 0;
  }
  const auto* q1 = std::get_if<ActorOfActions>(&a);
  const auto* q2 = std::get_if<ActorOfActions>(&b);
  if (!q1 || !q2) throw Error("compose --actors expects two actors or two actor_actions");
  emit(to_json(compose_actor_of_actions(*q2, *q1)));
  return 0;
}

Topo parse_topo(const std::string& s) {
  if (s == "discrete") return Topo::discrete;
  if (s == "structured") return Topo::structured;
  if (s == "random" || s == "random_valid") return Topo::random;
  throw Error("topology must be discrete, structured or random");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid dynamics"};
  app.require_subcommand(1);

  std::string file, file2, born = "all", M, N, pi_file, theorem, filter, kind, topo = "discrete",
                           group;
  std::uint64_t seed = 0;
  std::size_t count = 100, units = 0;
  bool morphisms = false, actors = false, no_minimize = false, model_level = false, serial = false;

  auto* validate = app.add_subcommand("validate", "validate any instance");
  validate->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "dynamical profile of an action");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--bornology", born, "all | core=<ids> on the arrows");

  auto* recurrence = app.add_subcommand("recurrence", "recurrence set of (M, N)");
  recurrence->add_option("file", file)->required();
  recurrence->add_option("--M", M, "comma-separated point ids")->required();
  recurrence->add_option("--N", N, "comma-separated point ids")->required();

  auto* pullback = app.add_subcommand("pullback", "pullback groupoid along pi");
  pullback->add_option("file", file)->required();
  pullback->add_option("--pi", pi_file, "JSON with \"pi\" and optional \"A\"")->required();

  auto* compose = app.add_subcommand("compose", "composite of f1 then f2");
  auto* g1 = compose->add_flag("--morphisms", morphisms);
  auto* g2 = compose->add_flag("--actors", actors);
  g1->excludes(g2);
  compose->add_option("f1", file)->required();
  compose->add_option("f2", file2)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check one theorem on an instance");
  verify_cmd->add_option("--theorem", theorem)->required();
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--bornology", born);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--no-minimize", no_minimize);

  auto* suite = app.add_subcommand("suite", "seeded run over every theorem");
  suite->add_option("--seed", seed)->required();
  suite->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  suite->add_option("--filter", filter, "comma-separated theorem ids");
  suite->add_flag("--model-level", model_level, "use restricted bornologies on some cells");
  suite->add_flag("--serial", serial, "single-threaded reference run");

  auto* gen = app.add_subcommand("generate", "seeded instance");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--topology", topo, "discrete | structured | random");
  gen->add_option("--units", units);
  gen->add_option("--group", group, "C1..C6, V4, S3");

  std::size_t cell = 0;
  auto* exp = app.add_subcommand("export", "instance the suite uses for one cell");
  exp->add_option("--theorem", theorem)->required();
  exp->add_option("--seed", seed)->required();
  exp->add_option("--cell", cell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*classify_cmd) return cmd_classify(file, born);
    if (*recurrence) return cmd_recurrence(file, M, N);
    if (*pullback) return cmd_pullback(file, pi_file);
    if (*compose) {
      if (!morphisms && !actors) throw Error("compose needs --morphisms or --actors");
      return cmd_compose(morphisms, file, file2);
    }
    if (*verify_cmd) {
      const auto t = theorem_from_string(theorem);
      if (!t) throw Error("unknown theorem: " + theorem);
      VerifyOptions o;
      o.seed = seed;
      o.bornology = born;
      o.minimize = !no_minimize;
      const Verdict v = verify(*t, load_instance(file), o);
      emit(to_json(v));
      return v.faithful_violation() ? 1 : 0;
    }
    if (*suite) {
      SuiteOptions o;
      o.seed = seed;
      o.count = count;
      o.filter = parse_theorems(filter);
      o.model_level = model_level;
      const SuiteReport r = serial ? run_suite_serial(o) : run_suite(o);
      emit(to_json(r));
      return r.faithful_violation() ? 1 : 0;
    }
    if (*exp) {
      const auto t = theorem_from_string(theorem);
      if (!t) throw Error("unknown theorem: " + theorem);
      emit(to_json(suite_instance(*t, seed, cell)));
      return 0;
    }
    if (*gen) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.seed = seed;
      spec.topo = parse_topo(topo);
      spec.units = units;
      spec.group = group;
      emit(to_json(generate(spec)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "gd: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
