#include "gd/serialize.hpp"

#include <fstream>
#include <sstream>

namespace gd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Table table_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw Error(std::string("missing array \"") + key + "\"");
  Table t;
  for (const auto& v : j[key]) t.push_back(v.get<Index>());
  return t;
}

std::vector<std::array<Index, 3>> triples_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw Error(std::string("missing array \"") + key + "\"");
  std::vector<std::array<Index, 3>> out;
  for (const auto& v : j[key]) {
    if (!v.is_array() || v.size() != 3) throw Error(std::string("\"") + key + "\" entries must be triples");
    out.push_back({v[0].get<Index>(), v[1].get<Index>(), v[2].get<Index>()});
  }
  return out;
}

Subset subset_from(const json& j, std::size_t n) {
  Subset s(n);
  for (const auto& v : j) {
    const auto i = v.get<Index>();
    if (i >= n) throw Error("index out of range: " + std::to_string(i));
    s.set(i);
  }
  return s;
}

// A nested reference: inline object or a file name relative to base.
json resolve(const json& j, const char* key, const std::filesystem::path& base) {
  if (!j.contains(key)) throw Error(std::string("missing \"") + key + "\"");
  const json& v = j[key];
  if (v.is_string()) return read_json_file(base / v.get<std::string>());
  return v;
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", "") != kind) {
    throw Error(std::string("expected an object of kind \"") + kind + "\"");
  }
}

json triples_json(const std::vector<std::array<Index, 3>>& t) {
  json out = json::array();
  for (const auto& [a, b, c] : t) out.push_back({a, b, c});
  return out;
}

}  // namespace

json to_json(const Subset& s) { return members(s); }

std::string kind_of(const Instance& inst) {
  return std::visit(overloaded{[](const FiniteSpace&) { return "space"; },
                               [](const GroupoidPtr&) { return "groupoid"; },
                               [](const ActionPtr&) { return "action"; },
                               [](const ActionMorphism&) { return "action_morphism"; },
                               [](const GVMOfActions&) { return "gvm_action"; },
                               [](const Actor&) { return "actor"; },
                               [](const ActorOfActions&) { return "actor_action"; }},
                    inst);
}

json to_json(const FiniteSpace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return {{"kind", "space"}, {"points", s.labels()}, {"basis", basis}};
}

json to_json(const Groupoid& g) {
  std::vector<std::array<Index, 3>> mul;
  for (Index i = 0; i < g.size(); ++i) {
    for (Index j = 0; j < g.size(); ++j) {
      if (g.composable(i, j)) mul.push_back({i, j, g.mul(i, j)});
    }
  }
  return {{"kind", "groupoid"}, {"space", to_json(g.arrows())}, {"units", to_json(g.units())},
          {"src", g.src()},     {"rng", g.rng()},                {"inv", g.inv_table()},
          {"mul", triples_json(mul)}};
}

json to_json(const Action& a) {
  std::vector<std::array<Index, 3>> act;
  for (Index xi = 0; xi < a.gpd().size(); ++xi) {
    for (Index s = 0; s < a.size(); ++s) {
      if (a.admissible(xi, s)) act.push_back({xi, s, a.act(xi, s)});
    }
  }
  return {{"kind", "action"},         {"groupoid", to_json(a.gpd())},
          {"space", to_json(a.space())}, {"anchor", a.anchor_table()},
          {"act", triples_json(act)}};
}

json to_json(const ActionMorphism& m) {
  return {{"kind", "action_morphism"}, {"psi", m.psi}, {"f", m.f},
          {"source", to_json(*m.source)}, {"target", to_json(*m.target)}};
}

json to_json(const GVMOfActions& va) {
  const auto& P = va.gvm.pb;
  const auto& Q = va.gvm.pb_prime;
  json Gamma = json::array();
  for (Index t = 0; t < P.triples.size(); ++t) {
    const auto& a = P.triples[t];
    const auto& b = Q.triples[va.gvm.Gamma[t]];
    Gamma.push_back({{a[0], a[1], a[2]}, {b[0], b[1], b[2]}});
  }
  return {{"kind", "gvm_action"},
          {"source", to_json(*va.source)},
          {"target", to_json(*va.target)},
          {"A", to_json(P.aspace)},
          {"pi", P.pi},
          {"A_prime", to_json(Q.aspace)},
          {"pi_prime", Q.pi},
          {"gamma", va.gvm.gamma},
          {"Gamma", Gamma},
          {"h", va.h}};
}

json to_json(const Actor& phi) {
  std::vector<std::array<Index, 3>> d;
  for (Index xi = 0; xi < phi.source->size(); ++xi) {
    for (Index eta = 0; eta < phi.target->size(); ++eta) {
      if (phi.admissible(xi, eta)) d.push_back({xi, eta, phi.apply(xi, eta)});
    }
  }
  json j = {{"kind", "actor"},
            {"source", to_json(*phi.source)},
            {"target", to_json(*phi.target)},
            {"mu", phi.mu},
            {"diamond", triples_json(d)}};
  if (!phi.require_surjective_mu) j["require_surjective_mu"] = false;
  return j;
}

json to_json(const ActorOfActions& pa) {
  return {{"kind", "actor_action"}, {"actor", to_json(pa.actor)}, {"g", pa.g},
          {"source", to_json(*pa.source)}, {"target", to_json(*pa.target)}};
}

json to_json(const Instance& inst) {
  return std::visit(overloaded{[](const FiniteSpace& s) { return to_json(s); },
                               [](const GroupoidPtr& g) { return to_json(*g); },
                               [](const ActionPtr& a) { return to_json(*a); },
                               [](const auto& x) { return to_json(x); }},
                    inst);
}

json to_json(const Bornology& b) {
  json j = {{"kind", "bornology"}, {"all", b.is_all()}, {"bound", to_json(b.bound())}};
  if (b.core()) j["core"] = to_json(*b.core());
  return j;
}

FiniteSpace space_from_json(const json& j) {
  expect_kind(j, "space");
  const auto labels = j.at("points").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  std::vector<Subset> fam;
  if (j.contains("opens")) {
    for (const auto& o : j["opens"]) fam.push_back(subset_from(o, n));
    return FiniteSpace::from_opens(n, fam, labels);
  }
  if (j.contains("basis")) {
    for (const auto& o : j["basis"]) fam.push_back(subset_from(o, n));
    return FiniteSpace::generated(n, fam, labels);
  }
  throw Error("space needs \"opens\" or \"basis\"");
}

GroupoidPtr groupoid_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "groupoid");
  FiniteSpace sp = space_from_json(resolve(j, "space", base));
  const std::size_t n = sp.size();
  Subset units = subset_from(j.at("units"), n);
  return std::make_shared<const Groupoid>(Groupoid::from_triples(
      std::move(sp), std::move(units), table_from(j, "src"), table_from(j, "rng"),
      table_from(j, "inv"), triples_from(j, "mul")));
}

ActionPtr action_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "action");
  auto g = groupoid_from_json(resolve(j, "groupoid", base), base);
  return std::make_shared<const Action>(Action::from_triples(
      std::move(g), space_from_json(resolve(j, "space", base)), table_from(j, "anchor"),
      triples_from(j, "act")));
}

ActionMorphism morphism_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "action_morphism");
  ActionMorphism m{action_from_json(resolve(j, "source", base), base),
                   action_from_json(resolve(j, "target", base), base), table_from(j, "psi"),
                   table_from(j, "f")};
  check_table(m.psi, m.source->gpd().size(), m.target->gpd().size(), "psi");
  check_table(m.f, m.source->size(), m.target->size(), "f");
  return m;
}

GVMOfActions gvm_action_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "gvm_action");
  ActionPtr S = action_from_json(resolve(j, "source", base), base);
  ActionPtr T = action_from_json(resolve(j, "target", base), base);
  const FiniteSpace A = space_from_json(resolve(j, "A", base));
  const FiniteSpace Ap = space_from_json(resolve(j, "A_prime", base));
  const Table pi = table_from(j, "pi");
  const Table pip = table_from(j, "pi_prime");
  Table gamma = table_from(j, "gamma");
  const PullbackGroupoid P = build_pullback(S->gpd_ptr(), A, pi, false);
  const PullbackGroupoid Q = build_pullback(T->gpd_ptr(), Ap, pip, false);
  Table Gamma;
  if (j.contains("Gamma")) {
    Gamma.assign(P.triples.size(), kNone);
    for (const auto& e : j["Gamma"]) {
      if (!e.is_array() || e.size() != 2) throw Error("Gamma entries must be [triple, triple]");
      const auto a = e[0].get<std::array<Index, 3>>();
      const auto b = e[1].get<std::array<Index, 3>>();
      const Index t = P.find(a[0], a[1], a[2]);
      const Index u = Q.find(b[0], b[1], b[2]);
      if (t == kNone || u == kNone) throw Error("Gamma entry is not a pair of pullback arrows");
      if (Gamma[t] != kNone) throw Error("Gamma: duplicate entry");
      Gamma[t] = u;
    }
    for (Index x : Gamma) {
      if (x == kNone) throw Error("Gamma: missing entry");
    }
  } else if (j.contains("Gamma2")) {
    Table G2(P.triples.size(), kNone);
    for (const auto& e : j["Gamma2"]) {
      if (!e.is_array() || e.size() != 2) throw Error("Gamma2 entries must be [triple, arrow]");
      const auto a = e[0].get<std::array<Index, 3>>();
      const Index t = P.find(a[0], a[1], a[2]);
      if (t == kNone) throw Error("Gamma2 entry is not a pullback arrow");
      G2[t] = e[1].get<Index>();
    }
    for (Index x : G2) {
      if (x == kNone) throw Error("Gamma2: missing entry");
    }
    Gamma = gamma_from_gamma2(P, Q, gamma, G2);
  } else {
    throw Error("gvm_action needs \"Gamma\" or \"Gamma2\"");
  }
  return make_gvm_action(std::move(S), std::move(T), A, pi, Ap, pip, std::move(gamma),
                         std::move(Gamma), table_from(j, "h"));
}

Actor actor_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "actor");
  return actor_from_triples(groupoid_from_json(resolve(j, "source", base), base),
                            groupoid_from_json(resolve(j, "target", base), base),
                            table_from(j, "mu"), triples_from(j, "diamond"),
                            j.value("require_surjective_mu", true));
}

ActorOfActions actor_action_from_json(const json& j, const std::filesystem::path& base) {
  expect_kind(j, "actor_action");
  ActorOfActions pa{actor_from_json(resolve(j, "actor", base), base),
                    action_from_json(resolve(j, "source", base), base),
                    action_from_json(resolve(j, "target", base), base), table_from(j, "g")};
  check_table(pa.g, pa.source->size(), pa.target->size(), "g");
  return pa;
}

Instance instance_from_json(const json& j, const std::filesystem::path& base) {
  const std::string kind = j.value("kind", "");
  if (kind == "space") return space_from_json(j);
  if (kind == "groupoid") return groupoid_from_json(j, base);
  if (kind == "action") return action_from_json(j, base);
  if (kind == "action_morphism") return morphism_from_json(j, base);
  if (kind == "gvm_action") return gvm_action_from_json(j, base);
  if (kind == "actor") return actor_from_json(j, base);
  if (kind == "actor_action") return actor_action_from_json(j, base);
  throw Error("unknown kind \"" + kind + "\"");
}

Subset parse_ids(const std::string& text, std::size_t n) {
  Subset s(n);
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size() || v >= n) throw Error("bad id \"" + tok + "\"");
    s.set(v);
  }
  return s;
}

Bornology parse_bornology(const std::string& spec, const FiniteSpace& carrier) {
  if (spec == "all") return Bornology::all_subsets(carrier.size());
  if (spec.rfind("core=", 0) == 0) return Bornology::restricted(carrier, parse_ids(spec.substr(5), carrier.size()));
  throw Error("bornology must be \"all\" or \"core=<ids>\"");
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(p.string() + ": " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& p) {
  return instance_from_json(read_json_file(p), p.parent_path());
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

Report validate_instance(const Instance& inst) {
  return std::visit(
      overloaded{[](const FiniteSpace&) -> Report { return std::nullopt; },
                 [](const GroupoidPtr& g) { return validate_groupoid(*g); },
                 [](const ActionPtr& a) -> Report {
                   if (auto r = validate_groupoid(a->gpd())) return Violation{"groupoid_" + r->clause, r->witness};
                   return validate_action(*a);
                 },
                 [](const ActionMorphism& m) { return validate_morphism(m); },
                 [](const GVMOfActions& va) { return validate_gvm_action(va); },
                 [](const Actor& phi) -> Report {
                   for (const auto* g : {phi.source.get(), phi.target.get()}) {
                     if (auto r = validate_groupoid(*g)) return Violation{"groupoid_" + r->clause, r->witness};
                   }
                   return validate_actor(phi);
                 },
                 [](const ActorOfActions& pa) { return validate_actor_of_actions(pa); }},
      inst);
}

}  // namespace gd
