// Acceptance run: one PASS/FAIL line per criterion.
// usage: gd_acceptance <path to gd> <fixtures dir>
//
// Exit status is 0 when every FAIL is one of the pinned unattainable
// criteria (see kUnattainable) and the pinned counterexample still
// reproduces; anything else exits 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gd/dynamics.hpp"
#include "gd/verify.hpp"

using namespace gd;
namespace fs = std::filesystem;

namespace {

// tolerances and quotas
constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kUncondCells = 500;
constexpr double kUncondSeconds = 60.0;
constexpr std::size_t kCondMinHypotheses = 50;
constexpr std::size_t kTransportCells = 300;
constexpr std::size_t kOpenMin = 100;
constexpr std::size_t kMirajMin = 100;
constexpr std::size_t kEnfinMin = 50;
constexpr std::size_t kEnfinCells = 500;
constexpr std::size_t kBornologyPairsMin = 200;
constexpr std::size_t kBornologyActions = 150;
constexpr std::size_t kFurnal = 20;
constexpr std::size_t kMyex = 10;
constexpr std::size_t kSaex = 100;
constexpr std::size_t kFormulaCells = 200;
constexpr std::size_t kExhaustiveMin = 20;

// Known false as stated: minimal sets need not map onto minimal sets without
// the equality hypotheses. The CLI criterion fails as a consequence.
const std::set<std::string> kUnattainable = {"transport", "serialization+cli"};

struct Line {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

void report(const std::string& name, bool pass, const std::string& detail) {
  lines.push_back({name, pass, detail});
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

std::size_t clause_violations(const Tally& t, const std::string& clause) {
  const auto it = t.clauses.find(clause);
  return it == t.clauses.end() ? 0 : it->second[1];
}

std::size_t clause_holds(const Tally& t, const std::string& clause) {
  const auto it = t.clauses.find(clause);
  return it == t.clauses.end() ? 0 : it->second[0];
}

std::size_t cells(const Tally& t) { return t.holds + t.violated + t.not_applicable + t.errors; }

bool non_discrete(const Groupoid& g) { return !g.arrows().is_discrete(); }

int run_exit_code(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gd_acceptance <gd> <fixtures>\n";
    return 2;
  }
  const std::string gd_cli = argv[1];
  const fs::path fixtures = argv[2];

  // one suite run feeds criteria 1-5
  SuiteOptions so;
  so.seed = kSeed;
  so.count = kUncondCells;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport suite = run_suite(so);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto tally = [&](TheoremId t) { return suite.theorems.at(to_string(t)); };

  {
    using T = TheoremId;
    bool ok = secs < kUncondSeconds;
    std::size_t bad = 0, min_cells = kUncondCells;
    for (T t : {T::label, T::inzbor, T::both, T::stift, T::color, T::liema, T::jnitzel, T::constant,
                T::structure, T::saspermam, T::commut}) {
      const Tally x = tally(t);
      bad += x.faithful_violations + x.errors;
      min_cells = std::min(min_cells, cells(x));
    }
    ok = ok && bad == 0 && min_cells >= kUncondCells;
    std::ostringstream d;
    d << "violations=" << bad << " min_cells=" << min_cells << " suite_seconds=" << secs;
    report("unconditional", ok, d.str());
  }

  {
    using T = TheoremId;
    bool ok = true;
    std::ostringstream d;
    for (T t : {T::both, T::liema, T::label}) {
      const Tally x = tally(t);
      const std::size_t v = clause_violations(x, "equality");
      const std::size_t h = clause_holds(x, "equality") + v;
      ok = ok && v == 0 && h >= kCondMinHypotheses;
      d << to_string(t) << " met=" << h << " violated=" << v << "; ";
    }
    report("conditional equality", ok, d.str());
  }

  {
    using T = TheoremId;
    bool ok = true;
    std::ostringstream d;
    for (T t : {T::securinta, T::secinta, T::garbanzos, T::sentinta, T::sentintaa}) {
      const Tally x = tally(t);
      ok = ok && x.faithful_violations == 0 && x.errors == 0 && cells(x) >= kTransportCells;
      d << to_string(t) << " violated=" << x.faithful_violations << "/" << cells(x) << "; ";
    }
    report("transport", ok, d.str());
  }

  {
    const Tally x = tally(TheoremId::prostie);
    const std::size_t open = clause_holds(x, "open=>TT1<=>TT2<=>TT3<=>RT") +
                             clause_violations(x, "open=>TT1<=>TT2<=>TT3<=>RT");
    const bool ok = x.violated == 0 && x.errors == 0 && open >= kOpenMin;
    std::ostringstream d;
    d << "violated=" << x.violated << "/" << cells(x) << " open=" << open;
    report("implication audit", ok, d.str());
  }

  {
    const Tally m = tally(TheoremId::miraj), im = tally(TheoremId::image);
    std::size_t enfin_met = 0, enfin_bad = 0;
    for (std::size_t k = 0; k < kEnfinCells; ++k) {
      const Instance inst = suite_instance(TheoremId::enfin, kSeed, k);
      const Actor& phi = std::get<Actor>(inst);
      const Verdict v = verify(TheoremId::enfin, inst);
      if (v.status == Status::violated) ++enfin_bad;
      if (v.hypotheses_met() && v.status != Status::not_applicable &&
          (non_discrete(*phi.source) || non_discrete(*phi.target)))
        ++enfin_met;
    }
    const bool ok = m.violated == 0 && m.holds >= kMirajMin && im.violated == 0 &&
                    im.holds == m.holds && enfin_bad == 0 && enfin_met >= kEnfinMin;
    std::ostringstream d;
    d << "miraj=" << m.holds << " image=" << im.holds << " enfin_nondiscrete=" << enfin_met
      << " violations=" << m.violated + im.violated + enfin_bad;
    report("appendix", ok, d.str());
  }

  {
    std::size_t pairs = 0, mismatch = 0, baseline_bad = 0;
    for (std::size_t k = 0; k < kBornologyActions; ++k) {
      const ActionPtr a = std::get<ActionPtr>(suite_instance(TheoremId::flacara, kSeed, k));
      const FiniteSpace& arrows = a->gpd().arrows();
      Subset core(arrows.size());
      core.set(k % arrows.size());
      for (const Bornology& b : {Bornology::all_subsets(arrows.size()), Bornology::restricted(arrows, core)}) {
        ++pairs;
        for (Index s = 0; s < a->size(); ++s)
          if (limit_set(*a, s, b) != limit_set_via_recurrence(*a, s, b)) ++mismatch;
      }
      const Bornology all = Bornology::all_subsets(arrows.size());
      const PointClasses pc = point_classes(*a, all);
      bool ok = pc.wandering.all() && pc.periodic.all() && pc.almost_periodic.all() &&
                pc.weakly_periodic.none();
      for (const auto& L : pc.limit_sets) ok = ok && L.none();
      if (!ok) ++baseline_bad;
    }
    const bool ok = mismatch == 0 && pairs >= kBornologyPairsMin && baseline_bad == 0;
    std::ostringstream d;
    d << "pairs=" << pairs << " mismatches=" << mismatch << " baseline_failures=" << baseline_bad << "/"
      << kBornologyActions;
    report("bornology coherence", ok, d.str());
  }

  {
    using T = TheoremId;
    auto count_holds = [](T t, std::size_t n) {
      std::size_t h = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (verify(t, suite_instance(t, kSeed, k)).status == Status::holds) ++h;
      return h;
    };
    const std::size_t furnal = count_holds(T::furnal_iso, kFurnal);
    const std::size_t myex = count_holds(T::myex_iso, kMyex);
    const std::size_t saex = count_holds(T::saex_identity, kSaex);
    std::size_t exhaustive = kFormulaCells, formula_bad = 0;
    for (T t : {T::vasnatoare_formula, T::valtoare_formula}) {
      std::size_t ex = 0;
      for (std::size_t k = 0; k < kFormulaCells; ++k) {
        const Verdict v = verify(t, suite_instance(t, kSeed, k));
        if (v.status != Status::holds) ++formula_bad;
        if (v.sweep == "exhaustive") ++ex;
      }
      exhaustive = std::min(exhaustive, ex);
    }
    const bool ok = furnal == kFurnal && myex == kMyex && saex == kSaex && formula_bad == 0 &&
                    exhaustive >= kExhaustiveMin;
    std::ostringstream d;
    d << "furnal=" << furnal << "/" << kFurnal << " myex=" << myex << "/" << kMyex << " saex=" << saex << "/"
      << kSaex << " formulas_failed=" << formula_bad << " min_exhaustive=" << exhaustive;
    report("structural", ok, d.str());
  }

  bool roundtrip_ok = true;
  int cli_rc = -1;
  {
    std::size_t files = 0, mismatched = 0;
    for (const auto& e : fs::directory_iterator(fixtures)) {
      if (e.path().extension() != ".json" || e.path().filename() == "coverage.json") continue;
      ++files;
      const std::string text = slurp(e.path());
      const std::string again = dump_canonical(to_json(load_instance(e.path())));
      if (again != text) {
        ++mismatched;
        std::cerr << "round trip differs: " << e.path() << "\n";
      }
    }
    roundtrip_ok = mismatched == 0 && files > 0;
    cli_rc = run_exit_code(gd_cli + " suite --seed 42 --count 100 > /dev/null");
    std::ostringstream d;
    d << "fixtures=" << files << " mismatched=" << mismatched << " suite_exit=" << cli_rc;
    report("serialization+cli", roundtrip_ok && cli_rc == 0, d.str());
  }

  // pinned counterexample must still reproduce
  const Verdict cex = verify(TheoremId::garbanzos, load_instance(fixtures / "counterexample_garbanzos.json"),
                             {.minimize = false});
  const bool cex_ok = cex.faithful_violation();
  std::cout << (cex_ok ? "reproduced" : "NOT reproduced") << " garbanzos counterexample" << std::endl;

  bool unexpected = !cex_ok || !roundtrip_ok || (cli_rc != 0 && cli_rc != 1);
  for (const Line& l : lines)
    if (!l.pass && !kUnattainable.count(l.name)) unexpected = true;
  std::size_t failed = 0;
  for (const Line& l : lines) failed += !l.pass;
  std::cout << lines.size() - failed << "/" << lines.size() << " criteria pass; "
            << (unexpected ? "unexpected failures" : "failures limited to pinned unattainable criteria")
            << std::endl;
  return unexpected ? 1 : 0;
}
