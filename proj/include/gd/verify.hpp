#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gd/generate.hpp"
#include "gd/report.hpp"
#include "gd/serialize.hpp"

namespace gd {

enum class TheoremId {
  label,
  inzbor,
  both,
  stift,
  securinta,
  color,
  secinta,
  garbanzos,
  gogonata,
  rolar,
  rollar,
  caciu,
  liema,
  jnitzel,
  sentinta,
  sentintaa,
  siaia,
  siaia2,
  transflim,
  saspermam,
  constant,
  miraj,
  image,
  structure,
  enfin,
  prostie,
  flacara,
  caofi,
  joser,
  vasnatoare_formula,
  valtoare_formula,
  myex_iso,
  saex_identity,
  commut,
  furnal_iso,
};

const std::vector<TheoremId>& all_theorems();
const char* to_string(TheoremId t);
std::optional<TheoremId> theorem_from_string(std::string_view s);
/// Instance kind the theorem is checked on (see kind_of).
const char* instance_kind(TheoremId t);
/// Comma-separated theorem names; throws Error on an unknown name.
std::vector<TheoremId> parse_theorems(const std::string& text);

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// "all" or "core=<ids>" on the arrows of the source groupoid; the other
  /// carriers keep all subsets. Only theorems that take a bornology use it.
  std::string bornology = "all";
  bool minimize = true;
  int samples = 64;
};

struct Verdict {
  TheoremId theorem = TheoremId::label;
  Status status = Status::not_applicable;
  Mode mode = Mode::faithful;
  std::vector<Hypothesis> hypotheses;
  std::vector<Clause> clauses;
  std::optional<std::string> witness;
  std::string bornology = "all";
  /// "exhaustive", "sampled(64)" or "none".
  std::string sweep = "none";
  /// Smaller instance still violating the theorem, with its witness.
  std::optional<json> minimized;
  std::optional<std::string> minimized_witness;

  bool faithful_violation() const { return status == Status::violated && mode == Mode::faithful; }
  bool hypotheses_met() const;
};

json to_json(const Verdict& v);

/// Throws Error when the instance kind does not match the theorem.
Verdict verify(TheoremId t, const Instance& inst, const VerifyOptions& opts = {});

/// Instance used by the suite for cell k of theorem t.
Instance suite_instance(TheoremId t, std::uint64_t seed, std::size_t k);
std::uint64_t cell_seed(std::uint64_t seed, TheoremId t, std::size_t k);

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::vector<TheoremId> filter;  ///< empty: all theorems
  /// Every fourth cell of a bornology-taking theorem uses a restricted core.
  bool model_level = false;
  bool minimize = false;
};

struct Tally {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::size_t model_level = 0;
  std::size_t faithful_violations = 0;
  std::size_t hypotheses_met = 0;
  std::size_t errors = 0;
  /// Per clause: {holds, violated, not_applicable}.
  std::map<std::string, std::array<std::size_t, 3>> clauses;
  std::vector<std::string> witnesses;  ///< first few faithful violations

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::map<std::string, Tally> theorems;

  bool faithful_violation() const;
  std::size_t cells() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

json to_json(const SuiteReport& r);

/// Cells run concurrently; aggregation is serial in cell order.
SuiteReport run_suite(const SuiteOptions& opts);
/// Single-threaded reference with the same aggregate.
SuiteReport run_suite_serial(const SuiteOptions& opts);

}  // namespace gd
