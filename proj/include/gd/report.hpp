#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gd {

/// First failing axiom of a validator, with the tuple that witnesses it.
struct Violation {
  std::string clause;
  std::string witness;
};

/// nullopt means every axiom holds.
using Report = std::optional<Violation>;

enum class Status { holds, violated, not_applicable };
enum class Mode { faithful, model_level };

const char* to_string(Status s);
const char* to_string(Mode m);

struct Clause {
  std::string name;
  Status status = Status::not_applicable;
  std::string witness;
};

struct Hypothesis {
  std::string name;
  bool met = false;
};

/// Outcome of a theorem check: named hypotheses plus three-valued clauses.
/// Only a `violated` clause in faithful mode counts as a falsification.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(Mode mode) : mode_(mode) {}

  void hypothesis(std::string name, bool met) {
    hypotheses_.push_back({std::move(name), met});
  }

  /// Unconditional clause. `witness` is only invoked on failure.
  template <class W>
  void require(std::string name, bool holds, W&& witness) {
    clauses_.push_back({std::move(name), holds ? Status::holds : Status::violated,
                        holds ? std::string{} : std::string(witness())});
  }
  void require(std::string name, bool holds) {
    require(std::move(name), holds, [] { return std::string{}; });
  }

  /// Clause whose premise may be unmet; reported N/A in that case.
  template <class W>
  void require_if(std::string name, bool gate, bool holds, W&& witness) {
    if (!gate) {
      clauses_.push_back({std::move(name), Status::not_applicable, {}});
      return;
    }
    require(std::move(name), holds, std::forward<W>(witness));
  }
  void require_if(std::string name, bool gate, bool holds) {
    require_if(std::move(name), gate, holds, [] { return std::string{}; });
  }

  void not_applicable(std::string name) {
    clauses_.push_back({std::move(name), Status::not_applicable, {}});
  }

  void merge(const CheckReport& other, const std::string& prefix = {});
  /// Same hypotheses and mode, only the clauses whose name passes `keep`.
  CheckReport select(const std::function<bool(const std::string&)>& keep) const;

  Status status() const;
  Mode mode() const { return mode_; }
  void set_mode(Mode m) { mode_ = m; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  const Clause* first_violation() const;
  bool any_violated() const { return first_violation() != nullptr; }
  bool hypothesis_met(const std::string& name) const;

 private:
  Mode mode_ = Mode::faithful;
  std::vector<Hypothesis> hypotheses_;
  std::vector<Clause> clauses_;
};

}  // namespace gd
