#include "gd/report.hpp"

namespace gd {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(Mode m) {
  return m == Mode::faithful ? "faithful" : "model_level";
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& h : other.hypotheses_) hypotheses_.push_back({prefix + h.name, h.met});
  for (const auto& c : other.clauses_) clauses_.push_back({prefix + c.name, c.status, c.witness});
  if (other.mode_ == Mode::model_level) mode_ = Mode::model_level;
}

CheckReport CheckReport::select(const std::function<bool(const std::string&)>& keep) const {
  CheckReport out(mode_);
  out.hypotheses_ = hypotheses_;
  for (const auto& c : clauses_) {
    if (keep(c.name)) out.clauses_.push_back(c);
  }
  return out;
}

Status CheckReport::status() const {
  bool any_holds = false;
  for (const auto& c : clauses_) {
    if (c.status == Status::violated) return Status::violated;
    if (c.status == Status::holds) any_holds = true;
  }
  return any_holds ? Status::holds : Status::not_applicable;
}

const Clause* CheckReport::first_violation() const {
  for (const auto& c : clauses_) {
    if (c.status == Status::violated) return &c;
  }
  return nullptr;
}

bool CheckReport::hypothesis_met(const std::string& name) const {
  for (const auto& h : hypotheses_) {
    if (h.name == name) return h.met;
  }
  return false;
}

}  // namespace gd
