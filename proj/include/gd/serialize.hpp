#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "gd/action.hpp"
#include "gd/actor.hpp"
#include "gd/fintop.hpp"
#include "gd/groupoid.hpp"
#include "gd/vague.hpp"

namespace gd {

using json = nlohmann::json;

using Instance = std::variant<FiniteSpace, GroupoidPtr, ActionPtr, ActionMorphism, GVMOfActions,
                              Actor, ActorOfActions>;

/// "space", "groupoid", "action", "action_morphism", "gvm_action", "actor", "actor_action".
std::string kind_of(const Instance& inst);

json to_json(const FiniteSpace& s);
json to_json(const Groupoid& g);
json to_json(const Action& a);
json to_json(const ActionMorphism& m);
json to_json(const GVMOfActions& va);
json to_json(const Actor& phi);
json to_json(const ActorOfActions& pa);
json to_json(const Instance& inst);
json to_json(const Bornology& b);
json to_json(const Subset& s);

/// Structural checks only; axioms are left to the validators. Nested
/// references may be inline objects or file names relative to `base`.
FiniteSpace space_from_json(const json& j);
GroupoidPtr groupoid_from_json(const json& j, const std::filesystem::path& base = {});
ActionPtr action_from_json(const json& j, const std::filesystem::path& base = {});
ActionMorphism morphism_from_json(const json& j, const std::filesystem::path& base = {});
GVMOfActions gvm_action_from_json(const json& j, const std::filesystem::path& base = {});
Actor actor_from_json(const json& j, const std::filesystem::path& base = {});
ActorOfActions actor_action_from_json(const json& j, const std::filesystem::path& base = {});
Instance instance_from_json(const json& j, const std::filesystem::path& base = {});

/// "all" or "core=1,2,3" against a carrier space.
Bornology parse_bornology(const std::string& spec, const FiniteSpace& carrier);
Subset parse_ids(const std::string& text, std::size_t n);

json read_json_file(const std::filesystem::path& p);
Instance load_instance(const std::filesystem::path& p);
/// Canonical text: two-space indentation, trailing newline.
std::string dump_canonical(const json& j);

/// Report validation of any instance kind.
Report validate_instance(const Instance& inst);

}  // namespace gd
