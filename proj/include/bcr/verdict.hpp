#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace bcr {

using Json = nlohmann::ordered_json;

// witness is present iff holds is false; certificate optionally carries success data
struct Verdict {
  std::string concept_name;
  bool holds = true;
  std::optional<Json> witness;
  std::optional<Json> certificate;

  static Verdict pass(std::string name, std::optional<Json> cert = std::nullopt) {
    return {std::move(name), true, std::nullopt, std::move(cert)};
  }
  static Verdict fail(std::string name, Json witness) {
    return {std::move(name), false, std::move(witness), std::nullopt};
  }
};

Json to_json(const Verdict& v);

}  // namespace bcr
