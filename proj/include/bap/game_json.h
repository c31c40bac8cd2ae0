// Copyright 2026 The BAP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON form of finite games and mechanisms.
//
// Game:      {"parameters": [...], "prior": [...], "data": [...],
//             "likelihood": [[...]], "bob_decisions": [...],
//             "eve_decisions": [...], "bob_loss": [[...]], "eve_loss": [[...]]}
// Mechanism: {"releases": [...], "kernel": [[...]]}
//
// Matrices are row-major arrays of rows. Labels may be strings or numbers.

#ifndef BAP_GAME_JSON_H_
#define BAP_GAME_JSON_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "bap/finite_game.h"
#include "json.hpp"

namespace bap {

absl::StatusOr<FiniteGame> GameFromJson(const nlohmann::json& doc);
nlohmann::json GameToJson(const FiniteGame& game);

absl::StatusOr<FiniteMechanism> MechanismFromJson(const nlohmann::json& doc,
                                                  const FiniteGame& game);
nlohmann::json MechanismToJson(const FiniteMechanism& mech);

absl::StatusOr<FiniteGame> ParseGame(std::string_view text);
absl::StatusOr<FiniteMechanism> ParseMechanism(std::string_view text,
                                               const FiniteGame& game);

}  // namespace bap

#endif  // BAP_GAME_JSON_H_
