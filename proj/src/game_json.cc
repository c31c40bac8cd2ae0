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

#include "bap/game_json.h"

#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/string_view.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

using nlohmann::json;

absl::Status FieldError(absl::string_view path, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrFormat("%s: %s", path, what));
}

absl::StatusOr<const json*> Member(const json& doc, const std::string& key) {
  if (!doc.is_object()) return FieldError("$", "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) return FieldError(key, "missing");
  return &*it;
}

absl::StatusOr<std::vector<std::string>> Labels(const json& doc,
                                                const std::string& key) {
  ASSIGN_OR_RETURN(const json* node, Member(doc, key));
  if (!node->is_array()) return FieldError(key, "expected an array");
  std::vector<std::string> out;
  for (size_t i = 0; i < node->size(); ++i) {
    const json& item = (*node)[i];
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_number()) {
      out.push_back(item.dump());
    } else {
      return FieldError(absl::StrFormat("%s[%d]", key, i),
                        "expected a string or number label");
    }
  }
  return out;
}

absl::StatusOr<std::vector<double>> Numbers(const json& node,
                                            const std::string& path) {
  if (!node.is_array()) return FieldError(path, "expected an array");
  std::vector<double> out;
  for (size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      return FieldError(absl::StrFormat("%s[%d]", path, i),
                        "expected a number");
    }
    out.push_back(node[i].get<double>());
  }
  return out;
}

absl::StatusOr<Matrix> Table(const json& doc, const std::string& key,
                             int rows, int cols) {
  ASSIGN_OR_RETURN(const json* node, Member(doc, key));
  if (!node->is_array()) return FieldError(key, "expected an array of rows");
  if (static_cast<int>(node->size()) != rows) {
    return FieldError(key, absl::StrFormat("expected %d rows, got %d", rows,
                                           node->size()));
  }
  Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string path = absl::StrFormat("%s[%d]", key, r);
    ASSIGN_OR_RETURN(std::vector<double> row, Numbers((*node)[r], path));
    if (static_cast<int>(row.size()) != cols) {
      return FieldError(path, absl::StrFormat("expected %d entries, got %d",
                                              cols, row.size()));
    }
    for (int c = 0; c < cols; ++c) out(r, c) = row[c];
  }
  return out;
}

json MatrixToJson(const Matrix& m) { return json(m.ToRows()); }

}  // namespace

absl::StatusOr<FiniteGame> GameFromJson(const json& doc) {
  GameTables tables;
  ASSIGN_OR_RETURN(tables.parameters, Labels(doc, "parameters"));
  ASSIGN_OR_RETURN(tables.data, Labels(doc, "data"));
  ASSIGN_OR_RETURN(tables.bob_decisions, Labels(doc, "bob_decisions"));
  ASSIGN_OR_RETURN(tables.eve_decisions, Labels(doc, "eve_decisions"));
  ASSIGN_OR_RETURN(const json* prior, Member(doc, "prior"));
  ASSIGN_OR_RETURN(tables.prior, Numbers(*prior, "prior"));
  const int nt = static_cast<int>(tables.parameters.size());
  const int nx = static_cast<int>(tables.data.size());
  ASSIGN_OR_RETURN(tables.likelihood, Table(doc, "likelihood", nt, nx));
  ASSIGN_OR_RETURN(
      tables.bob_loss,
      Table(doc, "bob_loss", nt, static_cast<int>(tables.bob_decisions.size())));
  ASSIGN_OR_RETURN(
      tables.eve_loss,
      Table(doc, "eve_loss", nx, static_cast<int>(tables.eve_decisions.size())));
  return FiniteGame::Create(std::move(tables));
}

json GameToJson(const FiniteGame& game) {
  const GameTables& t = game.tables();
  return json{{"parameters", t.parameters},
              {"prior", t.prior},
              {"data", t.data},
              {"likelihood", MatrixToJson(t.likelihood)},
              {"bob_decisions", t.bob_decisions},
              {"eve_decisions", t.eve_decisions},
              {"bob_loss", MatrixToJson(t.bob_loss)},
              {"eve_loss", MatrixToJson(t.eve_loss)}};
}

absl::StatusOr<FiniteMechanism> MechanismFromJson(const json& doc,
                                                  const FiniteGame& game) {
  ASSIGN_OR_RETURN(std::vector<std::string> releases,
                   Labels(doc, "releases"));
  ASSIGN_OR_RETURN(Matrix kernel,
                   Table(doc, "kernel", game.num_data(),
                         static_cast<int>(releases.size())));
  return FiniteMechanism::Create(std::move(releases), std::move(kernel));
}

json MechanismToJson(const FiniteMechanism& mech) {
  return json{{"releases", mech.releases()},
              {"kernel", MatrixToJson(mech.kernel())}};
}

absl::StatusOr<FiniteGame> ParseGame(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return absl::InvalidArgumentError("invalid JSON");
  return GameFromJson(doc);
}

absl::StatusOr<FiniteMechanism> ParseMechanism(std::string_view text,
                                               const FiniteGame& game) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return absl::InvalidArgumentError("invalid JSON");
  return MechanismFromJson(doc, game);
}

}  // namespace bap
