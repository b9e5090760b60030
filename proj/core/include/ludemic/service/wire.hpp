// Copyright 2026 The Ludemic Authors
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

#ifndef LUDEMIC_SERVICE_WIRE_HPP_
#define LUDEMIC_SERVICE_WIRE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "ludemic/corpus.hpp"
#include "ludemic/game.hpp"
#include "ludemic/service/session.hpp"

// JSON encoding of the service's requests and responses. Field names are
// documented in docs/api.md.
namespace ludemic::service {

using Json = nlohmann::json;

Json GeometryJson(const Game& game);
Json StateJson(const SessionView& view);
Json MoveJson(const Game& game, const Move& move);
Json ScoresJson(const ScoreVector& scores);
Json CatalogJson(Corpus& corpus);
Json ErrorJson(const std::string& code, const std::string& message);

// Parses a create-session body. Throws ServiceError("bad-request").
SessionConfig ParseSessionConfig(const Json& body);
Json ControllerJson(const Controller& c);

// 64-bit hashes travel as 16 hex digits; JSON numbers lose precision.
std::string HashString(std::uint64_t hash);

}  // namespace ludemic::service

#endif  // LUDEMIC_SERVICE_WIRE_HPP_
