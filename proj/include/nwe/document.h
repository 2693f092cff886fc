// Copyright 2026 The NWE Authors
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

#ifndef NWE_DOCUMENT_H
#define NWE_DOCUMENT_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nwe/constructions.h"
#include "nwe/lemma_engine.h"
#include "nwe/oplm_verifier.h"
#include "nwe/tensor.h"

namespace nwe {

inline constexpr const char *kFormatVersion = "nwe/1";

/// {"dims", "provenance", "states": [{"label", "locals"}], "version": "nwe/1"}.
nlohmann::json to_document(const StateSet &set);

/// Validates the schema and the shape invariants. Throws InputError.
StateSet from_document(const nlohmann::json &doc);

/// Parses text into a StateSet; syntax errors report line and column. Throws InputError.
StateSet parse_document(std::string_view text);

/// Sorted keys, two-space indent, trailing LF.
std::string canonical_dump(const nlohmann::json &value);

nlohmann::json to_json(const SizeReport &report);
nlohmann::json to_json(const Certificate &cert, std::size_t party);
nlohmann::json to_json(const TrivialityVerdict &verdict);
nlohmann::json to_json(const HermitianMatrix &matrix);

}  // namespace nwe

#endif
