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

#ifndef NWE_ERRORS_H
#define NWE_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nwe {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Mismatched vector lengths or shapes, or a dimension outside the allowed range.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Construction parameters outside the hypotheses of the requested family.
struct ConstructionDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A malformed or schema-violating input document.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A state set that is not pairwise orthogonal.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(std::vector<IndexPair> violations);

    const std::vector<IndexPair> &violations() const noexcept {
        return violations_;
    }

   private:
    std::vector<IndexPair> violations_;
};

}  // namespace nwe

#endif
