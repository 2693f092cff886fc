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

#ifndef NWE_CONSTRUCTIONS_H
#define NWE_CONSTRUCTIONS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwe/tensor.h"

namespace nwe {

/// Which nonlocal family to build, with its parameters.
///
/// EqualDims: n parties of dimension d each, n >= 3 and d >= 3.
/// GeneralDims: n >= 3 parties with 3 <= d_1 <= d_2 <= ... <= d_n.
class ConstructionKind {
   public:
    enum class Tag { EqualDims, GeneralDims };

    /// Throws ConstructionDomainError naming the violated bound.
    static ConstructionKind equal(std::size_t parties, std::size_t dim);
    /// Throws ConstructionDomainError naming the violated bound.
    static ConstructionKind general(std::vector<std::size_t> dims);

    Tag tag() const noexcept {
        return tag_;
    }
    /// Expanded dimension vector (d repeated n times for EqualDims).
    const std::vector<std::size_t> &dims() const noexcept {
        return dims_;
    }
    std::size_t parties() const noexcept {
        return dims_.size();
    }

   private:
    ConstructionKind(Tag tag, std::vector<std::size_t> dims) : tag_(tag), dims_(std::move(dims)) {
    }

    Tag tag_;
    std::vector<std::size_t> dims_;
};

/// Set sizes of this family and of earlier constructions for the same system.
struct SizeReport {
    std::vector<std::size_t> dims;
    /// Present only when dims satisfy n >= 3 and 3 <= d_1 <= ... <= d_n.
    std::optional<std::int64_t> ours;
    /// sum_i (2 d_i - 3) + 1, any n.
    std::int64_t jiang = 0;
    /// 2 (d_1 + d_3) - 3, tripartite only.
    std::optional<std::int64_t> wang;
    /// 2 d_n - 1, bipartite only.
    std::optional<std::int64_t> zhang;
};

/// n(d-1)+1 states over (d,...,d): groups G_0..G_{n-1} of d-1 states each, then the stopper.
StateSet gen_equal(std::size_t parties, std::size_t dim);

/// sum_{i=2}^{n-1} d_i + 2 d_n - n + 1 states in groups B_1..B_{2n+1}.
StateSet gen_general(const std::vector<std::size_t> &dims);

/// Dispatches on the kind's tag.
StateSet generate(const ConstructionKind &kind);

/// Closed-form set size for the kind.
std::int64_t expected_size(const ConstructionKind &kind);

/// Size comparison for an arbitrary dims vector (length >= 2, else DimensionError).
SizeReport prior_sizes(const std::vector<std::size_t> &dims);

/// "B_3[i=2]" style label.
std::string group_label(char prefix, std::size_t group, std::size_t index);

}  // namespace nwe

#endif
