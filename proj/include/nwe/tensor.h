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

#ifndef NWE_TENSOR_H
#define NWE_TENSOR_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nwe/arith.h"
#include "nwe/errors.h"

namespace nwe {

inline constexpr std::size_t kDefaultDimCap = 64;

/// Per-party dimension cap: NWE_DIM_CAP when set to a positive integer, else 64.
std::size_t dimension_cap();

/// Dimension vector (d_1, ..., d_n) of a multipartite qudit system.
class SystemShape {
   public:
    /// Requires n >= 2 and 2 <= d_k <= dimension_cap(). Throws DimensionError otherwise.
    explicit SystemShape(std::vector<std::size_t> dims);
    SystemShape(std::initializer_list<std::size_t> dims) : SystemShape(std::vector<std::size_t>(dims)) {
    }

    std::size_t parties() const noexcept {
        return dims_.size();
    }
    std::size_t dim(std::size_t party) const {
        return dims_.at(party);
    }
    const std::vector<std::size_t> &dims() const noexcept {
        return dims_;
    }
    /// Product of all dimensions.
    std::size_t total_dim() const noexcept;

    std::string str() const;

    bool operator==(const SystemShape &) const = default;

   private:
    std::vector<std::size_t> dims_;
};

/// Integer coefficient vector sum_i c_i |i> of one party. Never all zero.
class LocalVector {
   public:
    /// Throws DimensionError on an empty or all-zero vector.
    explicit LocalVector(std::vector<std::int64_t> coeffs);
    LocalVector(std::initializer_list<std::int64_t> coeffs)
        : LocalVector(std::vector<std::int64_t>(coeffs)) {
    }

    /// |index> in dimension dim.
    static LocalVector basis(std::size_t dim, std::size_t index);
    /// |a> - |b> in dimension dim.
    static LocalVector difference(std::size_t dim, std::size_t a, std::size_t b);
    /// |0> + |1> + ... + |dim-1>.
    static LocalVector all_ones(std::size_t dim);

    std::size_t size() const noexcept {
        return coeffs_.size();
    }
    std::int64_t operator[](std::size_t i) const {
        return coeffs_[i];
    }
    std::span<const std::int64_t> coeffs() const noexcept {
        return coeffs_;
    }
    /// Indices of the nonzero coefficients, ascending.
    std::vector<std::size_t> support() const;

    bool operator==(const LocalVector &) const = default;

   private:
    std::vector<std::int64_t> coeffs_;
};

/// Unnormalized product state |v_1> (x) ... (x) |v_n>.
class ProductState {
   public:
    /// Throws DimensionError when locals do not match the shape.
    ProductState(SystemShape shape, std::vector<LocalVector> locals, std::string label = {});

    const SystemShape &shape() const noexcept {
        return shape_;
    }
    const std::vector<LocalVector> &locals() const noexcept {
        return locals_;
    }
    const LocalVector &local(std::size_t party) const {
        return locals_.at(party);
    }
    const std::string &label() const noexcept {
        return label_;
    }

    bool operator==(const ProductState &) const = default;

   private:
    SystemShape shape_;
    std::vector<LocalVector> locals_;
    std::string label_;
};

/// Ordered collection of product states over one shape.
class StateSet {
   public:
    /// Throws DimensionError if any state has a different shape.
    StateSet(SystemShape shape, std::vector<ProductState> states, std::string provenance = "user");

    const SystemShape &shape() const noexcept {
        return shape_;
    }
    const std::vector<ProductState> &states() const noexcept {
        return states_;
    }
    const ProductState &operator[](std::size_t i) const {
        return states_.at(i);
    }
    std::size_t size() const noexcept {
        return states_.size();
    }
    bool empty() const noexcept {
        return states_.empty();
    }
    const std::string &provenance() const noexcept {
        return provenance_;
    }

    /// Copy without state `index`.
    StateSet without(std::size_t index) const;

   private:
    SystemShape shape_;
    std::vector<ProductState> states_;
    std::string provenance_;
};

/// Exact <u|v> of two real integer vectors.
Integer local_inner(const LocalVector &u, const LocalVector &v);

/// Per-party factors of <a|b>; their product is the full inner product.
std::vector<Integer> inner_factors(const ProductState &a, const ProductState &b);

bool are_orthogonal(const ProductState &a, const ProductState &b);

/// All non-orthogonal unordered pairs (i < j), sorted lexicographically.
std::vector<IndexPair> check_pairwise_orthogonality(const StateSet &set);

/// Throws ValidationError listing the violating pairs when the set is not pairwise orthogonal.
void require_pairwise_orthogonal(const StateSet &set);

/// The all-ones product state, labelled "S".
ProductState stopper(const SystemShape &shape);

/// True when every coefficient of every party equals +1.
bool is_stopper(const ProductState &state);

/// Renders "|0-1>|0>|1>"-style text for small-coefficient states, falling back to raw vectors.
std::string ket_str(const ProductState &state);

}  // namespace nwe

#endif
