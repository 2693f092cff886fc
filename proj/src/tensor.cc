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

#include "nwe/tensor.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nwe {

namespace {

std::string pairs_str(const std::vector<IndexPair> &pairs) {
    std::ostringstream ss;
    ss << "state set is not pairwise orthogonal; violating pairs:";
    for (const auto &[i, j] : pairs) {
        ss << " (" << i << "," << j << ")";
    }
    return ss.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<IndexPair> violations)
    : std::runtime_error(pairs_str(violations)), violations_(std::move(violations)) {
}

std::size_t dimension_cap() {
    const char *env = std::getenv("NWE_DIM_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultDimCap;
    }
    char *end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (*end != '\0' || cap < 2) {
        return kDefaultDimCap;
    }
    return static_cast<std::size_t>(cap);
}

SystemShape::SystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) {
        throw DimensionError("a system needs at least 2 parties, got " + std::to_string(dims_.size()));
    }
    const std::size_t cap = dimension_cap();
    for (std::size_t k = 0; k < dims_.size(); k++) {
        if (dims_[k] < 2) {
            throw DimensionError(
                "party " + std::to_string(k) + " has dimension " + std::to_string(dims_[k]) + "; need d >= 2");
        }
        if (dims_[k] > cap) {
            throw DimensionError(
                "party " + std::to_string(k) + " has dimension " + std::to_string(dims_[k]) +
                " above the cap " + std::to_string(cap) + " (set NWE_DIM_CAP to raise it)");
        }
    }
}

std::size_t SystemShape::total_dim() const noexcept {
    std::size_t total = 1;
    for (auto d : dims_) {
        total *= d;
    }
    return total;
}

std::string SystemShape::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < dims_.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(dims_[k]);
    }
    return out + ")";
}

LocalVector::LocalVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DimensionError("local vector must have at least one coefficient");
    }
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; })) {
        throw DimensionError("local vector must have at least one nonzero coefficient");
    }
}

LocalVector LocalVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index " + std::to_string(index) + " out of range for dimension " +
                             std::to_string(dim));
    }
    std::vector<std::int64_t> c(dim, 0);
    c[index] = 1;
    return LocalVector(std::move(c));
}

LocalVector LocalVector::difference(std::size_t dim, std::size_t a, std::size_t b) {
    if (a >= dim || b >= dim || a == b) {
        throw DimensionError("invalid difference |" + std::to_string(a) + "-" + std::to_string(b) +
                             "> in dimension " + std::to_string(dim));
    }
    std::vector<std::int64_t> c(dim, 0);
    c[a] = 1;
    c[b] = -1;
    return LocalVector(std::move(c));
}

LocalVector LocalVector::all_ones(std::size_t dim) {
    return LocalVector(std::vector<std::int64_t>(dim, 1));
}

std::vector<std::size_t> LocalVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        if (coeffs_[i] != 0) {
            out.push_back(i);
        }
    }
    return out;
}

ProductState::ProductState(SystemShape shape, std::vector<LocalVector> locals, std::string label)
    : shape_(std::move(shape)), locals_(std::move(locals)), label_(std::move(label)) {
    if (locals_.size() != shape_.parties()) {
        throw DimensionError("product state has " + std::to_string(locals_.size()) + " factors but shape " +
                             shape_.str() + " has " + std::to_string(shape_.parties()) + " parties");
    }
    for (std::size_t k = 0; k < locals_.size(); k++) {
        if (locals_[k].size() != shape_.dim(k)) {
            throw DimensionError("factor " + std::to_string(k) + " has length " + std::to_string(locals_[k].size()) +
                                 " but party dimension is " + std::to_string(shape_.dim(k)));
        }
    }
}

StateSet::StateSet(SystemShape shape, std::vector<ProductState> states, std::string provenance)
    : shape_(std::move(shape)), states_(std::move(states)), provenance_(std::move(provenance)) {
    for (std::size_t i = 0; i < states_.size(); i++) {
        if (states_[i].shape() != shape_) {
            throw DimensionError("state " + std::to_string(i) + " has shape " + states_[i].shape().str() +
                                 " but the set has shape " + shape_.str());
        }
    }
}

StateSet StateSet::without(std::size_t index) const {
    std::vector<ProductState> kept;
    kept.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); i++) {
        if (i != index) {
            kept.push_back(states_[i]);
        }
    }
    return StateSet(shape_, std::move(kept), provenance_);
}

Integer local_inner(const LocalVector &u, const LocalVector &v) {
    if (u.size() != v.size()) {
        throw DimensionError("inner product of vectors with lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < u.size(); i++) {
        if (u[i] != 0 && v[i] != 0) {
            acc += Integer(u[i]) * v[i];
        }
    }
    return acc;
}

std::vector<Integer> inner_factors(const ProductState &a, const ProductState &b) {
    if (a.shape() != b.shape()) {
        throw DimensionError("shape mismatch: " + a.shape().str() + " vs " + b.shape().str());
    }
    std::vector<Integer> out;
    out.reserve(a.locals().size());
    for (std::size_t k = 0; k < a.locals().size(); k++) {
        out.push_back(local_inner(a.local(k), b.local(k)));
    }
    return out;
}

bool are_orthogonal(const ProductState &a, const ProductState &b) {
    const auto factors = inner_factors(a, b);
    return std::any_of(factors.begin(), factors.end(), [](const Integer &f) { return f == 0; });
}

std::vector<IndexPair> check_pairwise_orthogonality(const StateSet &set) {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < set.size(); i++) {
        for (std::size_t j = i + 1; j < set.size(); j++) {
            if (!are_orthogonal(set[i], set[j])) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

void require_pairwise_orthogonal(const StateSet &set) {
    auto violations = check_pairwise_orthogonality(set);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

ProductState stopper(const SystemShape &shape) {
    std::vector<LocalVector> locals;
    locals.reserve(shape.parties());
    for (auto d : shape.dims()) {
        locals.push_back(LocalVector::all_ones(d));
    }
    return ProductState(shape, std::move(locals), "S");
}

bool is_stopper(const ProductState &state) {
    return std::all_of(state.locals().begin(), state.locals().end(), [](const LocalVector &v) {
        return std::all_of(v.coeffs().begin(), v.coeffs().end(), [](std::int64_t c) { return c == 1; });
    });
}

namespace {

// "0-2", "1", "0+1+2", or "" when the vector is not a signed 0/1 combination.
std::string local_ket_body(const LocalVector &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        const auto c = v[i];
        if (c == 0) {
            continue;
        }
        if (c != 1 && c != -1) {
            return {};
        }
        if (out.empty()) {
            if (c == -1) {
                out += '-';
            }
        } else {
            out += c == 1 ? '+' : '-';
        }
        out += std::to_string(i);
    }
    return out;
}

}  // namespace

std::string ket_str(const ProductState &state) {
    std::string out;
    for (const auto &v : state.locals()) {
        auto body = local_ket_body(v);
        if (body.empty()) {
            out += '[';
            for (std::size_t i = 0; i < v.size(); i++) {
                if (i) {
                    out += ',';
                }
                out += std::to_string(v[i]);
            }
            out += ']';
        } else {
            out += '|' + body + '>';
        }
    }
    return out;
}

}  // namespace nwe
