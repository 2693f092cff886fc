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

#include "nwe/constructions.h"

namespace nwe {

namespace {

std::string dims_str(const std::vector<std::size_t> &dims) {
    std::string out;
    for (std::size_t k = 0; k < dims.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(dims[k]);
    }
    return out;
}

// Builds product states factor by factor; parties not set explicitly get |0>.
class StateBuilder {
   public:
    explicit StateBuilder(const SystemShape &shape) : shape_(shape) {
        for (auto d : shape.dims()) {
            locals_.push_back(LocalVector::basis(d, 0));
        }
    }

    StateBuilder &ket(std::size_t party, std::size_t index) {
        locals_.at(party) = LocalVector::basis(shape_.dim(party), index);
        return *this;
    }

    StateBuilder &diff(std::size_t party, std::size_t a, std::size_t b) {
        locals_.at(party) = LocalVector::difference(shape_.dim(party), a, b);
        return *this;
    }

    ProductState build(std::string label) const {
        return ProductState(shape_, locals_, std::move(label));
    }

   private:
    const SystemShape &shape_;
    std::vector<LocalVector> locals_;
};

}  // namespace

std::string group_label(char prefix, std::size_t group, std::size_t index) {
    return std::string(1, prefix) + "_" + std::to_string(group) + "[i=" + std::to_string(index) + "]";
}

ConstructionKind ConstructionKind::equal(std::size_t parties, std::size_t dim) {
    if (parties < 3) {
        throw ConstructionDomainError("equal-dimension family needs n >= 3 parties, got n = " +
                                      std::to_string(parties));
    }
    if (dim < 3) {
        throw ConstructionDomainError("equal-dimension family needs d >= 3, got d = " + std::to_string(dim));
    }
    return ConstructionKind(Tag::EqualDims, std::vector<std::size_t>(parties, dim));
}

ConstructionKind ConstructionKind::general(std::vector<std::size_t> dims) {
    if (dims.size() < 3) {
        throw ConstructionDomainError("general-dimension family needs n >= 3 parties, got n = " +
                                      std::to_string(dims.size()));
    }
    if (dims[0] < 3) {
        throw ConstructionDomainError("general-dimension family needs d_1 >= 3, got dims (" + dims_str(dims) + ")");
    }
    for (std::size_t k = 1; k < dims.size(); k++) {
        if (dims[k] < dims[k - 1]) {
            throw ConstructionDomainError(
                "general-dimension family needs nondecreasing dims 3 <= d_1 <= ... <= d_n, got (" + dims_str(dims) +
                ")");
        }
    }
    return ConstructionKind(Tag::GeneralDims, std::move(dims));
}

StateSet gen_equal(std::size_t parties, std::size_t dim) {
    const auto kind = ConstructionKind::equal(parties, dim);
    const SystemShape shape(kind.dims());
    const std::size_t n = parties;
    std::vector<ProductState> states;
    states.reserve(n * (dim - 1) + 1);

    for (std::size_t i = 1; i < dim; i++) {
        states.push_back(StateBuilder(shape).diff(0, 0, i).ket(n - 1, i).build(group_label('G', 0, i)));
    }
    for (std::size_t g = 1; g < n; g++) {
        for (std::size_t i = 1; i < dim; i++) {
            states.push_back(StateBuilder(shape).ket(g - 1, i).diff(g, 0, i).build(group_label('G', g, i)));
        }
    }
    states.push_back(stopper(shape));
    return StateSet(shape, std::move(states), "equal(n=" + std::to_string(n) + ",d=" + std::to_string(dim) + ")");
}

StateSet gen_general(const std::vector<std::size_t> &dims) {
    const auto kind = ConstructionKind::general(dims);
    const SystemShape shape(dims);
    const std::size_t n = dims.size();
    // d(p) is the dimension of 1-indexed party p.
    auto d = [&](std::size_t p) { return dims[p - 1]; };
    std::vector<ProductState> states;
    states.reserve(static_cast<std::size_t>(expected_size(kind)));

    // B_1: |0-i>_1 |i>_n.
    for (std::size_t i = 1; i < d(1); i++) {
        states.push_back(StateBuilder(shape).diff(0, 0, i).ket(n - 1, i).build(group_label('B', 1, i)));
    }
    // B_g, g in [2, n]: |i>_{g-1} |0-i>_g.
    for (std::size_t g = 2; g <= n; g++) {
        for (std::size_t i = 1; i < d(g - 1); i++) {
            states.push_back(StateBuilder(shape).ket(g - 2, i).diff(g - 1, 0, i).build(group_label('B', g, i)));
        }
    }
    // B_{n+g}, g in [1, n-2]: |1>_g |0-i>_{g+1} |i>_{g+2}, i in [d_g, d_{g+1} - 1].
    for (std::size_t g = 1; g + 2 <= n; g++) {
        for (std::size_t i = d(g); i < d(g + 1); i++) {
            states.push_back(
                StateBuilder(shape).ket(g - 1, 1).diff(g, 0, i).ket(g + 1, i).build(group_label('B', n + g, i)));
        }
    }
    // B_{2n-1}: |m>_1 |1>_{n-1} |(i-1)-i>_n, m = 2 for even i and 1 for odd i.
    for (std::size_t i = d(n - 1); i < d(n); i++) {
        const std::size_t m = i % 2 == 0 ? 2 : 1;
        states.push_back(
            StateBuilder(shape).ket(0, m).ket(n - 2, 1).diff(n - 1, i - 1, i).build(group_label('B', 2 * n - 1, i)));
    }
    // B_{2n}: |0-2>_1 |0-2>_{n-1} |i>_n, i in [d_1, d_n - 1].
    for (std::size_t i = d(1); i < d(n); i++) {
        states.push_back(
            StateBuilder(shape).diff(0, 0, 2).diff(n - 2, 0, 2).ket(n - 1, i).build(group_label('B', 2 * n, i)));
    }
    states.push_back(stopper(shape));
    return StateSet(shape, std::move(states), "general(" + dims_str(dims) + ")");
}

StateSet generate(const ConstructionKind &kind) {
    if (kind.tag() == ConstructionKind::Tag::EqualDims) {
        return gen_equal(kind.parties(), kind.dims().front());
    }
    return gen_general(kind.dims());
}

std::int64_t expected_size(const ConstructionKind &kind) {
    const auto &dims = kind.dims();
    const auto n = static_cast<std::int64_t>(dims.size());
    if (kind.tag() == ConstructionKind::Tag::EqualDims) {
        return n * (static_cast<std::int64_t>(dims.front()) - 1) + 1;
    }
    std::int64_t total = 0;
    for (std::size_t k = 1; k + 1 < dims.size(); k++) {
        total += static_cast<std::int64_t>(dims[k]);
    }
    return total + 2 * static_cast<std::int64_t>(dims.back()) - n + 1;
}

SizeReport prior_sizes(const std::vector<std::size_t> &dims) {
    if (dims.size() < 2) {
        throw DimensionError("size comparison needs at least 2 parties");
    }
    SizeReport report;
    report.dims = dims;
    report.jiang = 1;
    for (auto d : dims) {
        report.jiang += 2 * static_cast<std::int64_t>(d) - 3;
    }
    if (dims.size() == 3) {
        report.wang = 2 * static_cast<std::int64_t>(dims[0] + dims[2]) - 3;
    }
    if (dims.size() == 2) {
        report.zhang = 2 * static_cast<std::int64_t>(dims.back()) - 1;
    }
    try {
        report.ours = expected_size(ConstructionKind::general(dims));
    } catch (const ConstructionDomainError &) {
        report.ours.reset();
    }
    return report;
}

}  // namespace nwe
