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

#ifndef NWE_OPLM_VERIFIER_H
#define NWE_OPLM_VERIFIER_H

#include <cstddef>
#include <optional>
#include <vector>

#include "nwe/arith.h"
#include "nwe/tensor.h"

namespace nwe {

// A Hermitian d x d matrix E = S + iA is coordinatized by d^2 reals: the symmetric part
// S[a][b] for a <= b (lexicographic), followed by the antisymmetric part A[a][b] for a < b.

std::size_t symmetric_coord(std::size_t dim, std::size_t a, std::size_t b);
std::size_t antisymmetric_coord(std::size_t dim, std::size_t a, std::size_t b);
/// Coordinates of the d x d identity.
std::vector<Rational> identity_coordinates(std::size_t dim);

struct ConstraintRow {
    enum class Part { Symmetric, Antisymmetric };

    std::size_t first_state = 0;
    std::size_t second_state = 0;
    Part part = Part::Symmetric;
    std::vector<Integer> coeffs;
};

/// Linear conditions on party t's Hermitian matrix: u^T E v = 0 for every state pair whose
/// other-party overlaps are all nonzero, split into real and imaginary parts.
struct MeasurementConstraintSystem {
    std::size_t party = 0;
    std::size_t dim = 0;
    std::vector<ConstraintRow> rows;

    std::size_t unknowns() const noexcept {
        return dim * dim;
    }
};

struct NullspaceResult {
    std::size_t rank = 0;
    /// One vector per free column, in column order.
    std::vector<std::vector<Rational>> basis;
};

struct ComplexRational {
    Rational re;
    Rational im;

    bool operator==(const ComplexRational &) const = default;
};

using HermitianMatrix = std::vector<std::vector<ComplexRational>>;

struct TrivialityVerdict {
    enum class Status { Trivial, Nontrivial };

    std::size_t party = 0;
    Status status = Status::Trivial;
    std::size_t nullspace_dim = 0;
    /// Present iff Nontrivial: satisfies every constraint and is orthogonal to the identity.
    std::optional<HermitianMatrix> witness;

    bool trivial() const noexcept {
        return status == Status::Trivial;
    }
};

/// Throws ValidationError for non-orthogonal sets and std::logic_error if a row rejects the identity.
MeasurementConstraintSystem assemble(const StateSet &set, std::size_t t);

/// Exact reduced-row-echelon nullspace. Asserts rank + basis size == unknowns.
NullspaceResult nullspace(const MeasurementConstraintSystem &system);

/// Rebuilds the Hermitian matrix from its d^2 coordinates.
HermitianMatrix to_hermitian(std::size_t dim, const std::vector<Rational> &coords);

TrivialityVerdict verdict(const StateSet &set, std::size_t t);

/// One verdict per party; parties are solved concurrently, results in party order.
std::vector<TrivialityVerdict> verify_all(const StateSet &set);

/// True when every party is Trivial.
bool certified_nonlocal(const std::vector<TrivialityVerdict> &verdicts);

}  // namespace nwe

#endif
