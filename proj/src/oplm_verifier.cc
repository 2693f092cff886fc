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

#include "nwe/oplm_verifier.h"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace nwe {

namespace {

bool is_zero_vector(const std::vector<Rational> &v) {
    return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0; });
}

// Reduced row echelon form built one row at a time. The RREF of a row space is unique, so
// the result does not depend on insertion order.
class RowReducer {
   public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {
    }

    void add(std::vector<Rational> row) {
        for (std::size_t k = 0; k < rows_.size(); k++) {
            const Rational factor = row[pivots_[k]];
            if (factor != 0) {
                subtract_multiple(row, rows_[k], factor);
            }
        }
        std::size_t pivot = 0;
        while (pivot < cols_ && row[pivot] == 0) {
            pivot++;
        }
        if (pivot == cols_) {
            return;
        }
        const Rational lead = row[pivot];
        for (auto &x : row) {
            if (x != 0) {
                x /= lead;
            }
        }
        for (auto &r : rows_) {
            const Rational factor = r[pivot];
            if (factor != 0) {
                subtract_multiple(r, row, factor);
            }
        }
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, pivot);
        rows_.insert(rows_.begin() + pos, std::move(row));
    }

    std::size_t rank() const noexcept {
        return rows_.size();
    }

    std::vector<std::vector<Rational>> kernel_basis() const {
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots_) {
            is_pivot[p] = true;
        }
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < cols_; free++) {
            if (is_pivot[free]) {
                continue;
            }
            std::vector<Rational> v(cols_);
            v[free] = 1;
            for (std::size_t k = 0; k < rows_.size(); k++) {
                v[pivots_[k]] = -rows_[k][free];
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

   private:
    static void subtract_multiple(std::vector<Rational> &target, const std::vector<Rational> &source,
                                  const Rational &factor) {
        for (std::size_t c = 0; c < source.size(); c++) {
            if (source[c] != 0) {
                target[c] -= factor * source[c];
            }
        }
    }

    std::size_t cols_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace

std::size_t symmetric_coord(std::size_t dim, std::size_t a, std::size_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    if (b >= dim) {
        throw std::out_of_range("matrix index out of range");
    }
    return a * dim - a * (a - 1) / 2 + (b - a);
}

std::size_t antisymmetric_coord(std::size_t dim, std::size_t a, std::size_t b) {
    if (a >= b || b >= dim) {
        throw std::out_of_range("antisymmetric coordinate needs a < b < dim");
    }
    return dim * (dim + 1) / 2 + a * (dim - 1) - a * (a - 1) / 2 + (b - a - 1);
}

std::vector<Rational> identity_coordinates(std::size_t dim) {
    std::vector<Rational> v(dim * dim);
    for (std::size_t a = 0; a < dim; a++) {
        v[symmetric_coord(dim, a, a)] = 1;
    }
    return v;
}

MeasurementConstraintSystem assemble(const StateSet &set, std::size_t t) {
    require_pairwise_orthogonal(set);
    if (t >= set.shape().parties()) {
        throw std::out_of_range("party index " + std::to_string(t) + " out of range");
    }
    const std::size_t dim = set.shape().dim(t);
    MeasurementConstraintSystem system{t, dim, {}};
    for (std::size_t i = 0; i < set.size(); i++) {
        for (std::size_t j = i + 1; j < set.size(); j++) {
            const auto factors = inner_factors(set[i], set[j]);
            bool constrained = true;
            for (std::size_t k = 0; k < factors.size(); k++) {
                if (k != t && factors[k] == 0) {
                    constrained = false;
                    break;
                }
            }
            if (!constrained) {
                continue;
            }
            const auto &u = set[i].local(t);
            const auto &v = set[j].local(t);
            std::vector<Integer> sym(dim * dim);
            std::vector<Integer> anti(dim * dim);
            for (auto a : u.support()) {
                for (auto b : v.support()) {
                    const Integer c = Integer(u[a]) * v[b];
                    sym[symmetric_coord(dim, a, b)] += c;
                    if (a < b) {
                        anti[antisymmetric_coord(dim, a, b)] += c;
                    } else if (a > b) {
                        anti[antisymmetric_coord(dim, b, a)] -= c;
                    }
                }
            }
            Integer trace = 0;
            for (std::size_t a = 0; a < dim; a++) {
                trace += sym[symmetric_coord(dim, a, a)];
            }
            if (trace != 0) {
                throw std::logic_error("constraint row from states (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is violated by the identity");
            }
            auto nonzero = [](const std::vector<Integer> &row) {
                return std::any_of(row.begin(), row.end(), [](const Integer &x) { return x != 0; });
            };
            if (nonzero(sym)) {
                system.rows.push_back({i, j, ConstraintRow::Part::Symmetric, std::move(sym)});
            }
            if (nonzero(anti)) {
                system.rows.push_back({i, j, ConstraintRow::Part::Antisymmetric, std::move(anti)});
            }
        }
    }
    return system;
}

NullspaceResult nullspace(const MeasurementConstraintSystem &system) {
    const std::size_t cols = system.unknowns();
    RowReducer reducer(cols);
    for (const auto &row : system.rows) {
        if (row.coeffs.size() != cols) {
            throw DimensionError("constraint row has " + std::to_string(row.coeffs.size()) + " coefficients, expected " +
                                 std::to_string(cols));
        }
        reducer.add(std::vector<Rational>(row.coeffs.begin(), row.coeffs.end()));
    }
    NullspaceResult result{reducer.rank(), reducer.kernel_basis()};
    if (result.rank + result.basis.size() != cols) {
        throw std::logic_error("rank-nullity violated in nullspace computation");
    }
    return result;
}

HermitianMatrix to_hermitian(std::size_t dim, const std::vector<Rational> &coords) {
    if (coords.size() != dim * dim) {
        throw DimensionError("expected " + std::to_string(dim * dim) + " coordinates");
    }
    HermitianMatrix m(dim, std::vector<ComplexRational>(dim));
    for (std::size_t a = 0; a < dim; a++) {
        m[a][a].re = coords[symmetric_coord(dim, a, a)];
        for (std::size_t b = a + 1; b < dim; b++) {
            const auto &s = coords[symmetric_coord(dim, a, b)];
            const auto &x = coords[antisymmetric_coord(dim, a, b)];
            m[a][b] = {s, x};
            m[b][a] = {s, -x};
        }
    }
    return m;
}

TrivialityVerdict verdict(const StateSet &set, std::size_t t) {
    const auto system = assemble(set, t);
    const auto kernel = nullspace(system);
    TrivialityVerdict out;
    out.party = t;
    out.nullspace_dim = kernel.basis.size();
    if (out.nullspace_dim == 1) {
        out.status = TrivialityVerdict::Status::Trivial;
        return out;
    }
    out.status = TrivialityVerdict::Status::Nontrivial;
    const std::size_t dim = system.dim;
    const auto identity = identity_coordinates(dim);
    for (const auto &b : kernel.basis) {
        Rational trace = 0;
        for (std::size_t a = 0; a < dim; a++) {
            trace += b[symmetric_coord(dim, a, a)];
        }
        const Rational shift = trace / Rational(dim);
        auto w = b;
        for (std::size_t c = 0; c < w.size(); c++) {
            w[c] -= shift * identity[c];
        }
        if (!is_zero_vector(w)) {
            out.witness = to_hermitian(dim, w);
            break;
        }
    }
    if (!out.witness) {
        throw std::logic_error("nullspace of dimension > 1 has no component orthogonal to the identity");
    }
    return out;
}

std::vector<TrivialityVerdict> verify_all(const StateSet &set) {
    require_pairwise_orthogonal(set);
    std::vector<std::future<TrivialityVerdict>> jobs;
    for (std::size_t t = 0; t < set.shape().parties(); t++) {
        jobs.push_back(std::async(std::launch::async, [&set, t] { return verdict(set, t); }));
    }
    std::vector<TrivialityVerdict> out;
    out.reserve(jobs.size());
    for (auto &job : jobs) {
        out.push_back(job.get());
    }
    return out;
}

bool certified_nonlocal(const std::vector<TrivialityVerdict> &verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const TrivialityVerdict &v) { return v.trivial(); });
}

}  // namespace nwe
