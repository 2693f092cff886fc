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

#ifndef NWE_LEMMA_ENGINE_H
#define NWE_LEMMA_ENGINE_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nwe/arith.h"
#include "nwe/tensor.h"

namespace nwe {

/// Entry m[row, col] of party t's measurement matrix E_t.
struct EntryRef {
    std::size_t party = 0;
    std::size_t row = 0;
    std::size_t col = 0;

    bool operator==(const EntryRef &) const = default;
};

enum class Rule { Lemma1, Lemma2, UnitPropagation };

const char *rule_name(Rule rule);

/// A derived fact about one party's measurement matrix, with the state pair that forced it.
///
/// ZeroEntry: m[a,b] = 0 (and by hermiticity m[b,a] = 0), a != b.
/// DiagonalEqual: m[a,a] = m[b,b], a != b.
struct Fact {
    enum class Kind { ZeroEntry, DiagonalEqual };

    Kind kind = Kind::ZeroEntry;
    std::size_t party = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t first_state = 0;
    std::size_t second_state = 0;
    Rule rule = Rule::Lemma1;

    EntryRef entry() const {
        return {party, a, b};
    }

    bool operator==(const Fact &) const = default;
};

/// sum_k coeff_k * m[row_k, col_k] = 0 on one party's matrix.
struct ConstraintTerm {
    std::size_t row = 0;
    std::size_t col = 0;
    Integer coeff;
};

struct PairConstraint {
    std::size_t party = 0;
    std::size_t first_state = 0;
    std::size_t second_state = 0;
    std::vector<ConstraintTerm> terms;
};

/// Symmetric record of which off-diagonal entries of one party's matrix are known to vanish.
class ZeroKnowledge {
   public:
    explicit ZeroKnowledge(std::size_t dim) : dim_(dim), known_(dim * dim, false) {
    }

    std::size_t dim() const noexcept {
        return dim_;
    }
    /// Diagonal entries are never known zero.
    bool is_zero(std::size_t a, std::size_t b) const;
    /// Returns false when the entry was already known.
    bool mark_zero(std::size_t a, std::size_t b);
    bool all_off_diagonal_zero() const;
    /// Unordered pairs (a < b) not yet known zero.
    std::vector<IndexPair> missing() const;

   private:
    std::size_t dim_;
    std::vector<bool> known_;
};

/// Outcome of trying Lemma 2 on one state against the stopper.
struct Lemma2Result {
    enum class Status {
        Derived,
        /// The state's local vector or other-party overlaps do not fit the rule.
        NoMatch,
        /// Off-diagonal entries are not all known zero, or the partner is not a stopper.
        Inapplicable,
    };
    Status status = Status::NoMatch;
    std::optional<Fact> fact;
};

struct PartyConclusion {
    bool trivial = false;
    /// Off-diagonal pairs (a < b) with no zero fact.
    std::vector<IndexPair> missing_zeros;
    /// Equivalence classes of diagonal indices under the derived equalities.
    std::vector<std::vector<std::size_t>> diagonal_classes;
};

struct Certificate {
    SystemShape shape;
    /// State labels used when rendering; unlabelled states appear as "#<index>".
    std::vector<std::string> labels;
    /// Party-major, then derivation order.
    std::vector<Fact> facts;
    std::vector<PartyConclusion> conclusions;

    bool all_trivial() const;
    /// Facts of one party in derivation order.
    std::vector<Fact> facts_for(std::size_t party) const;
};

/// Orthogonality-preservation constraint of states i and j on party t, or nullopt when the
/// pair is already orthogonal on some other party. Throws std::out_of_range on bad indices
/// and std::invalid_argument when i == j.
std::optional<PairConstraint> pair_constraint(const StateSet &set, std::size_t i, std::size_t j, std::size_t t);

/// Lemma 1: both party-t vectors have single support {a}, {b} with a != b, so m[a,b] = 0.
std::optional<Fact> lemma1_zero(const StateSet &set, std::size_t i, std::size_t j, std::size_t t);

/// Lemma 2: state i has party-t vector |a> - |b> and overlaps the stopper on every other party.
Lemma2Result lemma2_diagonal(
    const StateSet &set, std::size_t i, std::size_t stopper_index, std::size_t t, const ZeroKnowledge &known);

/// Runs the zero-entry fixpoint and then the diagonal rules on every party.
/// Throws ValidationError when the set is not pairwise orthogonal.
Certificate derive_certificate(const StateSet &set);

std::string render_fact(const Fact &fact, const std::vector<std::string> &labels);

/// One line per fact, then one conclusion line per party. Ends with a newline.
std::string render_certificate(const Certificate &cert);

}  // namespace nwe

#endif
