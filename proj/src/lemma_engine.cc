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

#include "nwe/lemma_engine.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nwe {

namespace {

void check_indices(const StateSet &set, std::size_t i, std::size_t j, std::size_t t) {
    if (i >= set.size() || j >= set.size()) {
        throw std::out_of_range("state index out of range for a set of " + std::to_string(set.size()) + " states");
    }
    if (t >= set.shape().parties()) {
        throw std::out_of_range("party index " + std::to_string(t) + " out of range");
    }
    if (i == j) {
        throw std::invalid_argument("a pair constraint needs two distinct states");
    }
}

PairConstraint expand_constraint(const StateSet &set, std::size_t i, std::size_t j, std::size_t t) {
    const auto &u = set[i].local(t);
    const auto &v = set[j].local(t);
    PairConstraint c{t, i, j, {}};
    for (auto a : u.support()) {
        for (auto b : v.support()) {
            c.terms.push_back({a, b, Integer(u[a]) * v[b]});
        }
    }
    return c;
}

std::optional<std::size_t> single_support(const LocalVector &v) {
    auto s = v.support();
    if (s.size() != 1) {
        return std::nullopt;
    }
    return s.front();
}

class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }
    std::vector<std::vector<std::size_t>> classes() {
        std::vector<std::vector<std::size_t>> by_root(parent_.size());
        for (std::size_t x = 0; x < parent_.size(); x++) {
            by_root[find(x)].push_back(x);
        }
        std::vector<std::vector<std::size_t>> out;
        for (auto &c : by_root) {
            if (!c.empty()) {
                out.push_back(std::move(c));
            }
        }
        return out;
    }

   private:
    std::vector<std::size_t> parent_;
};

// The party whose matrix a pair constrains: the unique party with a vanishing overlap.
// Pairs orthogonal on two or more parties constrain nothing.
std::vector<std::optional<std::size_t>> constrained_parties(const StateSet &set) {
    const std::size_t m = set.size();
    std::vector<std::optional<std::size_t>> out(m * m);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = i + 1; j < m; j++) {
            const auto factors = inner_factors(set[i], set[j]);
            std::optional<std::size_t> zero_at;
            std::size_t zeros = 0;
            for (std::size_t k = 0; k < factors.size(); k++) {
                if (factors[k] == 0) {
                    zeros++;
                    zero_at = k;
                }
            }
            if (zeros == 1) {
                out[i * m + j] = out[j * m + i] = zero_at;
            }
        }
    }
    return out;
}

PartyConclusion derive_party(const StateSet &set, std::size_t t,
                             const std::vector<std::optional<std::size_t>> &constrains, std::vector<Fact> &facts) {
    const std::size_t m = set.size();
    const std::size_t dim = set.shape().dim(t);
    ZeroKnowledge known(dim);

    std::vector<PairConstraint> constraints;
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = i + 1; j < m; j++) {
            if (constrains[i * m + j] == t) {
                constraints.push_back(expand_constraint(set, i, j, t));
            }
        }
    }

    for (const auto &c : constraints) {
        const auto a = single_support(set[c.first_state].local(t));
        const auto b = single_support(set[c.second_state].local(t));
        if (a && b && *a != *b && known.mark_zero(*a, *b)) {
            facts.push_back({Fact::Kind::ZeroEntry, t, *a, *b, c.first_state, c.second_state, Rule::Lemma1});
        }
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &c : constraints) {
            const ConstraintTerm *open = nullptr;
            std::size_t open_count = 0;
            for (const auto &term : c.terms) {
                if (!known.is_zero(term.row, term.col)) {
                    open = &term;
                    open_count++;
                }
            }
            if (open_count == 1 && open->row != open->col) {
                known.mark_zero(open->row, open->col);
                facts.push_back({Fact::Kind::ZeroEntry, t, open->row, open->col, c.first_state, c.second_state,
                                 Rule::UnitPropagation});
                changed = true;
            }
        }
    }

    PartyConclusion conclusion;
    DisjointSets diagonal(dim);
    if (known.all_off_diagonal_zero()) {
        std::optional<std::size_t> stopper_index;
        for (std::size_t s = 0; s < m; s++) {
            if (is_stopper(set[s])) {
                stopper_index = s;
                break;
            }
        }
        if (stopper_index) {
            const std::size_t s = *stopper_index;
            for (std::size_t i = 0; i < m; i++) {
                if (i == s) {
                    continue;
                }
                const auto r = lemma2_diagonal(set, i, s, t, known);
                if (r.status == Lemma2Result::Status::Derived) {
                    if (diagonal.unite(r.fact->a, r.fact->b)) {
                        facts.push_back(*r.fact);
                    }
                    continue;
                }
                if (constrains[i * m + s] != t) {
                    continue;
                }
                // Off-diagonals vanish, so the constraint reduces to sum_a u_a v_a m[a,a] = 0.
                const auto &u = set[i].local(t);
                const auto &v = set[s].local(t);
                std::vector<std::pair<std::size_t, Integer>> diag_terms;
                for (std::size_t a = 0; a < dim; a++) {
                    Integer c = Integer(u[a]) * v[a];
                    if (c != 0) {
                        diag_terms.emplace_back(a, std::move(c));
                    }
                }
                if (diag_terms.size() == 2 && diag_terms[0].second == -diag_terms[1].second) {
                    const auto a = diag_terms[0].first;
                    const auto b = diag_terms[1].first;
                    if (diagonal.unite(a, b)) {
                        facts.push_back({Fact::Kind::DiagonalEqual, t, a, b, i, s, Rule::UnitPropagation});
                    }
                }
            }
        }
    }
    conclusion.missing_zeros = known.missing();
    conclusion.diagonal_classes = diagonal.classes();
    conclusion.trivial = conclusion.missing_zeros.empty() && conclusion.diagonal_classes.size() == 1;
    return conclusion;
}

}  // namespace

const char *rule_name(Rule rule) {
    switch (rule) {
        case Rule::Lemma1:
            return "Lemma1";
        case Rule::Lemma2:
            return "Lemma2";
        case Rule::UnitPropagation:
            return "UnitPropagation";
    }
    return "?";
}

bool ZeroKnowledge::is_zero(std::size_t a, std::size_t b) const {
    return a != b && known_.at(a * dim_ + b);
}

bool ZeroKnowledge::mark_zero(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("diagonal entries cannot be marked zero");
    }
    if (known_.at(a * dim_ + b)) {
        return false;
    }
    known_[a * dim_ + b] = true;
    known_[b * dim_ + a] = true;
    return true;
}

bool ZeroKnowledge::all_off_diagonal_zero() const {
    return missing().empty();
}

std::vector<IndexPair> ZeroKnowledge::missing() const {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < dim_; a++) {
        for (std::size_t b = a + 1; b < dim_; b++) {
            if (!known_[a * dim_ + b]) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

bool Certificate::all_trivial() const {
    return std::all_of(conclusions.begin(), conclusions.end(), [](const PartyConclusion &c) { return c.trivial; });
}

std::vector<Fact> Certificate::facts_for(std::size_t party) const {
    std::vector<Fact> out;
    std::copy_if(facts.begin(), facts.end(), std::back_inserter(out),
                 [party](const Fact &f) { return f.party == party; });
    return out;
}

std::optional<PairConstraint> pair_constraint(const StateSet &set, std::size_t i, std::size_t j, std::size_t t) {
    check_indices(set, i, j, t);
    const auto factors = inner_factors(set[i], set[j]);
    for (std::size_t k = 0; k < factors.size(); k++) {
        if (k != t && factors[k] == 0) {
            return std::nullopt;
        }
    }
    return expand_constraint(set, i, j, t);
}

std::optional<Fact> lemma1_zero(const StateSet &set, std::size_t i, std::size_t j, std::size_t t) {
    if (!pair_constraint(set, i, j, t)) {
        return std::nullopt;
    }
    const auto a = single_support(set[i].local(t));
    const auto b = single_support(set[j].local(t));
    if (!a || !b || *a == *b) {
        return std::nullopt;
    }
    return Fact{Fact::Kind::ZeroEntry, t, *a, *b, i, j, Rule::Lemma1};
}

Lemma2Result lemma2_diagonal(
    const StateSet &set, std::size_t i, std::size_t stopper_index, std::size_t t, const ZeroKnowledge &known) {
    check_indices(set, i, stopper_index, t);
    if (known.dim() != set.shape().dim(t) || !known.all_off_diagonal_zero() || !is_stopper(set[stopper_index])) {
        return {Lemma2Result::Status::Inapplicable, std::nullopt};
    }
    const auto &u = set[i].local(t);
    const auto support = u.support();
    if (support.size() != 2) {
        return {};
    }
    std::size_t plus = support[0];
    std::size_t minus = support[1];
    if (u[plus] == -1 && u[minus] == 1) {
        std::swap(plus, minus);
    }
    if (u[plus] != 1 || u[minus] != -1) {
        return {};
    }
    if (!pair_constraint(set, i, stopper_index, t)) {
        return {};
    }
    return {Lemma2Result::Status::Derived,
            Fact{Fact::Kind::DiagonalEqual, t, plus, minus, i, stopper_index, Rule::Lemma2}};
}

Certificate derive_certificate(const StateSet &set) {
    require_pairwise_orthogonal(set);
    Certificate cert{set.shape(), {}, {}, {}};
    for (std::size_t i = 0; i < set.size(); i++) {
        const auto &label = set[i].label();
        cert.labels.push_back(label.empty() ? "#" + std::to_string(i) : label);
    }
    const auto constrains = constrained_parties(set);
    for (std::size_t t = 0; t < set.shape().parties(); t++) {
        cert.conclusions.push_back(derive_party(set, t, constrains, cert.facts));
    }
    return cert;
}

std::string render_fact(const Fact &fact, const std::vector<std::string> &labels) {
    const std::string party = "party=" + std::to_string(fact.party) + " ";
    const std::string a = std::to_string(fact.a);
    const std::string b = std::to_string(fact.b);
    const std::string pair = "(" + labels.at(fact.first_state) + "," + labels.at(fact.second_state) + ")";
    if (fact.kind == Fact::Kind::ZeroEntry) {
        return party + "m[" + a + "," + b + "]=0 via states " + pair + " rule=" + rule_name(fact.rule);
    }
    return party + "m[" + a + "," + a + "]=m[" + b + "," + b + "] via " + pair + " rule=" + rule_name(fact.rule);
}

std::string render_certificate(const Certificate &cert) {
    std::string out;
    for (const auto &f : cert.facts) {
        out += render_fact(f, cert.labels);
        out += '\n';
    }
    for (std::size_t t = 0; t < cert.conclusions.size(); t++) {
        const auto &c = cert.conclusions[t];
        out += "party=" + std::to_string(t) + " conclusion=";
        if (c.trivial) {
            out += "Trivial\n";
            continue;
        }
        out += "Incomplete missing=[";
        for (std::size_t k = 0; k < c.missing_zeros.size(); k++) {
            out += (k ? ",(" : "(") + std::to_string(c.missing_zeros[k].first) + "," +
                   std::to_string(c.missing_zeros[k].second) + ")";
        }
        out += "] diagonal_classes=[";
        for (std::size_t k = 0; k < c.diagonal_classes.size(); k++) {
            out += k ? ",[" : "[";
            for (std::size_t x = 0; x < c.diagonal_classes[k].size(); x++) {
                out += (x ? "," : "") + std::to_string(c.diagonal_classes[k][x]);
            }
            out += "]";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace nwe
