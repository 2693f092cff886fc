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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace nwe;

namespace {

std::size_t count_label_prefix(const StateSet &set, const std::string &prefix) {
    std::size_t n = 0;
    for (const auto &s : set.states()) {
        n += s.label().rfind(prefix, 0) == 0;
    }
    return n;
}

const ProductState &by_label(const StateSet &set, const std::string &label) {
    for (const auto &s : set.states()) {
        if (s.label() == label) {
            return s;
        }
    }
    throw std::out_of_range("no state labelled " + label);
}

void expect_coefficients_in_unit_range(const StateSet &set) {
    for (const auto &s : set.states()) {
        for (const auto &v : s.locals()) {
            for (auto c : v.coeffs()) {
                EXPECT_TRUE(c == -1 || c == 0 || c == 1);
            }
        }
    }
}

std::int64_t general_formula(const std::vector<std::size_t> &dims) {
    std::int64_t total = 0;
    for (std::size_t i = 1; i + 1 < dims.size(); i++) {
        total += static_cast<std::int64_t>(dims[i]);
    }
    return total + 2 * static_cast<std::int64_t>(dims.back()) - static_cast<std::int64_t>(dims.size()) + 1;
}

}  // namespace

TEST(gen_equal, four_parties_dimension_three) {
    const auto set = gen_equal(4, 3);
    EXPECT_EQ(set.size(), 9u);
    EXPECT_EQ(set.shape(), (SystemShape{3, 3, 3, 3}));
}

TEST(gen_equal, three_parties_dimension_three) {
    const auto set = gen_equal(3, 3);
    ASSERT_EQ(set.size(), 7u);
    const auto &last = set[6];
    EXPECT_EQ(last.label(), "S");
    for (std::size_t k = 0; k < 3; k++) {
        EXPECT_EQ(last.local(k), (LocalVector{1, 1, 1}));
    }
    EXPECT_EQ(ket_str(set[0]), "|0-1>|0>|1>");
    EXPECT_EQ(set[0].label(), "G_0[i=1]");
    EXPECT_EQ(ket_str(by_label(set, "G_1[i=2]")), "|2>|0-2>|0>");
    EXPECT_EQ(ket_str(by_label(set, "G_2[i=1]")), "|0>|1>|0-1>");
}

TEST(gen_equal, three_parties_dimension_four_orthogonal) {
    const auto set = gen_equal(3, 4);
    EXPECT_EQ(set.size(), 10u);
    EXPECT_TRUE(check_pairwise_orthogonality(set).empty());
}

TEST(gen_equal, domain_errors) {
    EXPECT_THROW(gen_equal(2, 3), ConstructionDomainError);
    EXPECT_THROW(gen_equal(3, 2), ConstructionDomainError);
    try {
        gen_equal(3, 2);
    } catch (const ConstructionDomainError &e) {
        EXPECT_NE(std::string(e.what()).find("d >= 3"), std::string::npos);
    }
}

TEST(gen_general, tripartite_equal_dims) {
    const auto set = gen_general({3, 3, 3});
    EXPECT_EQ(set.size(), 7u);
}

TEST(gen_general, tripartite_three_three_four) {
    const auto set = gen_general({3, 3, 4});
    ASSERT_EQ(set.size(), 9u);
    // B_5 = B_{2n-1} has the single i = 3 (odd), so m = 1.
    EXPECT_EQ(count_label_prefix(set, "B_5["), 1u);
    const auto &b5 = by_label(set, "B_5[i=3]");
    EXPECT_EQ(b5.local(0), (LocalVector{0, 1, 0}));
    EXPECT_EQ(ket_str(b5), "|1>|1>|2-3>");
    EXPECT_EQ(ket_str(by_label(set, "B_6[i=3]")), "|0-2>|0-2>|3>");
    EXPECT_EQ(count_label_prefix(set, "B_4["), 0u);
}

TEST(gen_general, four_parties) {
    const auto set = gen_general({3, 4, 4, 5});
    EXPECT_EQ(set.size(), 15u);
    EXPECT_TRUE(check_pairwise_orthogonality(set).empty());
    EXPECT_EQ(ket_str(by_label(set, "B_5[i=3]")), "|1>|0-3>|3>|0>");
    EXPECT_EQ(ket_str(by_label(set, "B_7[i=4]")), "|2>|0>|1>|3-4>");
    EXPECT_EQ(ket_str(by_label(set, "B_8[i=4]")), "|0-2>|0>|0-2>|4>");
    // B_{n+2} is empty because d_2 == d_3.
    EXPECT_EQ(count_label_prefix(set, "B_6["), 0u);
}

TEST(gen_general, tripartite_matches_four_group_listing) {
    const auto set = gen_general({3, 4, 6});
    EXPECT_EQ(ket_str(by_label(set, "B_1[i=2]")), "|0-2>|0>|2>");
    EXPECT_EQ(ket_str(by_label(set, "B_2[i=2]")), "|2>|0-2>|0>");
    EXPECT_EQ(ket_str(by_label(set, "B_3[i=3]")), "|0>|3>|0-3>");
    EXPECT_EQ(ket_str(by_label(set, "B_4[i=3]")), "|1>|0-3>|3>");
    EXPECT_EQ(ket_str(by_label(set, "B_5[i=4]")), "|2>|1>|3-4>");
    EXPECT_EQ(ket_str(by_label(set, "B_5[i=5]")), "|1>|1>|4-5>");
    EXPECT_EQ(ket_str(by_label(set, "B_6[i=5]")), "|0-2>|0-2>|5>");
    EXPECT_EQ(set.size(), 4u + 12u - 2u);
}

TEST(gen_general, domain_errors) {
    EXPECT_THROW(gen_general({3, 3}), ConstructionDomainError);
    EXPECT_THROW(gen_general({2, 3, 4}), ConstructionDomainError);
    try {
        gen_general({3, 2, 4});
        FAIL();
    } catch (const ConstructionDomainError &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("nondecreasing"), std::string::npos);
        EXPECT_NE(msg.find("d_1"), std::string::npos);
    }
}

TEST(expected_size, examples) {
    EXPECT_EQ(expected_size(ConstructionKind::equal(4, 3)), 9);
    EXPECT_EQ(expected_size(ConstructionKind::general({3, 3, 3})), 7);
    for (std::size_t n = 3; n <= 6; n++) {
        for (std::size_t d = 3; d <= 7; d++) {
            const auto general = expected_size(ConstructionKind::general(std::vector<std::size_t>(n, d)));
            EXPECT_EQ(general, expected_size(ConstructionKind::equal(n, d)));
            EXPECT_EQ(general, static_cast<std::int64_t>(n * (d - 1) + 1));
        }
    }
}

TEST(prior_sizes, examples) {
    const auto four = prior_sizes({3, 3, 3, 3});
    EXPECT_EQ(four.jiang, 13);
    EXPECT_EQ(four.ours, 9);
    EXPECT_FALSE(four.wang);
    EXPECT_FALSE(four.zhang);

    const auto three = prior_sizes({3, 3, 3});
    EXPECT_EQ(three.wang, 9);
    EXPECT_EQ(three.ours, 7);
    EXPECT_EQ(three.jiang, 10);

    const auto mixed = prior_sizes({3, 4, 5});
    EXPECT_EQ(mixed.jiang, 16);
    EXPECT_EQ(mixed.ours, 12);

    const auto two = prior_sizes({4, 4});
    EXPECT_EQ(two.zhang, 7);
    EXPECT_FALSE(two.ours);

    EXPECT_FALSE(prior_sizes({3, 2, 4}).ours);
    EXPECT_THROW(prior_sizes({3}), DimensionError);
}

TEST(construction_laws, equal_sweep) {
    for (std::size_t n = 3; n <= 6; n++) {
        for (std::size_t d = 3; d <= 7; d++) {
            const auto set = gen_equal(n, d);
            EXPECT_EQ(set.size(), n * (d - 1) + 1);
            EXPECT_TRUE(check_pairwise_orthogonality(set).empty()) << n << "," << d;
            expect_coefficients_in_unit_range(set);
            EXPECT_EQ(gen_general(std::vector<std::size_t>(n, d)).size(), set.size());
        }
    }
}

TEST(construction_laws, random_general_dims) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; trial++) {
        const auto dims = nwe_test::random_nondecreasing_dims(rng, 3, 6, 3, 8);
        const auto set = gen_general(dims);
        EXPECT_EQ(static_cast<std::int64_t>(set.size()), general_formula(dims));
        EXPECT_EQ(static_cast<std::int64_t>(set.size()), expected_size(ConstructionKind::general(dims)));
        EXPECT_TRUE(check_pairwise_orthogonality(set).empty());
        expect_coefficients_in_unit_range(set);
    }
}

TEST(construction_laws, parity_rule_separates_neighbours) {
    const auto set = gen_general({3, 3, 9});
    const std::size_t n = 3;
    std::vector<const ProductState *> group;
    for (const auto &s : set.states()) {
        if (s.label().rfind("B_" + std::to_string(2 * n - 1) + "[", 0) == 0) {
            group.push_back(&s);
        }
    }
    ASSERT_EQ(group.size(), 6u);
    for (std::size_t k = 0; k + 1 < group.size(); k++) {
        const auto &a = *group[k];
        const auto &b = *group[k + 1];
        EXPECT_EQ(local_inner(a.local(n - 1), b.local(n - 1)), -1);
        EXPECT_EQ(local_inner(a.local(0), b.local(0)), 0);
        const auto sa = a.local(0).support();
        const auto sb = b.local(0).support();
        ASSERT_EQ(sa.size(), 1u);
        ASSERT_EQ(sb.size(), 1u);
        EXPECT_TRUE((sa[0] == 1 && sb[0] == 2) || (sa[0] == 2 && sb[0] == 1));
    }
}
