// Copyright 2026 The OGM Authors
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

#include "ogm/pauli.h"

#include <gtest/gtest.h>

#include <string>
#include <unordered_set>
#include <vector>

#include "ogm/error.h"

namespace ogm {
namespace {

PauliString P(const char *s) {
    return PauliString::parse(s);
}

// Every string on n qubits, including the identity.
std::vector<PauliString> all_strings(std::size_t n) {
    std::vector<PauliString> out;
    std::size_t count = std::size_t{1} << (2 * n);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t idx = 0; idx < count; idx++) {
        std::string s(n, 'I');
        for (std::size_t k = 0; k < n; k++) {
            s[k] = letters[(idx >> (2 * k)) & 3];
        }
        out.push_back(P(s.c_str()));
    }
    return out;
}

// Letter-wise definitions, kept independent of the mask tricks.
bool covers_by_letters(const PauliString &q, const PauliString &r) {
    std::string a = q.str(), b = r.str();
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] != 'I' && a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

TEST(PauliString, ParseAndFormatRoundTrip) {
    for (const char *s : {"XXIZ", "I", "Y", "ZYXI", "IIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIZ"}) {
        EXPECT_EQ(P(s).str(), s);
    }
    EXPECT_EQ(P("XXIZ").num_qubits(), 4u);
}

TEST(PauliString, ParseRejectsBadCharacterWithPosition) {
    try {
        P("AXZ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 1u);
    }
    try {
        P("XZq");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 3u);
    }
}

TEST(PauliString, ParseRejectsEmptyAndOversized) {
    EXPECT_THROW(P(""), ParseError);
    EXPECT_THROW(PauliString::parse(std::string(65, 'X')), Error);
}

TEST(PauliString, MaskEncoding) {
    auto p = P("XYZI");
    EXPECT_EQ(p.x_mask(), 0b0011u);
    EXPECT_EQ(p.z_mask(), 0b0110u);
    EXPECT_EQ(p.num_y(), 1u);
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.letter(2), 'Z');
    p.set_letter(3, 'Y');
    EXPECT_EQ(p.str(), "XYZY");
}

TEST(PauliString, Support) {
    EXPECT_EQ(P("XIZ").support(), (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(P("III").support().empty());
    EXPECT_EQ(P("IXZ").support(), (std::vector<std::size_t>{1, 2}));
}

TEST(PauliString, CoversExamples) {
    EXPECT_TRUE(covers(P("IIX"), P("ZZX")));
    EXPECT_TRUE(covers(P("XII"), P("XZY")));
    EXPECT_FALSE(covers(P("ZII"), P("XZY")));
    EXPECT_TRUE(covers(P("XIZ"), P("XXZ")));
    EXPECT_THROW(covers(P("XI"), P("XII")), DimensionError);
}

TEST(PauliString, CompatibleExamples) {
    EXPECT_TRUE(compatible(P("XIZ"), P("IXZ")));
    EXPECT_FALSE(compatible(P("XX"), P("XZ")));
    EXPECT_THROW(compatible(P("XI"), P("XII")), DimensionError);
}

TEST(PauliString, JoinExamples) {
    EXPECT_EQ(join(P("XIZ"), P("IXZ")), P("XXZ"));
    EXPECT_EQ(join(P("XYZ"), P("XYZ")), P("XYZ"));
    EXPECT_EQ(join(P("III"), P("YIX")), P("YIX"));
    EXPECT_THROW(join(P("XI"), P("ZI")), IncompatibleError);
}

TEST(PauliString, CompatibleProductCancelsSharedLetters) {
    EXPECT_EQ(compatible_product(P("XXI"), P("IXX")), P("XIX"));
    EXPECT_EQ(compatible_product(P("ZZZ"), P("ZZZ")), P("III"));
    EXPECT_THROW(compatible_product(P("XY"), P("YY")), IncompatibleError);
}

TEST(PauliString, OrderIsLexicographicText) {
    auto all = all_strings(2);
    for (const auto &a : all) {
        for (const auto &b : all) {
            EXPECT_EQ(a < b, a.str() < b.str()) << a.str() << " " << b.str();
        }
    }
}

TEST(PauliString, HashSeparatesLengths) {
    std::unordered_set<PauliString> set{P("I"), P("II"), P("XI"), P("IX")};
    EXPECT_EQ(set.size(), 4u);
    EXPECT_TRUE(set.count(P("IX")));
}

class PauliExhaustive : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PauliExhaustive, CoversIsAPartialOrder) {
    auto all = all_strings(GetParam());
    for (const auto &a : all) {
        EXPECT_TRUE(covers(a, a));
        for (const auto &b : all) {
            EXPECT_EQ(covers(a, b), covers_by_letters(a, b));
            if (covers(a, b) && covers(b, a)) {
                EXPECT_EQ(a, b);
            }
            for (const auto &c : all) {
                if (covers(a, b) && covers(b, c)) {
                    EXPECT_TRUE(covers(a, c));
                }
            }
        }
    }
}

TEST_P(PauliExhaustive, JoinIsLeastUpperBound) {
    auto all = all_strings(GetParam());
    for (const auto &a : all) {
        for (const auto &b : all) {
            bool has_upper = false;
            for (const auto &u : all) {
                has_upper |= covers(a, u) && covers(b, u);
            }
            ASSERT_EQ(compatible(a, b), has_upper) << a.str() << " " << b.str();
            if (!has_upper) {
                EXPECT_THROW(join(a, b), IncompatibleError);
                continue;
            }
            auto j = join(a, b);
            EXPECT_TRUE(covers(a, j));
            EXPECT_TRUE(covers(b, j));
            EXPECT_EQ(j, join(b, a));
            for (const auto &u : all) {
                if (covers(a, u) && covers(b, u)) {
                    EXPECT_TRUE(covers(j, u));
                }
            }
        }
    }
}

TEST_P(PauliExhaustive, JoinIsAssociativeOnCompatibleTriples) {
    auto all = all_strings(GetParam());
    for (const auto &a : all) {
        EXPECT_EQ(join(a, a), a);
        for (const auto &b : all) {
            if (!compatible(a, b)) {
                continue;
            }
            for (const auto &c : all) {
                if (compatible(a, c) && compatible(b, c)) {
                    EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
                }
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(UpToThreeQubits, PauliExhaustive, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace ogm
