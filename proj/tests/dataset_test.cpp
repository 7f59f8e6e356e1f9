// Copyright 2026 The Namematch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "namematch.hpp"

namespace nm = namematch;

namespace {

const std::string kBaseCsv =
    "B_ID,BName\n"
    "# staff sample\n"
    "1,د. حامد محمد فوزى ابراهيم\n"
    "2,أحمد عبد الحميد حسن على\n"
    "3,محمود سيد أحمد نور الدين الشربينى\n"
    "4,منى على\n";

nm::BaseSet toy_base() {
  return nm::parse_base_set(kBaseCsv, nm::default_rules(), "toy");
}

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  nm::Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
    const double u = a.unit();
    EXPECT_EQ(u, b.unit());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Checksum, StableFnv) {
  EXPECT_EQ(nm::checksum(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(nm::checksum("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST(BaseSet, ParsesAndNormalizes) {
  const auto base = toy_base();
  ASSERT_EQ(base.size(), 4u);
  EXPECT_EQ(nm::join_tokens(base.normalized[0]), "حامد محمد فوزى ابراهيم");
  EXPECT_EQ(nm::join_tokens(base.normalized[2]),
            "محمود سيد احمد نورالدين الشربينى");
  EXPECT_EQ(base.records[1].raw, "أحمد عبد الحميد حسن على");
  EXPECT_EQ(base.index_of("3"), 2u);
  EXPECT_FALSE(base.index_of("9"));
  EXPECT_EQ(base.checksum, nm::checksum(kBaseCsv));
}

TEST(BaseSet, NameMayContainCommas) {
  const auto base =
      nm::parse_base_set("7,محمد، على\n", nm::default_rules(), "t");
  EXPECT_EQ(nm::join_tokens(base.normalized[0]), "محمد على");
}

TEST(BaseSet, RejectsBadRows) {
  const auto rules = nm::default_rules();
  EXPECT_THROW(nm::parse_base_set("1,a\n1,b\n", rules), nm::LoadError);
  EXPECT_THROW(nm::parse_base_set("1,a\n,b\n", rules), nm::LoadError);
  EXPECT_THROW(nm::parse_base_set("1,a\n2\n", rules), nm::LoadError);
  EXPECT_THROW(nm::parse_base_set("1,a\n2,د.\n", rules), nm::LoadError);
  EXPECT_THROW(nm::parse_base_set("1,\xFF\n", rules), nm::LoadError);
  try {
    nm::parse_base_set("1,a\n2\n", rules, "f.csv");
    FAIL();
  } catch (const nm::LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("f.csv:2"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(nm::load_base_set("/nonexistent/base.csv", rules), nm::IoError);
}

TEST(BaseSet, WriteThenParse) {
  const auto base = toy_base();
  std::ostringstream out;
  nm::write_base_set(out, base);
  const auto back = nm::parse_base_set(out.str(), nm::default_rules());
  ASSERT_EQ(back.size(), base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_EQ(back.records[i].id, base.records[i].id);
    EXPECT_EQ(back.normalized[i], base.normalized[i]);
  }
}

TEST(ErrorTypes, NamesRoundTrip) {
  for (auto e : nm::kAllErrorTypes) {
    EXPECT_EQ(nm::parse_error_type(nm::to_string(e)), e);
  }
  EXPECT_THROW(nm::parse_error_type("omit-fourth"), nm::ParameterError);
}

TEST(InjectError, OmissionsDropTheNamedTokens) {
  const nm::TokenizedName name{"حامد", "محمد", "فوزى", "ابراهيم", "سالم"};
  nm::Rng rng(1);
  using E = nm::ErrorType;
  EXPECT_EQ(*nm::inject_error(name, E::kOmitFirst, rng),
            (nm::TokenizedName{"محمد", "فوزى", "ابراهيم", "سالم"}));
  EXPECT_EQ(*nm::inject_error(name, E::kOmitSecond, rng),
            (nm::TokenizedName{"حامد", "فوزى", "ابراهيم", "سالم"}));
  EXPECT_EQ(*nm::inject_error(name, E::kOmitThird, rng),
            (nm::TokenizedName{"حامد", "محمد", "ابراهيم", "سالم"}));
  EXPECT_EQ(*nm::inject_error(name, E::kOmitSecondAndThird, rng),
            (nm::TokenizedName{"حامد", "ابراهيم", "سالم"}));
  EXPECT_FALSE(nm::inject_error({"a", "b", "c"}, E::kOmitFirst, rng));
}

TEST(InjectError, CharacterDeletionsKeepTokens) {
  const nm::TokenizedName name{"حامد", "محمد", "فوزى", "ابراهيم"};
  const auto total = [](const nm::TokenizedName& n) {
    std::size_t c = 0;
    for (const auto& t : n.tokens) c += nm::unicode::length(t);
    return c;
  };
  nm::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    for (auto [e, removed] : {std::pair{nm::ErrorType::kOneChar, 1u},
                              std::pair{nm::ErrorType::kTwoChar, 2u}}) {
      const auto d = nm::inject_error(name, e, rng);
      ASSERT_TRUE(d);
      ASSERT_EQ(d->size(), name.size());
      EXPECT_EQ(total(*d), total(name) - removed);
      for (std::size_t t = 0; t < d->size(); ++t) {
        EXPECT_FALSE((*d)[t].empty());
        EXPECT_LE(nm::char_levenshtein((*d)[t], name[t]), removed);
      }
      EXPECT_EQ(nm::normalize_name(nm::join_tokens(*d), nm::default_rules()),
                *d);
    }
  }
}

TEST(InjectError, EligibilityOfShortTokens) {
  nm::Rng rng(2);
  EXPECT_FALSE(nm::inject_error({"a", "b"}, nm::ErrorType::kOneChar, rng));
  EXPECT_TRUE(nm::inject_error({"ab", "c"}, nm::ErrorType::kOneChar, rng));
  EXPECT_FALSE(nm::inject_error({"ab", "c"}, nm::ErrorType::kTwoChar, rng));
  const auto d = nm::inject_error({"abc", "d"}, nm::ErrorType::kTwoChar, rng);
  ASSERT_TRUE(d);
  EXPECT_EQ(nm::unicode::length((*d)[0]), 1u);
}

TEST(InjectError, DeletionThatWouldRenormalizeIsAvoided) {
  // Dropping the last letter of "حيى" would leave a word-final ي that
  // normalization rewrites, so that candidate is never chosen.
  nm::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto d = nm::inject_error({"حيى"}, nm::ErrorType::kOneChar, rng);
    ASSERT_TRUE(d);
    EXPECT_NE((*d)[0], "حي");
  }
}

TEST(TestSet, GeneratedDeterministicallyWithDistinctSources) {
  const auto base = nm::generate_synthetic_base(300, 60,
                                                nm::default_frequency_table(), 3);
  for (auto e : nm::kAllErrorTypes) {
    const auto t1 = nm::generate_test_set(base, e, 50, 17);
    const auto t2 = nm::generate_test_set(base, e, 50, 17);
    ASSERT_EQ(t1.size(), 50u);
    std::set<std::string> refs;
    for (std::size_t i = 0; i < t1.size(); ++i) {
      EXPECT_EQ(t1.rows[i].t_id, std::to_string(i + 1));
      EXPECT_EQ(t1.rows[i].dname, t2.rows[i].dname);
      EXPECT_EQ(t1.rows[i].ref_b_id, t2.rows[i].ref_b_id);
      refs.insert(t1.rows[i].ref_b_id);
      const auto src = *base.index_of(t1.rows[i].ref_b_id);
      EXPECT_NE(t1.rows[i].dname, nm::join_tokens(base.normalized[src]));
    }
    EXPECT_EQ(refs.size(), 50u);
    EXPECT_EQ(t1.source_checksum, base.checksum);
    const auto other = nm::generate_test_set(base, e, 50, 18);
    bool differs = false;
    for (std::size_t i = 0; i < 50; ++i) {
      differs |= other.rows[i].ref_b_id != t1.rows[i].ref_b_id;
    }
    EXPECT_TRUE(differs);
  }
}

TEST(TestSet, InsufficientEligibleNames) {
  const auto base = toy_base();  // three names have four tokens or more
  EXPECT_THROW(nm::generate_test_set(base, nm::ErrorType::kOmitFirst, 4, 1),
               nm::InputError);
  EXPECT_EQ(nm::generate_test_set(base, nm::ErrorType::kOmitFirst, 3, 1).size(),
            3u);
}

TEST(TestSet, WriteThenParse) {
  const auto base = nm::generate_synthetic_base(100, 40,
                                                nm::default_frequency_table(), 5);
  const auto t = nm::generate_test_set(base, nm::ErrorType::kTwoChar, 20, 99);
  std::ostringstream out;
  nm::write_test_set(out, t);
  const auto back = nm::parse_test_set(out.str());
  EXPECT_EQ(back.error_type, t.error_type);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_EQ(back.source_checksum, base.checksum);
  ASSERT_EQ(back.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(back.rows[i].t_id, t.rows[i].t_id);
    EXPECT_EQ(back.rows[i].dname, t.rows[i].dname);
    EXPECT_EQ(back.rows[i].ref_b_id, t.rows[i].ref_b_id);
  }
  EXPECT_THROW(nm::parse_test_set("T_ID,DName,Ref_B_ID\n1,x\n"), nm::LoadError);
  EXPECT_THROW(nm::load_test_set("/nonexistent/t.csv"), nm::IoError);
}

TEST(SyntheticBase, ShapeAndCommonShare) {
  const auto table = nm::default_frequency_table();
  const auto base = nm::generate_synthetic_base(2000, 400, table, 7);
  ASSERT_EQ(base.size(), 2000u);
  std::set<std::string> names;
  std::size_t common = 0, total = 0, edge_common = 0, edges = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& n = base.normalized[i];
    EXPECT_GE(n.size(), 4u);
    EXPECT_LE(n.size(), 6u);
    EXPECT_EQ(base.records[i].id, std::to_string(i + 1));
    EXPECT_EQ(nm::join_tokens(n), base.records[i].raw);
    names.insert(base.records[i].raw);
    for (std::size_t t = 0; t < n.size(); ++t) {
      const bool c = table.contains(n[t]);
      common += c;
      ++total;
      if (t == 0 || t + 1 == n.size()) {
        edge_common += c;
        ++edges;
      }
    }
  }
  EXPECT_EQ(names.size(), 2000u);
  const double share = static_cast<double>(common) / total;
  EXPECT_NEAR(share, 0.297, 0.05);
  EXPECT_LT(static_cast<double>(edge_common) / edges, share);
}

TEST(SyntheticBase, DeterministicPerSeed) {
  const auto table = nm::default_frequency_table();
  const auto a = nm::generate_synthetic_base(200, 100, table, 42);
  const auto b = nm::generate_synthetic_base(200, 100, table, 42);
  const auto c = nm::generate_synthetic_base(200, 100, table, 43);
  EXPECT_EQ(a.checksum, b.checksum);
  EXPECT_NE(a.checksum, c.checksum);
  const auto one = nm::generate_synthetic_base(1, 20, table, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_GE(one.normalized[0].size(), 4u);
  EXPECT_LE(one.normalized[0].size(), 6u);
}

TEST(SyntheticBase, InfeasibleParameters) {
  const auto table = nm::default_frequency_table();
  EXPECT_THROW(nm::generate_synthetic_base(0, 100, table, 1),
               nm::ParameterError);
  EXPECT_THROW(nm::generate_synthetic_base(10, 19, table, 1),
               nm::ParameterError);
  nm::SyntheticOptions bad;
  bad.length_weights = {0, 0, 0};
  EXPECT_THROW(nm::generate_synthetic_base(10, 50, table, 1, bad),
               nm::ParameterError);
}

TEST(SyntheticBase, KinshipSharesLineage) {
  nm::SyntheticOptions opts;
  opts.kinship_rate = 1.0;
  const auto base = nm::generate_synthetic_base(
      50, 100, nm::default_frequency_table(), 8, opts);
  // Every name after the first is derived from a relative, so it shares at
  // least three tokens with some earlier name.
  for (std::size_t i = 1; i < base.size(); ++i) {
    const auto& n = base.normalized[i];
    bool related = false;
    for (std::size_t j = 0; j < i && !related; ++j) {
      std::size_t shared = 0;
      for (const auto& t : n.tokens) {
        for (const auto& u : base.normalized[j].tokens) {
          if (t == u) {
            ++shared;
            break;
          }
        }
      }
      related = shared >= 3;
    }
    EXPECT_TRUE(related) << base.records[i].raw;
  }
}
