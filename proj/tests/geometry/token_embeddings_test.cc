// Copyright 2026 The dpgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpgeom/geometry/token_embeddings.h"

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

absl::StatusOr<std::vector<EmbeddedText>> Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadTokenEmbeddings(in);
}

TEST(TokenEmbeddingsTest, ReadsRecords) {
  ASSERT_OK_AND_ASSIGN(
      std::vector<EmbeddedText> texts,
      Parse("{\"id\": \"s1\", \"tokens\": [\"[CLS]\", \"hi\"], "
            "\"vectors\": [[0, 1], [2.5, -3]], \"special\": [true, false]}\n"
            "\n"
            "{\"id\": \"s2\", \"tokens\": [\"x\"], \"vectors\": [[1e-3, 4]], "
            "\"special\": [false], \"extra\": 1}\n"));
  ASSERT_EQ(texts.size(), 2u);
  EXPECT_EQ(texts[0].id, "s1");
  EXPECT_THAT(texts[0].tokens, ElementsAre("[CLS]", "hi"));
  EXPECT_THAT(texts[0].special, ElementsAre(true, false));
  Matrix expected(2, 2);
  expected << 0, 1, 2.5, -3;
  EXPECT_EQ(texts[0].vectors, expected);
  EXPECT_EQ(texts[1].vectors(0, 0), 1e-3);
}

TEST(TokenEmbeddingsTest, RoundTripIsExact) {
  EmbeddedText text;
  text.id = "pair \"7\"";
  text.tokens = {"[CLS]", "caf\xC3\xA9", "[SEP]"};
  text.special = {true, false, true};
  text.vectors.resize(3, 4);
  text.vectors << 0.1, -1.0 / 3, 1e-300, 6.02e23,  //
      2, 3, 5, 7,                                  //
      -0.0, 1.0 / 7, 123456.789, -9e-9;
  const std::string line = ToJsonLine(text);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  ASSERT_OK_AND_ASSIGN(std::vector<EmbeddedText> back, Parse(line + "\n"));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].id, text.id);
  EXPECT_EQ(back[0].tokens, text.tokens);
  EXPECT_EQ(back[0].special, text.special);
  EXPECT_EQ(back[0].vectors, text.vectors);
}

TEST(TokenEmbeddingsTest, RejectsMalformedRecords) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      "{\"id\": \"a\", \"tokens\": [\"x\"], \"vectors\": [[1]]}",
      "{\"id\": 3, \"tokens\": [\"x\"], \"vectors\": [[1]], \"special\": "
      "[false]}",
      "{\"id\": \"a\", \"tokens\": [\"x\", \"y\"], \"vectors\": [[1]], "
      "\"special\": [false]}",
      "{\"id\": \"a\", \"tokens\": [\"x\"], \"vectors\": [[\"1\"]], "
      "\"special\": [false]}",
      "{\"id\": \"a\", \"tokens\": [\"x\"], \"vectors\": [[1]], "
      "\"special\": [0]}",
  };
  for (const char* line : bad) {
    EXPECT_THAT(Parse(line), StatusIs(absl::StatusCode::kInvalidArgument))
        << line;
  }
}

TEST(TokenEmbeddingsTest, RejectsDimensionChangeAcrossRecords) {
  auto result = Parse(
      "{\"id\": \"a\", \"tokens\": [\"x\"], \"vectors\": [[1, 2]], "
      "\"special\": [false]}\n"
      "{\"id\": \"b\", \"tokens\": [\"y\"], \"vectors\": [[1, 2, 3]], "
      "\"special\": [false]}\n");
  EXPECT_THAT(result, StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(std::string(result.status().message()), HasSubstr("line 2"));
}

TEST(TokenEmbeddingsTest, MissingFileIsNotFound) {
  EXPECT_THAT(LoadTokenEmbeddings("/nonexistent/embeddings.jsonl"),
              StatusIs(absl::StatusCode::kNotFound));
}

TEST(TokenEmbeddingsTest, LoadsFromFile) {
  testing::TempDir dir;
  EmbeddedText text;
  text.id = "a";
  text.tokens = {"x", "y"};
  text.special = {false, false};
  text.vectors.resize(2, 1);
  text.vectors << 1, 2;
  testing::WriteFile(dir.File("e.jsonl"), ToJsonLine(text) + "\n");
  ASSERT_OK_AND_ASSIGN(std::vector<EmbeddedText> texts,
                       LoadTokenEmbeddings(dir.File("e.jsonl")));
  ASSERT_EQ(texts.size(), 1u);
  EXPECT_EQ(texts[0].vectors, text.vectors);
}

TEST(TokenEmbeddingsTest, BuildsFilteredCloud) {
  EmbeddedText text;
  text.id = "a";
  for (int i = 0; i < 17; ++i) text.tokens.push_back("t");
  text.special.assign(17, false);
  text.special[0] = text.special[16] = true;
  text.vectors = Matrix::Random(17, 3);
  ASSERT_OK_AND_ASSIGN(auto cloud, BuildPointCloud(text, FilterConfig{}));
  ASSERT_TRUE(cloud.has_value());
  EXPECT_EQ(cloud->size(), 15u);
  EXPECT_EQ(cloud->source_id(), "a");
  text.special[1] = true;
  ASSERT_OK_AND_ASSIGN(auto filtered, BuildPointCloud(text, FilterConfig{}));
  EXPECT_FALSE(filtered.has_value());
}

}  // namespace
}  // namespace dpgeom
