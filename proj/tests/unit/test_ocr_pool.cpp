#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexboost/errors.hpp"
#include "lexboost/ocr_pool.hpp"
#include "support/helpers.hpp"

namespace {

using lexboost::build_pool;
using lexboost::lecture_frequency;
using lexboost::OcrDocument;
using lexboost::ParseError;
using lexboost::read_ocr_dump;
using lexboost::ValidationError;
using lexboost::WordPool;
using lexboost::testing::tiny_pool;

TEST_SUITE("ocr_pool") {

TEST_CASE("two-document pool counts repeated words across captures") {
  const WordPool pool = tiny_pool();
  CHECK(pool.total_tokens == 5);
  CHECK(pool.counts.size() == 3);
  CHECK(pool.counts.at("compiler") == 3);
  CHECK(pool.counts.at("the") == 1);
  CHECK(pool.counts.at("ssa") == 1);
}

TEST_CASE("pool with no usable tokens is rejected") {
  std::vector<OcrDocument> docs;
  docs.push_back({"frame", 0.0, "-- ... !!"});
  docs.push_back({"frame", 1.0, ""});
  CHECK_THROWS_AS(build_pool(docs), ValidationError);
  std::vector<OcrDocument> none;
  CHECK_THROWS_AS(build_pool(none), ValidationError);
}

TEST_CASE("lecture frequency is count over total, zero when absent") {
  const WordPool pool = tiny_pool();
  CHECK(lecture_frequency(pool, "compiler") == 0.6);
  CHECK(lecture_frequency(pool, "the") == 0.2);
  CHECK(lecture_frequency(pool, "register") == 0.0);
}

TEST_CASE("lecture frequencies sum to one over the pool words") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> n_docs(1, 6);
  std::uniform_int_distribution<int> n_words(1, 12);
  std::uniform_int_distribution<int> letter(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<OcrDocument> docs;
    const int d = n_docs(rng);
    for (int i = 0; i < d; ++i) {
      std::string text;
      const int w = n_words(rng);
      for (int j = 0; j < w; ++j) {
        text += static_cast<char>('a' + letter(rng));
        text += ' ';
      }
      docs.push_back({"doc", static_cast<double>(i), text});
    }
    const WordPool pool = build_pool(docs);
    double sum = 0;
    for (const auto& [word, count] : pool.counts) {
      sum += lecture_frequency(pool, word);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("document order does not change the pool") {
  std::vector<OcrDocument> docs;
  docs.push_back({"a", 0.0, "alpha beta beta"});
  docs.push_back({"b", 1.0, "beta gamma"});
  docs.push_back({"c", 2.0, "alpha"});
  const WordPool forward = build_pool(docs);
  std::reverse(docs.begin(), docs.end());
  const WordPool backward = build_pool(docs);
  CHECK(forward.counts == backward.counts);
  CHECK(forward.total_tokens == backward.total_tokens);
}

TEST_CASE("duplicating a document doubles its contribution") {
  std::vector<OcrDocument> once;
  once.push_back({"a", 0.0, "alpha beta"});
  std::vector<OcrDocument> twice = once;
  twice.push_back(once[0]);
  const WordPool p1 = build_pool(once);
  const WordPool p2 = build_pool(twice);
  CHECK(p2.total_tokens == 2 * p1.total_tokens);
  for (const auto& [word, count] : p1.counts) {
    CHECK(p2.counts.at(word) == 2 * count);
  }
}

TEST_CASE("reads JSON Lines dumps") {
  std::istringstream in(
      "{\"source\": \"lec01\", \"timestamp_sec\": 0, \"text\": \"The "
      "compiler\"}\n"
      "\n"
      "{\"source\": \"lec01\", \"timestamp_sec\": 30.5, \"text\": \"SSA\"}\n");
  const auto docs = read_ocr_dump(in, "fallback");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].source == "lec01");
  CHECK(docs[0].timestamp_sec == 0.0);
  CHECK(docs[0].text == "The compiler");
  CHECK(docs[1].timestamp_sec == 30.5);
  CHECK(docs[1].text == "SSA");
}

TEST_CASE("falls back to one plain-text document") {
  std::istringstream in("Register Allocation\nGraph Coloring\n");
  const auto docs = read_ocr_dump(in, "notes.txt");
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].source == "notes.txt");
  CHECK(docs[0].timestamp_sec == 0.0);
  CHECK(docs[0].text == "Register Allocation\nGraph Coloring\n");
}

TEST_CASE("malformed JSON line carries its line number") {
  std::istringstream in(
      "{\"source\": \"a\", \"timestamp_sec\": 0, \"text\": \"x\"}\n"
      "{\"source\": \"a\", \"timestamp_sec\": }\n");
  try {
    read_ocr_dump(in, "f");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("JSON records validate their fields") {
  std::istringstream negative(
      "{\"source\": \"a\", \"timestamp_sec\": -1, \"text\": \"x\"}\n");
  CHECK_THROWS_AS(read_ocr_dump(negative, "f"), ValidationError);
  std::istringstream empty_source(
      "{\"source\": \"\", \"timestamp_sec\": 0, \"text\": \"x\"}\n");
  CHECK_THROWS_AS(read_ocr_dump(empty_source, "f"), ValidationError);
  std::istringstream missing(
      "{\"source\": \"a\", \"timestamp_sec\": 0}\n");
  CHECK_THROWS_AS(read_ocr_dump(missing, "f"), ParseError);
}

}  // TEST_SUITE

}  // namespace
