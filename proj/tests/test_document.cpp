#include <doctest.h>

#include <random>
#include <string>

#include "evidist/document.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace evidist;
using evidist::testing::code_of;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_bpa_file(text);
  } catch (const DocumentError& e) {
    return e.line();
  }
  FAIL("expected DocumentError");
  return 0;
}

}  // namespace

TEST_CASE("parse a two-BPA document") {
  const auto doc = parse_bpa_file(
      "# sample\n"
      "frame: a@1 b@2.5 c@4   # trailing comment\n"
      "\n"
      "bpa m1:\n"
      "  0.6 : {a}\n"
      "  2/5 : { a , b }\n"
      "bpa m2:\n"
      "  1 : {a,b,c}\n");
  CHECK(doc.frame.size() == 3);
  CHECK(doc.frame.positions()[1] == 2.5);
  REQUIRE(doc.bpas.size() == 2);
  CHECK(doc.bpas[0].name == "m1");
  CHECK(doc.find("m1").mass(doc.frame.subset({"a", "b"})) == 0.4);
  CHECK(doc.find("m2").mass(doc.frame.omega()) == 1.0);
  CHECK(code_of([&] { doc.find("m3"); }) == ErrorCode::UnknownBpa);
}

TEST_CASE("parse a mass line with a paper focal set") {
  const auto doc = parse_bpa_file(
      "frame: 1 2 3 4 5 6 7\n"
      "bpa m1:\n"
      "  0.05 : {2,3,4}\n"
      "  0.95 : {1,2,3,4,5,6,7}\n");
  CHECK_FALSE(doc.frame.has_positions());
  CHECK(doc.find("m1").mass(doc.frame.subset({"2", "3", "4"})) == 0.05);
}

TEST_CASE("parse errors carry codes and line numbers") {
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n  0.5 : {x}\n"); }) == ErrorCode::UnknownElement);
  CHECK(error_line("frame: a b\nbpa m:\n  0.5 : {x}\n") == 3);
  CHECK(error_line("frame: a b\nbpa m:\n  1 : {a}\n  0.5 garbage\n") == 4);
  CHECK(code_of([] { parse_bpa_file("bpa m:\n 1 : {a}\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("# nothing\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a@1 b\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a@x b@2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a a\n"); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { parse_bpa_file("frame: a\nframe: b\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a\n1 : {a}\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 1 : a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 1/0 : {a}\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 1 : {a, a}\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 1 : {a}\nbpa m:\n 1 : {b}\n"); }) ==
        ErrorCode::SyntaxError);

  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 1.5 : {a}\n"); }) == ErrorCode::MassOutOfRange);
  CHECK(error_line("frame: a b\nbpa m:\n 0.5 : {a}\n 1.5 : {b}\n") == 4);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 0.5 : {}\n 0.5 : {a}\n"); }) ==
        ErrorCode::EmptySetMass);
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 0.5 : {a}\n 0.5 : {a}\n"); }) ==
        ErrorCode::DuplicateFocalSet);
  // Sum violations are reported at the bpa header.
  CHECK(code_of([] { parse_bpa_file("frame: a b\nbpa m:\n 0.5 : {a}\n 0.4 : {b}\n"); }) ==
        ErrorCode::MassSumViolation);
  CHECK(error_line("frame: a b\n\nbpa m:\n 0.5 : {a}\n 0.4 : {b}\n") == 3);
}

TEST_CASE("emit writes the grammar and round-trips") {
  auto f = frame_new({"x", "y"}, std::vector{0.1, -3.0});
  BpaDocument doc{f, {{"only", bpa_new(f, {{f.subset({"y"}), 1.0 / 3.0}, {f.omega(), 2.0 / 3.0}})}}};
  const auto text = emit_bpa_document(doc);
  CHECK(text ==
        "frame: x@0.1 y@-3\n"
        "bpa only:\n"
        "  0.3333333333333333 : {y}\n"
        "  0.6666666666666666 : {x, y}\n");
  CHECK(parse_bpa_file(text) == doc);

  auto bad = frame_new({"has space"});
  BpaDocument unwritable{bad, {{"m", bpa_new(bad, {{bad.omega(), 1.0}})}}};
  CHECK(code_of([&] { emit_bpa_document(unwritable); }) == ErrorCode::SyntaxError);
}

TEST_CASE("parse(emit(doc)) is the identity on generated documents") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_frame(rng, 1 + trial % 10, trial % 3 != 0);
    BpaDocument doc{f, {}};
    const int count = 1 + trial % 4;
    for (int b = 0; b < count; ++b) {
      doc.bpas.push_back({"m" + std::to_string(b), oracle::random_bpa(rng, f)});
    }
    REQUIRE(parse_bpa_file(emit_bpa_document(doc)) == doc);
  }
}

TEST_CASE("load_bpa_file reports missing files") {
  CHECK(code_of([] { load_bpa_file("/nonexistent/dir/file.bpa"); }) == ErrorCode::IoError);
}
