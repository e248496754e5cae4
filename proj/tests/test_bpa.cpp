#include <doctest.h>

#include <random>

#include "evidist/bpa.hpp"
#include "evidist/experiments.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace evidist;
using evidist::testing::code_of;

namespace {

Frame twenty() {
  std::vector<ElementLabel> labels;
  for (int i = 1; i <= 20; ++i) labels.push_back(std::to_string(i));
  return frame_new(labels);
}

}  // namespace

TEST_CASE("bpa_new accepts the growing-subset BPAs") {
  auto f = twenty();
  auto m1 = bpa_new(f, {{f.subset({"2", "3", "4"}), 0.05},
                        {f.subset({"7"}), 0.05},
                        {f.omega(), 0.1},
                        {f.subset({"1"}), 0.8}});
  CHECK(m1.support_size() == 4);
  CHECK(bpa_mass(m1, f.subset({"7"})) == 0.05);

  auto m2 = bpa_new(f, {{f.subset({"1", "2", "3", "4", "5"}), 1.0}});
  const auto support = bpa_support(m2);
  REQUIRE(support.size() == 1);
  CHECK(support[0] == f.subset({"1", "2", "3", "4", "5"}));
  CHECK(bpa_mass(m2, f.subset({"1"})) == 0.0);
  CHECK(bpa_mass(m2, f.empty_set()) == 0.0);
}

TEST_CASE("bpa_new validation errors") {
  auto f = frame_new({"1", "2", "3"});
  CHECK(code_of([&] { bpa_new(f, {{f.subset({"1"}), 0.5}, {f.subset({"2"}), 0.4}}); }) ==
        ErrorCode::MassSumViolation);
  CHECK(code_of([&] { bpa_new(f, {{f.subset({"1"}), 1.5}}); }) == ErrorCode::MassOutOfRange);
  CHECK(code_of([&] { bpa_new(f, {{f.subset({"1"}), -0.1}, {f.subset({"2"}), 1.1}}); }) ==
        ErrorCode::MassOutOfRange);
  CHECK(code_of([&] { bpa_new(f, {{f.empty_set(), 0.2}, {f.subset({"2"}), 0.8}}); }) ==
        ErrorCode::EmptySetMass);
  CHECK(code_of([&] { bpa_new(f, {{f.subset({"1"}), 0.5}, {f.subset({"1"}), 0.5}}); }) ==
        ErrorCode::DuplicateFocalSet);
  auto g = frame_new({"a", "b"});
  CHECK(code_of([&] { bpa_new(f, {{g.subset({"a"}), 1.0}}); }) == ErrorCode::FrameMismatch);
  CHECK(code_of([&] { bpa_new(f, {}); }) == ErrorCode::MassSumViolation);
}

TEST_CASE("bpa_new keeps masses exactly and drops zeros") {
  auto f = frame_new({"1", "2", "3"});
  const double third = 1.0 / 3.0;
  auto m = bpa_new(f, {{f.subset({"3"}), third},
                       {f.subset({"1"}), third},
                       {f.subset({"2"}), 0.0},
                       {f.empty_set(), 0.0},
                       {f.subset({"1", "2"}), third}});
  CHECK(m.support_size() == 3);
  CHECK(m.mass(f.subset({"1"})) == third);
  CHECK(m.mass(f.subset({"2"})) == 0.0);

  // Sum within 1e-9 passes, just outside fails.
  CHECK_NOTHROW(bpa_new(f, {{f.subset({"1"}), 0.5}, {f.subset({"2"}), 0.5 + 5e-10}}));
  CHECK(code_of([&] { bpa_new(f, {{f.subset({"1"}), 0.5}, {f.subset({"2"}), 0.5 - 2e-9}}); }) ==
        ErrorCode::MassSumViolation);
}

TEST_CASE("bpa_support uses ascending bit order") {
  auto f = frame_new({"1", "2", "3"});
  auto m = bpa_new(f, {{f.subset({"1", "3"}), 0.5}, {f.subset({"2"}), 0.5}});
  const auto s = bpa_support(m);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == f.subset({"2"}));
  CHECK(s[1] == f.subset({"1", "3"}));

  const auto shifted = scenario_shifted(2);
  const auto a = bpa_support(shifted.first);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].bits() < a[i].bits());
  CHECK(bpa_mass(shifted.first, shifted.frame.subset({"2", "2.3"})) == 0.2);
}

TEST_CASE("bpa invariants on random BPAs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = oracle::random_frame(rng, 1 + trial % 6, false);
    auto m = oracle::random_bpa(rng, f);
    double sum = 0.0;
    std::size_t positive = 0;
    for (std::uint64_t bits = 0; bits <= f.full_mask(); ++bits) {
      const double x = m.mass(f.from_bits(bits));
      REQUIRE(x >= 0.0);
      REQUIRE(x <= 1.0);
      sum += x;
      positive += x > 0.0 ? 1 : 0;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(positive == m.support_size());
  }
}
