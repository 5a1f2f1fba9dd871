#include "lrpos/lr_oracle.hpp"
#include "lrpos/saturation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lrpos;

TEST_CASE("decide_positive examples", "[saturation]") {
  const auto pos = decide_positive(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1});
  CHECK(pos.positive);
  CHECK(pos.route == Route::LPFeasible);
  CHECK(pos.rank == 3);
  REQUIRE(pos.rational_witness);
  CHECK(evaluate_point(build_lr_system(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3), *pos.rational_witness)
            .satisfied);
  CHECK_FALSE(pos.integral_witness);
  CHECK(count_lr_tableaux(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3) == 2);

  const auto neg = decide_positive(Partition{2}, Partition{2}, Partition{1, 1, 1, 1});
  CHECK_FALSE(neg.positive);
  CHECK_FALSE(neg.rational_witness);
  CHECK(count_lr_tableaux(Partition{2}, Partition{2}, Partition{1, 1, 1, 1}, 4) == 0);

  const auto trivial = decide_positive(Partition{1}, Partition{1}, Partition{3});
  CHECK_FALSE(trivial.positive);
  CHECK(trivial.route == Route::TrivialReject);
  CHECK(trivial.trivial_reason == "size mismatch");
}

TEST_CASE("decide_positive on a nontrivial zero goes through the LP", "[saturation]") {
  // (1,1) x (2) = (3,1) + (2,1,1): (2,2) passes every cheap test but c = 0.
  const Partition a{1, 1}, b{2}, g{2, 2};
  REQUIRE(check_trivial_necessary(a, b, g));
  REQUIRE(count_lr_tableaux(a, b, g, 2) == 0);
  const auto d = decide_positive(a, b, g);
  CHECK_FALSE(d.positive);
  CHECK(d.route == Route::LPInfeasible);
}

TEST_CASE("decide_positive rank handling", "[saturation]") {
  CHECK(decide_positive(Partition{}, Partition{}, Partition{}).rank == 1);
  CHECK(decide_positive(Partition{}, Partition{}, Partition{}).positive);
  CHECK(decide_positive(Partition{1}, Partition{1}, Partition{1, 1}, 5).rank == 5);
  CHECK_THROWS_AS(decide_positive(Partition{1}, Partition{1}, Partition{1, 1}, 1), Error);
}

TEST_CASE("integral witness is opt-in and validates", "[saturation]") {
  const Partition a{2, 1}, b{2, 1}, g{3, 2, 1};
  auto d = decide_positive(a, b, g);
  attach_integral_witness(d, a, b, g);
  REQUIRE(d.integral_witness);
  CHECK(validate_filling(a, b, g, *d.integral_witness).ok());
  BigInt total = 0;
  for (const auto& [v, c] : d.integral_witness->counts) total += c;
  CHECK(total == size(b));
}

TEST_CASE("saturation_probe examples", "[saturation]") {
  const auto r1 = saturation_probe(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, std::nullopt, {2, 3});
  REQUIRE(r1.entries.size() == 3);
  CHECK_FALSE(r1.disagreement);
  for (const auto& e : r1.entries) {
    CHECK(e.decision.positive);
    REQUIRE(e.oracle_count);
    CHECK(*e.oracle_count > 0);
  }

  const auto r2 = saturation_probe(Partition{1}, Partition{1}, Partition{3}, std::nullopt, {2});
  CHECK_FALSE(r2.disagreement);
  for (const auto& e : r2.entries) CHECK_FALSE(e.decision.positive);

  const auto r3 = saturation_probe(Partition{1}, Partition{1}, Partition{2}, std::nullopt, {5});
  REQUIRE(r3.entries.size() == 2);
  CHECK(r3.entries[1].q == 5);
  CHECK(r3.entries[1].decision.positive);
  REQUIRE(r3.entries[1].oracle_count);
  CHECK(*r3.entries[1].oracle_count == 1);
}

TEST_CASE("saturation_probe keeps going when the oracle runs out of budget", "[saturation]") {
  const auto r = saturation_probe(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, std::nullopt,
                                  {BigInt("1000000000000")}, 1000);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].oracle_count);
  CHECK_FALSE(r.entries[1].oracle_count);
  CHECK(r.entries[1].oracle_error);
  CHECK(r.entries[1].decision.positive);
  CHECK_FALSE(r.disagreement);
}

TEST_CASE("sweep on the smallest corpora", "[saturation]") {
  SweepOptions empty;
  empty.max_size = 0;
  empty.max_n = 1;
  empty.qs = {2};
  const auto r0 = sweep(empty);
  CHECK(r0.instances == 1);
  CHECK(r0.lp_positive == 1);
  CHECK(r0.disagreements.empty());

  SweepOptions small;
  small.max_size = 2;
  small.max_n = 2;
  small.qs = {2};
  small.integral_witnesses = true;
  const auto r = sweep(small);
  CHECK(r.instances == sweep_triples(2, 2).size());
  CHECK(r.instances > 20);
  CHECK(r.instances < 100);
  CHECK(r.lp_positive + r.lp_negative == r.instances);
  CHECK(r.oracle_checked == r.instances);
  CHECK(r.saturation_checked == r.instances);
  CHECK(r.integral_checked == r.lp_positive);
  CHECK(r.budget_failures == 0);
  CHECK(r.disagreements.empty());
}

TEST_CASE("sweep results do not depend on the thread count", "[saturation]") {
  SweepOptions opt;
  opt.max_size = 3;
  opt.max_n = 3;
  opt.qs = {2, 3};
  opt.threads = 1;
  const auto serial = sweep(opt);
  opt.threads = 4;
  CHECK(sweep(opt) == serial);
}

TEST_CASE("sweep tallies budget failures instead of aborting", "[saturation]") {
  SweepOptions opt;
  opt.max_size = 2;
  opt.max_n = 2;
  opt.budget = 2;
  const auto r = sweep(opt);
  CHECK(r.budget_failures > 0);
  CHECK(r.oracle_checked + r.budget_failures == r.instances);
  CHECK(r.disagreements.empty());
}
