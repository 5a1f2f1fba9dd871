#include "lrpos/lr_oracle.hpp"
#include "lrpos/partition.hpp"
#include "support/brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lrpos;

namespace {

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lrpos::Error");
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("parse_partition accepts canonical and padded text", "[partition]") {
  CHECK(parse_partition("2,1") == Partition{2, 1});
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("0").empty());
  CHECK(parse_partition(" 4 , 2,2 ,1 ,0,0 ") == Partition{4, 2, 2, 1});
  CHECK(parse_partition("+3") == Partition{3});
  CHECK(parse_partition("123456789012345678901234567890").parts().front() ==
        BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse_partition rejects bad input", "[partition]") {
  CHECK(error_of([] { parse_partition("1,2"); }) == ErrorCode::NotWeaklyDecreasing);
  CHECK(error_of([] { parse_partition("0,1"); }) == ErrorCode::NotWeaklyDecreasing);
  CHECK(error_of([] { parse_partition("2,-1"); }) == ErrorCode::NegativePart);
  CHECK(error_of([] { parse_partition("2,x"); }) == ErrorCode::MalformedInput);
  CHECK(error_of([] { parse_partition("2,,1"); }) == ErrorCode::MalformedInput);
  CHECK(error_of([] { parse_partition("1.5"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("render is canonical and inverts parse", "[partition]") {
  CHECK(render(Partition{}) == "0");
  CHECK(render(Partition{4, 2, 2, 1}) == "4,2,2,1");
  CHECK(render(parse_partition(" 3, 1 ,0")) == "3,1");
  for (const auto& p : partitions_up_to(7, 7)) CHECK(parse_partition(render(p)) == p);
}

TEST_CASE("size", "[partition]") {
  CHECK(size(Partition{2, 1}) == 3);
  CHECK(size(Partition{}) == 0);
  CHECK(size(Partition{1'000'000, 1'000'000}) == 2'000'000);
}

TEST_CASE("scale", "[partition]") {
  CHECK(scale(Partition{2, 1}, 3) == Partition{6, 3});
  CHECK(scale(Partition{}, 5).empty());
  CHECK(scale(Partition{1}, 2) == Partition{2});
  CHECK(error_of([] { scale(Partition{1}, 0); }) == ErrorCode::NonpositiveScale);
  CHECK(error_of([] { scale(Partition{1}, -2); }) == ErrorCode::NonpositiveScale);

  std::mt19937 rng(7);
  const auto pool = partitions_up_to(8, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& p = pool[rng() % pool.size()];
    const BigInt q = 1 + rng() % 1000;
    const auto s = scale(p, q);
    CHECK(size(s) == q * size(p));
    CHECK(s.height() == p.height());
  }
  const BigInt huge("1000000000000000000");
  CHECK(size(scale(Partition{3, 2}, huge)) == 5 * huge);
}

TEST_CASE("bit_length sums part bit lengths", "[partition]") {
  CHECK(bit_length(Partition{}) == 0);
  CHECK(bit_length(Partition{4, 1}) == 4);
  CHECK(bit_length(scale(Partition{1}, BigInt(1) << 100)) == 101);
}

TEST_CASE("partitions_of generates in descending lexicographic order", "[partition]") {
  const auto five = partitions_of(5, 5);
  REQUIRE(five.size() == 7);
  CHECK(five.front() == Partition{5});
  CHECK(five.back() == Partition{1, 1, 1, 1, 1});
  for (std::size_t k = 1; k < five.size(); ++k) CHECK(five[k - 1] > five[k]);
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(partitions_of(0, 3) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3, 0).empty());
  CHECK(partitions_up_to(5, 4).size() == 18);
}

TEST_CASE("weyl_dimension examples", "[partition]") {
  CHECK(weyl_dimension(Partition{}, 3) == 1);
  CHECK(weyl_dimension(Partition{1}, 3) == 3);
  // Oracle: every filling of (2,1) from {1,2,3}, kept if semistandard.
  REQUIRE(testing::brute_ssyt_count(Partition{2, 1}, 3) == 8);
  CHECK(weyl_dimension(Partition{2, 1}, 3) == 8);
  CHECK(error_of([] { weyl_dimension(Partition{1, 1, 1}, 2); }) == ErrorCode::HeightExceedsRank);
}

TEST_CASE("weyl_dimension matches exhaustive SSYT counts", "[partition][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_up_to(6, n)) {
      const auto dim = weyl_dimension(lambda, n);
      CHECK(dim >= 1);
      CHECK(dim == count_ssyt(lambda, n));
      if (size(lambda) <= 5) CHECK(dim == testing::brute_ssyt_count(lambda, n));
    }
  }
}

TEST_CASE("weyl_dimension handles large parts exactly", "[partition]") {
  // dim V_(m) for GL_2 is m + 1.
  const BigInt m("1000000000000000000000");
  CHECK(weyl_dimension(Partition(std::vector<BigInt>{m}), 2) == m + 1);
}
