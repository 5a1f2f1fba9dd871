#include "lrpos/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lrpos;
using io::json;

TEST_CASE("partition JSON is an array of decimal strings", "[io]") {
  CHECK(io::encode(Partition{4, 2, 2, 1}) == json::parse(R"(["4","2","2","1"])"));
  CHECK(io::encode(Partition{}) == json::array());
  CHECK(io::decode_partition(json::parse(R"(["3", 1])")) == Partition{3, 1});
  CHECK_THROWS_AS(io::decode_partition(json::parse(R"(["1","2"])")), Error);
  CHECK_THROWS_AS(io::decode_partition(json::parse(R"(["x"])")), Error);
  CHECK_THROWS_AS(io::decode_partition(json::parse(R"({"a":1})")), Error);
  const auto big = scale(Partition{2, 1}, BigInt("100000000000000000000000"));
  CHECK(io::decode_partition(json::parse(io::encode(big).dump())) == big);
}

TEST_CASE("constraint system JSON layout", "[io]") {
  const auto sys = build_lr_system(Partition{1}, Partition{1}, Partition{2}, 2);
  const auto doc = io::encode(sys);
  CHECK(doc.at("num_vars") == 3);
  CHECK(doc.at("vars")[1] == json::parse(R"({"i":2,"j":1})"));
  CHECK(doc.at("eq")[0].at("coeffs") == json::parse(R"({"0":1})"));
  CHECK(doc.at("eq")[0].at("rhs") == "1");
  CHECK(doc.at("eq")[0].at("family") == "shape");
  CHECK(doc.at("le")[2].at("family") == "lattice");
  CHECK(doc.at("le")[2].at("coeffs") == json::parse(R"({"0":-1,"2":1})"));
}

TEST_CASE("witness maps use i.j keys and p/q values", "[io]") {
  RationalPoint pt{{{1, 1}, BigRational(1, 2)}, {{2, 1}, BigRational(3)}, {{2, 2}, BigRational(0)}};
  CHECK(io::encode(pt) == json::parse(R"({"1.1":"1/2","2.1":"3","2.2":"0"})"));
  CHECK(io::decode_point(json::parse(R"({"1.1":"2/4"})")).at({1, 1}) == BigRational(1, 2));
  CHECK_THROWS_AS(io::decode_point(json::parse(R"({"11":"1"})")), Error);
}

TEST_CASE("JSON round trips reproduce the domain values", "[io][property]") {
  for (const auto& a : partitions_up_to(3, 3)) {
    for (const auto& b : partitions_up_to(3, 3)) {
      CHECK(io::decode_partition(json::parse(io::encode(a).dump())) == a);

      const auto d = decompose_tensor(a, b, 3);
      CHECK(io::decode_decomposition(json::parse(io::encode(d).dump())) == d);

      for (const auto& g : partitions_of((size(a) + size(b)).convert_to<std::size_t>(), 3)) {
        const auto sys = build_lr_system(a, b, g, 3);
        CHECK(io::decode_system(json::parse(io::encode(sys).dump())) == sys);

        auto dec = decide_positive(a, b, g);
        attach_integral_witness(dec, a, b, g);
        const auto back = io::decode_decision(json::parse(io::encode(dec).dump()));
        CHECK(back.positive == dec.positive);
        CHECK(back.route == dec.route);
        CHECK(back.rank == dec.rank);
        CHECK(back.trivial_reason == dec.trivial_reason);
        CHECK(back.rational_witness == dec.rational_witness);
        CHECK(back.integral_witness == dec.integral_witness);
        CHECK(back.pivot_count == dec.pivot_count);
        CHECK(back.elapsed == dec.elapsed);
        if (dec.integral_witness) {
          CHECK(io::decode_filling(json::parse(io::encode(*dec.integral_witness).dump())) == *dec.integral_witness);
        }
      }
    }
  }
}

TEST_CASE("sweep report JSON round trip", "[io]") {
  SweepReport r;
  r.instances = 10;
  r.lp_positive = 6;
  r.lp_negative = 4;
  r.oracle_checked = 9;
  r.budget_failures = 1;
  r.saturation_checked = 20;
  r.disagreements.push_back({"saturation", Partition{2, 1}, Partition{1}, Partition{3, 1}, 2, 5, "made up"});
  const auto doc = io::encode(r);
  for (const char* key : {"instances", "lp_positive", "lp_negative", "oracle_checked", "disagreements", "budget_failures"})
    CHECK(doc.contains(key));
  CHECK(io::decode_sweep_report(json::parse(doc.dump())) == r);
}
