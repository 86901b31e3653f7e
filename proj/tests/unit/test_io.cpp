#include <doctest.h>

#include "arsite/instances.hpp"
#include "arsite/io.hpp"
#include "support.hpp"

using namespace arsite;
using arsite::io::json;
using arsite::test::q;

namespace {

template <class T, class Decode>
void check_round_trip(const T& value, Decode decode) {
  const std::string text = io::to_json(value).dump();
  const T back = decode(json::parse(text));
  CHECK(back == value);
  CHECK(io::to_json(back).dump() == text);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("scalar encoding") {
    CHECK(io::to_json(q(3, 8)).dump() == R"({"a":[3,8],"b":[0,1],"d":0})");
    CHECK(io::to_json(ExactScalar(1, -2, 12)).dump() == R"({"a":[1,1],"b":[-4,1],"d":3})");
    CHECK(io::scalar_from_json(json::parse(R"({"a":[2,4]})")) == q(1, 2));
    CHECK_THROWS_AS(io::scalar_from_json(json::parse(R"({"a":[1,0]})")), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(json::parse(R"({"b":[1,1]})")), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(json::parse(R"({"a":[1,1],"b":[1,1],"d":-2})")), ParseError);
    CHECK(io::to_json(NatInf(infinity)) == "inf");
    CHECK(io::natinf_from_json(json(7)) == NatInf(Natural{7}));
    CHECK_THROWS_AS(io::natinf_from_json(json(-1)), ParseError);
  }

  TEST_CASE("big integers survive as strings") {
    const Integer big = Integer(1) << 100;
    const json j = io::to_json(big);
    CHECK(j.is_string());
    CHECK(io::integer_from_json(j) == big);
    CHECK_THROWS_AS(io::integer_from_json(json("12x")), ParseError);
  }

  TEST_CASE("CLI scalar syntax") {
    CHECK(io::parse_scalar("7") == q(7));
    CHECK(io::parse_scalar("-3/6") == q(-1, 2));
    CHECK(io::parse_scalar("sqrt:2") == ExactScalar::sqrt(2));
    CHECK(io::parse_scalar("-sqrt:2") == ExactScalar(0, -1, 2));
    CHECK(io::parse_scalar("3/2*sqrt:5") == ExactScalar(0, Rational(3, 2), 5));
    CHECK(io::parse_scalar("1+sqrt:2") == ExactScalar(1, 1, 2));
    CHECK(io::parse_scalar("1/2-3*sqrt:3") == ExactScalar(Rational(1, 2), -3, 3));
    CHECK(io::parse_scalar("-1+2*sqrt:2") == ExactScalar(-1, 2, 2));
    for (const char* bad : {"", "x", "1/0", "sqrt:", "sqrt:-2", "1*2*sqrt:2", "2sqrt:3", "1/2/3"})
      CHECK_THROWS_AS(io::parse_scalar(bad), ParseError);
    for (const char* text : {"3/8", "sqrt:6", "1-2*sqrt:3", "-sqrt:2", "5/2+1/3*sqrt:7"})
      CHECK(io::parse_scalar(text).to_string() == text);
  }

  TEST_CASE("lambda syntax") {
    CHECK(io::parse_lambda("1/3") == Lambda::rational(1, 3));
    CHECK(io::parse_lambda(R"({"kind":"rational","num":2,"den":6})") == Lambda::rational(1, 3));
    CHECK(io::parse_lambda(R"({"kind":"quadratic","a":[0,1],"b":[1,1],"d":2})") == Lambda::sqrt(2));
    CHECK(io::to_json(Lambda::rational(3, 8)).dump() == R"({"den":8,"kind":"rational","num":3})");
    CHECK_THROWS_AS(io::parse_lambda("-1/2"), DomainError);
    CHECK_THROWS_AS(io::parse_lambda(R"({"kind":"cubic"})"), ParseError);
    CHECK_THROWS_AS(io::parse_lambda("{bad"), ParseError);
  }

  TEST_CASE("hereditary and polygon decoding") {
    CHECK(io::hereditary_from_json(json::parse(R"({"generators":[[2,3],[1,1]]})")) ==
          HereditarySet::canonicalize({{1, 1}}));
    CHECK_THROWS_AS(io::hereditary_from_json(json::parse(R"({"generators":[[1,-1]]})")), ParseError);
    CHECK_THROWS_AS(io::hereditary_from_json(json::parse(R"({"generators":[[1]]})")), ParseError);
    CHECK_THROWS_AS(io::hereditary_from_json(json::parse(R"({"generators":[[1.5,2]]})")), ParseError);
    CHECK_THROWS_AS(io::hereditary_from_json(json::parse(R"([])")), ParseError);
    CHECK_THROWS_AS(io::newton_from_json(json::parse(R"({"vertices":[[0,2],[1,1],[2,0]]})")), ParseError);
  }

  TEST_CASE("round trips are identities") {
    auto rng = arsite::test::rng(101);
    for (int i = 0; i < 500; ++i) {
      check_round_trip(random_hereditary(rng), io::hereditary_from_json);
      check_round_trip(random_polygon(rng), io::newton_from_json);
      const ExactScalar s(random_rational(rng, 50, 20), random_rational(rng, 5, 5), Integer(uniform(rng, 0, 30)));
      check_round_trip(s, io::scalar_from_json);
      check_round_trip(ScalarInf(s), io::scalar_inf_from_json);
      if (s.sign() > 0) check_round_trip(Lambda(s), io::lambda_from_json);
      check_round_trip(GermExponent(s, 0, 1), io::germ_from_json);
      CHECK(io::parse_scalar(s.to_string()) == s);
    }
    check_round_trip(ScalarInf(infinity), io::scalar_inf_from_json);
    check_round_trip(IntInf(-5), io::intinf_from_json);
    check_round_trip(NatInf(infinity), io::natinf_from_json);
  }

  TEST_CASE("report and composition encodings") {
    const json report = run_standard_instance("Conv", 10, 3).to_json();
    CHECK(report["instance"] == "Conv");
    CHECK(report["laws"].size() == 10);
    CHECK(report["laws"][0]["status"] == "pass");
    const json c = io::to_json(compose(Lambda::sqrt(2), Lambda::sqrt(2)));
    CHECK(c["rho"] == "2");
    CHECK(c["deformed"] == true);
    CHECK(c["case"] == "irrational-pair-rational-product");
    CHECK(c["witnesses"][0]["first"] == json::parse("[1,0]"));
  }
}
