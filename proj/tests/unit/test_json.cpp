#include <doctest.h>

#include "biquad/errors.hpp"
#include "biquad/json_io.hpp"

using namespace biquad;
using io::json;

namespace {
Triad T(long long a, long long b, long long c) { return Triad({BigInt(a), BigInt(b), BigInt(c)}); }
}  // namespace

TEST_CASE("pair JSON has the documented shape") {
  const auto pair = TriadPair::make(T(7, 133, 153), T(17, 49, 171), ParamPoint(BigInt(1), BigInt(-1)));
  CHECK(io::pair_json(pair).dump() ==
        R"({"left":[7,133,153],"right":[17,49,171],"sum4":"860884403","prod":"142443","primitive":true,"source":{"a":1,"b":-1}})");
  const auto back = io::pair_from_json(io::pair_json(pair));
  CHECK(back == pair);
  CHECK(back.source() == pair.source());
  CHECK_FALSE(io::pair_json(TriadPair::make(T(7, 133, 153), T(17, 49, 171))).contains("source"));
}

TEST_CASE("pair JSON is re-verified on read") {
  auto j = io::pair_json(TriadPair::make(T(7, 133, 153), T(17, 49, 171)));
  j["sum4"] = "860884404";
  CHECK_THROWS_AS(io::pair_from_json(j), ConsistencyError);
  auto k = io::pair_json(TriadPair::make(T(7, 133, 153), T(17, 49, 171)));
  k["right"] = json::array({17, 49, 172});
  CHECK_THROWS(io::pair_from_json(k));
  CHECK_THROWS_AS(io::pair_from_json(json::object()), DomainError);
}

TEST_CASE("huge entries become strings and round-trip") {
  const auto big = BigInt::from_string("123456789012345678901234567890");
  CHECK(io::entry_json(big).is_string());
  CHECK(io::entry_from_json(io::entry_json(big)) == big);
  CHECK(io::entry_json(BigInt(-5)).is_number_integer());
  CHECK(io::entry_from_json(json("42")) == BigInt(42));
  const Triad t({big, big, big});
  CHECK(io::triad_from_json(io::triad_json(t)) == t);
}

TEST_CASE("quartic and point JSON") {
  const MonicQuartic f{Rational::from_string("-13/8"), Rational(0), Rational::from_string("169/128"),
                       Rational::from_string("-169/256")};
  CHECK(io::quartic_json(f).dump() == R"({"c3":"-13/8","c2":"0","c1":"169/128","c0":"-169/256"})");
  CHECK(io::quartic_from_json(io::quartic_json(f)) == f);
  const CurvePoint p{Rational::from_string("65/72"), Rational::from_string("13/648")};
  CHECK(io::point_json(p).dump() == R"({"t":"65/72","y":"13/648"})");
}

TEST_CASE("CSV rows") {
  CHECK(io::csv_header() == "left1,left2,left3,right1,right2,right3,sum4,prod");
  CHECK(io::csv_row(TriadPair::make(T(7, 133, 153), T(17, 49, 171))) == "7,133,153,17,49,171,860884403,142443");
}
