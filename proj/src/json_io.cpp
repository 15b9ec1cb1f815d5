#include "biquad/json_io.hpp"

#include "biquad/errors.hpp"

namespace biquad::io {

json entry_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  if (v.fits_uint64()) return v.to_uint64();
  return v.to_string();
}

BigInt entry_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  throw DomainError("expected an integer or decimal string, got " + j.dump());
}

json triad_json(const Triad& t) { return json::array({entry_json(t[0]), entry_json(t[1]), entry_json(t[2])}); }

Triad triad_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("a triad is an array of three integers");
  return Triad({entry_from_json(j[0]), entry_from_json(j[1]), entry_from_json(j[2])});
}

json pair_json(const TriadPair& pair) {
  json out = {{"left", triad_json(pair.left())},
              {"right", triad_json(pair.right())},
              {"sum4", pair.sum4().to_string()},
              {"prod", pair.prod().to_string()},
              {"primitive", pair.primitive()}};
  if (pair.source()) {
    out["source"] = {{"a", entry_json(pair.source()->a())}, {"b", entry_json(pair.source()->b())}};
  }
  return out;
}

TriadPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("left") || !j.contains("right")) {
    throw DomainError("triad pair object needs 'left' and 'right'");
  }
  std::optional<ParamPoint> source;
  if (j.contains("source")) source = ParamPoint(entry_from_json(j.at("source").at("a")), entry_from_json(j.at("source").at("b")));
  TriadPair pair = TriadPair::make(triad_from_json(j.at("left")), triad_from_json(j.at("right")), source);
  if (j.contains("sum4") && BigInt::from_string(j.at("sum4").get<std::string>()) != pair.sum4()) {
    throw ConsistencyError("stored sum4 does not match the triads");
  }
  if (j.contains("prod") && BigInt::from_string(j.at("prod").get<std::string>()) != pair.prod()) {
    throw ConsistencyError("stored prod does not match the triads");
  }
  return pair;
}

json quartic_json(const MonicQuartic& f) {
  return {{"c3", f.c3.to_string()}, {"c2", f.c2.to_string()}, {"c1", f.c1.to_string()}, {"c0", f.c0.to_string()}};
}

MonicQuartic quartic_from_json(const json& j) {
  auto c = [&](const char* key) { return Rational::from_string(j.at(key).get<std::string>()); };
  return {c("c3"), c("c2"), c("c1"), c("c0")};
}

json point_json(const CurvePoint& p) { return {{"t", p.t.to_string()}, {"y", p.y.to_string()}}; }

json outcome_json(const ConstructionOutcome& o) {
  std::string signs;
  for (Sign s : o.signs) signs += symbol(s);
  json out = {{"signs", signs},
              {"g", {{"g1", o.g1.to_string()}, {"g0", o.g0.to_string()}}},
              {"status", to_string(o.status)}};
  out["point"] = o.point ? point_json(*o.point) : json(nullptr);
  return out;
}

std::string csv_header() { return "left1,left2,left3,right1,right2,right3,sum4,prod"; }

std::string csv_row(const TriadPair& pair) {
  std::string row;
  for (const auto& v : pair.left().values()) row += v.to_string() + ",";
  for (const auto& v : pair.right().values()) row += v.to_string() + ",";
  return row + pair.sum4().to_string() + "," + pair.prod().to_string();
}

}  // namespace biquad::io
