#pragma once

// Machine-readable forms shared by the CLI and the tests.
//
// Big integers that are sums or products are always decimal strings. Triad
// entries and (a, b) are JSON numbers while they fit in 64 bits and decimal
// strings beyond that; readers accept either.

#include <json.hpp>

#include <string>

#include "biquad/family.hpp"
#include "biquad/quartic.hpp"
#include "biquad/search.hpp"

namespace biquad::io {

using json = nlohmann::ordered_json;

json entry_json(const BigInt& v);
BigInt entry_from_json(const json& j);

json triad_json(const Triad& t);
Triad triad_from_json(const json& j);

/// {"left":[...],"right":[...],"sum4":"...","prod":"...","primitive":b[,"source":{"a":..,"b":..}]}
json pair_json(const TriadPair& pair);
/// Re-verifies the pair; throws DomainError on a malformed document and
/// ConsistencyError if the stored sum4/prod disagree with the triads.
TriadPair pair_from_json(const json& j);

json quartic_json(const MonicQuartic& f);
MonicQuartic quartic_from_json(const json& j);
json point_json(const CurvePoint& p);
json outcome_json(const ConstructionOutcome& o);

std::string csv_header();
std::string csv_row(const TriadPair& pair);

}  // namespace biquad::io
