#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "biquad/errors.hpp"
#include "biquad/family.hpp"
#include "biquad/identities.hpp"
#include "biquad/json_io.hpp"
#include "biquad/quartic.hpp"
#include "biquad/search.hpp"

namespace biquad::cli {

namespace {

using io::json;

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int fail_with(std::ostream& out, std::ostream& err, int code, const std::string& status, const std::string& reason) {
  emit(out, json{{"status", status}, {"reason", reason}});
  err << "biquad: " << reason << '\n';
  return code;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(BigInt::from_string(item));
  return out;
}

Triad parse_triad(const std::string& text) {
  auto v = parse_int_list(text);
  if (v.size() != 3) throw DomainError("a triad needs exactly three comma-separated integers: '" + text + "'");
  return Triad({v[0], v[1], v[2]});
}

json strings(const std::array<BigInt, 3>& v) {
  return json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()});
}

// --- generate ----------------------------------------------------------------

int cmd_generate(const std::string& a_text, const std::string& b_text, std::ostream& out, std::ostream& err) {
  const BigInt a = BigInt::from_string(a_text);
  const BigInt b = BigInt::from_string(b_text);
  const FamilyResult res = final_family(ParamPoint(a, b));

  json payload = {{"a", io::entry_json(a)}, {"b", io::entry_json(b)}};
  payload["p"] = res.pqr.p.to_string();
  payload["q"] = res.pqr.q.to_string();
  payload["r"] = res.pqr.r.to_string();
  payload["t"] = res.t ? json(res.t->to_string()) : json(nullptr);
  payload["squares"] = {{"x", strings(res.squares.x)}, {"y", strings(res.squares.y)}};
  payload["roots"] = {{"x", strings(res.root_x)}, {"y", strings(res.root_y)}};

  if (res.degenerate_reason) {
    payload["status"] = "degenerate";
    payload["reason"] = *res.degenerate_reason;
    emit(out, payload);
    err << "biquad: degenerate parameters: " << *res.degenerate_reason << '\n';
    return kBadInput;
  }
  if (res.trivial || !res.t) {
    payload["status"] = "trivial";
    payload["trivial"] = true;
    payload["reason"] = !res.t ? (a.is_zero() ? "a = 0 leaves t undefined and both triads equal"
                                              : "a = b leaves t undefined and both triads equal")
                               : "both triads are the same multiset";
    if (res.pair) payload["pair"] = io::pair_json(*res.pair);
    emit(out, payload);
    err << "biquad: trivial pair at (a, b) = (" << a << ", " << b << ")\n";
    return kBadInput;
  }

  json checks;
  bool all_ok = true;
  auto record = [&](const char* name, bool ok) {
    checks[name] = ok;
    all_ok = all_ok && ok;
  };

  bool squares_ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    squares_ok = squares_ok && is_perfect_square(res.squares.x[i]) == res.root_x[i] &&
                 is_perfect_square(res.squares.y[i]) == res.root_y[i];
  }
  record("six_perfect_squares", squares_ok);
  const SystemReport sys = verify_system(res.squares);
  record("sums_equal", sys.sums_equal);
  record("products_equal", sys.products_equal);
  record("condition_zero", condition_value(res.pqr.p, res.pqr.q, res.pqr.r).is_zero());

  if (!res.pqr.degenerate_reason) {
    try {
      record("t_candidates_agree", t_candidate_1(res.pqr.p, res.pqr.q, res.pqr.r) == *res.t &&
                                       t_candidate_2(res.pqr.p, res.pqr.q, res.pqr.r) == *res.t);
    } catch (const DegenerateError& e) {
      checks["t_candidates_agree"] = nullptr;
      err << "biquad: t candidates not comparable: " << e.what() << '\n';
    }
    // The scaled solution at (p, q, r, t) must be proportional to the squares.
    const SolutionSix scaled = param_solution(res.pqr.p, res.pqr.q, res.pqr.r, *res.t);
    std::array<BigInt, 6> v{scaled.x[0], scaled.x[1], scaled.x[2], scaled.y[0], scaled.y[1], scaled.y[2]};
    std::array<BigInt, 6> w{res.squares.x[0], res.squares.x[1], res.squares.x[2],
                            res.squares.y[0], res.squares.y[1], res.squares.y[2]};
    bool proportional = true;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) proportional = proportional && v[i] * w[j] == v[j] * w[i];
    }
    record("proportional_to_scaled_solution", proportional);
  }
  payload["checks"] = checks;
  payload["pair"] = io::pair_json(*res.pair);
  payload["trivial"] = false;
  payload["status"] = all_ok ? "ok" : "failed";
  emit(out, payload);
  return all_ok ? kOk : kFailed;
}

// --- generate-range ----------------------------------------------------------

struct RangeArgs {
  std::string a_min, a_max, b_min, b_max;
  std::string max_element;
  std::string format = "json";
};

int cmd_generate_range(const RangeArgs& args, std::ostream& out, std::ostream& err) {
  RangeSpec spec{BigInt::from_string(args.a_min), BigInt::from_string(args.a_max), BigInt::from_string(args.b_min),
                 BigInt::from_string(args.b_max), std::nullopt};
  if (!args.max_element.empty()) spec.max_element = BigInt::from_string(args.max_element);
  const RangeReport rep = generate_range(spec);

  if (args.format == "csv") {
    out << io::csv_header() << '\n';
    for (const auto& pair : rep.pairs) out << io::csv_row(pair) << '\n';
  } else {
    for (const auto& pair : rep.pairs) emit(out, io::pair_json(pair));
    emit(out, json{{"summary",
                    {{"points", rep.points},
                     {"pairs", rep.pairs.size()},
                     {"degenerate", rep.degenerate},
                     {"trivial", rep.trivial},
                     {"above_bound", rep.above_bound}}}});
  }
  err << "biquad: " << rep.pairs.size() << " distinct pairs from " << rep.points << " grid points\n";
  return kOk;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::string& left_text, const std::string& right_text, std::ostream& out, std::ostream& err) {
  const Triad left = parse_triad(left_text);
  const Triad right = parse_triad(right_text);
  const TriadCheck c = check_triads(left, right);
  json payload = {{"left", io::triad_json(left)},
                  {"right", io::triad_json(right)},
                  {"sum4_left", c.sum4_left.to_string()},
                  {"sum4_right", c.sum4_right.to_string()},
                  {"prod_left", c.prod_left.to_string()},
                  {"prod_right", c.prod_right.to_string()},
                  {"sums_equal", c.sums_equal},
                  {"products_equal", c.products_equal},
                  {"trivial", c.trivial},
                  {"verified", c.ok()}};
  if (c.sums_equal) payload["sum4"] = c.sum4_left.to_string();
  if (c.ok()) {
    payload["pair"] = io::pair_json(TriadPair::make(left, right));
  } else {
    payload["reason"] = c.trivial ? "trivial" : (!c.sums_equal ? "sums differ" : "products differ");
    err << "biquad: not verified: " << payload["reason"].get<std::string>() << '\n';
  }
  emit(out, payload);
  return c.ok() ? kOk : kFailed;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  std::uint32_t max = 0;
  bool primitive = false;
  unsigned jobs = 1;
  std::string format = "json";
  std::string kernel = "auto";
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.bound = args.max;
  cfg.primitive_only = args.primitive;
  cfg.partitions = args.jobs;
  if (args.kernel == "scalar") cfg.isa = kernels::Isa::scalar;
  if (args.kernel == "avx2") cfg.isa = kernels::Isa::avx2;
  const SearchReport rep = enumerate_pairs(cfg);

  if (args.format == "csv") {
    out << io::csv_header() << '\n';
    for (const auto& pair : rep.pairs) out << io::csv_row(pair) << '\n';
  } else {
    for (const auto& pair : rep.pairs) emit(out, io::pair_json(pair));
    emit(out, json{{"summary",
                    {{"max", args.max},
                     {"primitive_only", args.primitive},
                     {"pairs", rep.pairs.size()},
                     {"triads_enumerated", rep.triads_enumerated}}}});
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count();
  err << "biquad: " << rep.pairs.size() << " pairs, " << rep.triads_enumerated << " triads, " << args.jobs
      << " partition(s), kernel " << kernels::to_string(rep.isa) << ", " << ms << " ms\n";
  return kOk;
}

// --- identity-check ------------------------------------------------------------

int cmd_identity_check(std::ostream& out, std::ostream& err) {
  const IdentityReport rep = run_identity_suite();
  json ids = json::array();
  for (const auto& r : rep.identities) {
    ids.push_back({{"name", r.name},
                   {"status", r.passed ? "PASS" : "FAIL"},
                   {"degree", r.degree},
                   {"detail", r.detail},
                   {"line", r.line()}});
    err << r.line() << '\n';
  }
  json info = json::array();
  for (const auto& i : rep.informational) {
    info.push_back({{"name", i.name},
                    {"curve", i.curve},
                    {"pqr", i.pqr},
                    {"t", i.t},
                    {"value", i.value},
                    {"claimed_y", i.claimed_y},
                    {"value_is_square", i.value_is_square},
                    {"matches_claim", i.matches_claim},
                    {"asserted", false}});
    err << "informational: " << i.name << " at (p,q,r)=" << i.pqr << ": " << i.curve << "(" << i.t
        << ") = " << i.value << (i.matches_claim ? " (matches listed y)" : " (does not match listed y)") << '\n';
  }
  emit(out, json{{"identities", ids}, {"informational", info}, {"all_passed", rep.all_passed()}});
  return rep.all_passed() ? kOk : kFailed;
}

// --- quartic -----------------------------------------------------------------

struct QuarticArgs {
  std::string p, q, r;
  std::string t;
  std::string curve = "q1";
  std::string coeffs;
  std::string t1, t2, y1, y2, y;
};

MonicQuartic select_curve(const QuarticArgs& args, const std::string& which) {
  if (!args.coeffs.empty()) {
    std::vector<Rational> c;
    std::stringstream ss(args.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Rational::from_string(item));
    if (c.size() != 4) throw DomainError("--coeffs needs c3,c2,c1,c0");
    return {c[0], c[1], c[2], c[3]};
  }
  if (args.p.empty() || args.q.empty() || args.r.empty()) throw DomainError("--p, --q and --r are required");
  const auto [q1, q2] =
      build_quartics(BigInt::from_string(args.p), BigInt::from_string(args.q), BigInt::from_string(args.r));
  if (which == "q1") return q1;
  if (which == "q2") return q2;
  throw DomainError("--curve must be q1 or q2");
}

CurvePoint point_at(const MonicQuartic& f, const std::string& t_text, const std::string& y_text) {
  const Rational t = Rational::from_string(t_text);
  if (!y_text.empty()) return CurvePoint{t, Rational::from_string(y_text)};
  auto pt = verify_square_point(f, t);
  if (!pt) throw DomainError("f(" + t.to_string() + ") = " + f.eval(t).to_string() + " is not a rational square");
  return *pt;
}

int cmd_quartic(const std::string& sub, const QuarticArgs& args, std::ostream& out) {
  if (sub == "t1" || sub == "t2") {
    if (args.p.empty() || args.q.empty() || args.r.empty()) throw DomainError("--p, --q and --r are required");
    const BigInt p = BigInt::from_string(args.p), q = BigInt::from_string(args.q), r = BigInt::from_string(args.r);
    const Rational t = sub == "t1" ? t_candidate_1(p, q, r) : t_candidate_2(p, q, r);
    emit(out, json{{"which", sub}, {"p", args.p}, {"q", args.q}, {"r", args.r}, {"t", t.to_string()}});
    return kOk;
  }
  if (sub == "q1" || sub == "q2") {
    const MonicQuartic f = select_curve(args, sub);
    json payload = {{"which", sub}, {"curve", io::quartic_json(f)}};
    if (!args.t.empty()) {
      const Rational t = Rational::from_string(args.t);
      const Rational value = f.eval(t);
      const auto root = rational_sqrt(value);
      payload["t"] = t.to_string();
      payload["value"] = value.to_string();
      payload["square"] = root ? json(root->to_string()) : json(nullptr);
    }
    emit(out, payload);
    return kOk;
  }
  if (sub == "compose") {
    const MonicQuartic f = select_curve(args, args.curve);
    const CurvePoint p1 = point_at(f, args.t1, args.y1);
    const CurvePoint p2 = point_at(f, args.t2, args.y2);
    json variants = json::array();
    for (const auto& o : secant_variants(f, p1, p2)) variants.push_back(io::outcome_json(o));
    emit(out, json{{"curve", io::quartic_json(f)},
                   {"p1", io::point_json(p1)},
                   {"p2", io::point_json(p2)},
                   {"variants", variants}});
    return kOk;
  }
  // tangent
  const MonicQuartic f = select_curve(args, args.curve);
  const CurvePoint p = point_at(f, args.t, args.y);
  json variants = json::array();
  for (const auto& o : tangent_variants(f, p)) variants.push_back(io::outcome_json(o));
  emit(out, json{{"curve", io::quartic_json(f)}, {"point", io::point_json(p)}, {"variants", variants}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two triads of biquadrates with equal sums and equal products", "biquad"};
  app.require_subcommand(1);

  std::string a_text, b_text;
  auto* generate = app.add_subcommand("generate", "Evaluate the two-parameter family at (a, b)");
  generate->add_option("--a", a_text, "integer a")->required();
  generate->add_option("--b", b_text, "integer b")->required();

  RangeArgs range;
  auto* generate_range_cmd = app.add_subcommand("generate-range", "Family pairs over an (a, b) grid");
  generate_range_cmd->add_option("--a-min", range.a_min)->required();
  generate_range_cmd->add_option("--a-max", range.a_max)->required();
  generate_range_cmd->add_option("--b-min", range.b_min)->required();
  generate_range_cmd->add_option("--b-max", range.b_max)->required();
  generate_range_cmd->add_option("--max-element", range.max_element, "drop pairs with a larger entry");
  generate_range_cmd->add_option("--format", range.format)->check(CLI::IsMember({"json", "csv"}));

  std::string left_text, right_text;
  auto* verify = app.add_subcommand("verify", "Check two triads for equal sums of fourth powers and products");
  verify->add_option("--left", left_text, "x1,x2,x3")->required();
  verify->add_option("--right", right_text, "y1,y2,y3")->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for pairs with entries <= max");
  search_cmd->add_option("--max", search.max)->required()->check(CLI::Range(1U, kMaxSearchBound));
  search_cmd->add_flag("--primitive", search.primitive, "only pairs with gcd 1");
  search_cmd->add_option("--jobs", search.jobs, "work partitions, each on its own thread")
      ->check(CLI::Range(1U, 256U));
  search_cmd->add_option("--format", search.format)->check(CLI::IsMember({"json", "csv"}));
  search_cmd->add_option("--kernel", search.kernel)->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* identity = app.add_subcommand("identity-check", "Run the symbolic identity suite");

  QuarticArgs qa;
  auto* quartic = app.add_subcommand("quartic", "Quartic curve utilities");
  quartic->require_subcommand(1);
  std::string quartic_sub;
  for (const char* name : {"t1", "t2", "q1", "q2", "compose", "tangent"}) {
    auto* sub = quartic->add_subcommand(name);
    sub->add_option("--p", qa.p);
    sub->add_option("--q", qa.q);
    sub->add_option("--r", qa.r);
    if (std::string(name) == "q1" || std::string(name) == "q2") sub->add_option("--t", qa.t, "evaluate at t");
    if (std::string(name) == "compose" || std::string(name) == "tangent") {
      sub->add_option("--curve", qa.curve, "q1 or q2 built from --p --q --r")
          ->check(CLI::IsMember({"q1", "q2"}));
      sub->add_option("--coeffs", qa.coeffs, "c3,c2,c1,c0 of an arbitrary monic quartic");
    }
    if (std::string(name) == "compose") {
      sub->add_option("--t1", qa.t1)->required();
      sub->add_option("--t2", qa.t2)->required();
      sub->add_option("--y1", qa.y1, "defaults to the nonnegative root");
      sub->add_option("--y2", qa.y2, "defaults to the nonnegative root");
    }
    if (std::string(name) == "tangent") {
      sub->add_option("--t", qa.t)->required();
      sub->add_option("--y", qa.y, "defaults to the nonnegative root");
    }
    sub->callback([&quartic_sub, name] { quartic_sub = name; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail_with(out, err, kBadInput, "error", e.what());
  }

  try {
    if (generate->parsed()) return cmd_generate(a_text, b_text, out, err);
    if (generate_range_cmd->parsed()) return cmd_generate_range(range, out, err);
    if (verify->parsed()) return cmd_verify(left_text, right_text, out, err);
    if (search_cmd->parsed()) return cmd_search(search, out, err);
    if (identity->parsed()) return cmd_identity_check(out, err);
    if (quartic->parsed()) return cmd_quartic(quartic_sub, qa, out);
  } catch (const DegenerateError& e) {
    return fail_with(out, err, kBadInput, "degenerate", e.what());
  } catch (const DomainError& e) {
    return fail_with(out, err, kBadInput, "error", e.what());
  } catch (const ConsistencyError& e) {
    return fail_with(out, err, kFailed, "failed", e.what());
  } catch (const std::exception& e) {
    return fail_with(out, err, kFailed, "failed", e.what());
  }
  return fail_with(out, err, kBadInput, "error", "no subcommand given");
}

}  // namespace biquad::cli
