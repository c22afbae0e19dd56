#include "skewlab/certificate.hpp"

#include <set>

#include "skewlab/expr.hpp"

namespace skewlab {

Json to_json(const MembershipWitness& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms)
    terms.push_back({{"coefficient", t.coefficient.to_string()},
                     {"left", t.left.to_string()},
                     {"generator", t.generator.to_string()},
                     {"right", t.right.to_string()},
                     {"label", t.generator_label}});
  return {{"target", w.target.to_string()}, {"terms", std::move(terms)}};
}

Json to_json(const SearchStatus& s) {
  Json j{{"index", s.index}, {"target", s.target}, {"status", s.found ? "found" : "unknown_at"}};
  if (s.found) {
    j["exponent"] = s.exponent;
    j["monotone_checked"] = s.monotone_checked;
    if (s.witness) j["witness"] = to_json(*s.witness);
  } else {
    j["searched_exponent"] = s.searched_exponent;
  }
  j["max_degree"] = s.max_degree;
  return j;
}

Json to_json(const HilbertProfile& h) {
  Json j{{"n", h.n}, {"dims", h.dims}};
  j["certified_zero_from"] = h.certified_zero_from ? Json(*h.certified_zero_from) : Json(nullptr);
  j["zero_propagation_checked"] = h.zero_propagation_checked;
  j["prime"] = h.prime ? Json(*h.prime) : Json(nullptr);
  return j;
}

Json to_json(const GrowthEvidence& g) {
  return {{"all_positive", g.all_positive},
          {"nondecreasing", g.nondecreasing},
          {"fitted_degree", g.fitted_degree},
          {"gk_estimate", g.gk_estimate}};
}

Json to_json(const PhiReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"n", r.n},
          {"entries", std::move(entries)},
          {"found_set", r.found_set()},
          {"special_subset_checked", r.special_subset_checked},
          {"special_subset_holds", r.special_subset_holds}};
}

Json to_json(const PsiReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"n", r.n}, {"j", r.j}, {"quotient_by", r.quotient_by}, {"entries", std::move(entries)}};
}

Json to_json(const PertinencyReport& r) {
  Json j{{"n", r.n}, {"hilbert", to_json(r.hilbert)}};
  j["conclusion"] = r.equals_n ? "pertinency_equals_n" : "inconclusive";
  if (r.equals_n) {
    j["d_star"] = *r.hilbert.certified_zero_from;
    j["pertinency"] = r.n;
  }
  j["growth"] = to_json(r.growth);
  return j;
}

Json to_json(const AdmissibilityReport& r) {
  Json psi = Json::array();
  for (const auto& p : r.psi) psi.push_back(to_json(p));
  return {{"n", r.n}, {"hilbert", to_json(r.hilbert)}, {"admissible", r.admissible}, {"psi", std::move(psi)}};
}

Json to_json(const ClaimResult& c) {
  return {{"statement", c.statement}, {"holds", c.holds}, {"residual", c.residual.to_string()}};
}

Json to_json(const PresentationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"relation", c.relation}, {"holds", c.holds}});
  return {{"n", r.n}, {"all_hold", r.all_hold()}, {"checks", std::move(checks)}};
}

Json to_json(const TildeReport& r) {
  Json relations = Json::array();
  for (const auto& c : r.context.relations) relations.push_back({{"relation", c.relation}, {"holds", c.holds}});
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        {{"degree", e.degree}, {"word", e.word}, {"element", e.element.to_string()}, {"status", to_json(e.status)}});
  return {{"n", r.context.n},
          {"m", r.context.m},
          {"q", r.context.q},
          {"isomorphism", r.context.isomorphism},
          {"relations_hold", r.context.relations_hold()},
          {"relations", std::move(relations)},
          {"entries", std::move(entries)},
          {"all_found", r.all_found()}};
}

Json make_certificate(const std::string& command, Json parameters, const std::string& result_kind, Json body,
                      double seconds) {
  Json c;
  c["schema_version"] = kSchemaVersion;
  c["engine"] = kEngineVersion;
  c["command"] = command;
  c["parameters"] = std::move(parameters);
  c["result"] = {{"kind", result_kind}};
  c["body"] = std::move(body);
  c["timings"] = {{"total_seconds", seconds}};
  return c;
}

MembershipWitness witness_from_json(const Json& j, const AlgebraContext& ctx) {
  MembershipWitness w{parse_smash(j.at("target").get<std::string>(), ctx), {}};
  for (const auto& t : j.at("terms")) {
    w.terms.push_back({parse_scalar(t.at("coefficient").get<std::string>(), ctx),
                       parse_smash(t.at("left").get<std::string>(), ctx),
                       parse_smash(t.at("generator").get<std::string>(), ctx),
                       parse_smash(t.at("right").get<std::string>(), ctx), t.value("label", "")});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Re-checking.

namespace {

/// Which generators a witness may use.
struct GeneratorRule {
  bool two_sided_e0 = false;
  std::optional<long> gamma;
  std::set<int> central;
};

int label_index(const std::string& label, char prefix) {
  if (label.size() < 2 || label[0] != prefix) return -1;
  try {
    return std::stoi(label.substr(1));
  } catch (...) {
    return -1;
  }
}

bool generator_allowed(const WitnessTerm& t, const GeneratorRule& rule, const AlgebraContext& ctx) {
  const SmashElem one = SmashElem::group(ctx, 0);
  if (rule.two_sided_e0) return t.generator == e_element(ctx, 0);
  // right ideals of A: 1 * g * (element of A)
  if (!(t.left == one) || !t.right.is_plain() || !t.generator.is_plain()) return false;
  const AlgElem g = t.generator.to_plain();
  if (const int k = label_index(t.generator_label, 'c'); k >= 0)
    return rule.central.count(static_cast<int>(mod_index(k, ctx.n()))) && g == c_element(ctx, k);
  if (const int j = label_index(t.generator_label, 'R'); j >= 0 && rule.gamma) {
    const auto d = g.homogeneous_degree();
    const auto wt = sigma_weight(g);
    return d && *d >= 1 && wt && *wt == mod_index(*rule.gamma, ctx.n());
  }
  return false;
}

void check_witness(RecheckResult& out, const Json& wj, const AlgebraContext& ctx, const SmashElem& expected,
                   const GeneratorRule& rule, const std::string& what) {
  MembershipWitness w = witness_from_json(wj, ctx);
  if (!(w.target == expected)) out.fail(what + ": witness target is not " + expected.to_string());
  for (std::size_t i = 0; i < w.terms.size(); ++i)
    if (!generator_allowed(w.terms[i], rule, ctx))
      out.fail(what + ": term " + std::to_string(i) + " uses a generator outside the ideal");
  if (!w.valid()) out.fail(what + ": witness does not recombine to its target");
}

AlgElem c_power(const AlgebraContext& ctx, long k, int e) { return power(c_element(ctx, k), e); }

void check_phi_status(RecheckResult& out, const Json& s, const AlgebraContext& ctx) {
  if (s.at("status") != "found") return;
  const long k = s.at("index").get<long>();
  const int N = s.at("exponent").get<int>();
  if (!s.contains("witness")) {
    out.fail("phi entry " + std::to_string(k) + " is found but has no witness");
    return;
  }
  GeneratorRule rule;
  rule.two_sided_e0 = true;
  check_witness(out, s.at("witness"), ctx, SmashElem::embed(c_power(ctx, k, N)), rule,
                "phi entry " + std::to_string(k));
}

void check_psi(RecheckResult& out, const Json& body, const AlgebraContext& ctx, const Json& quotient_certs) {
  GeneratorRule rule;
  rule.gamma = body.at("j").get<long>();
  for (int k : body.at("quotient_by").get<std::vector<int>>()) rule.central.insert(k);
  // the quotient indices themselves must be certified members of Phi
  std::set<int> certified;
  for (const auto& s : quotient_certs) {
    check_phi_status(out, s, ctx);
    if (s.at("status") == "found") certified.insert(static_cast<int>(mod_index(s.at("index").get<long>(), ctx.n())));
  }
  for (int k : rule.central)
    if (!certified.count(k)) out.fail("quotient index " + std::to_string(k) + " has no Phi certificate");
  for (const auto& s : body.at("entries")) {
    if (s.at("status") != "found") continue;
    const long i = s.at("index").get<long>();
    check_witness(out, s.at("witness"), ctx, SmashElem::embed(c_power(ctx, i, s.at("exponent").get<int>())), rule,
                  "psi entry " + std::to_string(i));
  }
}

/// Zero values by full rank over F_p (a sound certificate), positive values
/// by exact recomputation.
void check_hilbert(RecheckResult& out, const Json& h, const AlgebraContext& ctx) {
  const auto dims = h.at("dims").get<std::vector<uint64_t>>();
  const int n = ctx.n();
  const PrimeField f(default_prime(n, 1), n);
  std::optional<int> first_zero;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (dims[d] == 0) {
      if (!first_zero) first_zero = static_cast<int>(d);
      if (ideal_piece_e0(ctx, static_cast<int>(d), f).codim() != 0)
        out.fail("H(" + std::to_string(d) + ") = 0 is not confirmed mod " + std::to_string(f.modulus()));
    } else if (smash_piece_dim(n, static_cast<int>(d)) - ideal_piece_e0(ctx, static_cast<int>(d)).rank() != dims[d]) {
      out.fail("H(" + std::to_string(d) + ") differs from the recorded value");
    }
  }
  const Json& cz = h.at("certified_zero_from");
  const std::optional<int> claimed = cz.is_null() ? std::nullopt : std::optional<int>(cz.get<int>());
  if (claimed != first_zero) out.fail("certified_zero_from does not match the first zero of H");
  if (claimed && h.value("zero_propagation_checked", false) &&
      ideal_piece_e0(ctx, *claimed + 1, f).codim() != 0)
    out.fail("H(d*+1) = 0 is not confirmed");
}

void check_claims(RecheckResult& out, const Json& body, const AlgebraContext& ctx) {
  for (const auto& c : body.at("claims")) {
    const std::string which = c.at("which");
    const int m = c.at("m").get<int>();
    const Json& p = c.at("params");
    std::vector<ClaimResult> results;
    if (which == "1") {
      results.push_back(verify_claim1(ctx, m, p.at("j").get<int>(), p.at("s").get<int>()));
    } else if (which == "2") {
      auto [a, b] = verify_claim2(ctx, m, p.at("k").get<int>(), p.at("s").get<int>());
      results.push_back(std::move(a));
      results.push_back(std::move(b));
    } else if (which == "3e") {
      results.push_back(verify_claim3_even(ctx, m));
    } else if (which == "3o") {
      results.push_back(verify_claim3_odd(ctx, m));
    } else {
      out.fail("unknown claim '" + which + "'");
      continue;
    }
    const Json& recorded = c.at("results");
    if (recorded.size() != results.size()) {
      out.fail("claim " + which + ": wrong number of results");
      continue;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (recorded[i].at("holds").get<bool>() != results[i].holds ||
          recorded[i].at("residual").get<std::string>() != results[i].residual.to_string())
        out.fail("claim " + which + ": recorded result differs from recomputation");
    }
  }
}

void check_tilde(RecheckResult& out, const Json& body, const AlgebraContext& ctx) {
  const int m = body.at("m").get<int>();
  const TildeContext t = TildeContext::make(ctx, m);
  const Json& rel = body.at("relations");
  if (rel.size() != t.relations.size()) {
    out.fail("tilde: relation list differs");
  } else {
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (rel[i].at("holds").get<bool>() != t.relations[i].holds) out.fail("tilde: relation " + std::to_string(i));
  }
  GeneratorRule rule;
  rule.gamma = 1;
  const AlgElem cm = c_element(ctx, m);
  for (const auto& e : body.at("entries")) {
    const Json& s = e.at("status");
    const AlgElem word = parse_plain(e.at("word").get<std::string>(), ctx);
    if (!(word == parse_plain(e.at("element").get<std::string>(), ctx)))
      out.fail("tilde: element text does not match word " + e.at("word").get<std::string>());
    if (s.at("status") != "found") continue;
    const AlgElem target = mul(power(cm, s.at("exponent").get<int>()), word);
    check_witness(out, s.at("witness"), ctx, SmashElem::embed(target), rule, "tilde " + e.at("word").get<std::string>());
  }
}

}  // namespace

RecheckResult recheck_certificate(const Json& cert) {
  RecheckResult out;
  try {
    if (cert.at("schema_version").get<int>() != kSchemaVersion) {
      out.fail("unsupported schema_version");
      return out;
    }
    const std::string command = cert.at("command");
    const Json& params = cert.at("parameters");
    const Json& body = cert.at("body");
    const AlgebraContext ctx(params.at("n").get<int>());
    if (command == "eval") {
      const auto parsed = parse_expr(params.at("expression").get<std::string>(), ctx.n());
      if (evaluate(*parsed.root, ctx).to_string() != body.at("text").get<std::string>())
        out.fail("eval: re-evaluation differs");
    } else if (command == "relations") {
      const PresentationReport r = presentation_check(ctx);
      if (r.all_hold() != body.at("all_hold").get<bool>()) out.fail("relations: verdict differs");
    } else if (command == "phi") {
      for (const auto& s : body.at("entries")) check_phi_status(out, s, ctx);
      std::vector<int> found;
      for (const auto& s : body.at("entries"))
        if (s.at("status") == "found") found.push_back(static_cast<int>(s.at("index").get<long>()));
      if (body.at("special_subset_checked").get<bool>() &&
          body.at("special_subset_holds").get<bool>() != special_subset_check(ctx.n(), found))
        out.fail("phi: special subset verdict differs");
    } else if (command == "psi") {
      check_psi(out, body, ctx, body.value("quotient_certificates", Json::array()));
    } else if (command == "hilbert") {
      check_hilbert(out, body, ctx);
    } else if (command == "pertinency") {
      check_hilbert(out, body.at("hilbert"), ctx);
      const Json& h = body.at("hilbert");
      const bool certified = !h.at("certified_zero_from").is_null() && h.at("zero_propagation_checked").get<bool>();
      if ((body.at("conclusion") == "pertinency_equals_n") != certified) out.fail("pertinency: conclusion differs");
    } else if (command == "admissibility") {
      check_hilbert(out, body.at("hilbert"), ctx);
      if (body.at("admissible").get<bool>() != !body.at("hilbert").at("certified_zero_from").is_null())
        out.fail("admissibility: verdict differs");
      for (const auto& p : body.at("psi")) check_psi(out, p, ctx, Json::array());
    } else if (command == "claims") {
      check_claims(out, body, ctx);
    } else if (command == "tilde") {
      check_tilde(out, body, ctx);
    } else {
      out.fail("unknown command '" + command + "'");
    }
  } catch (const std::exception& e) {
    out.fail(std::string("malformed certificate: ") + e.what());
  }
  return out;
}

}  // namespace skewlab
