#include "skewlab/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewlab/certificate.hpp"
#include "skewlab/expr.hpp"

namespace skewlab {

namespace {

struct Outcome {
  Json certificate;
  int code = kExitOk;
  /// Human-readable summary (tables, canonical text).
  std::string summary;
};

std::vector<int> parse_index_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("--params entry '" + item + "' is not name=value");
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("--params entry '" + item + "' has a non-integer value");
    }
  }
  return out;
}

AlgebraContext make_context(int n) {
  if (n < 2 || n > kMaxGenerators) throw InvalidInput("--n must lie in 2.." + std::to_string(kMaxGenerators));
  return AlgebraContext(n);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string hilbert_table(const HilbertProfile& h) {
  std::ostringstream os;
  os << "  d  dim(A#C_n)_d  dim(e0)_d  H(d)\n";
  for (std::size_t d = 0; d < h.dims.size(); ++d) {
    const uint64_t full = smash_piece_dim(h.n, static_cast<int>(d));
    os << std::setw(3) << d << std::setw(14) << full << std::setw(11) << full - h.dims[d] << std::setw(6) << h.dims[d]
       << "\n";
  }
  if (h.certified_zero_from)
    os << "H vanishes from d* = " << *h.certified_zero_from
       << (h.zero_propagation_checked ? " (H(d*+1) = 0 checked)" : "") << "\n";
  else
    os << "no zero of H up to degree " << h.dims.size() - 1 << "\n";
  if (h.prime) os << "computed over F_" << *h.prime << "\n";
  return os.str();
}

Json element_json(const SmashElem& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back({{"monomial", k.mono.to_string()}, {"power", k.power}, {"coefficient", c.to_string()}});
  const auto d = e.homogeneous_degree();
  return {{"text", e.to_string()},
          {"kind", e.is_plain() ? "plain" : "smash"},
          {"degree", d ? Json(*d) : Json(nullptr)},
          {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  int n = 0;
  std::string expr;
};

Outcome run_eval(const EvalArgs& a, std::ostream& err) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  const auto parsed = parse_expr(a.expr, a.n);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  const SmashElem value = evaluate(*parsed.root, ctx);
  const bool smash = uses_group(*parsed.root);
  Json body = element_json(value);
  body["kind"] = smash ? "smash" : "plain";
  body["warnings"] = parsed.warnings;
  Outcome o;
  o.summary = value.to_string() + "\n";
  o.certificate = make_certificate("eval", {{"n", a.n}, {"expression", a.expr}}, "evaluated", std::move(body),
                                   seconds_since(t0));
  return o;
}

Outcome run_relations(int n) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(n);
  const PresentationReport r = presentation_check(ctx);
  Outcome o;
  std::size_t failed = 0;
  for (const auto& c : r.checks)
    if (!c.holds) {
      ++failed;
      o.summary += "FAILS: " + c.relation + "\n";
    }
  o.summary += std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
               " relations hold; s e0 = e0 s = e0: " + (sigma_central_on_e0(ctx) ? "yes" : "no") + "\n";
  Json body = to_json(r);
  body["sigma_absorbed_by_e0"] = sigma_central_on_e0(ctx);
  const bool ok = r.all_hold() && body["sigma_absorbed_by_e0"].get<bool>();
  o.code = ok ? kExitOk : kExitInconsistent;
  o.certificate = make_certificate("relations", {{"n", n}}, ok ? "verified" : "failed", std::move(body),
                                   seconds_since(t0));
  return o;
}

struct SearchArgs {
  int n = 0;
  std::optional<int> k;
  std::optional<int> i;
  int j = 0;
  std::string quotient_by;
  int max_power = 8;
  int max_degree = 12;
  bool modular = false;
  bool no_psi = false;
};

SearchBounds bounds_of(const SearchArgs& a) {
  if (a.max_power < 1 || a.max_degree < 1) throw InvalidInput("--max-power and --max-degree must be at least 1");
  return SearchBounds{a.max_power, a.max_degree, a.modular};
}

Json bounds_json(const SearchArgs& a) {
  Json p{{"n", a.n}, {"max_power", a.max_power}, {"max_degree", a.max_degree}, {"modular", a.modular}};
  if (a.modular) p["prime"] = default_prime(a.n);
  return p;
}

std::string status_line(const SearchStatus& s) {
  if (s.found) return s.target + ": found N=" + std::to_string(s.exponent);
  return s.target + ": unknown at N <= " + std::to_string(s.searched_exponent) + ", degree <= " +
         std::to_string(s.max_degree);
}

Outcome run_phi(const SearchArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  std::vector<int> ks;
  if (a.k) ks.push_back(*a.k);
  const PhiReport r = phi_report(ctx, ks, bounds_of(a));
  Outcome o;
  bool all = true;
  for (const auto& e : r.entries) {
    all = all && e.found;
    o.summary += status_line(e) + "\n";
  }
  if (r.special_subset_checked)
    o.summary += std::string("found set closed under units: ") + (r.special_subset_holds ? "yes" : "no") + "\n";
  o.code = all ? kExitOk : kExitInconclusive;
  Json p = bounds_json(a);
  if (a.k) p["k"] = *a.k;
  o.certificate = make_certificate("phi", std::move(p), all ? "found" : "unknown_at", to_json(r), seconds_since(t0));
  return o;
}

Outcome run_psi(const SearchArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  const SearchBounds b = bounds_of(a);
  std::vector<SearchStatus> quotient;
  for (int k : parse_index_list(a.quotient_by, "--quotient-by")) {
    SearchStatus s = phi_membership(ctx, k, b);
    if (!s.found)
      throw InvalidInput("quotient index " + std::to_string(k) + " has no Phi certificate within the bounds");
    quotient.push_back(std::move(s));
  }
  PsiReport r;
  if (a.i) {
    r.n = a.n;
    r.j = mod_index(a.j, a.n);
    for (const auto& s : quotient) r.quotient_by.push_back(static_cast<int>(s.index));
    std::sort(r.quotient_by.begin(), r.quotient_by.end());
    r.quotient_by.erase(std::unique(r.quotient_by.begin(), r.quotient_by.end()), r.quotient_by.end());
    r.entries.push_back(psi_membership(ctx, *a.i, a.j, quotient, b));
  } else {
    r = psi_report(ctx, a.j, quotient, b);
  }
  Outcome o;
  bool all = true;
  for (const auto& e : r.entries) {
    all = all && e.found;
    o.summary += status_line(e) + " in R" + std::to_string(r.j) + "A\n";
  }
  o.code = all ? kExitOk : kExitInconclusive;
  Json body = to_json(r);
  Json qc = Json::array();
  for (const auto& s : quotient) qc.push_back(to_json(s));
  body["quotient_certificates"] = std::move(qc);
  Json p = bounds_json(a);
  p["j"] = a.j;
  p["quotient_by"] = r.quotient_by;
  if (a.i) p["i"] = *a.i;
  o.certificate = make_certificate("psi", std::move(p), all ? "found" : "unknown_at", std::move(body),
                                   seconds_since(t0));
  return o;
}

struct HilbertArgs {
  int n = 0;
  int max_degree = 12;
  bool modular = false;
  uint64_t prime = 0;
};

Outcome run_hilbert(const HilbertArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  if (a.max_degree < 0) throw InvalidInput("--max-degree must be non-negative");
  HilbertProfile h;
  Json p{{"n", a.n}, {"max_degree", a.max_degree}, {"modular", a.modular}};
  if (a.modular) {
    const uint64_t prime = a.prime ? a.prime : default_prime(a.n);
    try {
      h = screen_hilbert_quotient(ctx, a.max_degree, prime);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
    p["prime"] = prime;
  } else {
    h = hilbert_quotient(ctx, a.max_degree);
    const HilbertProfile check = screen_hilbert_quotient(ctx, a.max_degree, default_prime(a.n));
    if (check.dims != h.dims) throw Inconsistency("exact and modular Hilbert functions disagree");
    p["crosscheck_prime"] = default_prime(a.n);
  }
  const bool certified = h.certified_zero_from && h.zero_propagation_checked;
  if (h.certified_zero_from && !h.zero_propagation_checked) throw Inconsistency("H(d*+1) is not zero");
  Outcome o;
  o.summary = hilbert_table(h);
  o.code = certified ? kExitOk : kExitInconclusive;
  o.certificate = make_certificate("hilbert", std::move(p), certified ? "certified" : "inconclusive", to_json(h),
                                   seconds_since(t0));
  return o;
}

Outcome run_pertinency(int n, int max_degree) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(n);
  if (max_degree < 0) throw InvalidInput("--max-degree must be non-negative");
  const PertinencyReport r = pertinency_report(ctx, max_degree);
  Outcome o;
  o.summary = hilbert_table(r.hilbert);
  if (r.equals_n) {
    o.summary += "p(A, C_" + std::to_string(n) + ") = " + std::to_string(n) + "\n";
  } else {
    o.summary += "inconclusive: fitted growth degree " + std::to_string(r.growth.fitted_degree) +
                 ", GK estimate " + std::to_string(r.growth.gk_estimate) + "\n";
  }
  o.code = r.equals_n ? kExitOk : kExitInconclusive;
  o.certificate =
      make_certificate("pertinency", {{"n", n}, {"max_degree", max_degree}, {"crosscheck_prime", default_prime(n)}},
                       r.equals_n ? "pertinency_equals_n" : "inconclusive", to_json(r), seconds_since(t0));
  return o;
}

Outcome run_admissibility(const SearchArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  const AdmissibilityReport r = admissibility_report(ctx, bounds_of(a), !a.no_psi);
  Outcome o;
  o.summary = hilbert_table(r.hilbert);
  for (const auto& p : r.psi)
    for (const auto& e : p.entries) o.summary += status_line(e) + " in R" + std::to_string(p.j) + "A\n";
  o.summary += std::string("admissible: ") + (r.admissible ? "yes" : "not certified") + "\n";
  o.code = r.admissible ? kExitOk : kExitInconclusive;
  o.certificate = make_certificate("admissibility", bounds_json(a), r.admissible ? "admissible" : "inconclusive",
                                   to_json(r), seconds_since(t0));
  return o;
}

struct ClaimArgs {
  int n = 0;
  int m = 0;
  std::string which;
  std::string params;
};

Outcome run_claims(const ClaimArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  const auto params = parse_params(a.params);
  auto get = [&](const char* name, int fallback) {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  };
  std::vector<std::string> which;
  if (!a.which.empty()) {
    which.push_back(a.which);
  } else {
    // Only the claims whose index constraints admit this m.
    if (a.m >= 2) which.push_back("1");
    if (a.m % 2 == 1 && a.m >= 3) which.push_back("2");
    if (a.m % 2 == 0 && a.m >= 2) which.push_back("3e");
    if (a.m % 2 == 1 && a.m >= 7) which.push_back("3o");
    if (which.empty()) throw InvalidInput("no claim applies to m = " + std::to_string(a.m));
  }
  Json claims = Json::array();
  Outcome o;
  bool all = true;
  for (const auto& w : which) {
    Json entry{{"which", w}, {"m", a.m}};
    std::vector<ClaimResult> results;
    if (w == "1") {
      const int j = get("j", 0), s = get("s", 1);
      entry["params"] = {{"j", j}, {"s", s}};
      results.push_back(verify_claim1(ctx, a.m, j, s));
    } else if (w == "2") {
      const int k = get("k", (a.m - 1) / 2), s = get("s", 1);
      entry["params"] = {{"k", k}, {"s", s}};
      auto [x, y] = verify_claim2(ctx, a.m, k, s);
      results.push_back(std::move(x));
      results.push_back(std::move(y));
    } else if (w == "3e") {
      entry["params"] = Json::object();
      results.push_back(verify_claim3_even(ctx, a.m));
    } else if (w == "3o") {
      entry["params"] = Json::object();
      results.push_back(verify_claim3_odd(ctx, a.m));
    } else {
      throw InvalidInput("--which must be one of 1, 2, 3e, 3o");
    }
    Json rj = Json::array();
    for (const auto& r : results) {
      all = all && r.holds;
      o.summary += (r.holds ? "holds:    " : "MISMATCH: ") + r.statement + "\n";
      if (!r.holds) o.summary += "  residual: " + r.residual.to_string() + "\n";
      rj.push_back(to_json(r));
    }
    entry["results"] = std::move(rj);
    claims.push_back(std::move(entry));
  }
  o.code = all ? kExitOk : kExitInconclusive;
  Json p{{"n", a.n}, {"m", a.m}};
  if (!a.which.empty()) p["which"] = a.which;
  if (!a.params.empty()) p["params"] = a.params;
  o.certificate = make_certificate("claims", std::move(p), all ? "verified" : "mismatch",
                                   Json{{"claims", std::move(claims)}}, seconds_since(t0));
  return o;
}

struct TildeArgs {
  int n = 0;
  int m = 0;
  int degree = 2;
  int max_t = -1;
};

Outcome run_tilde(const TildeArgs& a) {
  const auto t0 = Clock::now();
  const AlgebraContext ctx = make_context(a.n);
  const TildeReport r = tilde_inclusion_check(ctx, a.m, a.degree, a.max_t);
  Outcome o;
  o.summary = "isomorphism data: " + r.context.isomorphism + "\n";
  for (const auto& rel : r.context.relations)
    if (!rel.holds) o.summary += "relation fails in A_" + std::to_string(a.n) + ": " + rel.relation + "\n";
  for (const auto& e : r.entries)
    o.summary += e.word + (e.status.found ? ": t=" + std::to_string(e.status.exponent) : std::string(": not found")) +
                 "\n";
  o.code = r.all_found() ? kExitOk : kExitInconclusive;
  o.certificate = make_certificate("tilde",
                                   {{"n", a.n},
                                    {"m", a.m},
                                    {"degree", a.degree},
                                    {"max_t", a.max_t < 0 ? 2 * a.n : a.max_t}},
                                   r.all_found() ? "found" : "unknown_at", to_json(r), seconds_since(t0));
  return o;
}

int run_recheck(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return kExitInvalid;
  }
  Json cert;
  try {
    cert = Json::parse(in);
  } catch (const std::exception& e) {
    err << "error: " << path << " is not JSON: " << e.what() << "\n";
    return kExitInvalid;
  }
  const RecheckResult r = recheck_certificate(cert);
  for (const auto& m : r.messages) err << "recheck: " << m << "\n";
  out << (r.ok ? "certificate verified" : "certificate REJECTED") << "\n";
  return r.ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the (-1)-skew polynomial algebra with its cyclic action", "skewlab"};
  app.set_version_flag("--version", kEngineVersion);
  int threads = 0;
  if (const char* env = std::getenv("SKEWLAB_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: SKEWLAB_THREADS is not an integer\n";
      return kExitInvalid;
    }
  }
  std::string out_path;
  std::string recheck_path;
  app.add_option("--threads", threads, "worker threads (0 = auto; default $SKEWLAB_THREADS)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write the JSON certificate to this file");
  app.add_option("--recheck", recheck_path, "re-verify a certificate file and exit");
  app.require_subcommand(0, 1);
  app.fallthrough();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate an element expression");
  eval->add_option("--n", eval_args.n, "context order")->required();
  eval->add_option("expr", eval_args.expr, "expression")->required();

  int rel_n = 0;
  auto* relations = app.add_subcommand("relations", "check the presentation of A#C_n");
  relations->add_option("--n", rel_n, "context order")->required();

  SearchArgs phi_args;
  auto* phi = app.add_subcommand("phi", "search powers of c_k in (e0)");
  phi->add_option("--n", phi_args.n, "context order")->required();
  phi->add_option("--k", phi_args.k, "single index (default: all of Z_n)");
  phi->add_option("--max-power", phi_args.max_power, "largest N tried");
  phi->add_option("--max-degree", phi_args.max_degree, "largest degree 2N tried");
  phi->add_flag("--modular", phi_args.modular, "reject candidates mod p before exact work");

  SearchArgs psi_args;
  auto* psi = app.add_subcommand("psi", "search powers of c_i in R_j A (+ c_k A)");
  psi->add_option("--n", psi_args.n, "context order")->required();
  psi->add_option("--j", psi_args.j, "eigenspace index")->required();
  psi->add_option("--i", psi_args.i, "single index (default: all of Z_n)");
  psi->add_option("--quotient-by", psi_args.quotient_by, "comma-separated k, each certified in Phi first");
  psi->add_option("--max-power", psi_args.max_power, "largest N tried");
  psi->add_option("--max-degree", psi_args.max_degree, "largest degree 2N tried");
  psi->add_flag("--modular", psi_args.modular, "reject candidates mod p before exact work");

  HilbertArgs hil_args;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of A#C_n/(e0)");
  hilbert->add_option("--n", hil_args.n, "context order")->required();
  hilbert->add_option("--max-degree", hil_args.max_degree, "largest degree computed");
  hilbert->add_flag("--modular", hil_args.modular, "compute over F_p only");
  hilbert->add_option("--prime", hil_args.prime, "prime for --modular (p = 1 mod n)");

  int per_n = 0, per_d = 12;
  auto* pertinency = app.add_subcommand("pertinency", "certify p(A, C_n) = n or report growth");
  pertinency->add_option("--n", per_n, "context order")->required();
  pertinency->add_option("--max-degree", per_d, "largest degree computed");

  SearchArgs adm_args;
  auto* admissibility = app.add_subcommand("admissibility", "Hilbert certificate plus Psi corroboration");
  admissibility->add_option("--n", adm_args.n, "context order")->required();
  admissibility->add_option("--max-power", adm_args.max_power, "largest N tried");
  admissibility->add_option("--max-degree", adm_args.max_degree, "largest degree");
  admissibility->add_flag("--modular", adm_args.modular, "reject Psi candidates mod p before exact work");
  admissibility->add_flag("--no-psi", adm_args.no_psi, "skip the Psi searches");

  ClaimArgs claim_args;
  auto* claims = app.add_subcommand("claims", "verify the bracket identities in A_n");
  claims->add_option("--n", claim_args.n, "context order")->required();
  claims->add_option("--m", claim_args.m, "index m")->required();
  claims->add_option("--which", claim_args.which, "1, 2, 3e or 3o (default: all that apply)");
  claims->add_option("--params", claim_args.params, "e.g. j=0,s=1 or k=3,s=2");

  TildeArgs tilde_args;
  auto* tilde = app.add_subcommand("tilde", "push words in b_0..b_{m-1} into R_1 A by powers of c_m");
  tilde->add_option("--n", tilde_args.n, "context order")->required();
  tilde->add_option("--m", tilde_args.m, "divisor m of n")->required();
  tilde->add_option("--degree", tilde_args.degree, "largest word length");
  tilde->add_option("--max-t", tilde_args.max_t, "largest power of c_m (default 2n)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (threads > 0) omp_set_num_threads(threads);
  if (!recheck_path.empty()) return run_recheck(recheck_path, out, err);
  if (app.get_subcommands().empty()) {
    err << "error: a subcommand or --recheck is required\n" << app.help();
    return kExitInvalid;
  }

  Outcome o;
  try {
    if (*eval) o = run_eval(eval_args, err);
    else if (*relations) o = run_relations(rel_n);
    else if (*phi) o = run_phi(phi_args);
    else if (*psi) o = run_psi(psi_args);
    else if (*hilbert) o = run_hilbert(hil_args);
    else if (*pertinency) o = run_pertinency(per_n, per_d);
    else if (*admissibility) o = run_admissibility(adm_args);
    else if (*claims) o = run_claims(claim_args);
    else if (*tilde) o = run_tilde(tilde_args);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Inconsistency& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }

  o.certificate["parameters"]["threads"] = omp_get_max_threads();
  const std::string json = o.certificate.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return kExitInvalid;
    }
    f << json;
    out << o.summary;
  } else {
    err << o.summary;
    out << json;
  }
  return o.code;
}

}  // namespace skewlab
