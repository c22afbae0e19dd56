#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "skewlab/certificate.hpp"
#include "skewlab/cli.hpp"
#include "skewlab/expr.hpp"

using namespace skewlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("skewlab_test_" + name + ".json");
}

}  // namespace

TEST_CASE("parser shapes") {
  CHECK(ast_to_string(*parse_expr("b0*b1 + b1*b0", 2).root) == "((b0*b1) + (b1*b0))");
  CHECK(ast_to_string(*parse_expr("[b0, b1]", 2).root) == "[b0, b1]");
  CHECK(ast_to_string(*parse_expr("c7^2*b1", 8).root) == "(c7^2*b1)");
  CHECK(ast_to_string(*parse_expr("x0 - x1 - x2", 3).root) == "((x0 - x1) - x2)");
  CHECK(ast_to_string(*parse_expr(" 1/2 *x0 ", 3).root) == "(1/2*x0)");
  CHECK(uses_group(*parse_expr("x0*e1", 2).root));
  CHECK_FALSE(uses_group(*parse_expr("x0*b1", 2).root));
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const std::string& src) -> long {
    try {
      parse_expr(src, 3);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("x0 +") == 4);
  CHECK(offset_of("x0 x1") == 3);
  CHECK(offset_of("[x0 x1]") == 4);
  CHECK(offset_of("x") == 1);
  CHECK(offset_of("x0^") == 3);
  CHECK(offset_of("2/0") == 2);
  CHECK(offset_of("x0 $") == 3);
  CHECK(offset_of("x0") == -1);
}

TEST_CASE("evaluation") {
  const AlgebraContext c2(2);
  CHECK(parse_plain("[b0, b1]", c2) == c_element(c2, 1));
  CHECK(parse_plain("x3", c2) == AlgElem::generator(c2, 1));
  const auto warned = parse_expr("x3", 2);
  CHECK(warned.warnings.size() == 1);
  CHECK(parse_smash("s*x0", c2) == SmashElem::basis(c2, Monomial::generator(2, 1), 1));
  CHECK(parse_smash("e0", c2) == e_element(c2, 0));
  CHECK_THROWS_AS(parse_plain("e0*x0", c2), InvalidInput);
  CHECK_THROWS_AS(parse_plain("[x0 + 1, x1]", c2), ParseError);
  const AlgebraContext c4(4);
  CHECK(parse_scalar("w^2", c4) == CycNumber(c4.cyc(), -1L));
  CHECK(parse_plain("c7^2*b1", c4) == power(c_element(c4, 3), 2) * b_element(c4, 1));
}

TEST_CASE("canonical text parses back to the same element") {
  std::mt19937 rng(17);
  for (int n : {2, 3, 4, 6}) {
    const AlgebraContext ctx(n);
    std::uniform_int_distribution<int> coeff(-6, 6), g(0, n - 1), deg(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      SmashElem u(ctx);
      for (int t = 0; t < 5; ++t) {
        std::vector<int> e(n, 0);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ++e[g(rng)];
        CycNumber c = ctx.omega(g(rng)) * Rational(coeff(rng), 1 + g(rng));
        c += ctx.scalar(coeff(rng));
        u += SmashElem::basis(ctx, Monomial(n, e), g(rng)) * c;
      }
      REQUIRE(parse_smash(u.to_string(), ctx) == u);
      if (u.is_plain()) CHECK(parse_plain(u.to_plain().to_string(), ctx) == u.to_plain());
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(cli({"eval", "--n", "2", "[b0, b1]"}).code == kExitOk);
  CHECK(cli({"eval", "--n", "2", "[b0, b1"}).code == kExitInvalid);
  CHECK(cli({"eval", "--n", "1", "x0"}).code == kExitInvalid);
  CHECK(cli({"relations", "--n", "5"}).code == kExitOk);
  CHECK(cli({"bogus"}).code == kExitInvalid);
  CHECK(cli({}).code == kExitInvalid);
  CHECK(cli({"phi", "--n", "3", "--k", "0", "--max-power", "2", "--max-degree", "4"}).code == kExitInconclusive);
  CHECK(cli({"hilbert", "--n", "4", "--modular", "--prime", "7"}).code == kExitInvalid);
  CHECK(cli({"pertinency", "--n", "2"}).code == kExitOk);
  CHECK(cli({"pertinency", "--n", "3", "--max-degree", "6"}).code == kExitInconclusive);
  CHECK(cli({"claims", "--n", "14", "--m", "7", "--which", "1", "--params", "j=0,s=1"}).code == kExitOk);
  CHECK(cli({"claims", "--n", "14", "--m", "7", "--which", "3e"}).code == kExitInvalid);
  CHECK(cli({"claims", "--n", "8", "--m", "4", "--params", "j"}).code == kExitInvalid);
  CHECK(cli({"psi", "--n", "4", "--j", "0", "--quotient-by", "0", "--max-power", "1"}).code == kExitInvalid);
  CHECK(cli({"--recheck", "/nonexistent/cert.json"}).code == kExitInvalid);
}

TEST_CASE("eval output") {
  const Run r = cli({"eval", "--n", "2", "[b0, b1]"});
  const Json j = Json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["body"]["text"] == "(1/2)*x0^2 - (1/2)*x1^2");
  CHECK(j["body"]["kind"] == "plain");
  CHECK(r.err.find("(1/2)*x0^2") != std::string::npos);
}

TEST_CASE("certificates round-trip through --recheck") {
  const std::vector<std::vector<std::string>> runs = {
      {"eval", "--n", "3", "e0*x1 - x1*e2"},
      {"relations", "--n", "3"},
      {"phi", "--n", "2"},
      {"phi", "--n", "4", "--k", "1", "--modular"},
      {"psi", "--n", "4", "--j", "1"},
      {"psi", "--n", "4", "--j", "0", "--quotient-by", "2"},
      {"hilbert", "--n", "2"},
      {"hilbert", "--n", "4", "--modular"},
      {"pertinency", "--n", "2"},
      {"admissibility", "--n", "2"},
      {"claims", "--n", "8", "--m", "4"},
      {"tilde", "--n", "4", "--m", "2", "--degree", "2"},
  };
  int i = 0;
  for (auto args : runs) {
    const auto path = temp_file(std::to_string(i++));
    args.push_back("--out");
    args.push_back(path.string());
    CAPTURE(args[0]);
    REQUIRE(cli(args).code == kExitOk);
    CHECK(cli({"--recheck", path.string()}).code == kExitOk);
    std::filesystem::remove(path);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto path = temp_file("tamper");
  REQUIRE(cli({"phi", "--n", "4", "--k", "2", "--out", path.string()}).code == kExitOk);
  Json cert;
  {
    std::ifstream in(path);
    cert = Json::parse(in);
  }
  CHECK(recheck_certificate(cert).ok);

  Json bad_coeff = cert;
  auto& term = bad_coeff["body"]["entries"][0]["witness"]["terms"][0];
  term["coefficient"] = "7";
  CHECK_FALSE(recheck_certificate(bad_coeff).ok);

  Json bad_target = cert;
  bad_target["body"]["entries"][0]["witness"]["target"] = "c2^2";
  CHECK_FALSE(recheck_certificate(bad_target).ok);

  Json extra = cert;
  extra["unknown_field"] = 1;
  CHECK(recheck_certificate(extra).ok);

  std::ofstream(path) << bad_coeff.dump();
  CHECK(cli({"--recheck", path.string()}).code == kExitInconsistent);
  std::ofstream(path) << "{ not json";
  CHECK(cli({"--recheck", path.string()}).code == kExitInvalid);
  std::filesystem::remove(path);

  const auto hpath = temp_file("hilbert");
  REQUIRE(cli({"hilbert", "--n", "2", "--out", hpath.string()}).code == kExitOk);
  Json h;
  {
    std::ifstream in(hpath);
    h = Json::parse(in);
  }
  h["body"]["dims"][1] = 0;
  CHECK_FALSE(recheck_certificate(h).ok);
  std::filesystem::remove(hpath);
}
