#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "unitri/endomorphism.hpp"
#include "unitri/error.hpp"
#include "unitri/io.hpp"
#include "unitri/normalizer.hpp"
#include "unitri/report.hpp"
#include "unitri/sampling.hpp"

using namespace unitri;
using namespace unitri::testing;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    (void)parse_endomorphism(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("endomorphism file") {
    const TruncatedLieMap phi = parse_endomorphism(
        "# conjugation by x2 -> x2 + x1\n"
        "n = 2\n"
        "level = 1\n"
        "2:1 -> x1 d2\n"
        "1: -> d1 - d2   # reordered\n"
        "2:0 -> d2\n");
    CHECK(phi == endo_from_exp_ad(D("x1 d2", 2), 1));
    CHECK(format_endomorphism(phi) == "n = 2\nlevel = 1\n1: -> d1 - d2\n2:0 -> d2\n2:1 -> x1 d2\n");
  }

  TEST_CASE("endomorphism files round-trip") {
    Sampler rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const TruncatedLieMap phi = endo_from_automorphism(rng.automorphism(3, 2), 1 + rng.below(2));
      CHECK(parse_endomorphism(format_endomorphism(phi)) == phi);
    }
  }

  TEST_CASE("endomorphism file errors carry line numbers") {
    const ParseError missing = parse_failure("n = 2\nlevel = 1\n1: -> d1\n2:0 -> d2\n");
    CHECK(std::string(missing.message()).find("missing record for basis element 2:1") == 0);
    const ParseError dup = parse_failure("n = 2\nlevel = 1\n1: -> d1\n1: -> d1\n");
    CHECK(dup.line() == 4);
    const ParseError outside = parse_failure("n = 2\nlevel = 1\n2:2 -> d1\n");
    CHECK(outside.line() == 3);
    const ParseError noheader = parse_failure("1: -> d1\n");
    CHECK(noheader.line() == 1);
    const ParseError bad = parse_failure("n = 2\nlevel = 0\n1: -> d1\n2:0 -> x2 d2\n");
    CHECK(bad.line() == 4);
    CHECK(bad.column() == 8);
    const ParseError arrow = parse_failure("n = 2\nlevel = 0\n1: d1\n");
    CHECK(arrow.line() == 3);
    CHECK(parse_failure("n = x\n").line() == 1);
  }

  TEST_CASE("spanner files") {
    const SpannedSubalgebra s = parse_spanners("d1\n# comment\nx1 d2\n");
    CHECK(s.ambient == 2);
    CHECK(s.spanners == std::vector<UniDerivation>{D("d1", 2), D("x1 d2", 2)});
    CHECK(parse_spanners("n = 4\nd1\n").ambient == 4);
    CHECK(parse_spanners("d1\n", 3).ambient == 3);
    CHECK_THROWS_AS((void)parse_spanners("n = 2\nx2 d3\n"), Error);
    CHECK_THROWS_AS((void)parse_spanners("n = 2\nd1\n", 3), Error);
    CHECK(parse_spanners(format_spanners(s)).spanners == s.spanners);
  }

  TEST_CASE("text and JSON reports carry the same data") {
    const VerificationReport r = verify_theorem(endo_from_automorphism(A("x1 -> 2 x1\nx2 -> x2 + x1^2", 2), 2));
    REQUIRE(r.certified());
    const auto j = nlohmann::json::parse(format_report_json(r));
    CHECK(j["verdict"] == "certified");
    CHECK(j["stage"] == "complete");
    CHECK(j["n"] == 2);
    CHECK(j["level"] == 2);
    CHECK(j["budget"] == 1);
    CHECK(j["homomorphism"]["checked_pairs"] == r.checked_pairs);
    CHECK(j["violation"].is_null());
    CHECK(j["lambdas"] == nlohmann::json::array({"1/2", "1"}));
    CHECK(j["sigma"] == to_string(*r.sigma));
    CHECK(j["rank_table"].size() == 2);
    CHECK(j["rank_table"][1]["rank"] == 3);

    const std::string text = format_report_text(r);
    CHECK(text.find("verdict: certified") == 0);
    CHECK(text.find("lambdas: 1/2 1") != std::string::npos);
    CHECK(text.find("x1 -> 2 x1") != std::string::npos);
    CHECK(text.find("    1     3    3") != std::string::npos);

    const FiltrationBasis b = enumerate_basis(2, 1);
    const VerificationReport bad = verify_theorem(TruncatedLieMap(b, {D("d1", 2), D("d2", 2), D("0", 2)}));
    const auto jb = nlohmann::json::parse(format_report_json(bad));
    CHECK(jb["verdict"] == "rejected");
    CHECK(jb["stage"] == "homomorphism");
    CHECK(jb["violation"]["expected"] == "d2");
    CHECK(jb["violation"]["actual"] == "0");
    CHECK(jb["sigma"].is_null());
    CHECK(format_report_text(bad).find("actual [phi(u), phi(v)] = 0") != std::string::npos);
  }
}
