#include <doctest.h>

#include <filesystem>

#include "kwg/errors.hpp"
#include "kwg/scenario.hpp"

using namespace kwg;

namespace {

const std::filesystem::path kData = KWG_TEST_DATA;

/// Line and field of the ParseError raised by `text`.
std::pair<int, std::string> parse_failure(const std::string& text) {
  try {
    (void)parse_scenario(text);
  } catch (const ParseError& e) {
    return {e.line(), e.field()};
  }
  return {-1, "no error"};
}

const char* kBase =
    "parent = uniform01\n"
    "u.alphas = [1, 2]\n"
    "u.betas = [1, 1]\n"
    "v.alphas = [1.5, 1.5]\n"
    "v.betas = [1, 1]\n";

}  // namespace

TEST_CASE("explicit scenario") {
  const Scenario s = load_scenario(kData / "ce3_1.scn");
  CHECK(s.name == "ce3_1");
  CHECK(s.u.size() == 3);
  CHECK(s.u.alphas()[0] == 6.2);
  CHECK(s.v.alphas()[1] == 5.1);
  CHECK(s.relations.size() == 3);
  CHECK(s.grid.kind == GridKind::quantile);
  CHECK(s.grid.points == 2001);
  CHECK(s.expect.at(Relation::likelihood_ratio) == Result::violated);
  CHECK(s.expect.at(Relation::hazard_rate) == Result::holds_leq);
}

TEST_CASE("multiple-outlier and two-parent scenarios") {
  const Scenario o = load_scenario(kData / "outlier.scn");
  CHECK(o.u.size() == 2);
  CHECK(o.u.alphas()[0] == 3);
  CHECK(o.u.betas()[1] == 2);
  CHECK(o.v.alphas()[1] == 1.5);
  REQUIRE(o.relations.size() == 3);
  CHECK(o.relations[0] == Relation::likelihood_ratio);
  CHECK(o.expect.size() == 3);

  const Scenario t = load_scenario(kData / "two_parents.scn");
  CHECK(t.u.parent().name() == "exponential(2)");
  CHECK(t.v.parent().name() == "exponential(1)");
  CHECK(t.seed == 2024);
  CHECK(t.grid.lo == 0.001);
  CHECK(t.grid.points == 201);

  const Scenario y = load_scenario(kData / "weibull_y.scn");
  CHECK(y.grid.kind == GridKind::log_substitution);
}

TEST_CASE("defaults and comments") {
  const Scenario s = parse_scenario(std::string("# leading comment\n\n") + kBase + "seed = 5   # trailing\n");
  CHECK(s.name == "scenario");
  CHECK(s.relations.size() == 3);
  CHECK(s.grid.points == 2001);
  CHECK(s.seed == 5);
  CHECK(s.expect.empty());
  CHECK(s.output.empty());
}

TEST_CASE("serialization replays exactly") {
  for (const char* file : {"ce3_1.scn", "identical.scn", "outlier.scn", "two_parents.scn", "weibull_y.scn"}) {
    CAPTURE(file);
    const Scenario s = load_scenario(kData / file);
    const std::string text = serialize_scenario(s);
    const Scenario r = parse_scenario(text);
    CHECK(serialize_scenario(r) == text);
    CHECK(std::equal(r.u.alphas().begin(), r.u.alphas().end(), s.u.alphas().begin(), s.u.alphas().end()));
    CHECK(std::equal(r.v.betas().begin(), r.v.betas().end(), s.v.betas().begin(), s.v.betas().end()));
    CHECK(r.expect == s.expect);
    CHECK(r.relations == s.relations);
  }
  // shortest round-trip formatting keeps awkward doubles intact
  const Scenario awkward = parse_scenario(
      "parent = weibull(0.30000000000000004, 3)\nu.alphas = [0.1, 0.30000000000000004]\nu.betas = [1e-300, 7]\n"
      "v.alphas = [1, 1]\nv.betas = [1, 1]\n");
  const Scenario back = parse_scenario(serialize_scenario(awkward));
  CHECK(back.u.alphas()[1] == 0.30000000000000004);
  CHECK(back.u.betas()[0] == 1e-300);
  CHECK(back.u.parent().name() == awkward.u.parent().name());
}

TEST_CASE("errors carry line and field") {
  CHECK_THROWS_AS(load_scenario(kData / "mismatched.scn"), ParseError);
  try {
    (void)load_scenario(kData / "mismatched.scn");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.field() == "u.betas");
    CHECK(std::string(e.what()).find("scenario:4 [u.betas]") == 0);
  }
  CHECK(parse_failure(std::string(kBase) + "colour = red\n") == std::pair<int, std::string>{6, "colour"});
  CHECK(parse_failure(std::string(kBase) + "just words\n") == std::pair<int, std::string>{6, ""});
  CHECK(parse_failure(std::string(kBase) + "seed = -3\n") == std::pair<int, std::string>{6, "seed"});
  CHECK(parse_failure(std::string(kBase) + "grid.lo = abc\n") == std::pair<int, std::string>{6, "grid.lo"});
  CHECK(parse_failure(std::string(kBase) + "relation = rh\n") == std::pair<int, std::string>{6, "relation"});
  CHECK(parse_failure(std::string(kBase) + "parent = uniform01\n") == std::pair<int, std::string>{6, "parent"});
  CHECK(parse_failure(std::string(kBase) + "grid.kind = q\n") == std::pair<int, std::string>{6, "grid.kind"});
  CHECK(parse_failure(std::string(kBase) + "relation = st\nexpect.lr = violated\n") ==
        std::pair<int, std::string>{7, "expect.lr"});
  CHECK(parse_failure(std::string(kBase) + "expect = sometimes\n") == std::pair<int, std::string>{6, "expect"});
  CHECK(parse_failure("parent = gamma(2)\nu.alphas = [1]\nu.betas = [1]\nv.alphas = [1]\nv.betas = [1]\n") ==
        std::pair<int, std::string>{1, "parent"});
  CHECK(parse_failure("parent = uniform01\nu.alphas = [1, 0]\nu.betas = [1, 1]\nv.alphas = [1, 1]\nv.betas = [1, 1]\n")
            .second == "u");
  CHECK(parse_failure("parent = uniform01\nu.alphas = 1, 2\nu.betas = [1, 1]\nv.alphas = [1, 1]\nv.betas = [1, 1]\n") ==
        std::pair<int, std::string>{2, "u.alphas"});
  CHECK(parse_failure("parent = uniform01\nu.alphas = [1, 2]\nu.betas = [1, 1]\nv.alphas = [1]\nv.betas = [1]\n")
            .second == "v");
  // missing required keys
  CHECK(parse_failure("u.alphas = [1]\nu.betas = [1]\nv.alphas = [1]\nv.betas = [1]\n").second == "parent.u");
  CHECK(parse_failure("parent = uniform01\nu.alphas = [1]\nv.alphas = [1]\nv.betas = [1]\n").second == "u.betas");
  // grid outside the support of the uniform parent
  CHECK(parse_failure(std::string(kBase) + "grid.kind = x\ngrid.lo = 0.5\ngrid.hi = 2\n").second == "grid");
  CHECK(parse_failure(std::string(kBase) + "grid.points = 3\n").second == "grid");
  // explicit and multiple-outlier keys mixed
  CHECK(parse_failure(std::string(kBase) + "u.n1 = 1\n").second == "u");
  CHECK_THROWS_AS(load_scenario(kData / "does_not_exist.scn"), ParseError);
}
