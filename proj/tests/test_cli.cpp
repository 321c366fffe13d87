#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <chipoly/rational.hpp>

#include "cli.hpp"
#include "parse.hpp"

using chipoly::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(args);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("parse helpers") {
  TEST_CASE("complex numbers") {
    using chipoly::cli::parse_complex;
    CHECK(parse_complex("2") == chipoly::Complex(2, 0));
    CHECK(parse_complex("-1") == chipoly::Complex(-1, 0));
    CHECK(parse_complex("3+i") == chipoly::Complex(3, 1));
    CHECK(parse_complex("1-2i") == chipoly::Complex(1, -2));
    CHECK(parse_complex("-i") == chipoly::Complex(0, -1));
    CHECK(parse_complex("2.5i") == chipoly::Complex(0, 2.5L));
    CHECK(parse_complex("1e-3-2e+1i") == chipoly::Complex(1e-3L, -20));
    CHECK_THROWS(parse_complex(""));
    CHECK_THROWS(parse_complex("1+2j"));
    CHECK_THROWS(parse_complex("abc"));
  }

  TEST_CASE("polynomials and ranges") {
    using namespace chipoly::cli;
    CHECK(parse_poly_spec("0,1,1") == chipoly::QPoly{0, 1, 1});
    CHECK(parse_poly_spec("1/2, -3") == chipoly::QPoly{chipoly::Rational::parse("1/2"), -3});
    CHECK_THROWS(parse_poly_spec("1,,2"));
    CHECK(parse_m_range("2..5") == std::pair<unsigned, unsigned>(2, 5));
    CHECK_THROWS(parse_m_range("5..2"));
    CHECK_THROWS(parse_m_range("0..2"));
    CHECK_THROWS(parse_m_range("3"));
    CHECK(format_poly(chipoly::QPoly{0, chipoly::Rational::parse("-10/3"), 0, chipoly::Rational::parse("2/9")}, "u") ==
          "2/9 u^3 - 10/3 u");
    CHECK(format_poly(chipoly::QPoly{0, 1, 1}, "X") == "X^2 + X");
    CHECK(format_poly(chipoly::QPoly{-1}, "X") == "-1");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("psi") {
    const auto j = invoke_json({"psi", "--chi", "chi3", "--max-degree", "7"});
    REQUIRE(j.size() == 8);
    CHECK(j[0]["kind"] == "psi_moment");
    CHECK(j[1]["value"] == "-1/3");
    CHECK(j[3]["value"] == "2/3");
    CHECK(j[5]["value"] == "-10/3");
    CHECK(j[7]["value"] == "98/3");

    const auto one = invoke_json({"psi", "--chi", "one", "--max-degree", "2"});
    CHECK(one[0]["value"] == "1");
    CHECK(one[1]["value"] == "1/2");
    CHECK(one[2]["value"] == "1/6");

    const auto zero = invoke_json({"psi", "--chi", "period=2;values=0,0", "--max-degree", "3"});
    for (const auto& row : zero) CHECK(row["value"] == "0");
  }

  TEST_CASE("lneg") {
    const auto j = invoke_json({"lneg", "--chi", "chi3", "--poly", "0,1,1", "--m", "2"});
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kind"] == "l_negative");
    CHECK(j[0]["value"] == "-2/3");
    CHECK(j[0]["poly"]["1"] == "1");
    CHECK(j[0]["s"] == -1);

    const auto range = invoke_json({"lneg", "--chi", "chi3", "--poly", "5,2,0,1", "--m-range", "3..5"});
    REQUIRE(range.size() == 3);
    CHECK(range[2]["value"] == "-3731886");

    const auto offset = invoke_json({"lneg", "--poly", "0,1,1", "--m", "2", "--A", "4"});
    CHECK(offset[0]["value"] == "70/3");  // -2/3 - (6 - 30)

    const auto text = invoke({"lneg", "--chi", "chi3", "--poly", "0,1,1", "--m", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("-2/3") != std::string::npos);
  }

  TEST_CASE("family") {
    const auto j = invoke_json({"family", "--chi", "chi3", "--m", "4"});
    REQUIRE(j.size() == 4);
    CHECK(j[0]["kind"] == "family_poly");
    CHECK(j[0]["value"]["1"] == "-1/3");
    CHECK(j[3]["value"]["1"] == "98/3");
    CHECK(j[3]["value"]["3"] == "-10/3");
    const auto text = invoke({"family", "--m-range", "3..3"});
    CHECK(text.out.find("2/9 u^3 - 10/3 u") != std::string::npos);
  }

  TEST_CASE("eval") {
    const auto j = invoke_json({"eval", "--chi", "chi3", "--poly", "0,1,1", "--s", "-1", "--eps", "1e-10"});
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kind"] == "eval_point");
    CHECK(j[0]["value"]["re"].get<double>() == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(j[0]["value"]["im"].get<double>()) < 1e-12);

    const auto roots = invoke_json({"eval", "--roots", "0,-1", "--s", "3+i"});
    const auto both = invoke_json({"eval", "--poly", "0,1,1", "--roots", "0,-1", "--s", "3+i"});
    CHECK(roots[0]["value"]["re"].get<double>() == doctest::Approx(both[0]["value"]["re"].get<double>()));
    CHECK(roots[0]["value"]["im"].get<double>() == doctest::Approx(both[0]["value"]["im"].get<double>()));

    const auto mismatch = invoke({"eval", "--poly", "0,1,1", "--roots", "0,-2", "--s", "2"});
    CHECK(mismatch.code == 2);
  }

  TEST_CASE("congruence") {
    const auto j = invoke_json({"congruence", "--chi", "chi3", "--p", "5", "--periods", "2"});
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kind"] == "congruence_report");
    CHECK(j[0]["period_detected"] == 4);
    CHECK(j[0]["preperiod"] == 1);
    CHECK(j[0]["terms"][0] == "3u");
    CHECK(j[0]["terms"][4] == "2u^3");

    const auto text = invoke({"congruence", "--p", "5,7", "--periods", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("3u, 4u, 3u^3, u, 2u^3, 4u") != std::string::npos);
    CHECK(text.out.find("2u, 3u, u^3 + 6u, 6u^3, 4u^5 + 2u, 2u^3 + 2u, 6u^5 + 3u^3, 3u") != std::string::npos);
  }

  TEST_CASE("csv output") {
    const auto r = invoke({"--format", "csv", "psi", "--max-degree", "1"});
    CHECK(r.out == "kind,chi,m,value\npsi_moment,chi3,0,0\npsi_moment,chi3,1,-1/3\n");
    const auto e = invoke({"eval", "--poly", "0,1", "--s", "2", "--format", "csv"});
    CHECK(e.out.find("value_re,value_im") != std::string::npos);
    const auto c = invoke({"--format", "csv", "psi", "--chi", "period=2;values=1,-1", "--max-degree", "0"});
    CHECK(c.out.find("\"period=2;values=1,-1\"") != std::string::npos);
  }

  TEST_CASE("exit codes and error records") {
    auto bad_chi = invoke({"--format", "json", "psi", "--chi", "nonsense"});
    CHECK(bad_chi.code == 1);
    const auto record = Json::parse(bad_chi.out);
    CHECK(record[0]["kind"] == "error");
    CHECK(record[0]["category"] == "parse");

    CHECK(invoke({"lneg", "--poly", "0,1,1", "--m", "x"}).code == 1);
    CHECK(invoke({"lneg", "--poly", "0,1,1"}).code == 1);
    CHECK(invoke({"bogus"}).code == 1);
    CHECK(invoke({}).code == 1);

    const auto pole = invoke({"--format", "json", "eval", "--chi", "one", "--poly", "0,1", "--s", "1"});
    CHECK(pole.code == 2);
    CHECK(Json::parse(pole.out)[0]["type"] == "PoleError");

    const auto text_error = invoke({"lneg", "--poly", "-3,1", "--m", "1"});
    CHECK(text_error.code == 2);
    CHECK(text_error.out.empty());
    CHECK(text_error.err.find("InvalidPolynomial") != std::string::npos);

    CHECK(invoke({"congruence", "--p", "3"}).code == 2);
    CHECK(invoke({"eval", "--poly", "0,1,1", "--s", "2", "--max-terms", "2", "--eps", "1e-15"}).code == 3);

    const auto csv_error = invoke({"--format", "csv", "psi", "--chi", "x"});
    CHECK(csv_error.out.rfind("kind,category,type,message\nerror,parse,", 0) == 0);

    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--format", "json", "eval", "--poly", "5,2,0,1", "--s", "-0.5+2i"};
    CHECK(invoke(args).out == invoke(args).out);
  }

  TEST_CASE("exact values round trip") {
    const auto j = invoke_json({"psi", "--chi", "chi3", "--max-degree", "13"});
    for (const auto& row : j) {
      const auto text = row["value"].get<std::string>();
      CHECK(chipoly::Rational::parse(text).to_string() == text);
    }
  }
}
