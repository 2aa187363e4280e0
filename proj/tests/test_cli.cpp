#include <filesystem>
#include <regex>

#include "doctest.h"
#include "singspec/cli.hpp"

using namespace singspec;
using cli::Json;

namespace {

const std::filesystem::path corpus{SINGSPEC_CORPUS_DIR};

cli::Result run(const std::string& command, const std::string& file, cli::Flags flags = {}) {
  return cli::run(command, load_document(corpus / file), flags);
}

cli::Result run_text(const std::string& command, const std::string& text, cli::Flags flags = {}) {
  return cli::run(command, parse_document_text(text), flags);
}

// Every string that looks like a number must be a canonical rational.
void check_rationals(const Json& j) {
  static const std::regex shape(R"(-?[0-9]+(/[0-9]+)?)");
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (std::regex_match(s, shape)) CHECK(to_string(parse_rational(s)) == s);
  } else if (j.is_structured()) {
    for (const auto& child : j) check_rationals(child);
  }
}

}  // namespace

TEST_CASE("spectrum on qh cusp") {
  const auto r = run("spectrum", "cusp_qh.json");
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.dump() == R"({"spectrum":[["5/6",1],["7/6",1]],"mu":2,"symmetric":true})");
}

TEST_CASE("jumping on an nc model") {
  cli::Flags flags;
  flags.max = 1;
  const auto r = run("jumping", "nc_2_3.json", flags);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.dump() == R"({"jumping":["1/3","1/2","2/3","1"]})");
}

TEST_CASE("multiplier on the cusp curve") {
  cli::Flags flags;
  flags.alpha = make_rational(5, 6);
  const auto r = run("multiplier", "cusp_curve.json", flags);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.dump() == R"({"conditions":{"E1":0,"E2":0,"E3":1,"C":0}})");
}

TEST_CASE("check is clean on the whole corpus and output round-trips") {
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    const auto doc = load_document(entry.path());
    const auto r = cli::run("check", doc, {});
    CHECK(r.exit_code == cli::kExitOk);
    CHECK(r.output.at("ok") == true);
    for (const auto& command : cli::commands()) {
      cli::Flags flags;
      flags.alpha = make_rational(1, 2);
      const auto out = cli::run(command, doc, flags);
      CHECK(out.exit_code != cli::kExitInternal);
      const auto text = out.output.dump();
      CHECK(Json::parse(text) == out.output);
      check_rationals(out.output);
      CHECK_FALSE(cli::render_table(out.output).empty());
    }
  }
}

TEST_CASE("variant mismatch and bad input exit 1") {
  CHECK(run("vfilt", "cusp_curve.json").exit_code == cli::kExitInvalid);
  CHECK(run("spectrum", "nc_2_3.json").exit_code == cli::kExitInvalid);
  CHECK(run("adjoint", "nc_2_3.json").exit_code == cli::kExitInvalid);
  CHECK(run("multiplier", "cusp_curve.json").exit_code == cli::kExitInvalid);
  cli::Flags zero;
  zero.max = 0;
  CHECK(run("jumping", "nc_2_3.json", zero).exit_code == cli::kExitInvalid);
  CHECK(run("frobnicate", "nc_2_3.json").exit_code == cli::kExitInvalid);
}

TEST_CASE("validation failures exit 1 with violations") {
  const auto r = run_text("check", R"({"curve":{"components":[
      {"id":"E1","kind":"exceptional","m":2,"a":1,"self":-3},
      {"id":"E2","kind":"exceptional","m":3,"a":2,"self":-2},
      {"id":"E3","kind":"exceptional","m":5,"a":4,"self":-1},
      {"id":"C","kind":"non_exceptional","m":1}],
      "edges":[["E1","E3"],["E2","E3"],["E3","C"]]}})");
  CHECK(r.exit_code == cli::kExitInvalid);
  CHECK(r.output.at("error") == "validation");
  CHECK_FALSE(r.output.at("violations").empty());
}

TEST_CASE("document parsing is strict") {
  CHECK_THROWS_AS(parse_document_text(R"({"nc":{"multiplicities":[2.5]}})"), InputError);
  CHECK_THROWS_AS(parse_document_text(R"({"nc":{"multiplicities":[2]},"qh":{"a":2,"b":3}})"), InputError);
  CHECK_THROWS_AS(parse_document_text(R"({"qh":{"a":2,"b":3,"c":4}})"), InputError);
  CHECK_THROWS_AS(parse_document_text(R"({"qh":{"a":"2","b":3}})"), InputError);
  CHECK_THROWS_AS(parse_document_text(R"({"torus":{}})"), InputError);
  CHECK_THROWS_AS(parse_document_text("{"), InputError);
  CHECK(std::string(variant_name(parse_document_text(R"({"qh":{"a":2,"b":3}})"))) == "qh");
}

TEST_CASE("vfilt output") {
  cli::Flags flags;
  flags.alpha = make_rational(5, 6);
  const auto r = run("vfilt", "nc_2_3.json", flags);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.at("generator") == Json::array({1, 2}));
  CHECK(r.output.at("d_alpha").empty());
  flags.alpha = make_rational(1, 2);
  CHECK(run("vfilt", "nc_2_3.json", flags).output.at("d_alpha") == Json::array({1}));
}

TEST_CASE("spectrum with alpha reports hodge pieces") {
  cli::Flags flags;
  flags.alpha = make_rational(1);
  const auto r = run("spectrum", "cusp_proximity.json", flags);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.contains("hodge"));
}
