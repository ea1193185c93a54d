// Copyright 2026 ranklaw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "ranklaw/cli.hpp"
#include "ranklaw/corpus.hpp"
#include "svg_check.hpp"

using namespace ranklaw;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Writes content to a file under the system temp dir, removed on scope exit.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::ofstream file(path_);
    file << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }

  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

CliResult run(const std::vector<std::string>& args,
              const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliResult result;
  result.code = run_cli(args, in, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string sample_path() {
  return std::string(RANKLAW_DATA_DIR) + "/business_finances.csv";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fit emits the frozen sample values as json") {
  const auto result = run({"fit", "--input", sample_path(), "--relation",
                           "hosts-vs-rank", "--format", "json"});
  REQUIRE(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("exponent").get<double>() ==
        doctest::Approx(testsupport::kSampleHostsRankExponent).epsilon(1e-9));
  CHECK(doc.at("prefactor").get<double>() ==
        doctest::Approx(testsupport::kSampleHostsRankPrefactor).epsilon(1e-9));
  CHECK(doc.at("n_used") == 10);
  CHECK(doc.at("method") == "loglog_ols");
  CHECK(doc.at("relation") == "hosts_vs_rank");
  // 10 points is the low-confidence boundary, no warning expected
  CHECK(result.err.empty());
}

TEST_CASE("fit reads stdin when asked") {
  const auto result = run({"fit", "--input", "-", "--relation",
                           "hits-vs-rank", "--format", "json"},
                          testsupport::sample_csv());
  REQUIRE(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("exponent").get<double>() ==
        doctest::Approx(testsupport::kSampleHitsRankExponent).epsilon(1e-9));
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> fit_args = {
      "fit", "--input", sample_path(), "--relation", "hits-vs-hosts",
      "--format", "json"};
  CHECK(run(fit_args).out == run(fit_args).out);

  const std::vector<std::string> synth_args = {
      "synth", "--n", "64", "--alpha", "-1.1", "--ch", "500", "--beta",
      "-1.9", "--cs", "7000", "--sigma", "0.3", "--seed", "11"};
  const auto first = run(synth_args);
  const auto second = run(synth_args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("synth output round-trips through the parser") {
  const auto made = run({"synth", "--n", "40", "--alpha", "-1.2", "--ch",
                         "300", "--beta", "-2.0", "--cs", "5000", "--sigma",
                         "0.2", "--seed", "5", "--integerize"});
  REQUIRE(made.code == 0);
  const auto snapshot =
      parse_snapshot(made.out, TableFormat::kCsv, RankKey::kHosts);
  CHECK(snapshot.entries.size() == 40);
}

TEST_CASE("relation on a noiseless synthetic snapshot closes the loop") {
  const auto made = run({"synth", "--n", "80", "--alpha", "-0.9", "--ch",
                         "420", "--beta", "-1.8", "--cs", "9000"});
  REQUIRE(made.code == 0);
  const auto result =
      run({"relation", "--input", "-", "--format", "json"}, made.out);
  REQUIRE(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("gamma_discrepancy").get<double>() <= 1e-6);
  CHECK(doc.at("gamma_derived").get<double>() == doctest::Approx(2.0));
  CHECK(doc.at("fits").at("hosts_vs_rank").at("r_squared").get<double>() >=
        1.0 - 1e-12);
}

TEST_CASE("rerank by hits reorders the sample csv") {
  const auto result =
      run({"rerank", "--input", sample_path(), "--by", "hits"});
  REQUIRE(result.code == 0);
  const auto snapshot =
      parse_snapshot(result.out, TableFormat::kCsv, RankKey::kHits);
  REQUIRE(snapshot.entries.size() == 10);
  const std::vector<double> expected_hosts = {290, 252, 58, 55, 69,
                                              130, 54,  28, 28, 25};
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(snapshot.entries[i].hosts == expected_hosts[i]);
  }
}

TEST_CASE("anomalies respect the threshold flag") {
  const auto loose =
      run({"anomalies", "--input", sample_path(), "--format", "json"});
  REQUIRE(loose.code == 0);
  CHECK(nlohmann::json::parse(loose.out).at("flagged").empty());

  const auto tight = run({"anomalies", "--input", sample_path(),
                          "--threshold", "1.9", "--format", "json"});
  REQUIRE(tight.code == 0);
  const auto doc = nlohmann::json::parse(tight.out);
  REQUIRE(doc.at("flagged").size() == 1);
  CHECK(doc.at("flagged")[0] == 3);
}

TEST_CASE("predict evaluates the sample relation") {
  const auto result = run({"predict", "--input", sample_path(), "--hosts",
                           "290", "--format", "json"});
  REQUIRE(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("predicted_hits").get<double>() ==
        doctest::Approx(testsupport::kSamplePredictedHitsAt290).epsilon(1e-9));

  const auto inverted =
      run({"predict", "--input", sample_path(), "--invert-value", "100",
           "--relation", "hosts-vs-rank", "--format", "text"});
  REQUIRE(inverted.code == 0);
  CHECK(inverted.out.rfind("rank: ", 0) == 0);

  const auto both = run({"predict", "--input", sample_path(), "--hosts",
                         "10", "--rank", "2"});
  CHECK(both.code == 1);
  CHECK(both.err.rfind("error:", 0) == 0);
}

TEST_CASE("plot emits svg and a table variant") {
  const auto svg = run({"plot", "--input", sample_path(), "--relation",
                        "hosts-vs-rank"});
  REQUIRE(svg.code == 0);
  CHECK(testsupport::xml_well_formed(svg.out));
  CHECK(svg.out.find("<svg") != std::string::npos);

  const auto table = run({"plot", "--input", sample_path(), "--relation",
                          "hosts-vs-rank", "--table"});
  REQUIRE(table.code == 0);
  CHECK(table.out.rfind("x\ty\ty_fit\n", 0) == 0);
}

TEST_CASE("synth accepts a json spec file") {
  const TempFile spec(
      "ranklaw_synth_spec_test.json",
      R"({"n_sites":12,"alpha":-1.0,"c_h":100.0,"beta":-2.0,)"
      R"("c_s":1000.0,"noise_sigma":0.1,"integerize":false,"seed":4})");
  const auto from_file = run({"synth", "--spec", spec.path()});
  const auto from_flags =
      run({"synth", "--n", "12", "--alpha", "-1", "--ch", "100", "--beta",
           "-2", "--cs", "1000", "--sigma", "0.1", "--seed", "4"});
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out == from_flags.out);

  const auto mixed = run({"synth", "--spec", spec.path(), "--n", "5"});
  CHECK(mixed.code == 1);
}

TEST_CASE("error paths exit with their documented codes") {
  // usage: unknown flag
  const auto usage = run({"fit", "--bogus"});
  CHECK(usage.code == 1);
  CHECK(usage.err.rfind("error:", 0) == 0);

  // usage: missing subcommand
  CHECK(run({}).code == 1);

  // data: malformed csv
  const auto bad_csv = run({"fit", "--input", "-", "--relation",
                            "hosts-vs-rank"},
                           "rank,label,hosts,hits\n1,a,xyz,3\n");
  CHECK(bad_csv.code == 2);
  CHECK(bad_csv.err.rfind("error:", 0) == 0);
  CHECK(bad_csv.err.find("line 2") != std::string::npos);

  // data: missing file
  const auto missing = run({"fit", "--input", "no_such_file.csv",
                            "--relation", "hosts-vs-rank"});
  CHECK(missing.code == 2);

  // fit failure: all hosts zero
  const auto zeros = run({"fit", "--input", "-", "--relation",
                          "hosts-vs-rank"},
                         "rank,label,hosts,hits\n1,a,0,5\n2,b,0,4\n");
  CHECK(zeros.code == 3);
  CHECK(zeros.err.find("hosts_vs_rank") != std::string::npos);

  // data: nothing to plot
  const auto empty_plot = run({"plot", "--input", "-", "--relation",
                               "hosts-vs-rank", "--no-fit"},
                              "rank,label,hosts,hits\n");
  CHECK(empty_plot.code == 2);

  // every error is a single machine-greppable line
  for (const auto* result : {&usage, &bad_csv, &missing, &zeros}) {
    CHECK(result->err.rfind("error:", 0) == 0);
  }
}

TEST_CASE("low-confidence fits warn on stderr without failing") {
  const auto result = run({"fit", "--input", "-", "--relation",
                           "hosts-vs-rank", "--format", "json"},
                          "rank,label,hosts,hits\n1,a,100,5\n2,b,50,4\n"
                          "3,c,25,3\n4,d,12,2\n5,e,6,1\n");
  CHECK(result.code == 0);
  CHECK(result.err.rfind("warning:", 0) == 0);
  CHECK(result.err.find("5 points") != std::string::npos);
}

TEST_CASE("mle method fits the value distribution") {
  const auto result = run({"fit", "--input", sample_path(), "--relation",
                           "hosts-vs-rank", "--method", "mle", "--xmin",
                           "25", "--format", "json"});
  REQUIRE(result.code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("method") == "mle_tail");
  CHECK(doc.at("exponent").get<double>() > 1.0);
  CHECK(doc.at("n_used") == 10);

  const auto wrong = run({"fit", "--input", sample_path(), "--relation",
                          "hits-vs-hosts", "--method", "mle"});
  CHECK(wrong.code == 1);
}

TEST_CASE("json snapshots are accepted as input") {
  const auto made = run({"synth", "--n", "30", "--alpha", "-1.0", "--ch",
                         "200", "--beta", "-1.5", "--cs", "4000", "--sigma",
                         "0.2", "--seed", "21", "--format", "json"});
  REQUIRE(made.code == 0);
  const TempFile snapshot("ranklaw_snapshot_test.json", made.out);
  const auto result = run({"fit", "--input", snapshot.path(), "--relation",
                           "hits-vs-rank", "--format", "json"});
  CHECK(result.code == 0);
}

TEST_CASE("help prints to stdout and succeeds") {
  const auto result = run({"--help"});
  CHECK(result.code == 0);
  CHECK(result.out.find("fit") != std::string::npos);
  CHECK(result.err.empty());
}

}  // TEST_SUITE
