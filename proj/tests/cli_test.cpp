// Copyright 2026 The weylkit Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weylkit/cli.hpp"
#include "weylkit/weylkit.hpp"

namespace weylkit {
namespace {

std::string Fixture(const std::string& name) {
  return std::string(WEYLKIT_FIXTURES) + "/" + name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Io, GroupoidFixturesRoundTrip) {
  for (const char* name : {"r2.json", "r3.json", "t2.json", "g3.json", "z3_transformation.json"}) {
    std::string text = cli::read_file(Fixture(name));
    GroupoidPtr g = groupoid_from_json(parse_json(text));
    EXPECT_EQ(canonical_dump(groupoid_to_json(*g)), text) << name;
  }
}

TEST(Io, OtherFixturesRoundTrip) {
  std::string graph = cli::read_file(Fixture("two_sink_graph.json"));
  EXPECT_EQ(canonical_dump(graph_to_json(graph_from_json(parse_json(graph)))), graph);
  for (const char* name : {"compression.json", "r2_inner_automorphism.json"}) {
    std::string text = cli::read_file(Fixture(name));
    EXPECT_EQ(canonical_dump(morphism_to_json(morphism_from_json(parse_json(text)))), text)
        << name;
  }
}

TEST(Io, GeneratedDocumentsRoundTrip) {
  std::vector<FiniteGroupoid> gs{full_relation(3), trivial(2), cyclic_group(3),
                                 disjoint_union(full_relation(2), trivial(1)),
                                 product(full_relation(2), cyclic_group(2)),
                                 random_equivalence(5, 3)};
  for (const auto& g : gs) {
    std::string text = canonical_dump(groupoid_to_json(g));
    GroupoidPtr back = groupoid_from_json(parse_json(text));
    EXPECT_EQ(canonical_dump(groupoid_to_json(*back)), text);
    EXPECT_TRUE(is_groupoid_isomorphism(g, *back, identity_map(g)));
  }
}

TEST(Io, RationalsAreReducedIntegerPairs) {
  Json j = rational_to_json(make_rational(6, -4));
  EXPECT_EQ(j, Json::array({-3, 2}));
  EXPECT_EQ(rational_from_json(Json::array({4, 6})), make_rational(2, 3));
  EXPECT_THROW(rational_from_json(Json::array({1, 0})), InputError);
  EXPECT_THROW(rational_from_json(Json::array({0.5, 1})), InputError);
}

TEST(Io, ElementsRoundTrip) {
  auto g = oracle::r(2);
  std::mt19937_64 rng(51);
  auto f = oracle::random_element(g, rng);
  f[0] = GaussianRational(make_rational(1, 3), make_rational(-7, 5));
  EXPECT_EQ(element_from_json(element_to_json(f), g), f);
}

TEST(Io, MalformedInputIsAnInputError) {
  EXPECT_THROW(parse_json("{"), InputError);
  EXPECT_THROW(groupoid_from_json(Json::object()), InputError);
  Json bad = groupoid_to_json(full_relation(2));
  bad["arrows"][1]["src"] = "9";
  EXPECT_THROW(groupoid_from_json(bad), InputError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Cli({"validate", "--input", Fixture("r2.json")}).code, kExitPass);
  EXPECT_EQ(Cli({"weyl", "--input", Fixture("r2.json")}).code, kExitPass);
  EXPECT_EQ(Cli({"ideals", "--input", Fixture("g3.json")}).code, kExitPass);
  EXPECT_EQ(Cli({"quotient", "--input", Fixture("g3.json"), "--set", "2"}).code, kExitPass);
  EXPECT_EQ(Cli({"quotient", "--input", Fixture("two_sink_graph.json"), "--set", "w1"}).code,
            kExitPass);
  EXPECT_EQ(Cli({"morphism-check", "--input", Fixture("r2_inner_automorphism.json")}).code,
            kExitPass);
  EXPECT_EQ(Cli({"compare", "--input", Fixture("r3.json")}).code, kExitPass);
  EXPECT_EQ(Cli({"tensor", "--input", Fixture("r2.json"), "--input", Fixture("t2.json")}).code,
            kExitPass);
  EXPECT_EQ(Cli({"validate", "--input", "/nonexistent.json"}).code, kExitInput);
  EXPECT_EQ(Cli({"quotient", "--input", Fixture("g3.json"), "--set", "0"}).code, kExitInput);
  EXPECT_EQ(Cli({"bogus"}).code, kExitInput);
  EXPECT_EQ(Cli({"weyl"}).code, kExitInput);
}

TEST(Cli, CompressionFixtureNamesConditionN) {
  CliRun r = Cli({"morphism-check", "--input", Fixture("compression.json")});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("failed conditions: (N)"), std::string::npos);
  CliRun j = Cli({"morphism-check", "--input", Fixture("compression.json"), "--format", "json"});
  Json doc = parse_json(j.out);
  EXPECT_EQ(doc["data"]["failed_conditions"], Json::array({"(N)"}));
  EXPECT_EQ(doc["seed"], 1);
}

TEST(Cli, NonDiagonalPairFailsValidation) {
  std::string path = (std::filesystem::temp_directory_path() / "weylkit_z2.json").string();
  cli::write_file(path, canonical_dump(groupoid_to_json(cyclic_group(2))));
  CliRun r = Cli({"validate", "--input", path});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("FAIL diagonal is maximal abelian"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, WeylPrintsGroupoidAndTable) {
  CliRun r = Cli({"weyl", "--input", Fixture("r2.json"), "--format", "json"});
  Json doc = parse_json(r.out);
  EXPECT_EQ(doc["document"]["arrows"].size(), 4u);
  EXPECT_EQ(doc["data"]["canonical"].size(), 4u);
}

TEST(Cli, IdealsListsInvariantSets) {
  CliRun r = Cli({"ideals", "--input", Fixture("g3.json"), "--format", "json"});
  EXPECT_EQ(parse_json(r.out)["data"]["ideals"].size(), 4u);
}

TEST(Cli, ReportsAreDeterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"functor-check", "--input", Fixture("g3.json"), "--seed", "5"},
        std::vector<std::string>{"ideals", "--input", Fixture("g3.json"), "--format", "json"}}) {
    CliRun a = Cli(args), b = Cli(args);
    EXPECT_EQ(a.code, kExitPass);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, DotIsByteStable) {
  CliRun a = Cli({"dot", "--input", Fixture("r2.json"), "--weyl", "--seed", "3"});
  CliRun b = Cli({"dot", "--input", Fixture("r2.json"), "--weyl", "--seed", "3"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out,
            "digraph \"W\" {\n"
            "  node [shape=circle];\n"
            "  \"0\";\n"
            "  \"1\";\n"
            "  \"1\" -> \"0\" [label=\"[(0,1),1]\\nw=d(0,1)\"];\n"
            "  \"0\" -> \"1\" [label=\"[(1,0),0]\\nw=d(1,0)\"];\n"
            "}\n");
  CliRun g = Cli({"dot", "--input", Fixture("two_sink_graph.json")});
  EXPECT_EQ(g.code, kExitPass);
  EXPECT_NE(g.out.find("digraph"), std::string::npos);
}

TEST(Cli, GenerateMatchesLibrary) {
  CliRun r = Cli({"generate", "full_relation", "--n", "3"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, canonical_dump(groupoid_to_json(full_relation(3))));
  CliRun e = Cli({"generate", "random_equivalence", "--n", "5", "--seed", "4"});
  EXPECT_EQ(e.out, canonical_dump(groupoid_to_json(random_equivalence(5, 4))));
  CliRun g = Cli({"generate", "acyclic_graph", "--input", Fixture("two_sink_graph.json")});
  GroupoidPtr gg = groupoid_from_json(parse_json(g.out));
  EXPECT_EQ(gg->unit_count(), 4u);
  CliRun u = Cli({"generate", "disjoint_union", "--input", Fixture("r2.json"), "--input",
               Fixture("t2.json")});
  EXPECT_EQ(groupoid_from_json(parse_json(u.out))->arrow_count(), 6u);
}

}  // namespace
}  // namespace weylkit
