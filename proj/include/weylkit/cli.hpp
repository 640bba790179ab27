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

// Command-line front end. Exit codes: 0 when every checked law passes, 1 when
// any fails, 2 on input errors.

#ifndef WEYLKIT_CLI_HPP_
#define WEYLKIT_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylkit/category.hpp"
#include "weylkit/generators.hpp"
#include "weylkit/io.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/quotient.hpp"
#include "weylkit/report.hpp"

namespace weylkit {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInput = 2 };

struct CliOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::string set;
  std::uint64_t seed = 1;
  std::size_t cap = 64;
  std::string format = "text";
  bool weyl = false;
  std::string kind;
  std::size_t n = 2;
};

namespace cli {

// What a command produced: laws checked, a document (groupoid, report data
// or DOT text), and free-form text lines.
struct Outcome {
  Report report;
  std::optional<std::string> document;
  Json data = Json::object();
  std::vector<std::string> lines;
  bool has_laws = true;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

inline const std::string& input(const CliOptions& o, std::size_t i = 0) {
  if (o.inputs.size() <= i)
    throw InputError(i == 0 ? "missing --input" : "command needs two --input files");
  return o.inputs[i];
}

inline Json load(const CliOptions& o, std::size_t i = 0) {
  return parse_json(read_file(input(o, i)));
}

inline std::vector<std::string> split_set(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline IndexSet parse_units(const FiniteGroupoid& g, const std::string& s) {
  IndexSet u;
  for (const auto& id : split_set(s)) u.push_back(g.unit_index(id));
  return normalize_set(u);
}

inline void merge_prefixed(Report& into, const Report& from) {
  into.merge(from);
}

inline Outcome validate(const CliOptions& o) {
  Outcome out;
  GroupoidDocument doc = groupoid_document_from_json(load(o), false);
  const FiniteGroupoid& g = *doc.groupoid;
  out.report = Report("validate");
  auto v = validate_groupoid(g);
  out.report.check("groupoid axioms", v.ok(), v.ok() ? "" : v.violations.front());
  for (const auto& note : v.notes) out.lines.push_back("note: " + note);
  if (!v.ok()) return out;
  auto iso = isotropy_report(g);
  out.lines.push_back(std::string("principal: ") + (iso.is_principal ? "yes" : "no"));
  out.lines.push_back(std::string("effective: ") + (iso.is_effective ? "yes" : "no"));
  out.lines.push_back("orbits: " + std::to_string(orbits(g).size()));
  out.data["principal"] = iso.is_principal;
  out.data["effective"] = iso.is_effective;
  if (g.empty()) return out;
  DiagonalPair p = make_pair(doc.groupoid);
  const auto& pv = p.validation();
  out.report.check("diagonal is abelian", pv.abelian);
  out.report.check("diagonal is maximal abelian", pv.masa,
                   "commutant has dimension " + std::to_string(pv.commutant_dim));
  out.report.check("normalizers span the algebra", pv.regular);
  out.report.check("unique extension property", pv.uep);
  out.report.check("expectation is faithful", pv.faithful);
  for (const auto& [name, f] : doc.elements)
    out.lines.push_back("element " + name + ": " + f.to_string() +
                        (is_normalizer(p, f) ? " (normalizer)" : ""));
  return out;
}

inline Outcome weyl(const CliOptions& o) {
  Outcome out;
  DiagonalPair p = make_pair(groupoid_from_json(load(o)));
  out.report = Report("weyl");
  if (!out.report.check("input is a diagonal pair", p.valid())) return out;
  const auto& w = weyl_groupoid(p);
  out.report.check("canonical map is an isomorphism", w.canonical_is_isomorphism);
  const FiniteGroupoid& wg = *w.groupoid;
  out.lines.push_back("germs: " + std::to_string(wg.arrow_count()));
  Json table = Json::array();
  for (std::size_t k = 0; k < wg.arrow_count(); ++k) {
    const std::string& target = p.g().arrow(w.canonical[k]).id;
    out.lines.push_back(wg.arrow(k).id + " -> " + target + "  witness " +
                        w.witnesses[k].to_string());
    table.push_back({{"germ", wg.arrow(k).id}, {"arrow", target},
                     {"witness", element_to_json(w.witnesses[k])}});
  }
  out.data["canonical"] = std::move(table);
  out.document = canonical_dump(groupoid_to_json(wg));
  return out;
}

inline Outcome ideals(const CliOptions& o) {
  Outcome out;
  DiagonalPair p = make_pair(groupoid_from_json(load(o)));
  const FiniteGroupoid& g = p.g();
  out.report = Report("ideals");
  auto sets = invariant_subsets(g);
  out.report.check("ideal count is 2^#orbits",
                   sets.size() == (std::size_t{1} << orbits(g).size()));
  Json list = Json::array();
  for (const IndexSet& u : sets) {
    IdealData ideal = ideal_from_invariant(g, u);
    std::vector<std::string> diag;
    for (std::size_t x : u) diag.push_back(g.arrow(g.unit_arrow(x)).id);
    std::string line = set_string(g, u) + "  I∩D = span{";
    for (std::size_t i = 0; i < diag.size(); ++i) line += (i ? "," : "") + diag[i];
    line += "}  dim I = " + std::to_string(ideal.support.size());
    out.lines.push_back(line);
    Json units = Json::array();
    for (std::size_t x : u) units.push_back(g.unit_id(x));
    list.push_back({{"units", units}, {"diagonal", diag},
                    {"dimension", ideal.support.size()}});
    out.report.merge(check_geom_ideals(p, u, o.seed));
  }
  out.data["ideals"] = std::move(list);
  return out;
}

inline Outcome quotient(const CliOptions& o) {
  Outcome out;
  Json j = load(o);
  if (j.is_object() && j.contains("schema") && j["schema"] == kGraphSchema) {
    Graph e = graph_from_json(j);
    auto h = split_set(o.set);
    out.report = graph_quotient_check(e, std::set<std::string>(h.begin(), h.end()));
    return out;
  }
  DiagonalPair p = make_pair(groupoid_from_json(j));
  IndexSet u = parse_units(p.g(), o.set);
  if (!is_invariant(p.g(), u)) throw InputError("--set is not an invariant set");
  out.report = check_geom_ideals(p, u, o.seed);
  out.report.merge(check_transfer_properties(p, u));
  if (u.size() < p.g().unit_count()) {
    QuotientPair qp = quotient_pair(p, u);
    out.document = canonical_dump(groupoid_to_json(qp.pair.g()));
    out.lines.push_back("quotient: " + std::to_string(qp.pair.g().unit_count()) +
                        " units, " + std::to_string(qp.pair.g().arrow_count()) +
                        " arrows");
  }
  return out;
}

inline Outcome morphism_check(const CliOptions& o) {
  Outcome out;
  PairMorphism phi = morphism_from_json(load(o));
  auto v = validate_morphism(phi, o.seed);
  out.report = v.details;
  out.lines.push_back(std::string("monomial: ") + (phi.monomial ? "yes" : "no"));
  out.lines.push_back(std::string("diagonal isomorphism: ") + (v.diag_iso ? "yes" : "no"));
  std::vector<std::string> failed;
  if (!v.d_flag) failed.push_back("(D)");
  if (!v.e_flag) failed.push_back("(E)");
  if (!v.n_flag()) failed.push_back("(N)");
  if (!failed.empty()) {
    std::string s = "failed conditions:";
    for (const auto& f : failed) s += " " + f;
    out.lines.push_back(s);
  }
  out.data["failed_conditions"] = failed;
  if (!v.ok() || !v.diag_iso || !phi.source.valid() || !phi.target.valid()) {
    out.lines.push_back("no partial morphism: hypotheses do not hold");
    return out;
  }
  auto inj = check_injective(phi);
  out.report.check("injective (kernel solve)", inj.injective);
  out.report.check("injectivity consistent with diagonal kernel", inj.consistent);
  PartialMorphismOptions opts;
  opts.cap = std::max<std::size_t>(o.cap, 1) * 64;
  auto res = partial_morphism(phi, opts);
  out.report.merge(check_partial_morphism_result(phi, res, o.seed));
  const auto& t = res.triple;
  out.lines.push_back("H_Phi: " + std::to_string(t.k.size()) + " of " +
                      std::to_string(t.domain->arrow_count()) + " germs");
  Json rho = Json::array();
  for (auto [a, b] : t.rho) {
    out.lines.push_back("rho " + t.domain->arrow(a).id + " -> " + t.codomain->arrow(b).id);
    rho.push_back({{"from", t.domain->arrow(a).id}, {"to", t.codomain->arrow(b).id}});
  }
  out.data["rho"] = std::move(rho);
  return out;
}

inline Outcome functor_check(const CliOptions& o) {
  Outcome out;
  DiagonalPair p = make_pair(groupoid_from_json(load(o)));
  const FiniteGroupoid& g = p.g();
  out.report = Report("functor");
  if (!out.report.check("input is a diagonal pair", p.valid())) return out;
  out.report.merge(check_poset_functor(p));

  std::mt19937_64 rng(o.seed);
  const std::size_t n = g.unit_count();
  std::vector<GroupoidPtr> objects{p.groupoid};
  for (int i = 0; i < 3; ++i) objects.push_back(share(random_equivalence(n, rng())));
  for (int c = 0; c < 10; ++c) {
    auto pick = [&] { return objects[rng() % objects.size()]; };
    GroupoidPtr a = pick(), b = pick(), cc = pick(), d = pick();
    auto t1 = random_triple(a, b, rng), t2 = random_triple(b, cc, rng),
         t3 = random_triple(cc, d, rng);
    out.report.merge(check_category_axioms(t1, t2, t3));
  }

  static const GaussianRational kPhases[] = {GaussianRational(1), GaussianRational(-1),
                                             GaussianRational(0, 1), GaussianRational(0, -1)};
  Vector phases;
  for (std::size_t u = 0; u < n; ++u) phases.push_back(kPhases[rng() % 4]);
  PairMorphism inner = inner_diagonal_automorphism(p, phases);
  PairMorphism embed = embedding_morphism(make_pair(unit_space_groupoid(g)), p);
  out.report.merge(check_functoriality(embed, inner));
  out.report.merge(check_functoriality(inner, inner));
  if (auto aut = find_isomorphism(g, g, o.cap)) {
    PairMorphism a = iso_morphism(p, p, *aut);
    out.report.merge(check_functoriality(a, inner));
    out.report.merge(check_composition_closure(embed, a));
  }
  return out;
}

inline Outcome tensor(const CliOptions& o) {
  Outcome out;
  DiagonalPair p1 = make_pair(groupoid_from_json(load(o, 0)));
  DiagonalPair p2 = make_pair(groupoid_from_json(load(o, 1)));
  out.report = check_product_weyl(p1, p2, std::max<std::size_t>(o.cap, 128));
  if (!out.report.ok()) return out;
  DiagonalPair t = tensor_pair(p1, p2);
  out.document = canonical_dump(groupoid_to_json(t.g()));
  // Exploratory, no pass/fail contract: does W carry tensor products of
  // identities to products of identity triples?
  auto w = weyl_morphism(tensor_morphism(identity_morphism(p1), identity_morphism(p2)));
  bool agree = w == identity_partial(weyl_object(t));
  out.lines.push_back(std::string("exploratory: W(id ⊗ id) ") +
                      (agree ? "agrees with" : "differs from") + " id × id");
  out.data["exploratory_monoidal_agree"] = agree;
  return out;
}

inline Outcome compare(const CliOptions& o) {
  Outcome out;
  DiagonalPair p = make_pair(groupoid_from_json(load(o)));
  ComparisonStats stats;
  out.report = check_dynamical_comparison(p, &stats);
  out.lines.push_back("projection pairs: " + std::to_string(stats.pairs) +
                      ", strictly ordered: " + std::to_string(stats.strict));
  out.data["pairs"] = stats.pairs;
  out.data["strict"] = stats.strict;
  return out;
}

inline Outcome dot(const CliOptions& o) {
  Outcome out;
  out.has_laws = false;
  Json j = load(o);
  if (j.is_object() && j.contains("schema") && j["schema"] == kGraphSchema) {
    out.document = to_dot(acyclic_graph_groupoid(graph_from_json(j)), "G");
    return out;
  }
  GroupoidPtr g = groupoid_from_json(j);
  out.document = o.weyl ? weyl_to_dot(make_pair(g), "W") : to_dot(*g, "G");
  return out;
}

inline Outcome generate(const CliOptions& o) {
  Outcome out;
  out.has_laws = false;
  const std::string& k = o.kind;
  FiniteGroupoid g;
  if (k == "full_relation") {
    g = full_relation(o.n);
  } else if (k == "trivial") {
    g = trivial(o.n);
  } else if (k == "cyclic_transformation") {
    g = cyclic_transformation(o.n);
  } else if (k == "random_equivalence") {
    g = random_equivalence(o.n, o.seed);
  } else if (k == "acyclic_graph") {
    g = acyclic_graph_groupoid(graph_from_json(load(o)));
  } else if (k == "random_graph") {
    out.document = canonical_dump(graph_to_json(random_acyclic_graph(o.n, 2 * o.n, o.seed)));
    return out;
  } else if (k == "disjoint_union") {
    g = disjoint_union(*groupoid_from_json(load(o, 0)), *groupoid_from_json(load(o, 1)));
  } else if (k == "product") {
    g = product(*groupoid_from_json(load(o, 0)), *groupoid_from_json(load(o, 1)));
  } else {
    throw InputError("unknown generator '" + k + "'");
  }
  out.document = canonical_dump(groupoid_to_json(g));
  return out;
}

inline void emit(const Outcome& r, const CliOptions& o, const std::string& command,
                 std::ostream& out) {
  if (!o.output.empty() && r.document) write_file(o.output, *r.document);
  if (!r.has_laws) {
    if (o.output.empty() && r.document) out << *r.document;
    return;
  }
  if (o.format == "json") {
    Json j;
    j["command"] = command;
    j["seed"] = o.seed;
    j["checks"] = report_to_json(r.report);
    j["ok"] = r.report.ok();
    j["data"] = r.data;
    j["notes"] = r.lines;
    if (o.output.empty() && r.document) j["document"] = parse_json(*r.document);
    out << canonical_dump(j);
    return;
  }
  if (o.format == "dot") {
    if (!r.document) throw InputError("command has no DOT output");
    out << *r.document;
    return;
  }
  for (const auto& line : r.lines) out << line << '\n';
  out << r.report;
  out << "seed: " << o.seed << '\n';
  out << (r.report.ok() ? "result: pass" : "result: fail") << '\n';
}

}  // namespace cli

// Runs one command; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"weylkit: finite-model checks for diagonal pairs and Weyl groupoids"};
  app.require_subcommand(1);
  CliOptions o;
  struct Command {
    const char* name;
    const char* help;
    cli::Outcome (*run)(const CliOptions&);
  };
  static const Command kCommands[] = {
      {"validate", "check groupoid axioms and diagonal-pair conditions", cli::validate},
      {"weyl", "reconstruct the Weyl groupoid and its canonical isomorphism", cli::weyl},
      {"ideals", "list invariant sets and check the ideal correspondence", cli::ideals},
      {"quotient", "check the quotient pair by --set", cli::quotient},
      {"morphism-check", "check (D), (E), (N) and the induced partial morphism",
       cli::morphism_check},
      {"functor-check", "check category and functor laws around a pair", cli::functor_check},
      {"tensor", "check the tensor product of two pairs", cli::tensor},
      {"compare", "check dynamical comparison over all projection pairs", cli::compare},
      {"dot", "render a groupoid (or its Weyl groupoid) as DOT", cli::dot},
      {"generate", "write a generated fixture document", cli::generate},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", o.inputs, "input document(s)");
    sub->add_option("--output", o.output, "write the produced document here");
    sub->add_option("--set", o.set, "comma-separated unit (or vertex) ids");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--cap", o.cap, "search cap");
    sub->add_option("--format", o.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    if (std::string(c.name) == "dot") sub->add_flag("--weyl", o.weyl, "draw the Weyl groupoid");
    if (std::string(c.name) == "generate") {
      sub->add_option("kind", o.kind,
                      "full_relation | trivial | cyclic_transformation | random_equivalence | "
                      "acyclic_graph | random_graph | disjoint_union | product")
          ->required();
      sub->add_option("--n,--m", o.n, "size parameter");
    }
    subs.push_back(sub);
  }
  std::vector<std::string> argv_store{"weylkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      cli::Outcome r = kCommands[i].run(o);
      cli::emit(r, o, kCommands[i].name, out);
      return r.report.ok() ? kExitPass : kExitFail;
    } catch (const CapExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (const Error& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitInput;
}

}  // namespace weylkit

#endif  // WEYLKIT_CLI_HPP_
