/*
 * Copyright 2026 The linord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// linord — classify linear-order terms, run the constructive embeddings
// into Q, R and R*2 in exact arithmetic, extend partial maps on Q*2 to
// automorphisms, and reproduce the naive-construction collision.
//
// Exit codes: 0 success, 1 domain errors (machine-readable JSON with
// --json), 2 usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linord/analysis.hpp"
#include "linord/elem.hpp"
#include "linord/embed.hpp"
#include "linord/enumerate.hpp"
#include "linord/error.hpp"
#include "linord/homog.hpp"
#include "linord/term.hpp"
#include "linord/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kPlacementCap = 1u << 20;

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = 0;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// --------------------------------------------------------------------------
// classify

int run_classify(const GlobalOpts& g, const std::string& term_text) {
  linord::OrderTerm t = linord::parse_term(term_text);
  linord::ClassReport report = linord::classify(t);
  if (g.json) {
    std::cout << linord::to_json(report) << "\n";
    return 0;
  }
  std::cout << "term: " << linord::format_term(t) << "\n";
  std::cout << "cardinality: " << report.cardinality << "\n";
  std::cout << "jump_cardinality: " << report.jump_cardinality << "\n";
  std::cout << "separable: " << (report.separable ? "true" : "false") << "\n";
  std::cout << "left_separable: " << (report.left_separable ? "true" : "false")
            << "\n";
  std::cout << "right_separable: "
            << (report.right_separable ? "true" : "false") << "\n";
  std::cout << "embeds_into_reals: "
            << (report.embeds_into_reals ? "true" : "false") << "\n";
  std::cout << "has_min: " << (report.has_min ? "true" : "false") << "\n";
  std::cout << "has_max: " << (report.has_max ? "true" : "false") << "\n";
  return 0;
}

// --------------------------------------------------------------------------
// enumerate / jumps

int run_enumerate(const GlobalOpts& g, const std::string& term_text,
                  std::optional<std::uint64_t> count) {
  linord::OrderTerm t = linord::parse_term(term_text);
  if (!count) {
    if (!linord::cardinality(t).is_finite()) {
      std::cerr << "enumerate: --count is required for an infinite term\n";
      return 2;
    }
    count = linord::cardinality(t).count();
  }
  std::vector<std::string> elems;
  linord::ElemStream stream(t);
  for (std::uint64_t i = 0; i < *count; ++i) {
    auto e = stream.next();
    if (!e) break;
    elems.push_back(linord::format_elem(*e));
  }
  if (g.json) {
    ordered_json j;
    j["term"] = linord::format_term(t);
    j["elements"] = elems;
    emit(j);
  } else {
    for (const std::string& e : elems) std::cout << e << "\n";
  }
  return 0;
}

int run_jumps(const GlobalOpts& g, const std::string& term_text,
              std::optional<std::uint64_t> count) {
  linord::OrderTerm t = linord::parse_term(term_text);
  linord::CardinalClass jc = linord::jump_cardinality(t);
  if (!count) {
    if (!jc.is_finite()) {
      std::cerr << "jumps: --count is required when the jump set is infinite\n";
      return 2;
    }
    count = jc.count();
  }
  linord::JumpStream jumps(t);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::uint64_t i = 0; i < *count; ++i) {
    auto j = jumps.next();
    if (!j) break;
    out.push_back({linord::format_elem(j->left), linord::format_elem(j->right)});
  }
  if (g.json) {
    ordered_json j;
    j["term"] = linord::format_term(t);
    j["jumps"] = ordered_json::array();
    for (const auto& [l, r] : out) j["jumps"].push_back({l, r});
    emit(j);
  } else {
    for (const auto& [l, r] : out) std::cout << l << " < " << r << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------------
// embed

linord::DenseSet dense_from_spec(const linord::OrderTerm& t,
                                 const std::string& spec) {
  if (spec == "canonical") {
    return linord::with_endpoints(linord::canonical_dense(t));
  }
  const std::string omit_prefix = "omit:";
  if (spec.rfind(omit_prefix, 0) == 0) {
    std::vector<linord::Elem> omitted;
    std::string rest = spec.substr(omit_prefix.size());
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      std::string item = rest.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) omitted.push_back(linord::parse_elem(t, item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return linord::without_elements(linord::canonical_dense(t), omitted);
  }
  throw linord::DomainError("bad_dense_spec",
                            "dense spec must be \"canonical\" or "
                            "\"omit:<elem>[,<elem>...]\"");
}

int run_embed(const GlobalOpts& g, const std::string& term_text,
              const std::string& target, const std::string& elem_text,
              std::uint64_t precision, const std::string& dense_spec,
              std::uint64_t budget) {
  if (dense_spec != "canonical" && target != "r2") {
    std::cerr << "embed: --dense applies to --target r2 only\n";
    return 2;
  }
  linord::OrderTerm t = linord::parse_term(term_text);
  linord::Elem x = linord::parse_elem(t, elem_text);
  auto stage = static_cast<std::int64_t>(precision);

  if (target == "q") {
    std::uint64_t index = linord::index_of(t, x);
    if (index > kPlacementCap) {
      throw linord::DomainError("placement_budget_exceeded",
                                "element sits too deep in the enumeration for "
                                "back-and-forth placement");
    }
    linord::RationalEmbedding emb = linord::RationalEmbedding::back_and_forth(t);
    linord::ElemStream stream(t);
    linord::Rational image;
    for (std::uint64_t i = 0; i <= index; ++i) {
      auto e = stream.next();
      if (!e) break;
      image = emb.place(*e);
    }
    if (g.json) {
      ordered_json j;
      j["target"] = "q";
      j["element"] = linord::format_elem(x);
      j["image"] = linord::to_string(image);
      j["index"] = index;
      emit(j);
    } else {
      std::cout << "i(" << linord::format_elem(x) << ") = "
                << linord::to_string(image) << "  (placed at index " << index
                << ")\n";
    }
    return 0;
  }

  if (target == "r2") {
    std::optional<linord::DenseSet> dense;
    if (dense_spec != "canonical") dense = dense_from_spec(t, dense_spec);
    linord::DenseCheckParams validation;
    validation.seed = g.seed;
    validation.budget = budget;
    linord::UniversalEmbedding emb(t, std::move(dense), validation);
    linord::SplitPoint point = emb.map(x);
    linord::Rational lower = point.real.lower(precision);
    if (g.json) {
      ordered_json j;
      j["lower"] = linord::to_string(lower);
      j["err_exp"] = -stage;
      j["bit"] = point.bit;
      j["stage"] = precision;
      emit(j);
    } else {
      std::cout << "e(" << linord::format_elem(x) << ") = ("
                << linord::decimal_string(lower) << " ±2^-" << precision
                << ", bit " << point.bit << ")\n";
    }
    return 0;
  }

  if (target == "r") {
    linord::RealEmbedding emb(t);
    linord::Rational lower = emb.map(x).lower(precision);
    if (g.json) {
      ordered_json j;
      j["lower"] = linord::to_string(lower);
      j["err_exp"] = -stage;
      j["stage"] = precision;
      emit(j);
    } else {
      std::cout << "f(" << linord::format_elem(x) << ") = "
                << linord::decimal_string(lower) << " ±2^-" << precision
                << "\n";
    }
    return 0;
  }

  std::cerr << "embed: --target must be one of q, r2, r\n";
  return 2;
}

// --------------------------------------------------------------------------
// homog-extend

int run_homog_extend(const GlobalOpts& g, const std::string& map_file,
                     const std::string& inline_pairs,
                     const std::string& probe_list) {
  if (map_file.empty() == inline_pairs.empty()) {
    std::cerr << "homog-extend: give exactly one of --map-file or --pairs\n";
    return 2;
  }
  std::string text = inline_pairs;
  if (!map_file.empty()) {
    std::ifstream in(map_file);
    if (!in) {
      throw linord::DomainError("io_error", "cannot read " + map_file);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  linord::PartialMap pm = linord::PartialMap::parse(text);
  linord::ValidationResult check = linord::validate_partial_map(pm);
  if (!check.valid) {
    const linord::Violation& v = *check.violation;
    if (g.json) {
      ordered_json j;
      j["error"] = "invalid_partial_map";
      j["violation"]["kind"] = linord::to_string(v.kind);
      j["violation"]["pair"] = {linord::format_elem(v.first.src),
                                linord::format_elem(v.first.dst)};
      if (v.second) {
        j["violation"]["pair2"] = {linord::format_elem(v.second->src),
                                   linord::format_elem(v.second->dst)};
      }
      emit(j);
    } else {
      std::cerr << "invalid partial map: violates " << linord::to_string(v.kind)
                << " on " << linord::format_elem(v.first.src) << " -> "
                << linord::format_elem(v.first.dst);
      if (v.second) {
        std::cerr << " and " << linord::format_elem(v.second->src) << " -> "
                  << linord::format_elem(v.second->dst);
      }
      std::cerr << "\n";
    }
    return 1;
  }

  linord::Automorphism aut = linord::Automorphism::extend(pm);

  std::vector<linord::Elem> probes;
  std::size_t start = 0;
  while (!probe_list.empty() && start <= probe_list.size()) {
    std::size_t comma = probe_list.find(',', start);
    std::string item = probe_list.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      probes.push_back(linord::parse_elem(linord::q_times2(), item));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  if (g.json) {
    ordered_json j;
    j["valid"] = true;
    j["automorphism"] = ordered_json::parse(aut.to_json());
    j["probes"] = ordered_json::array();
    for (const linord::Elem& e : probes) {
      ordered_json p;
      p["element"] = linord::format_elem(e);
      p["fwd"] = linord::format_elem(aut.apply(e, linord::Direction::Fwd));
      p["inv"] = linord::format_elem(aut.apply(e, linord::Direction::Inv));
      j["probes"].push_back(p);
    }
    emit(j);
  } else {
    std::cout << "valid partial map; extended to an automorphism of Q*2\n";
    std::cout << "control points:";
    for (const auto& [a, b] : aut.base().control_points()) {
      std::cout << " (" << linord::to_string(a) << ", " << linord::to_string(b)
                << ")";
    }
    std::cout << "\n";
    for (const linord::Elem& e : probes) {
      std::cout << linord::format_elem(e) << " -> "
                << linord::format_elem(aut.apply(e, linord::Direction::Fwd))
                << "   (inverse: "
                << linord::format_elem(aut.apply(e, linord::Direction::Inv))
                << ")\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------------------
// verify

int run_verify(const GlobalOpts& g, const std::string& term_text,
               const std::string& suite, const linord::VerifyParams& params) {
  linord::OrderTerm t = linord::parse_term(term_text);
  std::vector<linord::SuiteResult> results =
      linord::verify_suite(t, suite, params);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (g.json) {
    ordered_json j;
    j["term"] = linord::format_term(t);
    j["seed"] = params.seed;
    j["pass"] = all_pass;
    j["suites"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json s;
      s["suite"] = r.suite;
      s["pass"] = r.pass;
      s["checks"] = ordered_json::array();
      for (const auto& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        s["checks"].push_back(cj);
      }
      j["suites"].push_back(s);
    }
    emit(j);
  } else {
    for (const auto& r : results) {
      for (const auto& c : r.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << r.suite << "."
                  << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
      }
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED")
              << "\n";
  }
  return all_pass ? 0 : 1;
}

// --------------------------------------------------------------------------
// demo-collision

int run_demo_collision(const GlobalOpts& g) {
  linord::CollisionFixture fx = linord::collision_fixture();
  if (g.json) {
    ordered_json j;
    j["term"] = linord::format_term(fx.term);
    j["x"] = linord::format_elem(fx.x);
    j["b"] = linord::format_elem(fx.b);
    j["dense"] = fx.dense.description();
    j["density_check"] = {{"pass", fx.density_check.pass},
                          {"exhaustive", fx.density_check.exhaustive},
                          {"pairs_checked", fx.density_check.pairs_checked}};
    j["naive"] = ordered_json::object();
    j["naive"]["x_stages"] = ordered_json::array();
    for (const auto& [stage, value] : fx.naive_x_stages) {
      j["naive"]["x_stages"].push_back(
          {{"stage", stage}, {"value", linord::to_string(value)}});
    }
    j["naive"]["x_limit"] = linord::to_string(fx.naive_x_limit);
    j["naive"]["b_value"] = linord::to_string(fx.naive_b_value);
    j["naive"]["bit_x"] = fx.naive_bit_x;
    j["naive"]["bit_b"] = fx.naive_bit_b;
    j["naive"]["collision"] = fx.naive_collision;
    j["robust"] = {{"stage", fx.robust_separation.stage},
                   {"gap", linord::to_string(fx.robust_separation.gap)},
                   {"bit_x", fx.robust_bit_x},
                   {"bit_b", fx.robust_bit_b},
                   {"separated", fx.robust_separated}};
    emit(j);
  } else {
    std::cout << "collision regression on " << linord::format_term(fx.term)
              << " with x = " << linord::format_elem(fx.x)
              << ", b = " << linord::format_elem(fx.b) << "\n";
    std::cout << "dense set: " << fx.dense.description()
              << " (density check: " << (fx.density_check.pass ? "pass" : "FAIL")
              << ", " << fx.density_check.pairs_checked << " pairs)\n";
    std::cout << "adversarial i: a_n -> -2^-n on the w part, b -> 0\n";
    std::cout << "naive e1 at x by stage:";
    for (const auto& [stage, value] : fx.naive_x_stages) {
      std::cout << "  [" << stage << "] " << linord::to_string(value);
    }
    std::cout << "\n";
    std::cout << "naive e1 sup at x = " << linord::to_string(fx.naive_x_limit)
              << ", at b = " << linord::to_string(fx.naive_b_value)
              << "; bits " << fx.naive_bit_x << " / " << fx.naive_bit_b << "\n";
    std::cout << "naive collision: "
              << (fx.naive_collision ? "yes — both map to (0, 0)" : "no")
              << "\n";
    std::cout << "robust embedding separates at stage "
              << fx.robust_separation.stage << " with gap "
              << linord::to_string(fx.robust_separation.gap) << " (bits "
              << fx.robust_bit_x << " / " << fx.robust_bit_b << "): "
              << (fx.robust_separated ? "separated" : "NOT separated") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linord — exact classification and embedding of linear-order terms"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--seed", g.seed, "seed for all sampling (default 0)");

  auto* classify_cmd = app.add_subcommand("classify", "classify a term");
  std::string classify_term;
  classify_cmd->add_option("term", classify_term, "order term")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "list carrier elements");
  std::string enum_term;
  std::uint64_t enum_count = 0;
  bool enum_has_count = false;
  enum_cmd->add_option("term", enum_term, "order term")->required();
  enum_cmd->add_option("--count", enum_count, "number of elements")
      ->each([&enum_has_count](const std::string&) { enum_has_count = true; });

  auto* jumps_cmd = app.add_subcommand("jumps", "list jumps");
  std::string jumps_term;
  std::uint64_t jumps_count = 0;
  bool jumps_has_count = false;
  jumps_cmd->add_option("term", jumps_term, "order term")->required();
  jumps_cmd->add_option("--count", jumps_count, "number of jumps")
      ->each([&jumps_has_count](const std::string&) { jumps_has_count = true; });

  auto* embed_cmd = app.add_subcommand("embed", "embed an element");
  std::string embed_term, embed_target, embed_elem;
  std::string embed_dense = "canonical";
  std::uint64_t embed_precision = 16;
  std::uint64_t embed_budget = 2000;
  embed_cmd->add_option("term", embed_term, "order term")->required();
  embed_cmd->add_option("--target", embed_target, "q | r2 | r")->required();
  embed_cmd->add_option("--element", embed_elem, "element text")->required();
  embed_cmd->add_option("--precision", embed_precision,
                        "approximation stage (error 2^-k)");
  embed_cmd->add_option("--dense", embed_dense,
                        "canonical | omit:<elem>[,<elem>...] (target r2)");
  embed_cmd->add_option("--budget", embed_budget,
                        "density validation budget");

  auto* homog_cmd =
      app.add_subcommand("homog-extend", "extend a partial map on Q*2");
  std::string homog_file, homog_pairs, homog_probe;
  homog_cmd->add_option("--map-file", homog_file, "file of src -> dst lines");
  homog_cmd->add_option("--pairs", homog_pairs,
                        "inline pairs: \"src -> dst; src -> dst\"");
  homog_cmd->add_option("--probe", homog_probe,
                        "comma-separated elements to push through the map");

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string verify_term, verify_suite_name = "all";
  linord::VerifyParams vp;
  verify_cmd->add_option("term", verify_term, "order term")->required();
  verify_cmd->add_option("--suite", verify_suite_name,
                         "order | enumeration | dense | embed | homog | all");
  verify_cmd->add_option("--samples", vp.samples, "samples per check");
  verify_cmd->add_option("--budget", vp.budget, "enumeration budget");
  verify_cmd->add_option("--pairs", vp.pairs, "density pairs");
  verify_cmd->add_option("--prefix", vp.prefix, "back-and-forth prefix");

  auto* demo_cmd = app.add_subcommand(
      "demo-collision", "show the naive-construction collision regression");

  for (CLI::App* sub : {classify_cmd, enum_cmd, jumps_cmd, embed_cmd, homog_cmd,
                        verify_cmd, demo_cmd}) {
    sub->fallthrough();  // let --json / --seed follow the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(g, classify_term);
    if (enum_cmd->parsed()) {
      return run_enumerate(g, enum_term,
                           enum_has_count
                               ? std::optional<std::uint64_t>(enum_count)
                               : std::nullopt);
    }
    if (jumps_cmd->parsed()) {
      return run_jumps(g, jumps_term,
                       jumps_has_count
                           ? std::optional<std::uint64_t>(jumps_count)
                           : std::nullopt);
    }
    if (embed_cmd->parsed()) {
      return run_embed(g, embed_term, embed_target, embed_elem,
                       embed_precision, embed_dense, embed_budget);
    }
    if (homog_cmd->parsed()) {
      return run_homog_extend(g, homog_file, homog_pairs, homog_probe);
    }
    if (verify_cmd->parsed()) {
      vp.seed = g.seed;
      return run_verify(g, verify_term, verify_suite_name, vp);
    }
    if (demo_cmd->parsed()) return run_demo_collision(g);
  } catch (const linord::Error& e) {
    if (g.json) {
      ordered_json j;
      j["error"] = e.code();
      j["message"] = e.what();
      emit(j);
    } else {
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    }
    return 1;
  }
  return 0;
}
