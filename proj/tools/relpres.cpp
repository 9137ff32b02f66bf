#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "relpres/json_io.hpp"

using namespace relpres;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitFindings = 2;
constexpr int kExitPrecondition = 3;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  out << j.dump(2) << "\n";
}

int cmd_rewrite(const std::string& group_path, const std::string& word_path, int k,
                const std::string& out_path) {
  Group g;
  TWord w;
  try {
    g = group_from_json(load_json_file(group_path));
    w = word_from_json(load_json_file(word_path));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  RewriteResult res;
  try {
    res = lemma1_rewrite(g, w, k);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitPrecondition;
  }

  json report;
  report["k"] = k;
  if (res.free_product) {
    report["freeProduct"] = true;
    report["coefficient"] = res.free_product->coefficient;
    std::cout << "free product: G * Z" << k << "\n";
    emit(report, out_path);
    return 0;
  }

  const PhiPresentation& p = *res.presentation;
  ConditionReport cond = verify_lemma1_conditions(p);
  EmbedResult embed = embed_to_base(p, res.source_cyclic);
  report["freeProduct"] = false;
  report["presentation"] = presentation_to_json(p);
  report["conditions"] = condition_report_to_json(cond);
  report["embedConjugateToSource"] = embed.conjugate_to_source;
  std::cout << "s = " << p.s << ", m = " << p.m << "\n";
  if (k == 2 && g.has_involution()) {
    std::string warn =
        "InvolutionHypothesisGap: k = 2 and the base group has an involution; "
        "the hyperbolicity conclusion is not covered";
    report["warnings"] = json::array({warn});
    std::cerr << warn << "\n";
  }
  emit(report, out_path);
  return cond.all() && embed.conjugate_to_source ? 0 : kExitFindings;
}

int cmd_audit(const std::string& diagram_path, const std::string& pres_path,
              const std::string& out_path) {
  json report;
  HowieDiagram d = [&] {
    json dj = load_json_file(diagram_path);
    PhiPresentation p = pres_path.empty()
                            ? presentation_from_json(dj.at("presentation"))
                            : presentation_from_json(load_json_file(pres_path));
    return diagram_from_json(dj, p);
  }();

  if (d.presentation().k < 2) {
    std::cerr << "k >= 2 required\n";
    return kExitPrecondition;
  }

  DiagramReport validation = validate_diagram(d);
  ReducednessReport red = reducedness_check(d);
  report["validation"] = validation.findings;
  report["reduced"] = red.reduced;
  report["phiReduced"] = red.phi_reduced;

  std::vector<std::string> findings = validation.findings;
  bool faces_legal = true;
  for (const auto& f : validation.findings)
    if (f.rfind("IllegalFace", 0) == 0) faces_legal = false;

  bool inequality_ok = true;
  if (faces_legal) {
    auto curvature = interior_curvature_audit(d);
    report["curvature"] = curvature;
    findings.insert(findings.end(), curvature.begin(), curvature.end());
    try {
      if (d.presentation().k >= 3) {
        IsoperimetricVerdict v = isoperimetric_check_k3(d);
        report["isoperimetric"] = {{"lhs", v.lhs}, {"rhs", v.rhs}, {"holds", v.holds()}};
        inequality_ok = v.holds();
      } else {
        Section8Report s8 = combined_audit(d);
        report["combined"] = {{"findings", s8.findings},
                              {"warnings", s8.warnings},
                              {"inequalityApplicable", s8.inequality_applicable},
                              {"lhs", s8.lhs},
                              {"rhs", s8.rhs},
                              {"collisions", collision_report_to_json(s8.collisions)}};
        findings.insert(findings.end(), s8.findings.begin(), s8.findings.end());
        for (const auto& w : s8.warnings) std::cerr << w << "\n";
        inequality_ok = !s8.inequality_applicable || s8.inequality_holds();
      }
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return kExitPrecondition;
    }
  }
  report["findings"] = findings;
  emit(report, out_path);
  return findings.empty() && inequality_ok ? 0 : kExitFindings;
}

int fuzz_gauss_bonnet(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> faces(1, 6), degree(1, 8), num(-30, 30), den(1, 12);
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    std::vector<int> degrees;
    int total = 0;
    for (int f = faces(rng); f > 0; --f) {
      degrees.push_back(degree(rng));
      total += degrees.back();
    }
    if (total % 2) degrees.back() += 1;
    SurfaceMap m = random_map(degrees, rng());
    WeightAssignment nu;
    for (Corner c : m.corners()) nu.set(c, Rational(num(rng), den(rng)));
    if (!gauss_bonnet_report(m, nu).matches()) ++failures;
  }
  std::cout << "gauss-bonnet: " << count << " trials, " << failures << " failures\n";
  return failures ? kExitFindings : 0;
}

int fuzz_britton(int count, std::uint64_t seed) {
  // s = 2 presentation over Z3; oracle: triviality in the ambient free product
  Group g = Group::cyclic(3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 12), copy(0, 2), elem(1, 2), sign(0, 1);
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    HtWord w;
    for (int j = len(rng); j > 0; --j) {
      w.tsign.push_back(sign(rng) ? 1 : -1);
      FPWord h;
      if (sign(rng)) h.syl.push_back({copy(rng), elem(rng)});
      w.h.push_back(h);
    }
    bool by_britton = britton_reduce(g, 2, w).trivial_shape();
    bool by_oracle = t_free_reduce(g, ht_embed(g, w)).empty();
    if (by_britton != by_oracle) ++failures;
  }
  std::cout << "britton: " << count << " trials, " << failures << " failures\n";
  return failures ? kExitFindings : 0;
}

int fuzz_rewrite(int count, std::uint64_t seed) {
  std::vector<Group> groups = {Group::cyclic(2), Group::cyclic(3), Group::symmetric3()};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 8), sign(0, 1), kdist(2, 3);
  int failures = 0, presented = 0;
  for (int i = 0; i < count; ++i) {
    const Group& g = groups[i % groups.size()];
    std::uniform_int_distribution<int> elem(1, g.order() - 1);
    TWord w;
    int sum = 0;
    for (int j = len(rng); j > 0; --j) {
      w.letters.push_back(TLetter::coeff(elem(rng)));
      int e = sign(rng) ? 1 : -1;
      w.letters.push_back(TLetter::tpow(e));
      sum += e;
    }
    while (sum < 1) { w.letters.push_back(TLetter::tpow(1)); ++sum; }
    while (sum > 1) { w.letters.push_back(TLetter::tpow(-1)); --sum; }
    try {
      RewriteResult res = lemma1_rewrite(g, w, kdist(rng));
      if (res.free_product) continue;
      ++presented;
      if (!verify_lemma1_conditions(*res.presentation).all() ||
          !embed_to_base(*res.presentation, res.source_cyclic).conjugate_to_source)
        ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  std::cout << "rewrite: " << count << " trials (" << presented << " presented), " << failures
            << " failures\n";
  return failures ? kExitFindings : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative presentation rewriting and diagram auditing"};
  app.require_subcommand(1);

  std::string group_path, word_path, diagram_path, pres_path, out_path, kind;
  int power = 2, count = 100;
  std::uint64_t seed = 0;

  CLI::App* rewrite = app.add_subcommand("rewrite", "rewrite a unimodular word");
  rewrite->add_option("--group", group_path)->required();
  rewrite->add_option("--word", word_path)->required();
  rewrite->add_option("--power", power)->required();
  rewrite->add_option("--out", out_path);

  CLI::App* audit = app.add_subcommand("audit", "audit a diagram");
  audit->add_option("--diagram", diagram_path)->required();
  audit->add_option("--presentation", pres_path);
  audit->add_option("--out", out_path);

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized property checks");
  fuzz->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"gauss-bonnet", "britton", "rewrite"}));
  fuzz->add_option("--count", count);
  fuzz->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rewrite->parsed()) return cmd_rewrite(group_path, word_path, power, out_path);
    if (audit->parsed()) return cmd_audit(diagram_path, pres_path, out_path);
    if (kind == "gauss-bonnet") return fuzz_gauss_bonnet(count, seed);
    if (kind == "britton") return fuzz_britton(count, seed);
    return fuzz_rewrite(count, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    std::string what = e.what();
    return what.rfind("ParseError", 0) == 0 || what.rfind("BadDiagram", 0) == 0 ? kExitParse
                                                                                : kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
}
