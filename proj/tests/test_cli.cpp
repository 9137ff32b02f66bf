#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "relpres/json_io.hpp"

using namespace relpres;
using namespace relpres::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = [] {
  fs::path p = fs::temp_directory_path() / "relpres_cli_test";
  fs::create_directories(p);
  return p;
}();

std::string path_of(const std::string& name) { return (kWork / name).string(); }

void write_file(const std::string& name, const json& j) {
  std::ofstream out(path_of(name));
  out << j.dump(2) << "\n";
}

std::string read_file(const std::string& name) {
  std::ifstream in(path_of(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, const std::string& tag) {
  std::string cmd = std::string(RELPRES_CLI_PATH) + " " + args + " > " + path_of(tag + ".out") +
                    " 2> " + path_of(tag + ".err");
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json word_json(const std::vector<TLetter>& letters) {
  json ls = json::array();
  for (const TLetter& l : letters) {
    if (l.t == 0)
      ls.push_back({{"g", l.g}});
    else
      ls.push_back({{"t", l.t}});
  }
  return json{{"letters", std::move(ls)}};
}

}  // namespace

TEST_CASE("rewrite produces a presentation report") {
  write_file("z3.json", group_to_json(Group::cyclic(3)));
  write_file("w.json", word_json({TLetter::coeff(1), TLetter::tpow(1), TLetter::coeff(1),
                                  TLetter::tpow(1), TLetter::coeff(1), TLetter::tpow(-1)}));
  int code = run("rewrite --group " + path_of("z3.json") + " --word " + path_of("w.json") +
                     " --power 3 --out " + path_of("rw.json"),
                 "rw");
  CHECK(code == 0);
  json rep = load_json_file(path_of("rw.json"));
  CHECK(rep.at("freeProduct") == false);
  CHECK(rep.at("conditions").at("all") == true);
  CHECK(rep.at("embedConjugateToSource") == true);
  PhiPresentation p = presentation_from_json(rep.at("presentation"));
  CHECK(p.k == 3);
  CHECK(verify_lemma1_conditions(p).all());
  CHECK(read_file("rw.out").rfind("s = ", 0) == 0);
}

TEST_CASE("rewrite reports a free product when no coefficients remain") {
  write_file("z3.json", group_to_json(Group::cyclic(3)));
  write_file("t.json", word_json({TLetter::tpow(1)}));
  int code = run("rewrite --group " + path_of("z3.json") + " --word " + path_of("t.json") +
                     " --power 2",
                 "fp");
  CHECK(code == 0);
  CHECK(read_file("fp.out").find("free product: G * Z2") != std::string::npos);
}

TEST_CASE("rewrite warns about involutions at k = 2") {
  write_file("z2.json", group_to_json(Group::cyclic(2)));
  write_file("w2.json", word_json({TLetter::coeff(1), TLetter::tpow(1), TLetter::coeff(1),
                                   TLetter::tpow(1), TLetter::coeff(1), TLetter::tpow(-1)}));
  int code = run("rewrite --group " + path_of("z2.json") + " --word " + path_of("w2.json") +
                     " --power 2 --out " + path_of("rw2.json"),
                 "rw2");
  CHECK(code == 0);
  CHECK(read_file("rw2.err").find("InvolutionHypothesisGap") != std::string::npos);
  json rep = load_json_file(path_of("rw2.json"));
  REQUIRE(rep.contains("warnings"));
  CHECK(rep.at("warnings").size() == 1);
}

TEST_CASE("rewrite rejects non-unimodular words as a precondition") {
  write_file("z3.json", group_to_json(Group::cyclic(3)));
  write_file("bad.json", word_json({TLetter::tpow(1), TLetter::coeff(1), TLetter::tpow(1)}));
  int code = run("rewrite --group " + path_of("z3.json") + " --word " + path_of("bad.json") +
                     " --power 2",
                 "bad");
  CHECK(code == 3);
}

TEST_CASE("parse failures exit with code 1") {
  std::ofstream(path_of("broken.json")) << "{ not json";
  write_file("w.json", word_json({TLetter::tpow(1)}));
  CHECK(run("rewrite --group " + path_of("broken.json") + " --word " + path_of("w.json") +
                " --power 2",
            "p1") == 1);
  CHECK(run("rewrite --group " + path_of("missing.json") + " --word " + path_of("w.json") +
                " --power 2",
            "p2") == 1);
  write_file("z3.json", group_to_json(Group::cyclic(3)));
  write_file("badword.json", json{{"letters", json::array({json{{"x", 1}}})}});
  CHECK(run("rewrite --group " + path_of("z3.json") + " --word " + path_of("badword.json") +
                " --power 2",
            "p3") == 1);
}

TEST_CASE("audit passes a clean diagram and round-trips through JSON") {
  write_file("pillow.json", diagram_to_json(z3_pillow(2)));
  int code = run("audit --diagram " + path_of("pillow.json") + " --out " + path_of("a1.json"), "a1");
  CHECK(code == 0);
  json rep = load_json_file(path_of("a1.json"));
  CHECK(rep.at("findings").empty());
  CHECK(rep.at("reduced") == true);
  CHECK(rep.at("combined").at("inequalityApplicable") == true);
  CHECK(rep.at("combined").at("lhs") == 31);
}

TEST_CASE("audit accepts a separate presentation file") {
  json dj = diagram_to_json(cyclic_pillow(3, 3));
  json pj = dj.at("presentation");
  dj.erase("presentation");  // no embedded presentation at all
  write_file("d33.json", dj);
  write_file("p33.json", pj);
  int code = run("audit --diagram " + path_of("d33.json") + " --presentation " +
                     path_of("p33.json") + " --out " + path_of("a2.json"),
                 "a2");
  CHECK(code == 0);
  json rep = load_json_file(path_of("a2.json"));
  CHECK(rep.at("isoperimetric").at("holds") == true);
  CHECK(rep.at("isoperimetric").at("lhs") == 19);
}

TEST_CASE("audit flags a positive interior vertex with exit code 2") {
  write_file("spliced.json", diagram_to_json(digon_spliced_pillow()));
  int code = run("audit --diagram " + path_of("spliced.json") + " --out " + path_of("a3.json"),
                 "a3");
  CHECK(code == 2);
  json rep = load_json_file(path_of("a3.json"));
  bool flagged = false;
  for (const auto& f : rep.at("findings"))
    if (f.get<std::string>().rfind("PositiveInteriorVertex", 0) == 0) flagged = true;
  CHECK(flagged);
}

TEST_CASE("audit emits the involution warning for the mirror pillow") {
  write_file("mirror.json", diagram_to_json(z2_mirror_pillow()));
  int code = run("audit --diagram " + path_of("mirror.json") + " --out " + path_of("a4.json"),
                 "a4");
  CHECK(code == 2);  // the heavy-adjacent positive vertex is still a finding
  CHECK(read_file("a4.err").find("InvolutionHypothesisGap") != std::string::npos);
}

TEST_CASE("audit requires k >= 2") {
  write_file("k1.json", diagram_to_json(cyclic_pillow(3, 1)));
  int code = run("audit --diagram " + path_of("k1.json"), "a5");
  CHECK(code == 3);
  CHECK(read_file("a5.err").find("k >= 2 required") != std::string::npos);
}

TEST_CASE("fuzz runs are deterministic for a fixed seed") {
  CHECK(run("fuzz --kind gauss-bonnet --count 40 --seed 7", "f1") == 0);
  CHECK(run("fuzz --kind gauss-bonnet --count 40 --seed 7", "f2") == 0);
  CHECK(read_file("f1.out") == read_file("f2.out"));
  CHECK(read_file("f1.out").find("0 failures") != std::string::npos);
  CHECK(run("fuzz --kind britton --count 150 --seed 5", "f3") == 0);
  CHECK(run("fuzz --kind rewrite --count 60 --seed 9", "f4") == 0);
}
