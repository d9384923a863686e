#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpa/cli.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/moves.hpp"

using namespace lpa;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "lpa_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = temp_dir() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One tour step: echo the command, its stdout, and the exit code.
void step(std::ostream& tour, const std::vector<std::string>& args) {
  CliResult r = run_cli(args);
  tour << "$ lpa";
  for (const auto& a : args) tour << " " << a;
  tour << "\n" << r.out << "exit=" << r.code << "\n";
}

void compare_golden(const std::string& name, const std::string& got) {
  auto path = std::filesystem::path(LPA_GOLDEN_DIR) / name;
  if (std::getenv("LPA_REGEN_GOLDEN")) {
    std::ofstream f(path);
    f << got;
    return;
  }
  CHECK(got == slurp(path));
}

}  // namespace

TEST_CASE("cli: fixture/cg-contract/emit-expected round trip") {
  CliResult fix = run_cli({"fixture", "EX53", "--depth", "3"});
  REQUIRE(fix.code == 0);
  std::string gfile = write_temp("ex53.graph", fix.out);
  CliResult contracted =
      run_cli({"cg-contract", gfile, "--g0", "v#0,w#0"});
  REQUIRE(contracted.code == 0);
  CliResult expected =
      run_cli({"fixture", "EX53", "--depth", "3", "--emit-expected"});
  REQUIRE(expected.code == 0);
  CHECK(contracted.out == expected.out);  // identical files
}

TEST_CASE("cli: nf resolves the L3 instance to 0") {
  std::string gfile = write_temp("parallel.graph",
                                 serialize(*two_parallel_edges_graph()));
  CliResult r = run_cli(
      {"nf", gfile, "--expr", "p(v) - s(e)*sx(e) - s(f)*sx(f)"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("cli: query commands exit 0 on successful evaluation") {
  std::string gfile =
      write_temp("iso.graph", "graph iso\nvertex a\nvertex b\n");
  CliResult r = run_cli({"full", gfile, "--set", "a"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  CliResult r2 = run_cli({"closure", gfile, "--set", "a"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "a\n");
}

TEST_CASE("cli: exit codes") {
  // 2: input errors (bad flags, parse errors, semantic errors)
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"full", "/nonexistent/file", "--set", "a"}).code == 2);
  std::string gfile = write_temp("loop.graph", serialize(*single_loop_graph()));
  CHECK(run_cli({"nf", gfile, "--expr", "p(zz)"}).code == 2);
  CHECK(run_cli({"nf", gfile, "--expr", "p(v", "--ring", "Q"}).code == 2);
  CHECK(run_cli({"quotient", gfile, "--set", "v"}).code == 0);  // full set ok
  // quotient by a non-closed set is a semantic input error
  std::string pend = write_temp(
      "pend.graph",
      "graph p\nvertex a\nvertex v\nedge e : a -> v\nedge l : v -> v\n");
  CHECK(run_cli({"quotient", pend, "--set", "v"}).code == 2);

  // 1: a verification failed
  CliResult red = run_cli({"reduce", gfile, "--expr", "s(a)", "--maxlen", "0"});
  CHECK(red.code == 1);
  CHECK(red.out == "EXHAUSTED\n");

  std::string cert = write_temp("bad.cert", "mu=v nu=v kind=vertex r=5 v=v\n");
  CliResult vc = run_cli({"verify-cert", gfile, "--expr", "p(v)", "--cert", cert});
  CHECK(vc.code == 1);
  CHECK(vc.out == "false\n");

  std::string good = write_temp("good.cert", "mu=v nu=v kind=vertex r=1 v=v\n");
  CliResult vg = run_cli({"verify-cert", gfile, "--expr", "p(v)", "--cert", good});
  CHECK(vg.code == 0);
  CHECK(vg.out == "true\n");
}

TEST_CASE("cli: round trips through serialization") {
  // parse . serialize identity on graphs
  Fixture fx = fixture(FixtureName::EX51, 3);
  std::string text = serialize(*fx.E);
  std::string gfile = write_temp("ex51.graph", text);
  // nf output parses back to itself
  CliResult once = run_cli({"nf", gfile, "--ring", "Zmod:4", "--expr",
                            "3*s(x1)*sx(x1) + p(v0) + s(x1.a1)"});
  REQUIRE(once.code == 0);
  std::string expr = once.out.substr(0, once.out.size() - 1);
  CliResult twice = run_cli({"nf", gfile, "--ring", "Zmod:4", "--expr", expr});
  CHECK(twice.out == once.out);
}

TEST_CASE("cli: byte-identical outputs across runs") {
  std::string gfile = write_temp("ex52.graph", serialize(*fixture(FixtureName::EX52, 3).E));
  std::vector<std::string> cmd{"morita", gfile, "--set", "v,w",
                               "--samples", "25", "--seed", "12"};
  CliResult a = run_cli(cmd);
  CliResult b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::vector<std::string> cmd2{"cg-verify", gfile, "--g0", "v,w",
                                "--maxlen", "3", "--samples", "25",
                                "--seed", "12"};
  CliResult c = run_cli(cmd2);
  CliResult d = run_cli(cmd2);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("cli: golden tours of the three examples") {
  auto dir = temp_dir();

  // EX53: in-delay route.
  {
    std::ostringstream tour;
    step(tour, {"fixture", "EX53", "--depth", "3"});
    std::string E = run_cli({"fixture", "EX53", "--depth", "3"}).out;
    std::string gfile = write_temp("tour53.graph", E);
    // the source graph F and its Drinen vector reproduce E
    GraphRef F = make_graph("ex53", {"v", "w"},
                            {Edge{"e1", "w", "v"}, Edge{"e2", "w", "v"},
                             Edge{"e3", "w", "v"}});
    std::string ffile = write_temp("tour53_base.graph", serialize(*F));
    std::string dfile = write_temp("tour53.delays",
                                   "vertex v 0\nvertex w 2\n"
                                   "edge e1 0\nedge e2 1\nedge e3 2\n");
    step(tour, {"delay-in", ffile, "--d", dfile});
    step(tour, {"cg-validate", gfile, "--g0", "v#0,w#0"});
    step(tour, {"cg-contract", gfile, "--g0", "v#0,w#0"});
    step(tour, {"fixture", "EX53", "--depth", "3", "--emit-expected"});
    step(tour, {"closure", gfile, "--set", "v#0,w#0"});
    step(tour, {"full", gfile, "--set", "v#0,w#0"});
    step(tour, {"nf", gfile, "--expr",
                "p(v#0) - s(e1)*sx(e1) - s(e2)*sx(e2) - s(e3)*sx(e3)"});
    step(tour, {"mul", gfile, "--lhs", "sx(e2)", "--rhs", "s(e2.w#e1)"});
    step(tour, {"grade", gfile, "--expr", "s(e1) + p(v#0) + sx(e2.w#e1)",
                "--deg", "1"});
    step(tour, {"morita", gfile, "--set", "v#0,w#0", "--samples", "30",
                "--seed", "5"});
    step(tour, {"cg-verify", gfile, "--g0", "v#0,w#0", "--maxlen", "3",
                "--samples", "30", "--seed", "7"});
    step(tour, {"reduce", gfile, "--expr", "s(e1) + s(e2.w#e1)"});
    compare_golden("tour_ex53.txt", tour.str());
  }

  // EX52: desingularisation route.
  {
    std::ostringstream tour;
    std::string mg = write_temp(
        "tour52.mgraph",
        "graph ex52\nvertex v\nvertex w\nbundle b : w -> v * inf\n");
    step(tour, {"desing", mg, "--depth", "4"});
    step(tour, {"fixture", "EX52", "--depth", "4"});
    std::string E = run_cli({"fixture", "EX52", "--depth", "4"}).out;
    std::string gfile = write_temp("tour52.graph", E);
    step(tour, {"cg-validate", gfile, "--g0", "v,w"});
    step(tour, {"cg-contract", gfile, "--g0", "v,w"});
    step(tour, {"fixture", "EX52", "--depth", "4", "--emit-expected"});
    step(tour, {"quotient", gfile, "--set",
                "b_1,b_2,b_3,v,w"});
    step(tour, {"morita", gfile, "--set", "v,w", "--samples", "30",
                "--seed", "5"});
    step(tour, {"cg-verify", gfile, "--g0", "v,w", "--maxlen", "3",
                "--samples", "30", "--seed", "7"});
    step(tour, {"reduce", gfile, "--ring", "Zmod:4", "--expr",
                "2*p(w) + s(b_f1.b_e1)*sx(b_e0)"});
    compare_golden("tour_ex52.txt", tour.str());
  }

  // EX51: collapse route.
  {
    std::ostringstream tour;
    step(tour, {"fixture", "EX51", "--depth", "3"});
    std::string E = run_cli({"fixture", "EX51", "--depth", "3"}).out;
    std::string gfile = write_temp("tour51.graph", E);
    step(tour, {"cg-validate", gfile, "--g0", "v0,v1,v2,v3"});
    step(tour, {"collapse", gfile, "--seg", "u1,u2,u3"});
    step(tour, {"fixture", "EX51", "--depth", "3", "--emit-expected"});
    step(tour, {"closure", gfile, "--set", "v0"});
    step(tour, {"full", gfile, "--set", "v0,v1,v2,v3"});
    step(tour, {"nf", gfile, "--ring", "Zmod:2", "--expr",
                "p(u1) - s(x1)*sx(x1)"});
    step(tour, {"morita", gfile, "--set", "v0,v1,v2,v3", "--samples", "30",
                "--seed", "5"});
    step(tour, {"cg-verify", gfile, "--g0", "v0,v1,v2,v3", "--maxlen", "3",
                "--samples", "30", "--seed", "7"});
    step(tour, {"reduce", gfile, "--expr", "s(y0)*sx(y0)"});
    compare_golden("tour_ex51.txt", tour.str());
  }
}
