#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "parter/generate.hpp"
#include "parter/io.hpp"

using namespace parter;

namespace {

// The binary under test; ctest points PARTER_CLI at the built executable.
const char* cli_path() { return std::getenv("PARTER_CLI"); }

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/parter_cli_XXXXXX";
        char* made = mkdtemp(tmpl);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string matrix_file(const std::string& name, const SymMatrix& a) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << format_matrix(a);
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

#define REQUIRE_CLI() \
    do { \
        if (!cli_path()) SKIP("PARTER_CLI not set"); \
    } while (0)

TEST_CASE("analyze prints the classification") {
    REQUIRE_CLI();
    const std::string p5 = matrix_file("p5.txt", generate({5, Family::Path}));
    const RunResult r = run("analyze " + p5);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "order: 5\n"));
    CHECK(contains(r.out, "rank: 4\n"));
    CHECK(contains(r.out, "p-vertices: {2,4}\n"));
    CHECK(contains(r.out, "maximal p-sets: {2,4}\n"));

    const RunResult v = run("analyze --verify " + p5);
    CHECK(v.code == 0);
    CHECK(contains(v.out, "all checks passed"));
}

TEST_CASE("analyze --json emits stable machine output") {
    REQUIRE_CLI();
    const std::string p5 = matrix_file("p5.txt", generate({5, Family::Path}));
    const RunResult r = run("analyze --json " + p5);
    REQUIRE(r.code == 0);

    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 5);
    CHECK(j["nullity"] == 1);
    CHECK(j["rank"] == 4);
    CHECK(j["vertex_classes"] ==
          nlohmann::json({"downer", "p-vertex", "downer", "p-vertex", "downer"}));
    CHECK(j["p_vertices"] == nlohmann::json({2, 4}));
    CHECK(j["pair_edges"] == nlohmann::json({{2, 4}}));
    CHECK(j["maximal_psets"] == nlohmann::json({{2, 4}}));

    // key order is part of the interface
    const std::string& s = r.out;
    CHECK(s.find("\"n\":") < s.find("\"nullity\":"));
    CHECK(s.find("\"nullity\":") < s.find("\"rank\":"));
    CHECK(s.find("\"rank\":") < s.find("\"vertex_classes\":"));
    CHECK(s.find("\"vertex_classes\":") < s.find("\"p_vertices\":"));
    CHECK(s.find("\"p_vertices\":") < s.find("\"pair_edges\":"));
    CHECK(s.find("\"pair_edges\":") < s.find("\"maximal_psets\":"));

    CHECK(run("analyze --json " + p5).out == r.out);
}

TEST_CASE("check reports one set's verdict") {
    REQUIRE_CLI();
    const std::string p5 = matrix_file("p5.txt", generate({5, Family::Path}));

    const RunResult yes = run("check " + p5 + " --set 2,4");
    CHECK(yes.code == 0);
    CHECK(contains(yes.out, "set: {2,4}\n"));
    CHECK(contains(yes.out, "p-set: yes\n"));
    CHECK(contains(yes.out, "pairwise: yes\n"));
    CHECK(contains(yes.out, "conditions: nullity=yes rank=yes rowspace=yes\n"));

    const RunResult no = run("check " + p5 + " --set 1,2");
    CHECK(no.code == 1);
    CHECK(contains(no.out, "p-set: no\n"));

    const RunResult single = run("check " + p5 + " --set 2");
    CHECK(single.code == 0);
    CHECK(contains(single.out, "pairwise: n/a (needs at least two indices)\n"));

    CHECK(run("check " + p5 + " --set 9").code == 2);
    CHECK(run("check " + p5 + " --set 2,,4").code == 2);
}

TEST_CASE("jacobi walks every subset of a nonsingular matrix") {
    REQUIRE_CLI();
    const std::string p4 = matrix_file("p4.txt", generate({4, Family::Path}));
    const RunResult r = run("jacobi " + p4);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "subsets checked: 16\n"));
    CHECK(contains(r.out, "determinant identity holds on every subset\n"));

    const std::string p3 = matrix_file("p3.txt", generate({3, Family::Path}));
    const RunResult singular = run("jacobi " + p3);
    CHECK(singular.code == 2);
    CHECK(contains(singular.out, "singular"));
}

TEST_CASE("fuzz runs a clean campaign") {
    REQUIRE_CLI();
    const RunResult r = run("fuzz --family tree --n 2..4 --count 6 --seed 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "matrices checked: 6\n"));
    CHECK(contains(r.out, "all checks passed\n"));

    const RunResult trivial = run("fuzz --family zero --n 0 --count 1");
    CHECK(trivial.code == 0);
    CHECK(contains(trivial.out, "matrices checked: 1\n"));

    CHECK(run("fuzz --family nosuch --n 3 --count 1").code == 2);
    CHECK(run("fuzz --family tree --n 4..2 --count 1").code == 2);
    CHECK(run("fuzz --family dense --n 3 --count 1 --density 7/2").code == 2);
}

TEST_CASE("gen writes parseable matrix files") {
    REQUIRE_CLI();
    const RunResult r = run("gen --n 5 --family path");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# path n=5 bound=3 diag=zero seed=0\n", 0) == 0);
    std::istringstream in(r.out);
    CHECK(parse_matrix(in) == generate({5, Family::Path}));

    CHECK(run("gen --n 5 --family path").out == r.out);

    const RunResult tree = run("gen --n 6 --family tree --seed 11 --diag random");
    REQUIRE(tree.code == 0);
    GenSpec spec;
    spec.n = 6;
    spec.family = Family::Tree;
    spec.diagonal = DiagonalMode::Random;
    spec.seed = 11;
    std::istringstream tin(tree.out);
    CHECK(parse_matrix(tin) == generate(spec));

    const std::string out_path = scratch_dir() + "/gen_out.txt";
    CHECK(run("gen --n 4 --family dense --seed 3 --out " + out_path).code == 0);
    GenSpec dense;
    dense.n = 4;
    dense.family = Family::Dense;
    dense.seed = 3;
    CHECK(parse_matrix_file(out_path) == generate(dense));
}

TEST_CASE("usage errors exit with 2") {
    REQUIRE_CLI();
    CHECK(run("").code == 2);
    CHECK(run("analyze").code == 2);              // missing file argument
    CHECK(run("analyze --nosuch x").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("analyze /nonexistent/m.txt").code == 2);
    CHECK(run("check " + matrix_file("i2.txt", SymMatrix::identity(2))).code == 2);
}
