#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_llg;
std::string g_fixtures;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// args is appended to the binary path verbatim; stderr routing is up to it
RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = g_llg + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("llg_cli_" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("verify a generated graph") {
    auto r = run_cli("verify --family paley9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "locally-linear: true\nn=9\nedges=18\ntriangles=6\n");
}

TEST_CASE("verify reads stdin and fails with the witness") {
    std::string k4 = write_scratch("k4.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto r = run_cli("verify --input - < " + k4);
    CHECK(r.exit_code == 1);
    CHECK(r.out == "locally-linear: false, witness: edge (0,1) in 2 triangles\n");

    auto from_file = run_cli("verify --input " + k4);
    CHECK(from_file.exit_code == 1);
    CHECK(from_file.out == r.out);
}

TEST_CASE("source flags are mutually exclusive and required") {
    CHECK(run_cli("verify 2>&1").exit_code == 2);
    CHECK(run_cli("verify --family paley9 --input foo.edges 2>&1").exit_code == 2);
    auto r = run_cli("verify 2>&1");
    CHECK(r.out.find("usage error") != std::string::npos);
}

TEST_CASE("failures carry the status name on stderr") {
    auto r = run_cli("verify --family no_such_family 2>&1 >/dev/null");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("InvalidParam") != std::string::npos);

    auto missing = run_cli("verify --input /no/such/file.edges 2>&1 >/dev/null");
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.find("IoError") != std::string::npos);

    auto parse = run_cli("theorem --input - < /dev/null 2>&1 >/dev/null");
    CHECK(parse.exit_code == 1);
    CHECK(parse.out.find("ParseError") != std::string::npos);
}

TEST_CASE("unknown verbs and flags exit 2") {
    CHECK(run_cli("frobnicate 2>&1").exit_code == 2);
    CHECK(run_cli("verify --family paley9 --unknown-flag 2>&1").exit_code == 2);
    CHECK(run_cli("--help >/dev/null 2>&1").exit_code == 0);
}

TEST_CASE("theorem report for a snake") {
    auto r = run_cli("theorem --family snake --t 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n=11\nm=5\nholds=true\n"
          "lhs.coeffs=0 3 0 -4 0 1\n"
          "lhs.factored=x(x-1)(x+1)(x^2-3)\n"
          "lhs.roots=1.732 1.000 0.000 -1.000 -1.732\n"
          "rhs.coeffs=0 3 0 -4 0 1\n"
          "rhs.factored=x(x-1)(x+1)(x^2-3)\n"
          "rhs.roots=1.732 1.000 0.000 -1.000 -1.732\n"
          "regular=false\n");
}

TEST_CASE("charpoly report for paley9") {
    auto r = run_cli("charpoly --family paley9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("A.factored=(x-4)(x-1)^4(x+2)^4\n") != std::string::npos);
    CHECK(r.out.find("A_half_D.factored=x^4(x-6)(x-3)^4\n") != std::string::npos);
    CHECK(r.out.find("A_star.factored=x^4(x-3)(x+3)\n") != std::string::npos);
}

TEST_CASE("generate emits a loadable edge list") {
    auto r = run_cli("generate --family snake --t 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 4) == "7 9\n");

    auto dot = run_cli("generate --family snake --t 3 --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);

    auto seeded = run_cli("generate --family random_locally_linear --t 8 --merge-bias 0.7 --seed 5");
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.out == run_cli("generate --family random_locally_linear --t 8 --merge-bias 0.7 "
                                "--seed 5")
                            .out);
}

TEST_CASE("star and reconstruct chain through files") {
    auto star_file = (scratch_dir() / "paley9_star.edges").string();
    auto star = run_cli("star --family paley9 --output " + star_file);
    CHECK(star.exit_code == 0);
    CHECK(star.out.empty());

    std::string text = slurp(star_file);
    CHECK(text.substr(0, 4) == "6 9\n");
    CHECK(text.find("# star of a graph with 9 vertices\n") != std::string::npos);

    auto rec = run_cli("reconstruct --input " + star_file);
    CHECK(rec.exit_code == 0);
    CHECK(rec.out.substr(0, 5) == "9 18\n");
    CHECK(rec.out.find("# origin 0:") != std::string::npos);

    auto rec_dot = run_cli("reconstruct --input " + star_file + " --dot");
    CHECK(rec_dot.exit_code == 0);
    CHECK(rec_dot.out.rfind("graph G {", 0) == 0);

    auto star_dot = run_cli("star --family paley9 --dot");
    CHECK(star_dot.exit_code == 0);
    CHECK(star_dot.out.rfind("graph G {", 0) == 0);
}

TEST_CASE("census on the committed fixtures") {
    auto base = run_cli("census --input " + g_fixtures + "/hex_base_side.edges");
    CHECK(base.exit_code == 0);
    CHECK(base.out ==
          "c4.base=2\nc4.star=2\nc4.match=true\n"
          "c5.base=0\nc5.star=0\nc5.match=true\n"
          "c6.base=1\nc6.star=0\nc6.match=false\n");

    auto star = run_cli("census --input " + g_fixtures + "/hex_star_side.edges");
    CHECK(star.exit_code == 0);
    CHECK(star.out.find("c6.base=0\nc6.star=1\nc6.match=false\n") != std::string::npos);
}

TEST_CASE("roundtrip verb") {
    auto r = run_cli("roundtrip --family paley9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("roundtrip=pass\n", 0) == 0);
    CHECK(r.out.find("base_iso=") != std::string::npos);
    CHECK(r.out.find("star_iso=") != std::string::npos);
}

TEST_CASE("hexfix writes fixtures that match the committed ones") {
    auto out_dir = (scratch_dir() / "hexfix_out").string();
    auto r = run_cli("hexfix --out-dir " + out_dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("description=") != std::string::npos);
    CHECK(r.out.find("c6.base=1\n") != std::string::npos);
    CHECK(r.out.find("c6.star=1\n") != std::string::npos);

    CHECK(slurp(out_dir + "/hex_base_side.edges") == slurp(g_fixtures + "/hex_base_side.edges"));
    CHECK(slurp(out_dir + "/hex_star_side.edges") == slurp(g_fixtures + "/hex_star_side.edges"));
}

TEST_CASE("reconstruct rejects a graph that is no triangle graph") {
    std::string claw = write_scratch("claw.edges", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    auto r = run_cli("reconstruct --input " + claw + " 2>&1 >/dev/null");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("InvalidStar") != std::string::npos);
}

int cli_main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <llg-binary> <fixtures-dir> [doctest args]\n");
        return 2;
    }
    g_llg = argv[1];
    g_fixtures = argv[2];
    doctest::Context ctx(argc - 2, argv + 2);
    int rc = ctx.run();
    std::error_code ec;
    std::filesystem::remove_all(scratch_dir(), ec);
    return rc;
}

int main(int argc, char** argv) { return cli_main(argc, argv); }
