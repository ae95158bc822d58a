#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "kcross/instance_io.hpp"
#include "testutil.hpp"

using namespace kcross;
using namespace testutil;

namespace fs = std::filesystem;

namespace {

Instance square_instance() {
    Instance inst;
    inst.points.pts = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    inst.coloring = EdgeColoring(2, 4, 1);
    return inst;
}

Instance parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

int parse_error_line(const std::string& text) {
    try {
        parse_text(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("kcross-io-" + std::to_string(getpid()));
    fs::create_directories(dir);
    return dir;
}

/// The CLI binary is built next to this test binary.
fs::path cli_path() {
    return fs::read_symlink("/proc/self/exe").parent_path() / "kcross";
}

int run_cli_command(const std::string& args) {
    std::string cmd = "'" + cli_path().string() + "' " + args;
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

const char* kValidText =
    "# a drawing of four points\n"
    "kcross instance 1\n"
    "k 2\n"
    "\n"
    "n 4\n"
    "points\n"
    "0 0\n"
    "10 0   # third coordinate pair follows\n"
    "10 10\n"
    "0 10\n"
    "colors\n"
    "1 2 1\n"
    "2 1 1\n"
    "matching\n"
    "1 2 3 0\n"
    "details\n"
    "1 L L\n"
    "2 S R\n"
    "1 R L\n"
    "2 L R\n"
    "end\n";

} // namespace

TEST_CASE("instances survive a serialize and parse round trip") {
    std::mt19937_64 rng(501);
    Instance inst;
    inst.points = random_points(5, rng);
    inst.coloring = random_coloring(3, 5, rng);
    inst.matching = random_matching(5, rng);
    inst.details = random_details(3, 5, rng);

    std::ostringstream out;
    serialize_instance(inst, out);
    Instance back = parse_text(out.str());

    REQUIRE(back.points.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(back.points[i] == inst.points[i]);
    CHECK(back.coloring.k == 3);
    CHECK(back.coloring.n == 5);
    CHECK(back.coloring.color == inst.coloring.color);
    REQUIRE(back.matching.has_value());
    CHECK(back.matching->target == inst.matching->target);
    REQUIRE(back.details.has_value());
    for (std::size_t p = 0; p < 5; ++p) {
        CHECK((*back.details)[p].c_prime == (*inst.details)[p].c_prime);
        CHECK((*back.details)[p].m1 == (*inst.details)[p].m1);
        CHECK((*back.details)[p].m2 == (*inst.details)[p].m2);
    }
}

TEST_CASE("optional sections can be absent") {
    Instance inst = square_instance();
    std::ostringstream out;
    serialize_instance(inst, out);
    Instance back = parse_text(out.str());
    CHECK(!back.matching.has_value());
    CHECK(!back.details.has_value());
    CHECK(back.coloring.color == inst.coloring.color);
}

TEST_CASE("comments, blank lines, and wrapped numbers parse") {
    Instance inst = parse_text(kValidText);
    CHECK(inst.points.size() == 4);
    CHECK(inst.points[1] == Point{10, 0});
    CHECK(inst.coloring.at(0, 1) == 1);
    CHECK(inst.coloring.at(0, 2) == 2);
    CHECK(inst.coloring.at(1, 2) == 2);
    REQUIRE(inst.matching.has_value());
    CHECK(inst.matching->target == std::vector<std::size_t>{1, 2, 3, 0});
    REQUIRE(inst.details.has_value());
    CHECK((*inst.details)[1].m1 == M1::Sibling);
    CHECK((*inst.details)[3].m2 == M2::Right);
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(parse_error_line("kcros instance 1\n") == 1);
    CHECK(parse_error_line("kcross instance 2\n") == 1);

    std::string big_k = "kcross instance 1\nk 3000000000000000\n";
    CHECK(parse_error_line(big_k) == 2);

    std::string bad_color =
        "kcross instance 1\nk 2\nn 4\npoints\n0 0\n10 0\n10 10\n0 10\n"
        "colors\n1 2 1 3 1 1\nend\n";
    CHECK(parse_error_line(bad_color) == 10);

    std::string fixed_point =
        "kcross instance 1\nk 2\nn 4\npoints\n0 0\n10 0\n10 10\n0 10\n"
        "colors\n1 2 1 2 1 1\nmatching\n0 2 3 1\nend\n";
    CHECK(parse_error_line(fixed_point) == 11);

    std::string bad_letter =
        "kcross instance 1\nk 2\nn 4\npoints\n0 0\n10 0\n10 10\n0 10\n"
        "colors\n1 2 1 2 1 1\ndetails\n1 X L\n1 L L\n1 L L\n1 L L\nend\n";
    CHECK(parse_error_line(bad_letter) == 12);

    std::string truncated =
        "kcross instance 1\nk 2\nn 4\npoints\n0 0\n10 0\n10 10\n0 10\n"
        "colors\n1 2 1 2 1 1\n";
    CHECK(parse_error_line(truncated) == 10);

    std::string trailing =
        "kcross instance 1\nk 1\nn 3\npoints\n0 0\n5 0\n0 5\n"
        "colors\n1 1 1\nend\nleftover\n";
    CHECK(parse_error_line(trailing) == 11);
}

TEST_CASE("save writes a loadable file") {
    fs::path dir = scratch_dir();
    fs::path file = dir / "roundtrip.kx";
    Instance inst = square_instance();
    inst.matching = Matching{};
    inst.matching->target = {1, 2, 3, 0};
    save_instance(inst, file.string());
    Instance back = load_instance(file.string());
    CHECK(back.coloring.color == inst.coloring.color);
    CHECK(back.matching->target == inst.matching->target);
    CHECK(!fs::exists(file.string() + ".tmp"));
    fs::remove(file);
    CHECK_THROWS_AS(load_instance((dir / "missing.kx").string()), std::runtime_error);
}

TEST_CASE("command line: count, verify, bound, search") {
    fs::path dir = scratch_dir();
    fs::path inst_file = dir / "square.kx";
    {
        std::ofstream f(inst_file);
        serialize_instance(square_instance(), f);
    }
    fs::path out_file = dir / "cli_out.txt";
    std::string redirect = " > '" + out_file.string() + "' 2>&1";

    CHECK(run_cli_command("count --instance '" + inst_file.string() + "'" + redirect) == 0);
    CHECK(slurp(out_file) == "1\n");

    CHECK(run_cli_command("verify --instance '" + inst_file.string() + "' --t-max 1" +
                          redirect) == 0);
    std::string log = slurp(out_file);
    CHECK(log.find("FAIL") == std::string::npos);
    CHECK(log.find("PASS formula at t=1 equals the doubled drawing") != std::string::npos);

    fs::path bound_out = dir / "with_matching.kx";
    CHECK(run_cli_command("bound --instance '" + inst_file.string() + "' --out '" +
                          bound_out.string() + "'" + redirect) == 0);
    Instance enriched = load_instance(bound_out.string());
    REQUIRE(enriched.matching.has_value());
    REQUIRE(enriched.details.has_value());
    CHECK(run_cli_command("verify --instance '" + bound_out.string() +
                          "' --use-given-matching --t-max 1" + redirect) == 0);

    CHECK(run_cli_command("search --n 4 --k 2 --seed 3 --restarts 2" + redirect) == 0);
    CHECK(slurp(out_file).find("crossings ") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("command line: failure exit codes") {
    fs::path dir = scratch_dir();
    fs::path out_file = dir / "cli_err.txt";
    std::string redirect = " > '" + out_file.string() + "' 2>&1";

    fs::path broken = dir / "broken.kx";
    {
        std::ofstream f(broken);
        f << "kcross instance 1\nk 0\n";
    }
    CHECK(run_cli_command("count --instance '" + broken.string() + "'" + redirect) == 2);

    fs::path collinear = dir / "collinear.kx";
    {
        std::ofstream f(collinear);
        f << "kcross instance 1\nk 1\nn 4\npoints\n0 0\n1 1\n2 2\n5 0\n"
             "colors\n1 1 1 1 1 1\nend\n";
    }
    CHECK(run_cli_command("count --instance '" + collinear.string() + "'" + redirect) == 3);
    CHECK(run_cli_command("verify --instance '" + collinear.string() + "'" + redirect) == 3);

    fs::path square = dir / "square.kx";
    {
        std::ofstream f(square);
        serialize_instance(square_instance(), f);
    }
    CHECK(run_cli_command("verify --instance '" + square.string() + "' --t-max 7" +
                          redirect) == 2);
    CHECK(run_cli_command("bound --instance '" + square.string() +
                          "' --use-given-matching" + redirect) == 2);
    CHECK(run_cli_command("count --instance '" + (dir / "missing.kx").string() + "'" +
                          redirect) == 2);
    CHECK(run_cli_command(redirect.substr(1)) == 2);
    CHECK(run_cli_command("count --no-such-flag" + redirect) == 2);

    fs::remove_all(dir);
}
