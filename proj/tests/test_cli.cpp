#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tritile/commands.hpp"

using namespace tritile;

namespace {

std::string tmp_path(const char* name) {
    return std::string("cli_test_") + name;
}

GenerateOptions base_gen(const std::string& family) {
    GenerateOptions o;
    o.family = family;
    o.a = 3;
    o.b = 5;
    o.c = 7;
    return o;
}

}  // namespace

TEST_CASE("generate equilateral writes a verified document") {
    GenerateOptions o = base_gen("equilateral");
    o.rst = {3, 3, 3};
    o.out_path = tmp_path("eq.json");
    std::ostringstream out, err;
    int rc = cmd_generate(o, out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str() ==
          "equilateral shape=3,5,7 variant=obtuse120 params=rst=3,3,3 N=1215 verified=yes\n");
    TilingDocument doc = read_document_file(o.out_path);
    CHECK(doc.tiling.claimed_count == 1215);
    std::remove(o.out_path.c_str());
}

TEST_CASE("generate option-2 arithmetic") {
    GenerateOptions o = base_gen("arithmetic");
    o.m = 1;
    o.option = 2;
    o.out_path = tmp_path("a2.json");
    std::ostringstream out, err;
    int rc = cmd_generate(o, out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str().find("N=3575 verified=yes") != std::string::npos);
    std::remove(o.out_path.c_str());
}

TEST_CASE("generate rejects bad trapezoid parameters with the precondition named") {
    GenerateOptions o = base_gen("trapezoid");
    o.x = 42;
    o.ell = 10;
    std::ostringstream out, err;
    int rc = cmd_generate(o, out, err);
    CHECK(rc == kExitNotConstructible);
    CHECK(err.str().find("(ab) must divide ell") != std::string::npos);
}

TEST_CASE("verify round trip and mutation") {
    GenerateOptions o = base_gen("parallelogram");
    o.horiz = 8;
    o.out_path = tmp_path("para.json");
    std::ostringstream out, err;
    REQUIRE(cmd_generate(o, out, err) == kExitOk);

    std::ostringstream vout, verr;
    CHECK(cmd_verify(o.out_path, vout, verr) == kExitOk);
    CHECK(vout.str() == "tiles=16 passed=yes\n");

    // tamper: shift one placement by 1 in x
    TilingDocument doc = read_document_file(o.out_path);
    doc.tiling.placements[3].iso.tx += QS3(1);
    std::string bad_path = tmp_path("para_bad.json");
    write_document_file(doc, bad_path);
    std::ostringstream bout, berr;
    CHECK(cmd_verify(bad_path, bout, berr) == kExitVerifyFailed);
    CHECK(bout.str().find("passed=no") != std::string::npos);
    bool mentions = bout.str().find("Overlap") != std::string::npos ||
                    bout.str().find("OutsideTarget") != std::string::npos;
    CHECK(mentions);

    std::ostringstream pout, perr;
    CHECK(cmd_verify("no_such_file.json", pout, perr) == kExitParse);

    // truncated file parses with exit 4
    std::ifstream in(o.out_path);
    std::stringstream half;
    half << in.rdbuf();
    std::string text = half.str().substr(0, half.str().size() / 3);
    std::ofstream trunc(tmp_path("trunc.json"));
    trunc << text;
    trunc.close();
    std::ostringstream tout, terr;
    CHECK(cmd_verify(tmp_path("trunc.json"), tout, terr) == kExitParse);

    std::remove(o.out_path.c_str());
    std::remove(bad_path.c_str());
    std::remove(tmp_path("trunc.json").c_str());
}

TEST_CASE("render produces byte-identical svg across runs") {
    GenerateOptions o = base_gen("parallelogram");
    o.horiz = 3;
    o.out_path = tmp_path("r.json");
    std::ostringstream out, err;
    REQUIRE(cmd_generate(o, out, err) == kExitOk);
    std::string svg1 = tmp_path("r1.svg"), svg2 = tmp_path("r2.svg");
    std::ostringstream r1, r2, e1, e2;
    CHECK(cmd_render(o.out_path, svg1, 9, false, r1, e1) == kExitOk);
    CHECK(cmd_render(o.out_path, svg2, 9, false, r2, e2) == kExitOk);
    std::ifstream f1(svg1), f2(svg2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().find("<polygon") != std::string::npos);
    std::remove(o.out_path.c_str());
    std::remove(svg1.c_str());
    std::remove(svg2.c_str());
}

TEST_CASE("table golden output") {
    std::ostringstream out, err;
    int rc = cmd_table(3, 5, 7, TileVariant::Obtuse120, std::nullopt, false, out, err);
    CHECK(rc == kExitOk);
    std::string golden =
        "tile (3,5,7) obtuse120\n"
        "name             angles           law                          smallest N\n"
        "equilateral      (a+b, a+b, a+b)  N = 15 m^2, m >= 9           1215\n"
        "isosceles-beta   (b, b, pi-2b)    N = 33 m^2, m >= 9           2673\n"
        "isosceles-alpha  (a, a, pi-2a)    N = 65 m^2, m >= 9           5265\n"
        "arith2-alpha     (a, a+b, a+2b)   N = 40 m^2, m >= 9           3240\n"
        "arith2-beta      (b, a+b, 2a+b)   N = 24 m^2, m >= 9           1944\n"
        "odd-alpha        (a, 2b, 2a+b)    N = 88 m^2, m >= 9           7128\n"
        "odd-beta         (b, 2a, a+2b)    N = 104 m^2, m >= 9          8424\n"
        "arithmetic       (2b, 2a, a+b)    N = 143 m^2, m in 5N0 + 7N0  3575\n"
        "triple-alpha     (a, 2a, pi-3a)   N = 312 m^2, m in 5N0 + 7N0  7800\n"
        "triple-beta      (b, 2b, pi-3b)   N = 264 m^2, m in 5N0 + 7N0  6600\n";
    CHECK(out.str() == golden);
}

TEST_CASE("table csv and acute row") {
    std::ostringstream out, err;
    int rc = cmd_table(5, 8, 7, TileVariant::Acute60, std::nullopt, true, out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str() ==
          "family,angles,coefficient,m_set,smallest_N\n"
          "equilateral-acute,\"(a+b, a+b, a+b)\",40,\"m >= 6\",1440\n");
    std::ostringstream bad_out, bad_err;
    CHECK(cmd_table(3, 5, 8, TileVariant::Obtuse120, std::nullopt, false, bad_out, bad_err) ==
          kExitNotConstructible);
}

TEST_CASE("table with limit lists family values") {
    std::ostringstream out, err;
    int rc = cmd_table(3, 5, 7, TileVariant::Obtuse120, 8000, false, out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str().find("arithmetic       3575 7007\n") != std::string::npos);
}

TEST_CASE("search command statuses and exit codes") {
    SearchOptions o;
    o.a = 3;
    o.b = 5;
    o.c = 7;
    o.parallelogram = {3, 5};
    o.budget.max_tiles = 4;
    o.budget.max_nodes = 100000;
    std::ostringstream out, err;
    CHECK(cmd_search(o, out, err) == kExitOk);
    CHECK(out.str().find("status=Found nodes=") != std::string::npos);
    CHECK(out.str().find("tiles=2") != std::string::npos);

    SearchOptions none = o;
    none.parallelogram.reset();
    none.equilateral = 15;
    none.budget.max_tiles = 15;
    none.budget.max_nodes = 100000000;
    std::ostringstream nout, nerr;
    CHECK(cmd_search(none, nout, nerr) == kExitOk);
    CHECK(nout.str().find("status=ExhaustedNone") != std::string::npos);

    SearchOptions tight = none;
    tight.budget.max_nodes = 2;
    std::ostringstream tout, terr;
    CHECK(cmd_search(tight, tout, terr) == kExitBudget);
    CHECK(tout.str().find("status=BudgetExceeded") != std::string::npos);
}

#ifdef TRITILE_BIN
TEST_CASE("binary end to end") {
    std::string bin = TRITILE_BIN;
    std::string cmd = bin + " table --tile 3,5,7 > cli_bin_table.txt 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f("cli_bin_table.txt");
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("1215") != std::string::npos);
    CHECK(ss.str().find("6600") != std::string::npos);
    std::remove("cli_bin_table.txt");

    std::string gen = bin +
                      " generate trapezoid --tile 3,5,7 --x 42 --ell 10 -o cli_bin_t.json "
                      "2>/dev/null >/dev/null";
    int rc = std::system(gen.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}
#endif
