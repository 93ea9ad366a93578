// tritile: construct, verify, render and search triangle tilings whose
// tile is an integer-sided triangle with a 2pi/3 (or pi/3) angle.

#include <array>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tritile/commands.hpp"

namespace {

struct TileArgs {
    std::vector<long> tile;
    std::string variant = "obtuse120";
};

void add_tile_options(CLI::App* cmd, TileArgs& args) {
    cmd->add_option("--tile", args.tile, "tile sides a,b,c")->required()->delimiter(',')
        ->expected(3);
    cmd->add_option("--variant", args.variant, "obtuse120 (default) or acute60")
        ->check(CLI::IsMember({"obtuse120", "acute60"}));
}

tritile::TileVariant parse_variant(const std::string& v) {
    return v == "acute60" ? tritile::TileVariant::Acute60 : tritile::TileVariant::Obtuse120;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle tilings into congruent 2pi/3 (or pi/3) tiles"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a verified construction as a tiling file");
    TileArgs gen_tile;
    add_tile_options(gen, gen_tile);
    std::string family;
    gen->add_option("family", family,
                    "equilateral|isosceles|arith2|odd|arithmetic|arith-frob|triple|trapezoid|"
                    "parallelogram")
        ->required();
    std::vector<long> rst;
    long m = 0, k = 0, k1 = 0, x = 0, ell = 0, horiz = 0;
    bool swap = false;
    int option = 2;
    std::string gen_out = "tiling.json";
    auto* rst_opt = gen->add_option("--rst", rst, "equilateral pinwheel parts r,s,t")
                        ->delimiter(',')->expected(3);
    auto* m_opt = gen->add_option("--m", m, "multiplier m");
    auto* k_opt = gen->add_option("--k", k, "Frobenius part k (count of b-scaled pieces)");
    auto* k1_opt = gen->add_option("--k1", k1, "Frobenius part k1 (count of c-scaled pieces)");
    auto* x_opt = gen->add_option("--x", x, "ideal trapezoid short side");
    auto* ell_opt = gen->add_option("--ell", ell, "ideal trapezoid lateral side");
    auto* horiz_opt = gen->add_option("--horiz", horiz, "parallelogram horizontal side");
    gen->add_flag("--swap", swap, "exchange the roles of a and b");
    gen->add_option("--option", option, "arithmetic option 1 or 2")->check(CLI::Range(1, 2));
    gen->add_option("-o,--out", gen_out, "output tiling file (default tiling.json)");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a tiling file");
    std::string ver_path;
    ver->add_option("file", ver_path, "tiling file")->required();

    // render
    auto* ren = app.add_subcommand("render", "render a tiling file to SVG");
    std::string ren_path, ren_out = "tiling.svg";
    int digits = 9;
    bool force = false;
    ren->add_option("file", ren_path, "tiling file")->required();
    ren->add_option("-o,--out", ren_out, "output SVG file (default tiling.svg)");
    ren->add_option("--digits", digits, "fractional digits for coordinates (default 9)")
        ->check(CLI::Range(1, 40));
    ren->add_flag("--force", force, "render even if verification fails");

    // table
    auto* tab = app.add_subcommand("table", "emit the family table for a tile");
    TileArgs tab_tile;
    add_tile_options(tab, tab_tile);
    long limit = 0;
    bool csv = false;
    auto* limit_opt = tab->add_option("--limit", limit, "also list all N values up to the limit");
    tab->add_flag("--csv", csv, "emit CSV instead of aligned text");

    // search
    auto* sea = app.add_subcommand("search", "bounded exhaustive search for a tiling");
    TileArgs sea_tile;
    add_tile_options(sea, sea_tile);
    long eq_side = 0;
    std::vector<long> trap, para, tri;
    long max_tiles = 100;
    std::uint64_t max_nodes = 1000000;
    double time_limit = 3600.0;
    std::string sea_out;
    auto* eq_opt = sea->add_option("--equilateral", eq_side, "equilateral region side");
    auto* trap_opt = sea->add_option("--trapezoid", trap, "ideal trapezoid region x,ell")
                         ->delimiter(',')->expected(2);
    auto* para_opt = sea->add_option("--parallelogram", para, "parallelogram region horiz,slant")
                         ->delimiter(',')->expected(2);
    auto* tri_opt = sea->add_option("--triangle", tri, "triangle region sides p,q,r")
                        ->delimiter(',')->expected(3);
    sea->add_option("--max-tiles", max_tiles, "tile budget (default 100)");
    sea->add_option("--max-nodes", max_nodes, "node budget (default 1e6)");
    sea->add_option("--time-limit", time_limit, "seconds (default 3600)");
    sea->add_option("-o,--out", sea_out, "write the found tiling here");

    CLI11_PARSE(app, argc, argv);

    using namespace tritile;
    if (gen->parsed()) {
        GenerateOptions o;
        o.family = family;
        o.a = gen_tile.tile[0];
        o.b = gen_tile.tile[1];
        o.c = gen_tile.tile[2];
        o.variant = parse_variant(gen_tile.variant);
        if (*rst_opt) o.rst = std::array<long, 3>{rst[0], rst[1], rst[2]};
        if (*m_opt) o.m = m;
        if (*k_opt) o.k = k;
        if (*k1_opt) o.k1 = k1;
        if (*x_opt) o.x = x;
        if (*ell_opt) o.ell = ell;
        if (*horiz_opt) o.horiz = horiz;
        o.swap = swap;
        o.option = option;
        o.out_path = gen_out;
        return cmd_generate(o, std::cout, std::cerr);
    }
    if (ver->parsed()) return cmd_verify(ver_path, std::cout, std::cerr);
    if (ren->parsed()) return cmd_render(ren_path, ren_out, digits, force, std::cout, std::cerr);
    if (tab->parsed()) {
        std::optional<long> lim;
        if (*limit_opt) lim = limit;
        return cmd_table(tab_tile.tile[0], tab_tile.tile[1], tab_tile.tile[2],
                         parse_variant(tab_tile.variant), lim, csv, std::cout, std::cerr);
    }
    if (sea->parsed()) {
        SearchOptions o;
        o.a = sea_tile.tile[0];
        o.b = sea_tile.tile[1];
        o.c = sea_tile.tile[2];
        o.variant = parse_variant(sea_tile.variant);
        if (*eq_opt) o.equilateral = eq_side;
        if (*trap_opt) o.trapezoid = std::array<long, 2>{trap[0], trap[1]};
        if (*para_opt) o.parallelogram = std::array<long, 2>{para[0], para[1]};
        if (*tri_opt) o.triangle = std::array<long, 3>{tri[0], tri[1], tri[2]};
        o.budget.max_tiles = max_tiles;
        o.budget.max_nodes = max_nodes;
        o.budget.time_limit_seconds = time_limit;
        o.out_path = sea_out;
        return cmd_search(o, std::cout, std::cerr);
    }
    return 0;
}
