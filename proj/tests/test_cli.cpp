#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli_runner.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        out.push_back(tok);
    return out;
}

} // namespace

TEST_CASE("identical configs produce byte-identical output") {
    const std::vector<std::string> commands = {
        "basis --n 5",
        "evolve --n 5 --steps 7",
        "evolve --n 4 --t 2.5 --omega0 1.7",
        "commutator --n 6 --variant classic",
        "commutator --n 6 --variant cyclotomic --format json",
        "uncertainty --n 3,15,1001",
        "ramanujan --n 12",
        "superposition --n 6 --seed 9 --format json",
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd);
        const auto first = run_cli(cmd);
        const auto second = run_cli(cmd);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("golden output: basis --n 2") {
    const auto result = run_cli("basis --n 2");
    CHECK(result.exit_code == 0);
    const std::string expected =
        "k,n,coefficient,scale,embed_re,embed_im\n"
        "0,0,1,1/sqrt(2),0.70710678118654757,0\n"
        "0,1,1,1/sqrt(2),0.70710678118654757,0\n"
        "1,0,1,1/sqrt(2),0.70710678118654757,0\n"
        "1,1,-1,1/sqrt(2),-0.70710678118654757,0\n"
        "# rows=4\n";
    CHECK(result.output == expected);
}

TEST_CASE("golden output: basis --n 1 (degenerate clock)") {
    const auto result = run_cli("basis --n 1");
    CHECK(result.exit_code == 0);
    const std::string expected =
        "k,n,coefficient,scale,embed_re,embed_im\n"
        "0,0,1,1/sqrt(1),1,0\n"
        "# rows=1\n";
    CHECK(result.output == expected);
}

TEST_CASE("exit code contract") {
    // 0: all comparisons pass
    CHECK(run_cli("commutator --n 5").exit_code == 0);
    CHECK(run_cli("ramanujan --n 30").exit_code == 0);
    CHECK(run_cli("superposition --n 4 --seed 1").exit_code == 0);
    // 1: comparison failure (float pipelines cannot meet 1e-30)
    CHECK(run_cli("commutator --n 5 --tolerance 1e-30").exit_code == 1);
    CHECK(run_cli("superposition --n 6 --seed 2 --tolerance 1e-30").exit_code == 1);
    // 2: usage / config errors
    CHECK(run_cli("basis --n 4 --convention symmetric").exit_code == 2);
    CHECK(run_cli("basis").exit_code == 2);
    CHECK(run_cli("evolve --n 3").exit_code == 2);
    CHECK(run_cli("evolve --n 3 --steps 2 --t 1.0").exit_code == 2);
    CHECK(run_cli("nonsense --n 3").exit_code == 2);
    CHECK(run_cli("basis --n 3 --format yaml").exit_code == 2);
    CHECK(run_cli("superposition --n 4 --coeffs 1,0,1,0,0,0,0,0").exit_code == 2);
    CHECK(run_cli("superposition --n 4 --coeffs 1,0").exit_code == 2);
    CHECK(run_cli("ramanujan --n 6 --m-range 5..1").exit_code == 2);
    CHECK(run_cli("uncertainty --n 0").exit_code == 2);
    CHECK(run_cli("uncertainty --n 4 --convention symmetric").exit_code == 2);
    CHECK(run_cli("basis --n 3 --k 5").exit_code == 2);
}

TEST_CASE("csv and json carry the same rows and values") {
    const auto csv = run_cli("commutator --n 3");
    const auto json = run_cli("commutator --n 3 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);

    const auto lines = split(csv.output, '\n');
    REQUIRE(lines.size() > 2);
    const auto header = split(lines[0], ',');
    std::size_t rows_checked = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#')
            continue;
        const auto cells = split(lines[i], ',');
        REQUIRE(cells.size() == header.size());
        // the JSON row object carries the same tokens (shared formatter);
        // every commutator column is numeric or boolean, so tokens match raw
        std::string fragment = "{";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            fragment += c ? ", " : "";
            fragment += "\"" + header[c] + "\": " + cells[c];
        }
        fragment += "}";
        CAPTURE(fragment);
        CHECK(json.output.find(fragment) != std::string::npos);
        ++rows_checked;
    }
    CHECK(rows_checked == 9);

    // summary values match between the two formats
    CHECK(csv.output.find("# exact_equal=true") != std::string::npos);
    CHECK(json.output.find("\"exact_equal\": true") != std::string::npos);
    CHECK(csv.output.find("# uv_phase_relation_exact=true") != std::string::npos);
    CHECK(json.output.find("\"uv_phase_relation_exact\": true") != std::string::npos);
    CHECK(csv.output.find("# uv_literal_equality=false") != std::string::npos);
    CHECK(json.output.find("\"uv_literal_equality\": false") != std::string::npos);
}

TEST_CASE("--output writes the same bytes as stdout") {
    const std::string path = "cli_output_test.csv";
    const auto direct = run_cli("ramanujan --n 9");
    const auto to_file = run_cli("ramanujan --n 9 --output " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == direct.output);
    file.close();
    std::remove(path.c_str());
}

TEST_CASE("reference values through the CLI") {
    // n=5, steps=7, start k=0: final pointer index 2
    const auto evolve = run_cli("evolve --n 5 --steps 7");
    CHECK(evolve.output.find("# final_index=2") != std::string::npos);

    // t=0 with uniform amplitudes: overlap with v_0 is 1 within 1e-12
    const auto at_zero = run_cli("evolve --n 6 --t 0");
    const auto first_row = split(split(at_zero.output, '\n')[1], ',');
    CHECK(first_row[0] == "0");
    CHECK(std::stod(first_row[1]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at_zero.output.find("# max_overlap_k=0") != std::string::npos);

    // n=4, t=2 tau: overlap with v_2 is 1 within 1e-10
    const auto two_tau = run_cli("evolve --n 4 --t 2");
    CHECK(two_tau.output.find("# max_overlap_k=2") != std::string::npos);
    CHECK(two_tau.output.find("2,1\n") != std::string::npos);

    // ramanujan n=6: the recomputed Hoelder row (2, 1, -1, -2, -1, 1)
    const auto ram = run_cli("ramanujan --n 6");
    CHECK(ram.exit_code == 0);
    const long long expected_c[] = {2, 1, -1, -2, -1, 1};
    const auto lines = split(ram.output, '\n');
    for (long long m = 0; m < 6; ++m) {
        const auto cells = split(lines[static_cast<std::size_t>(m) + 1], ',');
        CHECK(std::stoll(cells[1]) == expected_c[m]);
    }
    CHECK(ram.output.find("# identities_exact=true") != std::string::npos);

    // uncertainty: N=1001 lands within 1% of pi/sqrt(3) under both conventions
    const auto unc = run_cli("uncertainty --n 1001 --format json");
    CHECK(unc.output.find("\"convention\": \"zero-based\"") != std::string::npos);
    CHECK(unc.output.find("\"convention\": \"symmetric\"") != std::string::npos);
    CHECK(unc.output.find("\"mean_h\": 0,") != std::string::npos);
    CHECK(unc.output.find("\"max_rel_error\": 4.9900162251223509e-07") != std::string::npos);

    // N=3 symmetric: delta_h = (2 pi/3) sqrt(2/3) ~ 1.710
    const auto unc3 = run_cli("uncertainty --n 3 --convention symmetric");
    CHECK(unc3.output.find("3,symmetric,0,1.7100664402158186,") != std::string::npos);

    // basis: the zeta_3 coefficient and its embedding at n=3, k=1, slot 2
    const auto basis3 = run_cli("basis --n 3 --k 1");
    CHECK(basis3.output.find("1,2,z,1/sqrt(3),-0.28867513459481275,0.5") != std::string::npos);

    // ramanujan n=1: the single trivial row, identity vacuously true
    const auto ram1 = run_cli("ramanujan --n 1");
    CHECK(ram1.exit_code == 0);
    CHECK(ram1.output.find("0,1,1,0,0,0,0,true") != std::string::npos);

    // symmetric-convention stepping reports the global phase via exact=false
    const auto sym_step = run_cli("evolve --n 5 --convention symmetric --steps 1");
    CHECK(sym_step.exit_code == 0);
    CHECK(sym_step.output.find("0,0,true") != std::string::npos);
    CHECK(sym_step.output.find("1,1,false") != std::string::npos);
}
