#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli_app.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "twinsieve");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = twinsieve::cli::cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : row) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

constexpr const char* kCsvHeader =
    "j,k_max,a,gamma,b_oracle,b_exact,b_ie_repaired,b_ie_printed,b_mobius_printed,"
    "psi_oracle,psi_ie,pi_oracle,pi_via_identity,xi_oracle";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("counts --j 0: every output format byte for byte") {
    const CliResult js = run_cli({"counts", "--j", "0"});
    CHECK(js.code == 0);
    CHECK(js.err.empty());
    CHECK(js.out ==
          "{\"j\":0,\"k_max\":11,\"a\":8,\"gamma\":4,\"b_oracle\":1,\"b_exact\":1,"
          "\"b_ie_repaired\":1,\"b_ie_printed\":3,\"b_mobius_printed\":3,\"psi_oracle\":0,"
          "\"psi_ie\":0,\"pi_oracle\":3,\"pi_via_identity\":3,\"xi_oracle\":1}\n");

    const CliResult csv = run_cli({"counts", "--j", "0", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == std::string(kCsvHeader) + "\n0,11,8,4,1,1,1,3,3,0,0,3,3,1\n");

    const CliResult txt = run_cli({"counts", "--j", "0", "--format", "text"});
    CHECK(txt.code == 0);
    CHECK(txt.out ==
          "j=0 k_max=11 a=8 gamma=4 b_oracle=1 b_exact=1 b_ie_repaired=1 b_ie_printed=3 "
          "b_mobius_printed=3 psi_oracle=0 psi_ie=0 pi_oracle=3 pi_via_identity=3 xi_oracle=1\n");
  }

  TEST_CASE("counts --j 41: frozen scan values, guarded fields behave") {
    const CliResult r = run_cli({"counts", "--j", "41"});
    REQUIRE(r.code == 0);
    const nlohmann::json o = nlohmann::json::parse(r.out);
    CHECK(o.at("j") == 41);
    CHECK(o.at("k_max") == 3783);
    CHECK(o.at("a") == 2522);
    CHECK(o.at("gamma") == 1261);
    CHECK(o.at("b_oracle") == 1564);
    CHECK(o.at("b_exact") == 1564);
    CHECK(o.at("b_ie_repaired") == 1564);
    CHECK(o.at("psi_oracle") == 473);
    CHECK(o.at("pi_oracle") == 170);
    CHECK(o.at("pi_via_identity") == 170);
    CHECK(o.at("xi_oracle") == 618);
    // 22 working primes: the literal floor enumeration still fits its term
    // budget, but the 3^N pair formula is past the default guard of 12.
    CHECK(o.at("b_ie_printed").is_number());
    CHECK(o.at("b_mobius_printed").is_number());
    CHECK(o.at("psi_ie").is_null());
  }

  TEST_CASE("counts --j 46: refused formula cells are empty, not guessed") {
    const CliResult js = run_cli({"counts", "--j", "46"});
    REQUIRE(js.code == 0);
    const nlohmann::json o = nlohmann::json::parse(js.out);
    // 24 working primes: 2^25 - 2 literal terms exceed the default budget.
    CHECK(o.at("b_ie_printed").is_null());
    CHECK(o.at("psi_ie").is_null());
    CHECK(o.at("b_mobius_printed").is_number());
    CHECK(o.at("b_exact") == o.at("b_oracle"));
    CHECK(o.at("b_ie_repaired") == o.at("b_oracle"));
    CHECK(o.at("pi_via_identity") == o.at("pi_oracle"));

    const CliResult csv = run_cli({"counts", "--j", "46", "--format", "csv"});
    REQUIRE(csv.code == 0);
    const std::vector<std::string> lines = lines_of(csv.out);
    REQUIRE(lines.size() == 2);
    const std::vector<std::string> cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 14);
    CHECK(cells[7].empty());   // b_ie_printed
    CHECK(cells[10].empty());  // psi_ie
    CHECK(!cells[8].empty());  // b_mobius_printed
    for (std::size_t i : {std::size_t(0), std::size_t(4), std::size_t(13)}) CHECK(!cells[i].empty());
  }

  TEST_CASE("counts --range: one frozen row per j, formulas track the scans") {
    const CliResult r = run_cli({"counts", "--range", "0..5", "--format", "csv"});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == kCsvHeader);
    const long frozen[6][8] = {
        // j, k_max, a, gamma, b, pi, psi, xi
        {0, 11, 8, 4, 1, 3, 0, 1},    {1, 23, 16, 8, 3, 5, 0, 3},
        {2, 39, 26, 13, 6, 7, 0, 6},  {3, 59, 40, 20, 12, 9, 1, 10},
        {4, 83, 56, 28, 19, 11, 2, 15}, {5, 111, 74, 37, 28, 14, 5, 18}};
    for (int i = 0; i < 6; ++i) {
      const std::vector<std::string> c = split_csv(lines[i + 1]);
      REQUIRE(c.size() == 14);
      CHECK(std::stol(c[0]) == frozen[i][0]);
      CHECK(std::stol(c[1]) == frozen[i][1]);
      CHECK(std::stol(c[2]) == frozen[i][2]);
      CHECK(std::stol(c[3]) == frozen[i][3]);
      CHECK(std::stol(c[4]) == frozen[i][4]);   // b_oracle
      CHECK(c[5] == c[4]);                      // b_exact
      CHECK(c[6] == c[4]);                      // b_ie_repaired
      CHECK(!c[7].empty());
      CHECK(!c[8].empty());
      CHECK(std::stol(c[9]) == frozen[i][6]);   // psi_oracle
      CHECK(c[10] == c[9]);                     // psi_ie (within guard here)
      CHECK(std::stol(c[11]) == frozen[i][5]);  // pi_oracle
      CHECK(c[12] == c[11]);                    // pi_via_identity
      CHECK(std::stol(c[13]) == frozen[i][7]);  // xi_oracle
    }
  }

  TEST_CASE("counts: the thread cap never changes the bytes") {
    const CliResult one = run_cli({"counts", "--range", "0..10", "--threads", "1", "--format", "csv"});
    const CliResult four = run_cli({"counts", "--range", "0..10", "--threads", "4", "--format", "csv"});
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);
  }

  TEST_CASE("crt: frozen solutions in both formats") {
    const CliResult a = run_cli({"crt", "--k1", "1", "--k2", "2"});
    CHECK(a.code == 0);
    CHECK(a.out ==
          "{\"k1\":[1],\"k2\":[2],\"p1\":5,\"p2\":7,\"y0\":5,\"modulus\":210,"
          "\"case\":\"first_pair_excluded\",\"x0\":106,\"mirror\":203}\n");

    const CliResult b = run_cli({"crt", "--k1", "1,2", "--k2", "3"});
    CHECK(b.code == 0);
    CHECK(b.out ==
          "{\"k1\":[1,2],\"k2\":[3],\"p1\":35,\"p2\":11,\"y0\":1505,\"modulus\":2310,"
          "\"case\":\"all_solutions\",\"x0\":751,\"mirror\":803}\n");

    const CliResult c = run_cli({"crt", "--k1", "2", "--k2", "3", "--j", "3"});
    CHECK(c.code == 0);
    CHECK(c.out ==
          "{\"k1\":[2],\"k2\":[3],\"p1\":7,\"p2\":11,\"y0\":119,\"modulus\":462,"
          "\"case\":\"all_solutions\",\"x0\":58,\"mirror\":341,\"j\":3,\"z\":1}\n");

    const CliResult t = run_cli({"crt", "--k1", "1", "--k2", "2", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out ==
          "k1=[1]\nk2=[2]\np1=5\np2=7\ny0=5\nmodulus=210\n"
          "case=first_pair_excluded\nx0=106\nmirror=203\n");
  }

  TEST_CASE("series: frozen CSV prefixes") {
    const CliResult e4 = run_cli({"series", "--kind", "E", "--n", "4"});
    CHECK(e4.code == 0);
    CHECK(e4.out == "n,value\n1,0\n2,0.0571428571428571\n3,0.103896103896104\n4,0.145854145854146\n");

    const CliResult m17 = run_cli({"series", "--kind", "M", "--n", "17"});
    REQUIRE(m17.code == 0);
    const std::vector<std::string> m_lines = lines_of(m17.out);
    REQUIRE(m_lines.size() == 18);
    CHECK(m_lines[0] == "n,value");
    CHECK(m_lines[1] == "1,0.000000000000000");
    CHECK(m_lines[16] == "16,0.000000000000000");
    CHECK(m_lines[17] == "17,0.057142857142857");

    const CliResult s10 = run_cli({"series", "--kind", "S", "--n", "10"});
    REQUIRE(s10.code == 0);
    const std::vector<std::string> s_lines = lines_of(s10.out);
    REQUIRE(s_lines.size() == 11);
    CHECK(s_lines[1] == "1,1.000000000000000");
    CHECK(s_lines[2] == "2,0.000000000000000");
    CHECK(s_lines[5] == "5,-1.066666666666667");
    CHECK(s_lines[10] == "10,-0.285714285714286");

    const CliResult sb = run_cli({"series", "--kind", "Sb", "--n", "10", "--b", "6"});
    REQUIRE(sb.code == 0);
    const std::vector<std::string> sb_lines = lines_of(sb.out);
    REQUIRE(sb_lines.size() == 11);
    CHECK(sb_lines[4] == "4,1.000000000000000");
    CHECK(sb_lines[5] == "5,0.600000000000000");
  }

  TEST_CASE("series E: exact window hands off cleanly to the double tail") {
    const CliResult r = run_cli({"series", "--kind", "E", "--n", "70"});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 71);
    double prev = 0.0;
    for (std::size_t i = 2; i <= 70; ++i) {
      const std::vector<std::string> cells = split_csv(lines[i]);
      REQUIRE(cells.size() == 2);
      const double v = std::stod(cells[1]);
      if (!(v > prev && v < 1.0)) FAIL("series E not increasing in (0,1) at row " << i);
      prev = v;
    }
    CHECK(prev > 0.5);
  }

  TEST_CASE("wheel: frozen outputs") {
    const CliResult w6 = run_cli({"wheel", "--primes", "3"});
    CHECK(w6.code == 0);
    CHECK(w6.out == "{\"modulus\":6,\"residues\":[5],\"count\":1,\"symmetry_fixed_point\":5}\n");

    const CliResult w210 = run_cli({"wheel", "--primes", "3,5,7", "--indices"});
    CHECK(w210.code == 0);
    CHECK(w210.out ==
          "{\"modulus\":210,"
          "\"residues\":[11,17,29,41,59,71,101,107,137,149,167,179,191,197,209],"
          "\"index_residues\":[4,7,13,19,28,34,49,52,67,73,82,88,94,97,103],"
          "\"count\":15,\"symmetry_fixed_point\":209}\n");

    const CliResult txt = run_cli({"wheel", "--primes", "3", "--format", "text"});
    CHECK(txt.code == 0);
    CHECK(txt.out == "modulus=6\nresidues=[5]\ncount=1\nsymmetry_fixed_point=5\n");
  }

  TEST_CASE("verify subcommand: suite selection and summary shape") {
    const CliResult r = run_cli({"verify", "--suite", "wheel", "--max-j", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("wheel_210_residues: pass") != std::string::npos);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
    const nlohmann::json o = nlohmann::json::parse(r.out);
    CHECK(o.at("ok") == true);
    CHECK(o.at("suites").contains("wheel"));
    CHECK(!o.at("suites").contains("counts"));
    CHECK(o.at("total_assertions").get<long>() > 0);
  }

  TEST_CASE("version and help exit cleanly") {
    const CliResult v = run_cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == "twinsieve 1.0.0\n");

    const CliResult h = run_cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("counts") != std::string::npos);
    CHECK(h.out.find("wheel") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);                                        // no subcommand
    CHECK(run_cli({"counts", "--j", "1", "--bogus"}).code == 2);         // unknown flag
    CHECK(run_cli({"bogus"}).code == 2);                                 // unknown subcommand
    CHECK(run_cli({"series", "--kind", "X", "--n", "5"}).code == 2);     // bad enum
    CHECK(run_cli({"series", "--kind", "M", "--n", "0"}).code == 2);     // positivity check
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);            // bad suite

    const CliResult neither = run_cli({"counts"});
    CHECK(neither.code == 2);
    CHECK(neither.err == "counts: one of --j or --range is required\n");

    const CliResult both = run_cli({"counts", "--j", "1", "--range", "0..2"});
    CHECK(both.code == 2);
    CHECK(both.err == "counts: pass --j or --range, not both\n");

    const CliResult bad_range = run_cli({"counts", "--range", "3..0"});
    CHECK(bad_range.code == 2);
    CHECK(bad_range.err == "counts: --range expects J0..J1 with J0 <= J1\n");
  }

  TEST_CASE("domain errors from the library exit 2 with a message") {
    const CliResult overlap = run_cli({"crt", "--k1", "1,4", "--k2", "4"});
    CHECK(overlap.code == 2);
    CHECK(overlap.err.rfind("error: ", 0) == 0);
    CHECK(overlap.err.find("disjoint") != std::string::npos);

    for (const char* primes : {"5,7", "3,9", "3,5,5", "3,4"}) {
      const CliResult w = run_cli({"wheel", "--primes", primes});
      if (w.code != 2) FAIL("expected usage exit for --primes " << primes);
      if (w.err.rfind("error: ", 0) != 0) FAIL("missing error prefix for --primes " << primes);
    }
    CHECK(true);
  }

  TEST_CASE("resource refusals exit 3") {
    const CliResult m = run_cli({"series", "--kind", "M", "--n", "134217728"});
    CHECK(m.code == 3);
    CHECK(m.err.rfind("resource refusal: ", 0) == 0);
    CHECK(m.out.empty());
  }
}
