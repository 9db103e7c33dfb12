// End-to-end tests of the command-line tool. The binary path arrives in the
// GLQ_CLI environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("GLQ_CLI");
    REQUIRE_MESSAGE(p != nullptr, "GLQ_CLI must point at the binary");
    return p;
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string tmp_in = "/tmp/glq_cli_stdin.txt";
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        std::ofstream f(tmp_in);
        f << stdin_text;
        f.close();
        cmd += " < " + tmp_in;
    }
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("field summary") {
    auto r = run("field --q 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("modulus: 1 1 1") != std::string::npos);
    CHECK(r.out.find("0:0 1:0 0:1 1:1") != std::string::npos);
}

TEST_CASE("chi of the identity window via stdin") {
    auto r = run("coset chi -", "0 1 0 / 0 1 0\n1\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eta:   0") != std::string::npos);
    CHECK(r.out.find("chi:   1 1") != std::string::npos);
}

TEST_CASE("chi of the central window has eta = k") {
    write_file("/tmp/glq_zeta.txt", "1 1 1 / 1 1 1\n0 0 1; 0 1 0; 1 0 0\n");
    auto r = run("coset chi /tmp/glq_zeta.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eta:   1") != std::string::npos);
    CHECK(r.out.find("chi:   1 1") != std::string::npos);
}

TEST_CASE("star through both paths agrees and composes zetas") {
    write_file("/tmp/glq_zeta.txt", "1 1 1 / 1 1 1\n0 0 1; 0 1 0; 1 0 0\n");
    auto r = run("coset star /tmp/glq_zeta.txt /tmp/glq_zeta.txt --path both");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eta:   2") != std::string::npos);
}

TEST_CASE("json output feeds back into canon and star") {
    write_file("/tmp/glq_zeta.txt", "1 1 1 / 1 1 1\n0 0 1; 0 1 0; 1 0 0\n");
    auto j = run("coset chi /tmp/glq_zeta.txt --output json");
    CHECK(j.exit_code == 0);
    write_file("/tmp/glq_coset.json", j.out);

    auto canon = run("coset canon /tmp/glq_coset.json");
    CHECK(canon.exit_code == 0);
    CHECK(canon.out.find("0 0 1") != std::string::npos);  // kappa top row

    auto st = run("coset star /tmp/glq_coset.json /tmp/glq_coset.json --path invariant");
    CHECK(st.exit_code == 0);
    CHECK(st.out.find("eta:   2") != std::string::npos);

    auto weight = run("coset weight /tmp/glq_coset.json");
    CHECK(weight.exit_code == 0);
    CHECK(weight.out == "-1\n");

    auto diagram = run("coset diagram /tmp/glq_coset.json");
    CHECK(diagram.exit_code == 0);
    CHECK(diagram.out == "○\n│\n○ ⊘\n");
}

TEST_CASE("coset enumeration counts") {
    auto r = run("coset enum --alpha 0,1 --beta 0,1 --eta-max 0 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4 cosets") != std::string::npos);
}

TEST_CASE("relation calculus round trip") {
    write_file("/tmp/glq_rel.json", R"({"m":1,"n":1,"basis":[["1","1"]]})");
    auto r = run("rel compose /tmp/glq_rel.json /tmp/glq_rel.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("basis: 1 1") != std::string::npos);
    auto inv = run("rel invariants /tmp/glq_rel.json");
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("rk:    1") != std::string::npos);
}

TEST_CASE("colligation transfer and sweep") {
    write_file("/tmp/glq_coll.txt", "1 1\n0 1; 1 0\n");
    auto r = run("colligation transfer /tmp/glq_coll.txt --lambda 2 --q 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
    auto sweep = run("colligation transfer /tmp/glq_coll.txt --sweep --q 3");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.out.find("lambda=0: 0") != std::string::npos);
    CHECK(sweep.out.find("lambda=2: 2") != std::string::npos);

    auto circ = run("colligation circ /tmp/glq_coll.txt /tmp/glq_coll.txt --q 3");
    CHECK(circ.exit_code == 0);
    CHECK(circ.out.find("1 2") != std::string::npos);
}

TEST_CASE("verify subcommands and the empty selector") {
    auto r = run("verify completeness --q 2 --sizes 1,1,1,1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("orbits=6") != std::string::npos);

    auto vacuous = run("verify");
    CHECK(vacuous.exit_code == 0);

    auto small = run("verify all --q 2 --trials 20 --seed 7");
    CHECK(small.exit_code == 0);
    CHECK(small.out.find("FAIL") == std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
    auto a = run("verify well-defined --q 3 --trials 20 --seed 42 --output json");
    auto b = run("verify well-defined --q 3 --trials 20 --seed 42 --output json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    // parse error: malformed window
    auto bad = run("coset chi -", "garbage\n");
    CHECK(bad.exit_code == 2);
    // validation: non-prime characteristic
    auto nonprime = run("field --p 6");
    CHECK(nonprime.exit_code == 2);
    // domain: singular window matrix
    auto singular = run("coset chi -", "0 2 0 / 0 2 0\n1 1; 1 1\n");
    CHECK(singular.exit_code == 3);
    // domain: non-composable star operands
    write_file("/tmp/glq_w1.txt", "0 1 0 / 0 1 0\n1\n");
    write_file("/tmp/glq_w2.txt", "0 2 0 / 0 2 0\n1 0; 0 1\n");
    auto noncomp = run("coset star /tmp/glq_w1.txt /tmp/glq_w2.txt");
    CHECK(noncomp.exit_code == 3);
    // domain: oversized brute force
    auto toolarge = run("verify completeness --q 3 --sizes 1,2,1,1,2,1");
    CHECK(toolarge.exit_code == 3);
    // unknown flag rejected
    auto unknown = run("field --frobnicate");
    CHECK(unknown.exit_code == 2);
}
