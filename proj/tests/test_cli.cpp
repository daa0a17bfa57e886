#include "dimerlab/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace dimerlab;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli count") {
    Run r = run_cli({"count", "--family", "hexagon", "--params", "a=2,b=2,c=2"});
    CHECK(r.status == 0);
    CHECK(r.out == "count=20\n");

    r = run_cli({"count", "--family", "aztec", "--params", "kind=diamond,n=4"});
    CHECK(r.out == "count=1024\n");

    r = run_cli({"count", "--family", "aztec", "--params", "kind=window,x=2,w=6", "--factored"});
    CHECK(r.out == "count=314703872 factored=2^17 * 7^4\n");
}

TEST_CASE("cli count from files") {
    TempFile vax("cli_test.vax", "AVA\nVAV\n");
    Run r = run_cli({"count", "--file", vax.path});
    CHECK(r.out == "count=2\n");

    TempFile xreg("cli_test.xreg", "XX\nXX\n");
    r = run_cli({"count", "--file", xreg.path});
    CHECK(r.out == "count=2\n");

    TempFile cells("cli_test.cells",
                   "cell a black\ncell b white\ncell c black\ncell d white\n"
                   "edge a b 2\nedge b c 3\nedge c d 5\nedge d a 7\nface a b c d\n");
    r = run_cli({"count", "--file", cells.path});
    CHECK(r.out == "count=31\n");
}

TEST_CASE("cli is deterministic") {
    for (int i = 0; i < 2; ++i) {
        Run a = run_cli({"sweep", "--family", "triangle", "--params", "n=1", "--range", "3..4"});
        Run b = run_cli({"sweep", "--family", "triangle", "--params", "n=1", "--range", "3..4"});
        CHECK(a.out == b.out);
        CHECK(a.status == b.status);
    }
    Run j1 = run_cli({"sweep", "--family", "cube", "--params", "n=1", "--range", "1..4"});
    Run j2 = run_cli({"sweep", "--family", "cube", "--params", "n=1", "--range", "1..4", "--jobs", "4"});
    CHECK(j1.out == j2.out);
}

TEST_CASE("cli sweep output") {
    Run r = run_cli({"sweep", "--family", "cube", "--params", "n=1", "--range", "1..4"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "n=1 count=1 factored=1 maxprime=0 structure=square\n"
          "n=2 count=2 factored=2 maxprime=2 structure=2^1*odd-square\n"
          "n=3 count=9 factored=3^2 maxprime=3 structure=square\n"
          "n=4 count=272 factored=2^4 * 17 maxprime=17 structure=square*17\n");

    // failures are reported per row and the sweep continues
    Run bad = run_cli({"sweep", "--family", "cube", "--params", "n=1", "--range", "5..6"});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("n=5 count=589185") == 0);
    CHECK(bad.err.find("n=6 error:") != std::string::npos);
}

TEST_CASE("cli tsv format") {
    Run r = run_cli({"count", "--family", "hexagon", "--params", "a=2,b=2,c=2", "--factored",
                 "--format", "tsv"});
    CHECK(r.out == "count=20\tfactored=2^2 * 5\n");
}

TEST_CASE("cli verify") {
    Run r = run_cli({"verify", "aztec-power", "1..5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verify aztec-power: PASS (5/5 instances)") != std::string::npos);

    r = run_cli({"verify", "central-edge-third", "1..2"});
    CHECK(r.status == 0);

    r = run_cli({"verify", "no-such-formula", "1..2"});
    CHECK(r.status != 0);
}

TEST_CASE("cli cokernel, spectrum, probs") {
    Run r = run_cli({"cokernel", "--family", "hexagon", "--params", "a=2,b=2,c=2"});
    CHECK(r.out == "carlitz det=20 cokernel=Z/2 x Z/10\n");

    r = run_cli({"spectrum", "--family", "hexagon", "--params", "a=1,b=1,c=1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("charpoly(K*K^T)=") == 0);

    r = run_cli({"probs", "--family", "aztec", "--params", "kind=diamond,n=1"});
    CHECK(r.status == 0);
    // every edge of the order-1 diamond has probability 1/2
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("1/2 0.5") != std::string::npos);
        ++n;
    }
    CHECK(n == 4);
}

TEST_CASE("cli gessel and invsum and factor") {
    Run r = run_cli({"gessel", "2", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "gessel 2x4: EQUAL\nschur-specialization 2x4: EQUAL\n");

    r = run_cli({"invsum", "3"});
    CHECK(r.out == "n=3 sum=4 formula=4 MATCH\n");

    r = run_cli({"factor", "589185"});
    CHECK(r.out.find("589185 = 3^2 * 5 * 13093") == 0);
}

TEST_CASE("cli rewrite-check") {
    Run r = run_cli({"rewrite-check", "--hosts", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("urban-renewal 5/5 exact") != std::string::npos);
    CHECK(r.out.find("kenyon-move 5/5 exact") != std::string::npos);
}

TEST_CASE("cli error paths") {
    Run r = run_cli({"count"});
    CHECK(r.status != 0);
    r = run_cli({"count", "--family", "nope", "--params", "n=1"});
    CHECK(r.status != 0);
    r = run_cli({"count", "--file", "/nonexistent/file.vax"});
    CHECK(r.status != 0);
    TempFile badvax("cli_bad.vax", "AZ\n");
    r = run_cli({"count", "--file", badvax.path});
    CHECK(r.status != 0);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli method override") {
    for (const char* m : {"det", "pfaffian", "brute"}) {
        Run r = run_cli({"count", "--family", "hexagon", "--params", "a=2,b=2,c=2", "--method", m});
        CHECK(r.out == "count=20\n");
    }
    // forcing the permanent onto a non-bipartite graph is an error
    Run r = run_cli({"count", "--family", "triangle", "--params", "n=4", "--method", "permanent"});
    CHECK(r.status != 0);
}

TEST_CASE("cli moments") {
    Run r = run_cli({"moments", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("vertical=0 horizontal=1") != std::string::npos);
}
