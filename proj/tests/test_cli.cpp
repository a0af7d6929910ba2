#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "maxlor/io.hpp"

using namespace maxlor;

namespace {
const std::string cli = MAXLOR_CLI;

std::string run(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = popen(("env -u MAXLOR_TOL " + cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int rc = pclose(f);
    status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}
}  // namespace

TEST_CASE("cli pipeline") {
    int st = -1;
    auto out = run(cli + " gen-pattern 4 4 0.2 | " + cli + " lift | " + cli + " dualize | " + cli + " verify --suite dual",
                   st);
    CHECK(st == 0);
    auto d = parse_document(out);
    CHECK(d.kind == "report");
    CHECK(d.payload.at("pass").get<bool>());

    run(cli + " gen-pattern 4 4 0.3", st);
    CHECK(st == 1);
}

TEST_CASE("cli xinvariance on a deformed pattern") {
    int st = -1;
    auto out = run(cli + " gen-pattern --rows 6 --cols 6 --spacing 0.12 --mobius 0.2,0.1,0.3 | " + cli +
                       " verify --suite xinvariance --phi-grid 16",
                   st);
    CHECK(st == 0);
    auto d = parse_document(out);
    for (const auto& c : d.payload.at("suites")[0].at("checks"))
        if (c.at("name") == "phi_invariance") CHECK(c.at("value").get<double>() < 1e-8);
}

TEST_CASE("cli reports a corrupted net as not closed") {
    int st = -1;
    auto koebe = parse_document(run(cli + " gen-pattern 6 6 0.12 | " + cli + " lift", st));
    REQUIRE(st == 0);
    koebe.payload["white"][7]["center"][0] = koebe.payload["white"][7]["center"][0].get<double>() + 0.01;
    write_text("cli_corrupted.json", emit(koebe));
    auto out = run(cli + " dualize cli_corrupted.json", st);
    CHECK(st == 1);
    auto rep = parse_document(out);
    CHECK(rep.payload.at("error") == "NotClosed");
    CHECK(rep.payload.at("residual").get<double>() > rep.payload.at("threshold").get<double>());
    std::remove("cli_corrupted.json");
}

TEST_CASE("cli input errors exit 2") {
    int st = -1;
    run(cli + " lift /nonexistent.json", st);
    CHECK(st == 2);
    run("echo '{\"x\": 1}' | " + cli + " lift", st);
    CHECK(st == 2);
    run(cli + " verify --suite nope", st);
    CHECK(st == 2);
    run("MAXLOR_TOL=abc " + cli + " gen-pattern 4 4 0.2 | MAXLOR_TOL=abc " + cli + " verify", st);
    CHECK(st == 2);
}

TEST_CASE("cli tolerance override") {
    int st = -1;
    run(cli + " gen-pattern 4 4 0.2 | MAXLOR_TOL=1e-30 " + cli + " verify --suite lift", st);
    CHECK(st == 1);
    run(cli + " gen-pattern 4 4 0.2 | MAXLOR_TOL=1e-30 " + cli + " verify --suite lift --tol 1e-9", st);
    CHECK(st == 0);
}
