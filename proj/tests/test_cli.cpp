#include "doctest.h"

#include "affinegerm/cli.hpp"
#include "random_jets.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

using namespace ag;
using namespace agtest;

namespace {

constexpr int N = 8;

template <class F>
ErrorKind error_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::DomainError;
}

template <class F>
std::pair<int, int> position_of(F f) {
    try {
        f();
    } catch (const SourceError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

QComplex rand_gaussian() { return rand_rational() + rand_rational() * QComplex::i(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in, "cannot open " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    std::string name, command;
    std::optional<int> order;
};

// Lines "name group sub [order]".
std::vector<GoldenCase> manifest() {
    std::istringstream in(slurp(std::string(AG_GOLDEN_DIR) + "/manifest.txt"));
    std::vector<GoldenCase> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        GoldenCase g;
        std::string group, sub;
        ls >> g.name >> group >> sub;
        g.command = group + " " + sub;
        int n;
        if (ls >> n) g.order = n;
        out.push_back(g);
    }
    return out;
}

int shell(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse examples") {
    Form1 w = parse_form("dx + (3/2)*y^(1/2)*dy", N);
    CHECK(w.a == TransJet(1, N));
    CHECK(w.b == TransJet::power_of_y(QComplex::frac(1, 2), N) * QComplex::frac(3, 2));

    Form1 m2 = parse_form("dy/y^2 + dy/y", N);
    CHECK(m2.a.is_zero());
    CHECK(m2.b == TransJet(LaurentJet::monomial(1, 0, -2, N) + LaurentJet::monomial(1, 0, -1, N)));

    CHECK(error_of([] { parse_form("dx + 0.5*dy", N); }) == ErrorKind::ParseError);
    CHECK(position_of([] { parse_form("dx + 0.5*dy", N); }) == std::pair{1, 6});
    CHECK(error_of([] { parse_function("x^(1/2)", N); }) == ErrorKind::ExponentNotAllowed);
    CHECK(error_of([] { parse_function("(1+y)^(1/2)", N); }) == ErrorKind::ExponentNotAllowed);
    CHECK(error_of([] { parse_function("y^(x)", N); }) == ErrorKind::ExponentNotAllowed);
    CHECK(error_of([] { parse_function("1/x", N); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_function("x^-2", N); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_function("log(x)", N); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_form("dx*dy", N); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_form("x + dx", N); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_function("(1+y", N); }) == ErrorKind::ParseError);
    CHECK(position_of([] { parse_function("1 + $", N, 3); }) == std::pair{3, 5});

    // units may be inverted, y^r times a unit too
    TransJet u = parse_function("2*(1+x*y)^-2", N);
    TransJet v(LaurentJet(1, N) + LaurentJet::monomial(1, 1, 1, N));
    CHECK(u * v * v == TransJet(2, N));
    CHECK(parse_function("y^(1/2)*log(y)^2 / y", N) ==
          TransJet::term(LaurentJet(1, N), QComplex::frac(-1, 2), 2));
    CHECK(parse_function("(1+2*i)*i", N) == TransJet(QComplex(-2) + QComplex::i(), N));

    auto p = parse_polynomial("1 - y^2*z^4", N);
    REQUIRE(p.size() == 5);
    CHECK(p[0] == TransJet(1, N));
    CHECK(p[4] == TransJet(LaurentJet::monomial(-1, 0, 2, N)));
    CHECK(p[1].is_zero());
}

TEST_CASE("printer/parser round trip on 500 generated expressions") {
    for (int k = 0; k < 500; ++k) {
        TransJet f = rand_trans(N) * rand_gaussian() + TransJet(rand_jet(N, 3, 3, 2)) * rand_gaussian();
        if (k % 2 == 0) {
            CAPTURE(print(f));
            CHECK(parse_function(print(f), N) == f);
            CHECK(print(parse_function(print(f), N)) == print(f));
        } else {
            Form1 w(f, rand_trans(N) * rand_gaussian());
            CAPTURE(print(w));
            CHECK(parse_form(print(w), N) == w);
            CHECK(print(parse_form(print(w), N)) == print(w));
        }
    }
    for (int k = 0; k < 50; ++k) {
        std::vector<TransJet> p;
        for (int d = rand_int(1, 4); d >= 0; --d) p.push_back(TransJet(rand_jet(N, 2, 2, 1)) * rand_gaussian());
        p.back() += TransJet(1, N);
        CAPTURE(print_polynomial(p));
        auto q = parse_polynomial(print_polynomial(p), N);
        REQUIRE(q.size() == p.size());
        for (size_t d = 0; d < p.size(); ++d) CHECK(q[d] == p[d]);
    }
}

TEST_CASE("job files") {
    cli::JobFile j = cli::parse_job("# comment\norder: 7\nriccati:\n  alpha: 0\n  beta: (3/2)*dy/y\n");
    CHECK(j.kind == cli::JobFile::Kind::Riccati);
    CHECK(j.order == 7);
    CHECK(j.at("beta").line == 5);
    CHECK(j.at("beta").column == 9);

    CHECK(cli::parse_job("web: 1 - y^2*z^4").kind == cli::JobFile::Kind::Web);
    CHECK(error_of([] { cli::parse_job("omega0: dx\nalpha: dy\n"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { cli::parse_job("omega0: dx\nomega0: dy\n"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { cli::parse_job("colour: red\n"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { cli::parse_job("# nothing\n"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { cli::parse_job("order: -3\nmodel: I(1)\n"); }) == ErrorKind::ParseError);

    CHECK(cli::parse_model("I(-7/3)").affine == AffineModel::I(QComplex::frac(-7, 3)));
    CHECK(cli::parse_model("IV(2, 1)").affine == AffineModel::IV(2, 1));
    CHECK(cli::parse_model("WebII(3,2)").webmodel == WebModel{WebModel::Family::WebII, 3, 2, 0});
    CHECK(error_of([] { cli::parse_model("V(1)"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { cli::parse_model("II(1/2)"); }) == ErrorKind::ParseError);

    // parser positions are reported relative to the job file
    cli::Outcome o = cli::run("pencil induce", "omega0: dx\nomegaInf:   dy + 0.5*dx\n", 4);
    CHECK(o.exit_code == 1);
    CHECK(o.body["error"]["line"] == 2);
    CHECK(o.body["error"]["column"] == 18);
}

TEST_CASE("order resolution") {
    cli::JobFile with = cli::parse_job("order: 5\nmodel: I(1)\n");
    cli::JobFile without = cli::parse_job("model: I(1)\n");
    ::unsetenv(cli::kOrderEnv);
    CHECK(cli::resolve_order(9, with) == 9);
    CHECK(cli::resolve_order(std::nullopt, with) == 5);
    CHECK(cli::resolve_order(std::nullopt, without) == cli::kCliDefaultOrder);
    ::setenv(cli::kOrderEnv, "6", 1);
    CHECK(cli::resolve_order(std::nullopt, without) == 6);
    CHECK(cli::resolve_order(std::nullopt, with) == 5);
    ::setenv(cli::kOrderEnv, "six", 1);
    CHECK(error_of([&] { cli::resolve_order(std::nullopt, without); }) == ErrorKind::ParseError);
    ::unsetenv(cli::kOrderEnv);
}

TEST_CASE("command outputs") {
    cli::Outcome o = cli::run("pencil induce", "model: I(3/2)\n", std::nullopt);
    CHECK(o.exit_code == 0);
    CHECK(o.body["schema"] == "1");
    CHECK(o.body["alpha"] == "0");
    CHECK(parse_form(o.body["beta"].get<std::string>(), 16) == Form1::log_dy(QComplex::frac(3, 2), 16));
    CHECK(o.body["gamma"] == "0");

    o = cli::run("riccati classify", "model: III(1)\n", 10);
    CHECK(o.exit_code == 0);
    CHECK(o.body["model"] == "III");
    CHECK(o.body["n"] == 1);
    CHECK(o.body["monodromy"] == "parabolic");

    o = cli::run("web hexagonal", "web: dx; (1+x*y)*dy; dx+(1+x*y)*dy\n", 6);
    CHECK(o.exit_code == 0);
    CHECK(o.body["hexagonal"] == false);
    // a truncation of 2 (1+xy)^-2 dx^dy, printed in ascending degree
    std::string dk = o.body["dkappa"];
    std::string full = print(Form2(parse_function("2*(1+x*y)^-2", 20)));
    CHECK(dk.size() > std::string("2*dx^dy - 4*x*y*dx^dy").size() - 1);
    CHECK(full.rfind(dk + " ", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(cli::run("pencil induce", "model: I(1/2)\n", 6).exit_code == 0);
    CHECK(cli::run("pencil induce", "omega0: dx + 0.5*dy\nomegaInf: dy\n", 6).exit_code == 1);
    CHECK(cli::run("pencil induce", "omega0: dx\nomegaInf: 2*dx\n", 6).exit_code == 2);
    CHECK(cli::run("pencil model", "model: II(1)\n", 6).exit_code == 2);
    CHECK(cli::run("riccati classify", "riccati:\n alpha: 0\n beta: 0\n gamma: 0\n", 6).exit_code == 3);
    CHECK(cli::run("web classify", "model: I(1)\n", 6).exit_code == 1);
    CHECK(cli::run("no such", "model: I(1)\n", 6).exit_code == 1);
    cli::Outcome o = cli::run("web fit-riccati", "web: dx; dy\n", 6);
    CHECK(o.exit_code == 2);
    CHECK(o.body["error"]["kind"] == "UnderdeterminedFit");

    // the installed binary reports the same codes
    std::string bin = AG_CLI_PATH;
    std::string dir = std::string(AG_GOLDEN_DIR);
    CHECK(shell(bin + " pencil induce " + dir + "/induce_I_1_2.job > /dev/null") == 0);
    CHECK(shell("printf 'omega0: dx + 0.5*dy\\nomegaInf: dy\\n' | " + bin + " pencil induce - > /dev/null") == 1);
    CHECK(shell("printf 'omega0: dx\\nomegaInf: 2*dx\\n' | " + bin + " pencil induce - > /dev/null") == 2);
    CHECK(shell("printf 'alpha: 0\\n' | " + bin + " riccati classify - --order 6 > /dev/null") == 3);
}

TEST_CASE("golden JSON for every command") {
    const char* update = std::getenv("AG_UPDATE_GOLDEN");
    auto cases = manifest();
    std::set<std::string> covered;
    for (auto& g : cases) {
        CAPTURE(g.name);
        std::string dir = std::string(AG_GOLDEN_DIR) + "/";
        cli::Outcome o = cli::run(g.command, slurp(dir + g.name + ".job"), g.order);
        std::string out = cli::render(o, true);
        if (update) std::ofstream(dir + g.name + ".json") << out;
        CHECK(out == slurp(dir + g.name + ".json"));
        // rendering is deterministic
        CHECK(out == cli::render(cli::run(g.command, slurp(dir + g.name + ".job"), g.order), true));
        covered.insert(g.command);
    }
    for (auto& c : cli::commands()) CHECK_MESSAGE(covered.count(c), c);
}
