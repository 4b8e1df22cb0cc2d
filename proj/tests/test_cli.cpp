#include <gtest/gtest.h>

#include <sstream>

#include "pvkit/cli.hpp"

using pvkit::cli::Outcome;
using pvkit::cli::run_arguments;

namespace {

Outcome run(std::vector<std::string> args) { return run_arguments(args); }

} // namespace

TEST(Cli, DocumentedInvocations) {
    EXPECT_EQ(run({"separant", "(x')^2-2*x"}).out, "2*x'\n");
    EXPECT_EQ(run({"member", "x''-1", "--mod", "(x')^2-2*x"}).out, "true\n");
    EXPECT_EQ(run({"classify-exp", "1/(2*t)", "--format", "json"}).out,
              "{\"group\":\"cyclic\",\"n\":2,\"beta\":\"t\",\"minimal_polynomial\":\"X^2 - c*t\",\"dimension\":0}\n");
}

TEST(Cli, EveryVerbSucceedsOnASimpleInput) {
    const std::vector<std::vector<std::string>> cases{
        {"derive", "(x')^2-2*x"},
        {"order", "(x')^2-2*x"},
        {"reduce", "x''", "--mod", "(x')^2-2*x"},
        {"wronskian", "t", "t^2"},
        {"depend", "t", "2*t"},
        {"ode-from", "1", "t"},
        {"solve-series", "x''+x", "--precision", "4"},
        {"classify-int", "1/t"},
        {"group-check", "--group", "Ga", "1 3; 0 1"},
        {"gl-witness", "2 1; 1 1", "t", "t^3"}};
    for (const auto &c : cases) {
        Outcome o = run(c);
        EXPECT_EQ(o.exit_code, 0) << c[0] << ": " << o.err;
        EXPECT_TRUE(o.err.empty());
        EXPECT_FALSE(o.out.empty());
    }
}

TEST(Cli, TextResults) {
    EXPECT_EQ(run({"derive", "(x')^2-2*x"}).out, "2*x'*x'' - 2*x'\n");
    EXPECT_EQ(run({"derive", "x", "3"}).out, "x^(3)\n");
    EXPECT_EQ(run({"order", "5"}).out, "-1\n");
    EXPECT_EQ(run({"order", "0"}).out, "none\n");
    EXPECT_EQ(run({"order", "x1'' + x2", "--var", "2"}).out, "0\n");
    EXPECT_EQ(run({"member", "x", "--mod", "(x')^2-2*x"}).out, "false\n");
    EXPECT_EQ(run({"member", "2*x'", "--mod", "(x')^2-2*x"}).out, "false\n");
    EXPECT_EQ(run({"wronskian", "t", "t^2"}).out, "t^2\n");
    EXPECT_EQ(run({"depend", "t", "2*t"}).out, "dependent: 1 -1/2\n");
    EXPECT_EQ(run({"depend", "1", "t"}).out, "independent\n");
    EXPECT_EQ(run({"ode-from", "1", "t"}).out, "x''\n");
    EXPECT_EQ(run({"solve-series", "x'-x", "--precision", "3"}).out, "y1 = 1 + t + t^2/2 + t^3/6 + O(t^4)\n");
    EXPECT_EQ(run({"classify-int", "2*t"}).out, "trivial; witness = t^2; dimension 0\n");
    EXPECT_EQ(run({"classify-exp", "1"}).out, "multiplicative; dimension 1\n");
    EXPECT_EQ(run({"group-check", "--group", "mu2", "-1", "2"}).out, "true false\n");
    EXPECT_EQ(run({"group-check", "--group", "SL2", "0 1; -1 0", "1 2; 0 1"}).out, "true true\nclosure: true\n");
    EXPECT_EQ(run({"gl-witness", "1 1; 0 1"}).out, "true\n");
}

TEST(Cli, JsonResults) {
    EXPECT_EQ(run({"wronskian", "1", "t", "--format", "json"}).out, "{\"result\":\"1\",\"kind\":\"ratfunc\"}\n");
    EXPECT_EQ(run({"depend", "t", "2*t", "--format", "json"}).out,
              "{\"result\":true,\"kind\":\"dependence\",\"certificate\":[\"1\",\"-1/2\"]}\n");
    EXPECT_EQ(run({"classify-int", "1/t", "--format", "json"}).out, "{\"group\":\"additive\",\"dimension\":1}\n");
    EXPECT_EQ(run({"classify-exp", "1/t", "--format", "json"}).out,
              "{\"group\":\"trivial\",\"witness\":\"t\",\"dimension\":0}\n");
    EXPECT_EQ(run({"classify-exp", "1/(3*t) + 1/(t+1)", "--format", "json"}).out,
              "{\"group\":\"cyclic\",\"n\":3,\"beta\":\"t^4 + 3*t^3 + 3*t^2 + t\",\"minimal_polynomial\":\"X^3 - "
              "c*(t^4 + 3*t^3 + 3*t^2 + t)\",\"dimension\":0}\n");
}

TEST(Cli, ErrorsExitNonzeroWithoutPartialOutput) {
    Outcome syntax = run({"wronskian", "t++1"});
    EXPECT_EQ(syntax.exit_code, 2);
    EXPECT_TRUE(syntax.out.empty());
    EXPECT_NE(syntax.err.find("column 3"), std::string::npos);

    Outcome json = run({"wronskian", "t++1", "--format", "json"});
    EXPECT_EQ(json.exit_code, 2);
    EXPECT_EQ(json.out, "{\"error\":{\"kind\":\"SyntaxError\",\"message\":\"unexpected '+' at column 3\",\"column\":3}}\n");

    const std::vector<std::pair<std::vector<std::string>, std::string>> domain{
        {{"wronskian", "1/0"}, "DivisionByZero"},
        {{"separant", "5"}, "NotApplicable"},
        {{"ode-from", "t", "2*t"}, "NotFundamental"},
        {{"solve-series", "x'-x/t"}, "PoleAtBasePoint"},
        {{"group-check", "--group", "SL9x", "1"}, "NotInCatalog"},
        {{"group-check", "--group", "GL2", "1"}, "ShapeError"},
        {{"gl-witness", "1 2; 2 4"}, "SingularTransform"},
        {{"gl-witness", "1 0; 0 1", "t", "2*t"}, "DegeneratePoint"},
        {{"derive", "x*x1"}, "MixedArity"},
        {{"reduce", "x"}, "NotApplicable"}};
    for (const auto &[args, kind] : domain) {
        Outcome o = run(args);
        EXPECT_EQ(o.exit_code, 1) << args[0];
        EXPECT_TRUE(o.out.empty()) << args[0];
        EXPECT_NE(o.err.find(kind), std::string::npos) << o.err;
    }
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({"wronskian", "t", "--format", "xml"}).exit_code, 2);
}

TEST(Cli, DeterministicForSameSeed) {
    for (std::string seed : {"0", "7", "123"}) {
        std::vector<std::string> args{"gl-witness", "3 1 0; 1 1 0; 0 0 2", "--seed", seed, "--format", "json"};
        Outcome a = run(args), b = run(args);
        EXPECT_EQ(a.exit_code, 0);
        EXPECT_EQ(a.out, b.out);
    }
    EXPECT_NE(run({"gl-witness", "1 1; 0 1", "--seed", "1", "--format", "json"}).out,
              run({"gl-witness", "1 1; 0 1", "--seed", "2", "--format", "json"}).out);
}

TEST(Cli, BatchMode) {
    std::istringstream in("separant \"(x')^2-2*x\"\n\n# comment\nwronskian 1 t --format json\nwronskian \"t++1\"\n");
    Outcome o = pvkit::cli::run_batch(in);
    EXPECT_EQ(o.out, "2*x'\n{\"result\":\"1\",\"kind\":\"ratfunc\"}\n");
    EXPECT_EQ(o.exit_code, 2);
    EXPECT_NE(o.err.find("SyntaxError"), std::string::npos);
}

TEST(Cli, Tokenizer) {
    using pvkit::cli::tokenize;
    EXPECT_EQ(tokenize("a  \"b c\" d\"e\""), (std::vector<std::string>{"a", "b c", "de"}));
    EXPECT_EQ(tokenize("\"\\\"\""), (std::vector<std::string>{"\""}));
    EXPECT_EQ(tokenize("\"\""), (std::vector<std::string>{""}));
    EXPECT_THROW(tokenize("\"open"), pvkit::syntax_error);
}
