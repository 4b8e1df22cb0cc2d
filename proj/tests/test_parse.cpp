#include <gtest/gtest.h>

#include "pvkit/parse.hpp"
#include "pvkit/print.hpp"
#include "support.hpp"

using namespace pvkit;
using pvkit::test::Gen;
using pvkit::test::T;
using pvkit::test::X;

namespace {

std::size_t syntax_column(const std::string &text, bool diff = false) {
    try {
        if (diff)
            parse_diffpoly(text);
        else
            parse_ratfunc(text);
    } catch (const syntax_error &e) {
        return e.column();
    }
    return 0;
}

errc kind_of(const std::string &text, bool diff) {
    try {
        if (diff)
            parse_diffpoly(text);
        else
            parse_ratfunc(text);
    } catch (const error &e) {
        return e.kind();
    }
    return errc::not_applicable;
}

} // namespace

TEST(ParseRatFunc, Examples) {
    RatFunc f = parse_ratfunc("(t^2+1)/(t-1)");
    EXPECT_EQ(f.num(), Poly(std::vector<Rational>{1, 0, 1}));
    EXPECT_EQ(f.den(), Poly(std::vector<Rational>{-1, 1}));
    EXPECT_EQ(parse_ratfunc("2/4"), RatFunc(Rational(1, 2)));
    EXPECT_EQ(syntax_column("t++1"), 3u);
}

TEST(ParseRatFunc, Grammar) {
    EXPECT_EQ(parse_ratfunc("-t^2"), -(T() * T()));
    EXPECT_EQ(parse_ratfunc("1/2/t"), RatFunc(Rational(1, 2)) / T());
    EXPECT_EQ(parse_ratfunc("(-t)*(-1)"), T());
    EXPECT_EQ(parse_ratfunc(" t - 1 - 1 "), T() - RatFunc(2));
    EXPECT_EQ(parse_ratfunc("t^0"), RatFunc(1));
    EXPECT_EQ(parse_ratfunc("t").tag(), FieldTag::rational_functions);
    EXPECT_EQ(parse_ratfunc("3").tag(), FieldTag::rational_functions);
}

TEST(ParseRatFunc, Errors) {
    EXPECT_EQ(syntax_column("t*-1"), 3u);
    EXPECT_EQ(syntax_column("t^-1"), 3u);
    EXPECT_EQ(syntax_column("(t+1"), 5u);
    EXPECT_EQ(syntax_column(""), 1u);
    EXPECT_EQ(syntax_column("t)"), 2u);
    EXPECT_EQ(syntax_column("2 x"), 3u);
    EXPECT_EQ(syntax_column("t^(2)"), 3u);
    EXPECT_EQ(syntax_column("2^3^1"), 4u);
    EXPECT_EQ(syntax_column("1.5"), 2u);
    EXPECT_EQ(kind_of("1/0", false), errc::division_by_zero);
    EXPECT_EQ(kind_of("1/(t-t)", false), errc::division_by_zero);
}

TEST(ParseDiffPoly, Examples) {
    EXPECT_EQ(parse_diffpoly("(x')^2 - 2*x"), X(1).pow(2) - X(0).scaled(RatFunc(2)));
    EXPECT_EQ(parse_diffpoly("x^(3) + t*x"), X(3) + X(0).scaled(T()));
    DiffPoly w = parse_diffpoly("x1'*x2 - x2'*x1");
    EXPECT_EQ(w.num_indeterminates(), 2u);
    EXPECT_EQ(w, X(1, 0, 2) * X(0, 1, 2) - X(1, 1, 2) * X(0, 0, 2));
}

TEST(ParseDiffPoly, Grammar) {
    EXPECT_EQ(parse_diffpoly("x''"), X(2));
    EXPECT_EQ(parse_diffpoly("x^(0)"), X(0));
    EXPECT_EQ(parse_diffpoly("x^2"), X(0).pow(2));
    EXPECT_EQ(parse_diffpoly("x'^2/(t+1)"), X(1).pow(2).scaled((T() + RatFunc(1)).inverse()));
    EXPECT_EQ(parse_diffpoly("x3").num_indeterminates(), 3u);
    EXPECT_EQ(parse_diffpoly("x^(2)^3"), X(2).pow(3));
}

TEST(ParseDiffPoly, Errors) {
    EXPECT_EQ(kind_of("x*x1", true), errc::mixed_arity);
    EXPECT_EQ(syntax_column("x'''", true), 4u);
    EXPECT_EQ(syntax_column("1/x", true), 2u);
    EXPECT_EQ(syntax_column("x0", true), 2u);
    EXPECT_EQ(syntax_column("x^(", true), 4u);
    EXPECT_EQ(kind_of("x/(1-1)", true), errc::division_by_zero);
}

TEST(Print, Polynomials) {
    EXPECT_EQ(to_text(Poly(std::vector<Rational>{-1, 0, 1})), "t^2 - 1");
    EXPECT_EQ(to_text(Poly(std::vector<Rational>{0, Rational(1, 2)})), "t/2");
    EXPECT_EQ(to_text(Poly(std::vector<Rational>{Rational(-3, 4), Rational(-2, 3)})), "-2*t/3 - 3/4");
    EXPECT_EQ(to_text(Poly()), "0");
    EXPECT_EQ(to_text(T().inverse()), "1/t");
    EXPECT_EQ(to_text(parse_ratfunc("(t^2+1)/(t-1)")), "(t^2 + 1)/(t - 1)");
    EXPECT_EQ(to_text(-T() / (T() * T() + RatFunc(1))), "-t/(t^2 + 1)");
}

TEST(Print, DiffPolys) {
    DiffPoly p = parse_diffpoly("(x')^2-2*x");
    EXPECT_EQ(to_text(dp_separant(p, 0)), "2*x'");
    EXPECT_EQ(to_text(dp_derive(p)), "2*x'*x'' - 2*x'");
    EXPECT_EQ(to_text(p), "x'^2 - 2*x");
    EXPECT_EQ(to_text(parse_diffpoly("x^(3) + t*x")), "x^(3) + t*x");
    EXPECT_EQ(to_text(parse_diffpoly("x1'*x2 - x2'*x1")), "-x1*x2' + x2*x1'");
    EXPECT_EQ(to_text(parse_diffpoly("(1-t)*x + x/2 - t + 1")), "-(t - 3/2)*x - (t - 1)");
    EXPECT_EQ(to_text(parse_diffpoly("-(t^2 - 1)/t*x'")), "-((t^2 - 1)/t)*x'");
    EXPECT_EQ(to_text(DiffPoly()), "0");
}

TEST(Print, RoundTrip) {
    Gen gen(71);
    for (int trial = 0; trial < 300; ++trial) {
        RatFunc f = test::random_fraction_ratfunc(gen);
        ASSERT_EQ(parse_ratfunc(to_text(f)), f) << to_text(f);
        DiffPoly p = test::random_printable_diffpoly(gen);
        ASSERT_EQ(parse_diffpoly(to_text(p)), p) << to_text(p);
    }
}
