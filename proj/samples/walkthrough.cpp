// Small tour: a nonlinear equation, a Wronskian, a series solution, a classification.
#include <iostream>

#include "pvkit/galois.hpp"
#include "pvkit/parse.hpp"
#include "pvkit/print.hpp"
#include "pvkit/ritt.hpp"
#include "pvkit/series.hpp"
#include "pvkit/wronskian.hpp"

int main() {
    using namespace pvkit;

    const DiffPoly p = parse_diffpoly("(x')^2 - 2*x");
    std::cout << "P       = " << to_text(p) << "\n"
              << "S_P     = " << to_text(dp_separant(p, 0)) << "\n"
              << "P'      = " << to_text(dp_derive(p)) << "\n";
    for (const char *q : {"x'' - 1", "x", "2*x'"})
        std::cout << "  " << q << " in I(P): " << std::boolalpha << in_general_ideal(parse_diffpoly(q), p, 0) << "\n";

    const std::vector<RatFunc> fs{parse_ratfunc("t"), parse_ratfunc("1/t")};
    const LinearODE ode = ode_from_fundamental_system(fs);
    std::cout << "W(t, 1/t) = " << to_text(wronskian(fs)) << "\n"
              << "equation: y'' + (" << to_text(ode.coeffs[0]) << ") y' + (" << to_text(ode.coeffs[1]) << ") y = 0\n";

    for (const auto &s : fundamental_system_series(ode, Rational(1), 6)) {
        std::cout << "  series at t = 1:";
        for (const auto &c : s.coeffs()) std::cout << " " << c;
        std::cout << "\n";
    }

    for (const char *a : {"1/(2*t)", "1/(3*t) + 1/(t-1)", "1"}) {
        const GaloisDescriptor d = classify_exponential_extension(parse_ratfunc(a));
        std::cout << "u'/u = " << a << ": " << descriptor_name(d) << ", dimension " << descriptor_dimension(d);
        if (const auto *c = std::get_if<galois::CyclicOfOrder>(&d))
            std::cout << ", u^" << c->n << " = c*(" << to_text(c->beta) << ")";
        std::cout << "\n";
    }
}
