// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pvkit/cli.hpp"
#include "pvkit/galois.hpp"
#include "pvkit/matgroup.hpp"
#include "pvkit/parse.hpp"
#include "pvkit/print.hpp"
#include "pvkit/ritt.hpp"
#include "pvkit/series.hpp"
#include "pvkit/wronskian.hpp"
#include "support.hpp"

using namespace pvkit;
using pvkit::test::Gen;
using pvkit::test::T;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

// Rank by plain Gaussian elimination over Q.
std::size_t rank_of(Matrix<Rational> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Rank over Q of the functions themselves: sample at enough non-pole points that a
// vanishing combination must vanish identically.
std::size_t function_rank(const std::vector<RatFunc> &f) {
    std::size_t bound = 1;
    for (const auto &x : f) bound += static_cast<std::size_t>(x.num().degree() + 1 + 2 * x.den().degree());
    for (const auto &x : f) bound += static_cast<std::size_t>(x.den().degree());
    Matrix<Rational> rows;
    for (long s = 0; rows.size() < bound; ++s) {
        std::vector<Rational> row;
        for (const auto &x : f) {
            auto v = x.evaluate(Rational(s));
            if (!v) break;
            row.push_back(*v);
        }
        if (row.size() == f.size()) rows.push_back(std::move(row));
    }
    return rank_of(rows);
}

Check criterion1() {
    Check c;
    const DiffPoly x = DiffPoly::variable({0, 0}), x1 = DiffPoly::variable({0, 1}), x2 = DiffPoly::variable({0, 2});
    const DiffPoly p = x1 * x1 - x.scaled(RatFunc(2));
    const DiffPoly s = dp_separant(p, 0);
    c.require(s == x1.scaled(RatFunc(2)), "separant");
    c.require(dp_derive(p) == (x1 * x2).scaled(RatFunc(2)) - x1.scaled(RatFunc(2)), "derivative");
    c.require(in_general_ideal(x2 - DiffPoly(1), p, 0), "x'' - 1 in I(P)");
    c.require(!in_general_ideal(x, p, 0), "x not in I(P)");
    c.require(!in_general_ideal(s, p, 0), "S_P not in I(P)");
    return c;
}

Check criterion2() {
    Check c;
    Gen gen(1001);
    int dependent = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 4));
        const auto f = test::random_tuple(gen, n, 4, 9);
        const bool oracle_dependent = function_rank(f) < n;
        const bool w_zero = wronskian(f).is_zero();
        const auto cert = dependence_certificate(f);
        c.require(w_zero == oracle_dependent, "wronskian disagrees with rank oracle at trial " + std::to_string(trial));
        c.require(cert.has_value() == oracle_dependent, "certificate existence at trial " + std::to_string(trial));
        if (cert) {
            ++dependent;
            RatFunc sum;
            bool nontrivial = false;
            for (std::size_t i = 0; i < n; ++i) {
                sum += RatFunc((*cert)[i]) * f[i];
                nontrivial = nontrivial || !(*cert)[i].is_zero();
            }
            c.require(sum.is_zero() && nontrivial, "certificate does not annihilate at trial " + std::to_string(trial));
        }
    }
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(dependent) + " dependent of 500";
    return c;
}

Check criterion3() {
    Check c;
    Gen gen(1002);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 4));
        const auto u = test::random_tuple(gen, n, 4, 9);
        const auto m = test::random_const_matrix(gen, n, 5);
        const RatFunc lhs = wronskian(apply_constant_matrix(u, m));
        const RatFunc rhs = RatFunc(expansion_determinant(m)) * wronskian(u);
        c.require(lhs == rhs, "transform law at trial " + std::to_string(trial));
    }
    return c;
}

Check criterion4() {
    Check c;
    Gen gen(1003);
    int done = 0;
    while (done < 300) {
        const DiffPoly p = test::random_diffpoly(gen, 2, 3, 3);
        const auto ord = dp_order(p, 0);
        if (!ord || *ord < 0 || dp_leader_degree(p, 0) > 3) continue;
        const DiffPoly q = test::random_diffpoly(gen, 4, 2, 3);
        const ReductionResult r = ritt_reduce(q, p, 0);
        DiffPoly expanded = dp_separant(p, 0).pow(r.sep_power) * dp_initial(p, 0).pow(r.init_power) * q;
        for (const auto &[k, cof] : r.certificate) {
            DiffPoly dk = p;
            for (unsigned j = 0; j < k; ++j) dk = dk.derivative();
            expanded -= cof * dk;
        }
        c.require(expanded == r.remainder, "certificate identity at pair " + std::to_string(done));
        const auto rord = dp_order(r.remainder, 0);
        const bool reduced = !rord || *rord < *ord ||
                             (*rord == *ord && r.remainder.degree_in(dp_leader(p, 0)) < dp_leader_degree(p, 0));
        c.require(reduced, "remainder not reduced at pair " + std::to_string(done));
        ++done;
    }
    return c;
}

Check criterion5() {
    Check c;
    Gen gen(1004);
    const int N = 16;
    for (int trial = 0; trial < 100; ++trial) {
        const auto [ode, t0] = test::random_ode(gen, 4);
        const auto sols = fundamental_system_series(ode, t0, N);
        const auto n = static_cast<int>(ode.order());
        for (const auto &s : sols) {
            const auto res = ode_residual(ode, s);
            c.require(res.precision() >= N - n && res.is_zero(), "residual at trial " + std::to_string(trial));
        }
        c.require(series_wronskian(sols).coeff(0) == Rational(1), "Wronskian constant term at trial " + std::to_string(trial));
    }
    return c;
}

std::vector<GaloisDescriptor> classified;

Check criterion6() {
    Check c;
    classified.clear();
    auto record = [&](GaloisDescriptor d) {
        classified.push_back(d);
        return d;
    };

    const RatFunc a1 = T() * RatFunc(2);
    auto d1 = record(classify_antiderivative_extension(a1));
    const auto *tr1 = std::get_if<galois::Trivial>(&d1);
    c.require(tr1 && tr1->witness.derivative() == a1, "2t: trivial with b' = a");

    const RatFunc a2 = T().inverse();
    // nonzero residue at the simple pole 0 rules out a rational antiderivative
    c.require(!(a2.num()(Rational(0)) / a2.den().derivative()(Rational(0))).is_zero(), "1/t residue");
    c.require(std::holds_alternative<galois::AdditiveGroup>(record(classify_antiderivative_extension(a2))),
              "1/t: additive");

    // y' = n*y has no rational solution: f'/f is always proper, n is not
    const RatFunc a3(RatFunc(1).retagged(FieldTag::rational_functions));
    for (long n = 1; n <= 12; ++n) {
        const RatFunc na = RatFunc(n) * a3;
        c.require(na.num().degree() >= na.den().degree(), "1: improper multiples");
    }
    c.require(std::holds_alternative<galois::MultiplicativeGroup>(record(classify_exponential_extension(a3))),
              "1: multiplicative");

    const RatFunc a4 = (T() * RatFunc(2)).inverse();
    auto d4 = record(classify_exponential_extension(a4));
    const auto *cy = std::get_if<galois::CyclicOfOrder>(&d4);
    c.require(cy && cy->n == 2 && cy->beta == T(), "1/(2t): cyclic of order 2 with beta t");
    if (cy) c.require(cy->beta.derivative() == RatFunc(2) * a4 * cy->beta, "beta' = 2 a beta");
    // order 1 would need t^(1/2) in Q(t): residue 1/2 is not an integer
    c.require(!(a4.num()(Rational(0)) / a4.den().derivative()(Rational(0))).is_integer(), "residue 1/2");

    auto d5 = record(classify_exponential_extension(T().inverse()));
    const auto *tr5 = std::get_if<galois::Trivial>(&d5);
    c.require(tr5 && tr5->witness == T() && tr5->witness.derivative() == T().inverse() * tr5->witness,
              "1/t: trivial with u = c t");
    return c;
}

Check criterion7() {
    Check c;
    std::vector<GaloisDescriptor> all = classified;
    for (std::uint64_t n = 1; n <= 4; ++n) all.push_back(galois::FullGeneralLinear{n});
    for (const auto &d : all) {
        const std::string name(descriptor_name(d));
        c.require(descriptor_dimension(d) == descriptor_trdeg(d), "dimension vs trdeg for " + name);
        c.require(identity_component_dimension(descriptor_to_matrix_group(d)) == descriptor_dimension(d),
                  "catalog dimension for " + name);
    }
    c.require(all.size() == 9, "expected 5 classified descriptors");
    return c;
}

Check criterion8() {
    Check c;
    Gen gen(1008);
    for (auto [n, trials] : {std::pair<std::size_t, int>{2, 50}, {3, 20}}) {
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<RatFunc> values;
            do {
                values.clear();
                for (std::size_t i = 0; i < n; ++i) values.push_back(RatFunc(gen.poly(static_cast<int>(n) + 2, 9)));
            } while (wronskian(values).is_zero());
            const ConstMatrix t(test::random_invertible_matrix(gen, n, 5));
            const bool ok = gl_invariance_witness(n, t, generic_point_from(values, static_cast<std::uint32_t>(n)));
            c.require(ok, "n = " + std::to_string(n) + " trial " + std::to_string(trial));
        }
    }
    return c;
}

Check criterion9() {
    Check c;
    Gen gen(1009);
    for (int trial = 0; trial < 500; ++trial) {
        const RatFunc f = test::random_fraction_ratfunc(gen);
        c.require(parse_ratfunc(to_text(f)) == f, "ratfunc round trip: " + to_text(f));
        const DiffPoly p = test::random_printable_diffpoly(gen);
        c.require(parse_diffpoly(to_text(p)) == p, "diffpoly round trip: " + to_text(p));
    }
    auto out = [](std::vector<std::string> args) { return cli::run_arguments(args); };
    auto o1 = out({"separant", "(x')^2-2*x"});
    auto o2 = out({"member", "x''-1", "--mod", "(x')^2-2*x"});
    auto o3 = out({"classify-exp", "1/(2*t)", "--format", "json"});
    c.require(o1.exit_code == 0 && o1.out == "2*x'\n", "separant invocation");
    c.require(o2.exit_code == 0 && o2.out == "true\n", "member invocation");
    c.require(o3.exit_code == 0 &&
                  o3.out == "{\"group\":\"cyclic\",\"n\":2,\"beta\":\"t\",\"minimal_polynomial\":\"X^2 - c*t\","
                            "\"dimension\":0}\n",
              "classify-exp invocation");
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double limit_s;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "(x')^2 - 2x: separant, derivative, membership", 1, criterion1},
        {2, "Wronskian vs linear-algebra oracle, 500 tuples", 30, criterion2},
        {3, "transform law, 200 pairs", 30, criterion3},
        {4, "reduction certificate identity, 300 pairs", 60, criterion4},
        {5, "series fundamental systems, 100 ODEs at N = 16", 60, criterion5},
        {6, "antiderivative / exponential classification", 1, criterion6},
        {7, "dimension = transcendence degree", 1, criterion7},
        {8, "GL invariance witness, 50 at n = 2 and 20 at n = 3", 60, criterion8},
        {9, "CLI round trip (1000 values) and documented invocations", 30, criterion9},
    };
    int failures = 0;
    for (const auto &cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception &e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= cr.limit_s) {
            if (result.ok) result.detail = "too slow";
            result.ok = false;
        }
        failures += !result.ok;
        std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s)%s%s\n", cr.id, result.ok ? "PASS" : "FAIL", cr.name,
                    secs, cr.limit_s, result.detail.empty() ? "" : "  ", result.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
