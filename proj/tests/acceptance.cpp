// Acceptance sweep: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "kpd/detroot.hpp"
#include "kpd/expmap.hpp"
#include "kpd/laws.hpp"
#include "kpd/random.hpp"
#include "kpd/suite.hpp"

using namespace kpd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Generator gen(const Field& f, const std::string& tag, std::uint64_t i) {
    return Generator(f, instance_seed(2024, tag + "/" + f.name(), i));
}

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    void add(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

int failed_criteria = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failed_criteria;
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void hp() {
    const auto start = Clock::now();
    Tally t;
    for (const Field& f : {Field::rational(), Field::prime(7)}) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            Generator g = gen(f, "hp", i);
            const std::size_t m = g.between(1, 4), n = g.between(1, 4);
            t.add(check_lemma_hp(g.square(m), g.square(n)).holds);
        }
    }
    const double s = seconds_since(start);
    report(1, "lemma-hp", t.failures == 0 && s < 5.0, fmt("%llu checks, %llu violations, %.2fs (limit 5s)",
                                                          (unsigned long long)t.checks, (unsigned long long)t.failures, s));
}

Matrix boundary_instance(Generator& g) {
    const Field& f = g.field();
    const Scalar w = g.nonzero_scalar(), x = g.nonzero_scalar(), y = g.nonzero_scalar();
    // x^2 y^2 = w x y z  <=>  z = x y / w.
    const Scalar z = f.div(f.mul(x, y), w);
    return Matrix(f, 2, 2, {w, x, y, z});
}

void parthp() {
    Tally t;
    std::uint64_t on_boundary = 0;
    for (const Field& f : {Field::rational(), Field::prime(7)}) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            Generator g = gen(f, "parthp", i);
            const std::size_t m = g.between(1, 4), n = g.between(1, 4);
            t.add(check_completability(g.square(m), g.square(n)).consistent());
            const LawReport tri = check_completability(g.square(m), g.triangular(n));
            t.add(tri.consistent() && tri.holds);
            t.add(check_part01(g.square(m), g.zero_one(n)).consistent());
            const LawReport b = check_2x2_boundary(i % 2 ? boundary_instance(g) : g.square(2));
            on_boundary += b.condition_holds;
            t.add(b.consistent());
        }
    }
    report(2, "completability-iff", t.failures == 0,
           fmt("%llu checks, %llu disagreements, %llu boundary instances", (unsigned long long)t.checks,
               (unsigned long long)t.failures, (unsigned long long)on_boundary));
}

void mul() {
    Tally t;
    std::uint64_t conditioned = 0;
    for (const Field& f : {Field::rational(), Field::prime(7)}) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            Generator g = gen(f, "mul", i);
            const std::size_t m = g.between(1, 4), n = g.between(1, 4);
            const Matrix a = g.square(m), b = g.square(m), c = g.square(n);
            const LawReport r = check_multiplicativity(a, b, c, g.square(n));
            conditioned += r.condition_holds;
            t.add(r.consistent());
            const Matrix p = g.coin() ? g.permutation(n) : g.diagonal(n);
            t.add(check_multiplicativity(a, b, c, p).consistent());
            t.add(check_mulperm(a, b, c, p).holds);
        }
    }
    report(3, "multiplicativity-iff", t.failures == 0,
           fmt("%llu checks, %llu disagreements, %llu with condition true", (unsigned long long)t.checks,
               (unsigned long long)t.failures, (unsigned long long)conditioned));
}

void gf2() {
    const auto start = Clock::now();
    const LawReport r = exhaustive_gf2_multiplicativity(2, 2);
    const double s = seconds_since(start);
    const bool full = r.note.find("65536 tuples (full sweep)") != std::string::npos;
    report(4, "gf2-exhaustive", r.holds && full && s < 30.0, fmt("%s, %.2fs (limit 30s)", r.note.c_str(), s));
}

void newton_girard() {
    const Field f = Field::rational();
    Tally t;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < n; ++k) count *= 5;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Scalar> xs;
            std::uint64_t c = code;
            for (std::size_t k = 0; k < n; ++k, c /= 5) xs.push_back(f.from_int(static_cast<long long>(c % 5) - 2));
            for (std::uint64_t m = 1; m <= 6; ++m) t.add(check_newton_girard(f, xs, m).holds);
            t.add(check_lemma_ng(f, xs, 6).consistent());
        }
    }
    report(5, "newton-girard", t.failures == 0,
           fmt("%llu checks over {-2..2}^n, n<=3, m<=6, %llu violations", (unsigned long long)t.checks,
               (unsigned long long)t.failures));
}

void monequiv() {
    const Field f = Field::rational();
    Tally t;
    std::uint64_t t1 = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        Generator g = gen(f, "monequiv", i);
        const std::size_t n = g.between(1, 4);
        auto pick = [&](std::uint64_t k) {
            switch (k % 4) {
            case 0: return g.diagonal(n);
            case 1: return g.single_row(n);
            case 2: return g.single_column(n);
            default: return g.square(n);
            }
        };
        const Matrix c = pick(i), d = pick(i / 4);
        const LawReport r = check_monequiv(c, d, 6);
        t1 += r.holds;
        t.add(r.consistent());
    }
    report(6, "monoid-characterization", t.failures == 0,
           fmt("300 instances, %llu with T1, %llu disagreements", (unsigned long long)t1, (unsigned long long)t.failures));
}

void counterexample() {
    const Field f = Field::rational();
    const auto start = Clock::now();
    const TriangularizationSearch s = search_permutation_triangularization(counterexample_4x4(f));
    const double secs = seconds_since(start);
    Tally controls;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Generator g = gen(f, "counterexample", i);
        const std::size_t n = g.between(1, 4);
        const Matrix tri = g.triangular(n);
        const Matrix x = i % 2 ? tri : matmul(matmul(g.permutation(n), tri), transpose(g.permutation(n)));
        const TriangularizationSearch c = search_permutation_triangularization(x);
        controls.add(c.found.has_value() && is_triangular(matmul(matmul(c.found->first, x), transpose(c.found->second))));
    }
    const bool ok = !s.found && s.pairs_examined == 576 && controls.failures == 0 && secs < 1.0;
    report(7, "counterexample-4x4", ok,
           fmt("B4: %s among %llu pairs in %.3fs (limit 1s); controls %llu/%llu found", s.found ? "pair found" : "no pair",
               (unsigned long long)s.pairs_examined, secs, (unsigned long long)(controls.checks - controls.failures),
               (unsigned long long)controls.checks));
}

void detroot() {
    Tally t;
    for (const Field& f : {Field::prime(7), Field::prime(11)}) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            Generator g = gen(f, "detroot", i);
            const std::size_t m = g.between(1, 4), n = g.between(1, 4);
            const Matrix a = g.in_dn(m), b = g.in_dn(m);
            t.add(check_detroot_completion(a, g.in_dn(n)).holds);
            t.add(check_detroot_multiplicativity(a, b, g.square(n), g.square(n)).holds);
        }
    }
    report(8, "determinant-root", t.failures == 0,
           fmt("%llu checks over GF(7), GF(11), %llu violations", (unsigned long long)t.checks,
               (unsigned long long)t.failures));
}

void completion() {
    const Field f = Field::rational();
    Tally traced, sym, pert;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Generator g = gen(f, "trace", i);
        const FactorShape s(g.between(1, 4), g.between(1, 4));
        const Matrix x = g.square(s.size());
        const bool direct = f.eq(trace(partial_trace_1(x, s)), trace(x)) && f.eq(trace(partial_trace_2(x, s)), trace(x));
        traced.add(check_completion(CompletionKind::trace, x, s).holds && direct);
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        Generator g = gen(f, "transpose", i);
        const FactorShape s(g.between(1, 3), g.between(2, 3));
        const Matrix x = g.blockwise_symmetric(s);
        const LawReport r = check_completion(CompletionKind::transpose, x, s);
        sym.add(r.holds && r.condition_holds && r.consistent());

        // One entry above the diagonal of one block, leaving its mirror alone.
        const std::size_t bi = g.between(1, s.m()), bj = g.between(1, s.m());
        const std::size_t k = g.between(1, s.n() - 1), l = g.between(k + 1, s.n());
        const Matrix bump = scale(g.nonzero_scalar(), basis_matrix(f, s.size(), (bi - 1) * s.n() + k, (bj - 1) * s.n() + l));
        const LawReport p = check_completion(CompletionKind::transpose, add(x, bump), s);
        pert.add(!p.holds && !p.condition_holds && p.consistent());
    }
    const bool ok = traced.failures == 0 && sym.failures == 0 && pert.failures == 0;
    report(9, "completion", ok,
           fmt("trace %llu/500, symmetric %llu/100, perturbed %llu/100", (unsigned long long)(traced.checks - traced.failures),
               (unsigned long long)(sym.checks - sym.failures), (unsigned long long)(pert.checks - pert.failures)));
}

void exponential() {
    const Field f = Field::complex64();
    const auto start = Clock::now();
    Tally td, ks, dr;
    double worst_td = 0.0, worst_dr = 0.0;
    std::uint64_t nilpotent = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Generator g = gen(f, "exp-trace", i);
        const ExpReport r = check_exp_trace_det(g.with_norm(g.between(1, 6), 5.0 * g.unit(), g.coin()));
        worst_td = std::max(worst_td, r.max_deviation);
        td.add(r.max_deviation <= 1e-9);
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        Generator g = gen(f, "exp-kronsum", i);
        const std::size_t m = g.between(1, 3), n = g.between(2, 3);
        const Matrix b = g.with_norm(m, 2.0 * g.unit(), true);
        Matrix c = g.with_norm(n, 2.0 * g.unit(), true);
        if (i % 4 == 0) {
            // t N with N the nilpotent shift; the condition holds iff t = 0 or t^(m-1) = m.
            ++nilpotent;
            const double t = i % 8 == 0 ? std::pow(static_cast<double>(m), 1.0 / std::max<double>(1.0, m - 1.0))
                                        : 0.5 + g.unit();
            c = Matrix::generate(f, n, n, [&](std::size_t r, std::size_t col) {
                return col == r + 1 ? Scalar(Complex(t, 0.0)) : f.zero();
            });
        }
        ks.add(check_exp_partial_det(b, c).agrees());
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        Generator g = gen(f, "exp-detroot", i);
        const ExpReport r = check_exp_detroot(g.with_norm(g.between(1, 3), 2.0 * g.unit(), true),
                                              g.with_norm(g.between(1, 3), 2.0 * g.unit(), true));
        worst_dr = std::max(worst_dr, r.max_deviation);
        dr.add(r.holds && r.max_deviation <= 1e-8);
    }
    const double s = seconds_since(start);
    const bool ok = td.failures == 0 && ks.failures == 0 && dr.failures == 0 && s < 20.0;
    report(10, "exponential", ok,
           fmt("det/trace %llu/200 (max dev %.1e), kron-sum %llu/200 (%llu nilpotent), Det1 %llu/100 (max dev %.1e), "
               "%.2fs (limit 20s)",
               (unsigned long long)(td.checks - td.failures), worst_td, (unsigned long long)(ks.checks - ks.failures),
               (unsigned long long)nilpotent, (unsigned long long)(dr.checks - dr.failures), worst_dr, s));
}

void thompson() {
    const Field f = Field::complex64();
    Tally ineq, eq;
    double worst_gap = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Generator g = gen(f, "thompson", i);
        std::size_t m = g.between(1, 4), n = g.between(1, 4);
        while (m * n > 8) n = g.between(1, 4);
        const FactorShape s(m, n);
        const bool block_diag = i % 4 == 0;
        const Matrix b = block_diag ? g.block_diagonal_pd(s, 1e-6) : g.hermitian_pd(s.size(), 1e-6);
        const Complex lhs = det(partial_det_2(b, s)).complex();
        const Complex rhs = det(b).complex();
        ineq.add(lhs.real() >= rhs.real() - 1e-9 && std::abs(lhs.imag()) <= 1e-9);
        if (block_diag) {
            worst_gap = std::max(worst_gap, std::abs(lhs - rhs));
            eq.add(std::abs(lhs - rhs) <= 1e-9);
        }
    }
    report(11, "thompson", ineq.failures == 0 && eq.failures == 0,
           fmt("inequality %llu/200, block-diagonal equality %llu/%llu (max gap %.1e)",
               (unsigned long long)(ineq.checks - ineq.failures), (unsigned long long)(eq.checks - eq.failures),
               (unsigned long long)eq.checks, worst_gap));
}

void determinism() {
    SuiteConfig c;
    c.suite_id = "all";
    c.seed = 42;
    c.artifacts = "acceptance-replay";
    std::ostringstream a, b;
    const int ra = run_suite(c, a);
    const int rb = run_suite(c, b);
    const bool same = a.str() == b.str();
    report(12, "determinism", same && ra == rb,
           fmt("verify all --seed 42: %zu bytes, %s, exit %d/%d", a.str().size(), same ? "identical" : "differ", ra, rb));
}

}  // namespace

int main() {
    hp();
    parthp();
    mul();
    gf2();
    newton_girard();
    monequiv();
    counterexample();
    detroot();
    completion();
    exponential();
    thompson();
    determinism();
    std::printf("%d of 12 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
