#include "kpd/suite.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "kpd/detroot.hpp"
#include "kpd/expmap.hpp"
#include "kpd/laws.hpp"
#include "kpd/random.hpp"

namespace kpd {

namespace {

struct InstanceResult {
    std::uint64_t seed = 0;
    std::vector<LawReport> reports;
    std::string error;
};

using InstanceFn = std::function<std::vector<LawReport>(Generator&, const SuiteConfig&, std::uint64_t index)>;

struct SuiteDef {
    std::string id;
    std::vector<std::string> default_fields;
    std::function<bool(const Field&)> supports;
    /// Number of instances for a configuration (exhaustive suites ignore trials).
    std::function<std::uint64_t(const SuiteConfig&)> count;
    InstanceFn instance;
};

bool any_field(const Field&) { return true; }
std::uint64_t by_trials(const SuiteConfig& c) { return c.trials; }

std::size_t dim(Generator& g, const SuiteConfig& c, std::size_t cap = 0) {
    std::size_t hi = std::max<std::size_t>(1, c.max_dim);
    if (cap != 0) hi = std::min(hi, cap);
    return g.between(1, hi);
}

/// Each entry zero with probability 1/2.
Matrix sparse(Generator& g, std::size_t n) {
    const Field& f = g.field();
    return Matrix::generate(f, n, n, [&](std::size_t, std::size_t) { return g.coin() ? g.scalar() : f.zero(); });
}

Matrix structured(Generator& g, std::size_t n, std::uint64_t kind) {
    switch (kind % 7) {
    case 0: return g.square(n);
    case 1: return g.triangular(n);
    case 2: return g.zero_one(n);
    case 3: return g.rank_one(n);
    case 4: return g.diagonal(n);
    case 5: return g.permutation(n);
    default: return sparse(g, n);
    }
}

/// Random square matrix; every sixth one repeats its first row as its last.
Matrix maybe_singular(Generator& g, std::size_t n, std::uint64_t index) {
    if (index % 6 == 5 && n > 1) {
        Matrix a = g.square(n);
        return Matrix::generate(g.field(), n, n, [&](std::size_t i, std::size_t j) { return i == n ? a(1, j) : a(i, j); });
    }
    return g.square(n);
}

// --- instances ---------------------------------------------------------------

std::vector<LawReport> hp_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const std::size_t m = dim(g, c), n = dim(g, c);
    return {check_lemma_hp(g.square(m), structured(g, n, index))};
}

std::vector<LawReport> parthp_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const Field& f = g.field();
    const std::size_t m = dim(g, c), n = dim(g, c);
    const Matrix a = maybe_singular(g, m, index);
    switch (index % 4) {
    case 0: return {check_completability(a, g.square(n))};
    case 1: return {check_completability(a, g.triangular(n))};
    case 2: {
        const Matrix b = g.zero_one(n);
        return {check_completability(a, b), check_part01(a, b)};
    }
    default: {
        // Half of the 2x2 instances sit on the boundary x^2 y^2 = wxyz.
        const Scalar w = g.nonzero_scalar(), x = g.scalar(), y = g.scalar();
        const Scalar z = g.coin() ? f.div(f.mul(x, y), w) : g.scalar();
        const Matrix b(f, 2, 2, {w, x, y, z});
        const Matrix a2 = maybe_singular(g, m, index);
        if (f.characteristic() == 2) return {check_completability(a2, b)};
        return {check_2x2_boundary(b), check_completability(a2, b)};
    }
    }
}

std::vector<LawReport> mul_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const std::size_t m = dim(g, c), n = dim(g, c);
    const Matrix a = maybe_singular(g, m, index);
    const Matrix b = g.square(m);
    if (index % 3 == 2) {
        const Matrix p = g.coin() ? g.permutation(n) : g.diagonal(n);
        return {check_mulperm(a, b, g.square(n), p), check_multiplicativity(a, b, g.square(n), p)};
    }
    const Matrix cc = index % 3 == 0 ? g.square(n) : structured(g, n, index / 3);
    const Matrix d = index % 3 == 0 ? g.square(n) : structured(g, n, index / 3 + 1);
    return {check_multiplicativity(a, b, cc, d)};
}

std::vector<LawReport> sum_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const Field& f = g.field();
    const std::size_t m = dim(g, c), n = dim(g, c);
    auto [b, d] = g.disjoint_pair(n);
    if (index % 3 == 2) d = g.square(n);
    std::vector<LawReport> out{check_sum_additivity(g.square(m), b, g.square(m), d)};
    if (f.characteristic() != 2 && c.m_max >= 2) out.push_back(check_sum_iff(b, d, std::min<std::uint64_t>(c.m_max, 4), mix_seed(g.seed())));
    return out;
}

std::vector<LawReport> gf2_instance(Generator&, const SuiteConfig&, std::uint64_t index) {
    static const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {1, 1}, {1, 2}, {2, 1}};
    const auto [m, n] = shapes[index];
    return {exhaustive_gf2_multiplicativity(m, n)};
}

std::vector<Scalar> ng_tuple(const Field& f, std::uint64_t index) {
    // Tuples of {-2..2}^n, n = 1, 2, 3 in lexicographic order.
    std::size_t n = 1;
    std::uint64_t block = 5;
    while (index >= block) {
        index -= block;
        block *= 5;
        ++n;
    }
    std::vector<Scalar> xs;
    for (std::size_t k = 0; k < n; ++k) {
        xs.push_back(f.from_int(static_cast<long long>(index % 5) - 2));
        index /= 5;
    }
    return xs;
}

std::vector<LawReport> ng_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const Field& f = g.field();
    const std::vector<Scalar> xs = ng_tuple(f, index);
    std::vector<LawReport> out;
    for (std::uint64_t m = 1; m <= c.m_max; ++m) out.push_back(check_newton_girard(f, xs, m));
    out.push_back(check_lemma_ng(f, xs, std::max<std::uint64_t>(c.m_max, xs.size())));
    return out;
}

Matrix monoid_factor(Generator& g, std::size_t n, std::uint64_t kind, bool left) {
    switch (kind % 5) {
    case 0: return g.diagonal(n);
    case 1: return left ? g.single_column(n) : g.single_row(n);
    case 2: return g.monomial(n);
    case 3: return sparse(g, n);
    default: return g.square(n);
    }
}

/// 3x3 pair whose (1,1) entry of CD is the sum of three terms t, all other
/// entries zero. t = (2,2,-1) satisfies the m = 2 law without a single-term
/// sum; t = (1,1,-1) has a single-term sum but breaks the m = 2 law.
std::pair<Matrix, Matrix> monequiv_gadget(Generator& g, bool squares_only) {
    const Field& f = g.field();
    const Scalar s = g.nonzero_scalar();
    const long long lead = squares_only ? 2 : 1;
    const std::vector<long long> row = {lead, lead, -1};
    const Matrix c = Matrix::generate(f, 3, 3, [&](std::size_t i, std::size_t j) {
        return i == 1 ? f.mul(s, f.from_int(row[j - 1])) : f.zero();
    });
    const Matrix d = Matrix::generate(f, 3, 3, [&](std::size_t, std::size_t j) { return j == 1 ? f.one() : f.zero(); });
    return {c, d};
}

std::vector<LawReport> monequiv_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    if (index % 6 == 5 && c.m_max >= 3) {
        const auto [cc, d] = monequiv_gadget(g, index % 12 == 5);
        return {check_monequiv(cc, d, c.m_max), check_submatrix_forms(cc, c.m_max)};
    }
    const std::size_t n = dim(g, c, static_cast<std::size_t>(c.m_max));
    const Matrix cc = monoid_factor(g, n, index, true);
    const Matrix d = monoid_factor(g, n, index / 5, false);
    return {check_monequiv(cc, d, c.m_max), check_submatrix_forms(cc, c.m_max)};
}

Matrix monoid_2x2_factor(Generator& g, std::uint64_t kind) {
    switch (kind % 4) {
    case 0: return g.diagonal(2);
    case 1: return g.single_column(2);
    case 2: return g.single_row(2);
    default: return sparse(g, 2);
    }
}

std::vector<LawReport> monoid2_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    return {check_monoid_2x2(monoid_2x2_factor(g, index), monoid_2x2_factor(g, index / 4), c.m_max)};
}

std::vector<LawReport> phi_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const std::size_t n = dim(g, c, 3);
    const Matrix cc = index % 2 ? sparse(g, n) : g.square(n);
    const Matrix d = index % 3 ? monoid_factor(g, n, index, false) : g.square(n);
    return {check_phi(cc, d, std::min<std::uint64_t>(c.m_max, 4))};
}

std::vector<LawReport> detroot_instance(Generator& g, const SuiteConfig& c, std::uint64_t) {
    const std::size_t m = dim(g, c, 3), n = dim(g, c, 3);
    const Matrix a = g.in_dn(m), b = g.in_dn(m);
    const Matrix cc = g.in_dn(n), d = g.square(n);
    return {check_detroot_completion(a, cc), check_detroot_multiplicativity(a, b, g.square(n), d)};
}

Matrix perturbed_blockwise(Generator& g, const FactorShape& shape) {
    const Field& f = g.field();
    const Matrix base = g.blockwise_symmetric(shape);
    const std::size_t n = shape.n();
    const std::size_t bi = g.between(1, shape.m()), bj = g.between(1, shape.m());
    const std::size_t k = g.between(1, n - 1), l = g.between(k + 1, n);
    const Scalar bump = g.nonzero_scalar();
    const std::size_t row = (bi - 1) * n + k, col = (bj - 1) * n + l;
    return Matrix::generate(f, base.rows(), base.cols(), [&](std::size_t i, std::size_t j) {
        return i == row && j == col ? f.add(base(i, j), bump) : base(i, j);
    });
}

std::vector<LawReport> completion_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const std::size_t m = dim(g, c, 3), n = dim(g, c, 3);
    const FactorShape shape(m, n);
    std::vector<LawReport> out{check_completion(CompletionKind::trace, g.square(shape.size()), shape)};
    const FactorShape tshape(m, std::max<std::size_t>(n, 2));
    out.push_back(check_completion(CompletionKind::transpose,
                                   index % 2 ? perturbed_blockwise(g, tshape) : g.blockwise_symmetric(tshape), tshape));
    const Matrix kron_input = kron(maybe_singular(g, m, index), structured(g, n, index));
    out.push_back(check_completion(CompletionKind::det, index % 4 == 3 ? g.square(shape.size()) : kron_input, shape));
    return out;
}

LawReport from_exp(const ExpReport& e, Relation relation, std::vector<std::pair<std::string, Matrix>> inputs) {
    LawReport r;
    r.law_id = e.law_id;
    r.relation = relation;
    r.holds = e.holds;
    r.condition_holds = e.condition_holds;
    r.inputs = std::move(inputs);
    r.witnesses = {{"lhs", e.lhs}, {"rhs", e.rhs}};
    std::ostringstream note;
    note.precision(3);
    note << "deviation " << e.max_deviation << " tolerance " << e.tolerance;
    r.note = note.str();
    return r;
}

/// Real complex64 matrix whose strictly upper part is random and the rest zero.
Matrix nilpotent(Generator& g, std::size_t n, double t) {
    const Field& f = g.field();
    return Matrix::generate(f, n, n, [&](std::size_t i, std::size_t j) {
        if (n == 2) return i == 1 && j == 2 ? Scalar(Complex(t, 0.0)) : f.zero();
        return j > i ? Scalar(Complex(t * (2.0 * g.unit() - 1.0), 0.0)) : f.zero();
    });
}

std::vector<LawReport> exp_instance(Generator& g, const SuiteConfig& c, std::uint64_t index) {
    const bool real = index % 2 == 0;
    switch (index % 4) {
    case 0: {
        const Matrix a = g.with_norm(dim(g, c, 6), 5.0 * (1.0 - g.unit()), false);
        return {from_exp(check_exp_trace_det(a), Relation::identity, {{"A", a}})};
    }
    case 1: {
        const std::size_t m = g.between(2, 3);
        const Matrix b = g.with_norm(m, 2.0 * g.unit(), false);
        Matrix cc = g.with_norm(dim(g, c, 3), 2.0 * g.unit(), false);
        switch ((index / 4) % 4) {
        case 0: cc = nilpotent(g, 2, 4.0 * g.unit() - 2.0); break;
        case 1: cc = nilpotent(g, 2, std::pow(static_cast<double>(m), 1.0 / static_cast<double>(m - 1))); break;
        case 2: cc = g.with_norm(2, 1.0, true); cc = Matrix::generate(g.field(), 2, 2, [&](std::size_t i, std::size_t j) {
                    return i == j ? cc(i, j) : g.field().zero();
                }); break;
        default: break;
        }
        return {from_exp(check_exp_partial_det(b, cc), Relation::equivalence, {{"B", b}, {"C", cc}})};
    }
    case 2: {
        const Matrix b = g.with_norm(dim(g, c, 3), 2.0 * g.unit(), true);
        const Matrix cc = g.with_norm(dim(g, c, 3), 2.0 * g.unit(), true);
        return {from_exp(check_exp_detroot(b, cc), Relation::identity, {{"B", b}, {"C", cc}})};
    }
    default: {
        const Matrix b = g.with_norm(dim(g, c, 3), 2.0 * g.unit(), real);
        const Matrix cc = g.with_norm(dim(g, c, 3), 2.0 * g.unit(), real);
        return {from_exp(check_exp_kron_sum(b, cc), Relation::identity, {{"B", b}, {"C", cc}})};
    }
    }
}

std::vector<LawReport> thompson_instance(Generator& g, const SuiteConfig&, std::uint64_t index) {
    static const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {1, 8}, {8, 1}};
    const auto [m, n] = shapes[g.below(std::size(shapes))];
    const FactorShape shape(m, n);
    const Matrix b = index % 2 ? g.block_diagonal_pd(shape, 1e-6) : g.hermitian_pd(shape.size(), 1e-6);
    return {check_thompson_psd(b, shape)};
}

LawReport triangularization_report(const Matrix& b, bool control) {
    const TriangularizationSearch s = search_permutation_triangularization(b);
    LawReport r;
    r.law_id = control ? "triangularization-control" : "counterexample-4x4";
    r.inputs = {{"B", b}};
    r.holds = control == s.found.has_value();
    r.note = (s.found ? "(P,Q) found after " : "no (P,Q) found among ") + std::to_string(s.pairs_examined);
    return r;
}

std::vector<LawReport> counterexample_instance(Generator& g, const SuiteConfig&, std::uint64_t index) {
    if (index == 0) return {triangularization_report(counterexample_4x4(g.field()), false)};
    const Matrix t = g.triangular(4);
    const Matrix control = index % 2 ? t : matmul(matmul(g.permutation(4), t), g.permutation(4));
    return {triangularization_report(control, true)};
}

std::vector<LawReport> false_completion_instance(Generator& g, const SuiteConfig& c, std::uint64_t) {
    const std::size_t m = g.between(2, std::max<std::size_t>(2, c.max_dim)), n = g.between(2, std::max<std::size_t>(2, c.max_dim));
    return {check_naive_completion(g.square(m), g.square(n))};
}

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> suites = {
        {"hp", {"rat", "gf:7"}, any_field, by_trials, hp_instance},
        {"sum", {"rat", "gf:7"}, any_field, by_trials, sum_instance},
        {"parthp", {"rat", "gf:7"}, any_field, by_trials, parthp_instance},
        {"mul", {"rat", "gf:7"}, any_field, by_trials, mul_instance},
        {"gf2-exhaustive", {"gf:2"}, [](const Field& f) { return f.kind() == FieldKind::prime && f.modulus() == 2; },
         [](const SuiteConfig&) -> std::uint64_t { return 4; }, gf2_instance},
        {"newton-girard", {"rat"}, [](const Field& f) { return f.characteristic() == 0; },
         [](const SuiteConfig&) -> std::uint64_t { return 5 + 25 + 125; }, ng_instance},
        {"monequiv", {"rat"}, [](const Field& f) { return f.is_ordered(); }, by_trials, monequiv_instance},
        {"monoid-2x2", {"rat"}, [](const Field& f) { return f.is_ordered(); }, by_trials, monoid2_instance},
        {"phi", {"rat", "gf:7"}, any_field, by_trials, phi_instance},
        {"detroot", {"gf:7", "gf:11"}, any_field, by_trials, detroot_instance},
        {"completion", {"rat"}, any_field, by_trials, completion_instance},
        {"exp", {"c64"}, [](const Field& f) { return f.kind() == FieldKind::complex64; }, by_trials, exp_instance},
        {"thompson", {"c64"}, [](const Field& f) { return f.kind() == FieldKind::complex64; }, by_trials, thompson_instance},
        {"counterexample-4x4", {"rat"}, any_field, [](const SuiteConfig& c) { return 1 + std::min<std::uint64_t>(c.trials, 50); },
         counterexample_instance},
        {"false-completion", {"rat"}, any_field, by_trials, false_completion_instance},
    };
    return suites;
}

const SuiteDef& find_suite(const std::string& id) {
    for (const auto& s : registry()) {
        if (s.id == id) return s;
    }
    throw Error(Errc::invalid_argument, "unknown suite '" + id + "'");
}

std::vector<Field> fields_for(const SuiteDef& s, const SuiteConfig& c, bool inside_all) {
    if (c.field) {
        if (s.supports(*c.field)) return {*c.field};
        if (!inside_all) throw Error(Errc::unsupported_field, "suite '" + s.id + "' does not support field " + c.field->name());
    }
    std::vector<Field> out;
    for (const auto& name : s.default_fields) out.push_back(Field::parse(name));
    return out;
}

std::vector<InstanceResult> run_instances(const SuiteDef& s, const Field& f, const SuiteConfig& c) {
    const std::uint64_t count = s.count(c);
    std::vector<InstanceResult> results(count);
    std::atomic<std::uint64_t> next{0};
    const std::string stream = s.id + "/" + f.name();
    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
            InstanceResult& r = results[i];
            r.seed = instance_seed(c.seed, stream, i);
            try {
                Generator gen(f, r.seed);
                r.reports = s.instance(gen, c, i);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(c.jobs, count));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char ch : name) {
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-') out += ch;
    }
    return out;
}

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::identity: return "identity";
    case Relation::equivalence: return "equivalence";
    case Relation::implication: return "implication";
    }
    return "identity";
}

Relation parse_relation(const std::string& s) {
    if (s == "identity") return Relation::identity;
    if (s == "equivalence") return Relation::equivalence;
    if (s == "implication") return Relation::implication;
    throw Error(Errc::parse_error, "unknown relation '" + s + "'");
}

void print_line(std::ostream& out, const LawReport& r, const Field& f, std::uint64_t seed, const std::string& artifact) {
    out << r.law_id << ' ' << (r.consistent() ? "pass" : "FAIL") << ' ' << f.name() << " seed=" << seed << ' '
        << (artifact.empty() ? "-" : artifact);
    if (!r.note.empty()) out << "  # " << r.note;
    out << '\n';
}

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
};

Tally run_one(const SuiteDef& s, const SuiteConfig& c, bool inside_all, std::ostream& out) {
    Tally tally;
    for (const Field& f : fields_for(s, c, inside_all)) {
        const auto results = run_instances(s, f, c);
        Tally local;
        for (std::uint64_t i = 0; i < results.size(); ++i) {
            const InstanceResult& res = results[i];
            if (!res.error.empty()) {
                ++local.checks;
                ++local.failures;
                out << s.id << " FAIL " << f.name() << " seed=" << res.seed << " -  # error: " << res.error << '\n';
                continue;
            }
            for (std::size_t k = 0; k < res.reports.size(); ++k) {
                const LawReport& r = res.reports[k];
                ++local.checks;
                std::string artifact;
                if (!r.consistent()) {
                    ++local.failures;
                    artifact = (std::filesystem::path(c.artifacts) /
                                (s.id + "-" + sanitize(f.name()) + "-" + std::to_string(i) + "-" + std::to_string(k)))
                                   .string();
                    write_replay(artifact, r, f, res.seed);
                }
                print_line(out, r, f, res.seed, artifact);
            }
        }
        out << "# " << s.id << ' ' << f.name() << ": " << local.checks << " checks, " << local.failures << " failures\n";
        tally.checks += local.checks;
        tally.failures += local.failures;
    }
    return tally;
}

std::map<std::string, std::function<LawReport(const LawReport&, const Field&)>> rerun_table() {
    using R = const LawReport&;
    auto u = [](R r, const char* name) { return static_cast<std::uint64_t>(r.param(name)); };
    auto xs_of = [](R r) {
        const Matrix& col = r.input("xs");
        return std::vector<Scalar>(col.entries().begin(), col.entries().end());
    };
    auto shape_of = [u](R r) { return FactorShape(u(r, "m"), u(r, "n")); };
    std::map<std::string, std::function<LawReport(R, const Field&)>> t;
    t["lemma-hp"] = [](R r, const Field&) { return check_lemma_hp(r.input("A"), r.input("B")); };
    t["parthp"] = [](R r, const Field&) { return check_completability(r.input("A"), r.input("B")); };
    t["part01"] = [](R r, const Field&) { return check_part01(r.input("A"), r.input("B")); };
    t["boundary-2x2"] = [](R r, const Field&) { return check_2x2_boundary(r.input("B")); };
    t["mul"] = [](R r, const Field&) { return check_multiplicativity(r.input("A"), r.input("B"), r.input("C"), r.input("D")); };
    t["mulperm"] = [](R r, const Field&) { return check_mulperm(r.input("A"), r.input("B"), r.input("C"), r.input("P")); };
    t["sum"] = [](R r, const Field&) { return check_sum_additivity(r.input("A"), r.input("B"), r.input("C"), r.input("D")); };
    t["sum-iff"] = [u](R r, const Field&) { return check_sum_iff(r.input("B"), r.input("C"), u(r, "m_max"), u(r, "seed")); };
    t["newton-girard"] = [u, xs_of](R r, const Field& f) { return check_newton_girard(f, xs_of(r), u(r, "m")); };
    t["lemma-ng"] = [u, xs_of](R r, const Field& f) { return check_lemma_ng(f, xs_of(r), u(r, "m_max")); };
    t["monequiv"] = [u](R r, const Field&) { return check_monequiv(r.input("C"), r.input("D"), u(r, "m_max")); };
    t["submatrix-forms"] = [u](R r, const Field&) { return check_submatrix_forms(r.input("C"), u(r, "m_max")); };
    t["monoid-2x2"] = [u](R r, const Field&) { return check_monoid_2x2(r.input("C"), r.input("D"), u(r, "m_max")); };
    t["gf2-exhaustive"] = [u](R r, const Field&) {
        return exhaustive_gf2_multiplicativity(u(r, "m"), u(r, "n"), u(r, "seed"), u(r, "samples"));
    };
    t["counterexample-4x4"] = [](R r, const Field&) { return triangularization_report(r.input("B"), false); };
    t["triangularization-control"] = [](R r, const Field&) { return triangularization_report(r.input("B"), true); };
    t["completion-trace"] = [shape_of](R r, const Field&) { return check_completion(CompletionKind::trace, r.input("M"), shape_of(r)); };
    t["completion-det"] = [shape_of](R r, const Field&) { return check_completion(CompletionKind::det, r.input("M"), shape_of(r)); };
    t["completion-transpose"] = [shape_of](R r, const Field&) {
        return check_completion(CompletionKind::transpose, r.input("M"), shape_of(r));
    };
    t["phi"] = [u](R r, const Field&) { return check_phi(r.input("C"), r.input("D"), u(r, "m_max")); };
    t["thompson"] = [shape_of](R r, const Field&) { return check_thompson_psd(r.input("B"), shape_of(r)); };
    t["naive-completion"] = [](R r, const Field&) { return check_naive_completion(r.input("A"), r.input("B")); };
    t["detroot-completion"] = [](R r, const Field&) { return check_detroot_completion(r.input("A"), r.input("C")); };
    t["detroot-multiplicativity"] = [](R r, const Field&) {
        return check_detroot_multiplicativity(r.input("A"), r.input("B"), r.input("C"), r.input("D"));
    };
    t["exp-trace-det"] = [](R r, const Field&) {
        return from_exp(check_exp_trace_det(r.input("A")), Relation::identity, {{"A", r.input("A")}});
    };
    t["exp-kron-sum"] = [](R r, const Field&) {
        return from_exp(check_exp_kron_sum(r.input("B"), r.input("C")), Relation::identity, {{"B", r.input("B")}, {"C", r.input("C")}});
    };
    t["exp-partial-det"] = [](R r, const Field&) {
        return from_exp(check_exp_partial_det(r.input("B"), r.input("C")), Relation::equivalence,
                        {{"B", r.input("B")}, {"C", r.input("C")}});
    };
    t["exp-detroot"] = [](R r, const Field&) {
        return from_exp(check_exp_detroot(r.input("B"), r.input("C")), Relation::identity, {{"B", r.input("B")}, {"C", r.input("C")}});
    };
    return t;
}

}  // namespace

std::vector<std::string> suite_ids() {
    std::vector<std::string> ids;
    for (const auto& s : registry()) ids.push_back(s.id);
    ids.push_back("all");
    return ids;
}

int run_suite(const SuiteConfig& config, std::ostream& out) {
    if (config.trials == 0) throw Error(Errc::invalid_argument, "trials must be positive");
    if (config.max_dim == 0) throw Error(Errc::invalid_argument, "max-dim must be positive");
    if (config.m_max == 0) throw Error(Errc::invalid_argument, "m-max must be positive");
    std::vector<const SuiteDef*> selected;
    const bool all = config.suite_id == "all";
    if (all) {
        for (const auto& s : registry()) {
            if (s.id != "false-completion") selected.push_back(&s);
        }
    } else {
        selected.push_back(&find_suite(config.suite_id));
        fields_for(*selected.front(), config, false);
    }

    out << "# verify " << config.suite_id << " field=" << (config.field ? config.field->name() : "default")
        << " trials=" << config.trials << " seed=" << config.seed << " max-dim=" << config.max_dim
        << " m-max=" << config.m_max << '\n';
    Tally total;
    for (const SuiteDef* s : selected) {
        const Tally t = run_one(*s, config, all, out);
        total.checks += t.checks;
        total.failures += t.failures;
    }
    out << "# total: " << total.checks << " checks, " << total.failures << " failures\n";
    return total.failures == 0 ? 0 : 1;
}

void write_replay(const std::string& dir, const LawReport& report, const Field& field, std::uint64_t seed) {
    std::filesystem::create_directories(dir);
    std::ofstream meta(std::filesystem::path(dir) / "report.txt");
    meta << "law " << report.law_id << '\n'
         << "field " << field.name() << '\n'
         << "seed " << seed << '\n'
         << "relation " << relation_name(report.relation) << '\n'
         << "holds " << report.holds << '\n'
         << "condition " << report.condition_holds << '\n';
    for (const auto& [name, value] : report.params) meta << "param " << name << ' ' << value << '\n';
    for (const auto& [name, m] : report.inputs) {
        const std::string file = name + ".mat";
        write_matrix_file((std::filesystem::path(dir) / file).string(), m);
        meta << "input " << name << ' ' << file << '\n';
    }
    for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
        const std::string file = "witness-" + std::to_string(k) + ".mat";
        write_matrix_file((std::filesystem::path(dir) / file).string(), report.witnesses[k].second);
        meta << "witness " << report.witnesses[k].first << ' ' << file << '\n';
    }
    if (!report.note.empty()) meta << "note " << report.note << '\n';
    if (!meta) throw Error(Errc::invalid_input, "cannot write replay directory " + dir);
}

LawReport rerun(const LawReport& stored, const Field& field) {
    static const auto table = rerun_table();
    const auto it = table.find(stored.law_id);
    if (it == table.end()) throw Error(Errc::invalid_input, "no replay handler for law '" + stored.law_id + "'");
    return it->second(stored, field);
}

int replay(const std::string& dir, std::ostream& out) {
    const std::filesystem::path root(dir);
    std::ifstream meta(root / "report.txt");
    if (!meta) throw Error(Errc::invalid_input, "no report.txt in " + dir);
    LawReport stored;
    std::optional<Field> field;
    std::uint64_t seed = 0;
    std::string line;
    while (std::getline(meta, line)) {
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "law") {
            in >> stored.law_id;
        } else if (key == "field") {
            std::string name;
            in >> name;
            field = Field::parse(name);
        } else if (key == "seed") {
            in >> seed;
        } else if (key == "relation") {
            std::string rel;
            in >> rel;
            stored.relation = parse_relation(rel);
        } else if (key == "param") {
            std::string name;
            long long value = 0;
            in >> name >> value;
            stored.params.emplace_back(name, value);
        } else if (key == "input") {
            std::string name, file;
            in >> name >> file;
            stored.inputs.emplace_back(name, read_matrix_file((root / file).string()));
        }
    }
    if (stored.law_id.empty() || !field) throw Error(Errc::invalid_input, "incomplete report.txt in " + dir);
    const LawReport again = rerun(stored, *field);
    print_line(out, again, *field, seed, dir);
    return again.consistent() ? 0 : 1;
}

}  // namespace kpd
