#include "kpd/laws.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kpd/random.hpp"

namespace kpd {

const Matrix& LawReport::input(const std::string& name) const {
    for (const auto& [key, value] : inputs) {
        if (key == name) return value;
    }
    throw Error(Errc::invalid_argument, "report '" + law_id + "' has no input '" + name + "'");
}

long long LawReport::param(const std::string& name) const {
    for (const auto& [key, value] : params) {
        if (key == name) return value;
    }
    throw Error(Errc::invalid_argument, "report '" + law_id + "' has no parameter '" + name + "'");
}

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw Error(Errc::shape_mismatch, std::string(what) + " must be square");
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    require_square(a, what);
    require_square(b, what);
    if (a.rows() != b.rows()) throw Error(Errc::shape_mismatch, std::string(what) + " must share a dimension");
    if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, std::string(what) + " over different fields");
}

void require_ordered(const Field& f, const char* what) {
    if (!f.is_ordered()) throw Error(Errc::unsupported_field, std::string(what) + " needs an ordered field, got " + f.name());
}

Matrix one(const Field& f, const Scalar& s) { return scalar_matrix(f, s); }

FactorShape shape_of(const Matrix& a, const Matrix& b) { return FactorShape(a.rows(), b.rows()); }

bool completion_condition(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    const std::uint64_t m = a.rows();
    return f.is_zero(det(a)) || f.eq(det(hadamard_power(b, m)), f.pow(det(b), m));
}

bool hadamard_distributes(const Matrix& c, const Matrix& d, std::uint64_t m) {
    return hadamard_power(matmul(c, d), m) == matmul(hadamard_power(c, m), hadamard_power(d, m));
}

}  // namespace

LawReport check_lemma_hp(const Matrix& a, const Matrix& b) {
    require_square(a, "A");
    require_square(b, "B");
    LawReport r;
    r.law_id = "lemma-hp";
    r.inputs = {{"A", a}, {"B", b}};
    const Matrix lhs = partial_det_1(kron(a, b), shape_of(a, b));
    const Matrix rhs = scale(det(a), hadamard_power(b, a.rows()));
    r.holds = lhs == rhs;
    r.witnesses = {{"lhs", lhs}, {"rhs", rhs}};
    return r;
}

LawReport check_completability(const Matrix& a, const Matrix& b) {
    require_square(a, "A");
    require_square(b, "B");
    const Field& f = a.field();
    LawReport r;
    r.law_id = "parthp";
    r.relation = Relation::equivalence;
    r.inputs = {{"A", a}, {"B", b}};
    const Matrix big = kron(a, b);
    const Scalar lhs = det(partial_det_1(big, shape_of(a, b)));
    const Scalar rhs = det(big);
    r.holds = f.eq(lhs, rhs);
    r.condition_holds = completion_condition(a, b);
    r.witnesses = {{"det(det1(A(x)B))", one(f, lhs)}, {"det(A(x)B)", one(f, rhs)}};
    return r;
}

LawReport check_part01(const Matrix& a, const Matrix& b) {
    require_square(a, "A");
    require_square(b, "B");
    if (!is_zero_one(b)) throw Error(Errc::invalid_argument, "B must be a (0,1)-matrix");
    const Field& f = a.field();
    LawReport r;
    r.law_id = "part01";
    r.relation = Relation::equivalence;
    r.inputs = {{"A", a}, {"B", b}};
    const Matrix big = kron(a, b);
    const Scalar lhs = det(partial_det_1(big, shape_of(a, b)));
    const Scalar rhs = det(big);
    const Scalar det_b = det(b);
    r.holds = f.eq(lhs, rhs);
    r.condition_holds = f.is_zero(f.mul(det(a), det_b)) || f.is_one(f.pow(det_b, a.rows() - 1));
    r.witnesses = {{"det(det1(A(x)B))", one(f, lhs)}, {"det(A(x)B)", one(f, rhs)}};
    return r;
}

LawReport check_2x2_boundary(const Matrix& b) {
    if (b.rows() != 2 || b.cols() != 2) throw Error(Errc::shape_mismatch, "boundary family is 2x2");
    const Field& f = b.field();
    // det(B^(2)) - det(B)^2 = 2(wxyz - x^2 y^2), so the criterion is empty in characteristic 2.
    if (f.characteristic() == 2) throw Error(Errc::unsupported_field, "2x2 boundary criterion needs characteristic != 2");
    LawReport r;
    r.law_id = "boundary-2x2";
    r.relation = Relation::equivalence;
    r.inputs = {{"B", b}};
    const Scalar &w = b(1, 1), &x = b(1, 2), &y = b(2, 1), &z = b(2, 2);
    r.holds = f.eq(det(hadamard_power(b, 2)), f.pow(det(b), 2));
    r.condition_holds = f.eq(f.mul(f.mul(x, x), f.mul(y, y)), f.mul(f.mul(w, x), f.mul(y, z)));
    return r;
}

LawReport check_multiplicativity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    require_same_dim(a, b, "A and B");
    require_same_dim(c, d, "C and D");
    const Field& f = a.field();
    LawReport r;
    r.law_id = "mul";
    r.relation = Relation::equivalence;
    r.inputs = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
    const FactorShape shape = shape_of(a, c);
    const Matrix lhs = partial_det_1(matmul(kron(a, c), kron(b, d)), shape);
    const Matrix rhs = matmul(partial_det_1(kron(a, c), shape), partial_det_1(kron(b, d), shape));
    r.holds = lhs == rhs;
    r.condition_holds = f.is_zero(det(matmul(a, b))) || hadamard_distributes(c, d, a.rows());
    r.witnesses = {{"lhs", lhs}, {"rhs", rhs}};
    return r;
}

LawReport check_mulperm(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& p) {
    require_same_dim(a, b, "A and B");
    require_same_dim(c, p, "C and P");
    if (!is_permutation(p) && !is_diagonal(p)) throw Error(Errc::invalid_argument, "P must be a permutation or diagonal matrix");
    LawReport r;
    r.law_id = "mulperm";
    r.inputs = {{"A", a}, {"B", b}, {"C", c}, {"P", p}};
    const FactorShape shape = shape_of(a, c);
    const Matrix ab = matmul(a, b);
    const Matrix left_lhs = partial_det_1(kron(ab, matmul(p, c)), shape);
    const Matrix left_rhs = matmul(partial_det_1(kron(a, p), shape), partial_det_1(kron(b, c), shape));
    const Matrix right_lhs = partial_det_1(kron(ab, matmul(c, p)), shape);
    const Matrix right_rhs = matmul(partial_det_1(kron(a, c), shape), partial_det_1(kron(b, p), shape));
    r.holds = left_lhs == left_rhs && right_lhs == right_rhs;
    r.witnesses = {{"PC-lhs", left_lhs}, {"PC-rhs", left_rhs}, {"CP-lhs", right_lhs}, {"CP-rhs", right_rhs}};
    return r;
}

LawReport check_sum_additivity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    require_same_dim(a, c, "A and C");
    require_same_dim(b, d, "B and D");
    LawReport r;
    r.law_id = "sum";
    r.relation = Relation::implication;
    r.inputs = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
    const FactorShape shape = shape_of(a, b);
    const Matrix lhs = partial_det_1(add(kron(a, b), kron(c, d)), shape);
    const Matrix rhs = add(partial_det_1(kron(a, b), shape), partial_det_1(kron(c, d), shape));
    r.holds = lhs == rhs;
    r.condition_holds = is_zero(hadamard(b, d));
    r.witnesses = {{"lhs", lhs}, {"rhs", rhs}};
    return r;
}

LawReport check_sum_iff(const Matrix& b, const Matrix& c, std::uint64_t m_max, std::uint64_t seed) {
    require_same_dim(b, c, "B and C");
    const Field& f = b.field();
    if (f.characteristic() == 2) throw Error(Errc::unsupported_field, "sum characterization fails in characteristic 2");
    if (m_max < 2) throw Error(Errc::invalid_argument, "sum characterization needs m_max >= 2");
    LawReport r;
    r.law_id = "sum-iff";
    r.relation = Relation::equivalence;
    r.inputs = {{"B", b}, {"C", c}};
    r.params = {{"m_max", static_cast<long long>(m_max)}, {"seed", static_cast<long long>(seed)}};
    Generator gen(f, seed);
    const Matrix bc = add(b, c);
    bool additive = true;
    std::uint64_t first_failure = 0;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const Matrix a = gen.nonsingular(m);
        const FactorShape shape(m, b.rows());
        const Matrix lhs = partial_det_1(kron(a, bc), shape);
        const Matrix rhs = add(partial_det_1(kron(a, b), shape), partial_det_1(kron(a, c), shape));
        if (!(lhs == rhs) && additive) {
            additive = false;
            first_failure = m;
        }
    }
    r.holds = additive;
    r.condition_holds = is_zero(hadamard(b, c));
    if (!additive) r.note = "additivity first fails at m=" + std::to_string(first_failure);
    return r;
}

Scalar power_sum(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m) {
    if (m < 1) throw Error(Errc::invalid_argument, "power sum index must be at least 1");
    Scalar acc = f.zero();
    for (const auto& x : xs) acc = f.add(acc, f.pow(x, m));
    return acc;
}

Scalar elementary_symmetric(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m) {
    if (m < 1) throw Error(Errc::invalid_argument, "elementary symmetric index must be at least 1");
    // e[k] after processing a prefix of xs.
    std::vector<Scalar> e(m + 1, f.zero());
    e[0] = f.one();
    for (const auto& x : xs) {
        for (std::uint64_t k = m; k >= 1; --k) e[k] = f.add(e[k], f.mul(e[k - 1], x));
    }
    return e[m];
}

Scalar newton_girard_det(const Field& f, const std::vector<Scalar>& es) {
    const std::size_t m = es.size();
    if (m < 1) throw Error(Errc::invalid_argument, "Newton-Girard determinant needs e_1..e_m with m >= 1");
    const Matrix ng = Matrix::generate(f, m, m, [&](std::size_t i, std::size_t j) {
        if (j == 1) return f.mul(f.from_int(static_cast<long long>(i)), es[i - 1]);
        if (j == i + 1) return f.one();
        if (j <= i) return es[i - j];
        return f.zero();
    });
    return det(ng);
}

namespace {

Matrix column_of(const Field& f, const std::vector<Scalar>& xs) {
    if (xs.empty()) throw Error(Errc::invalid_argument, "empty variable list");
    return Matrix(f, xs.size(), 1, xs);
}

}  // namespace

LawReport check_newton_girard(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m) {
    LawReport r;
    r.law_id = "newton-girard";
    r.inputs = {{"xs", column_of(f, xs)}};
    r.params = {{"m", static_cast<long long>(m)}};
    std::vector<Scalar> es;
    for (std::uint64_t k = 1; k <= m; ++k) es.push_back(elementary_symmetric(f, xs, k));
    const Scalar lhs = newton_girard_det(f, es);
    const Scalar rhs = power_sum(f, xs, m);
    r.holds = f.eq(lhs, rhs);
    r.witnesses = {{"det", one(f, lhs)}, {"p_m", one(f, rhs)}};
    return r;
}

LawReport check_lemma_ng(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m_max) {
    if (f.characteristic() != 0) throw Error(Errc::unsupported_field, "power-sum lemma needs characteristic 0");
    if (m_max < xs.size()) throw Error(Errc::invalid_argument, "m_max must be at least the number of variables");
    LawReport r;
    r.law_id = "lemma-ng";
    r.relation = Relation::equivalence;
    r.inputs = {{"xs", column_of(f, xs)}};
    r.params = {{"m_max", static_cast<long long>(m_max)}};
    const Scalar e1 = elementary_symmetric(f, xs, 1);
    bool powers = true;
    for (std::uint64_t m = 1; m <= m_max && powers; ++m) powers = f.eq(power_sum(f, xs, m), f.pow(e1, m));
    bool pairwise = true;
    for (std::size_t j = 0; j < xs.size() && pairwise; ++j) {
        for (std::size_t k = j + 1; k < xs.size() && pairwise; ++k) pairwise = f.is_zero(f.mul(xs[j], xs[k]));
    }
    r.holds = powers;
    r.condition_holds = pairwise;
    return r;
}

LawReport check_monequiv(const Matrix& c, const Matrix& d, std::uint64_t m_max) {
    require_same_dim(c, d, "C and D");
    const Field& f = c.field();
    require_ordered(f, "monoid characterization");
    const std::size_t n = c.rows();
    if (m_max < n) throw Error(Errc::invalid_argument, "m_max must be at least n");
    LawReport r;
    r.law_id = "monequiv";
    r.relation = Relation::equivalence;
    r.inputs = {{"C", c}, {"D", d}};
    r.params = {{"m_max", static_cast<long long>(m_max)}};

    bool t1 = true;
    for (std::uint64_t m = 1; m <= m_max && t1; ++m) t1 = hadamard_distributes(c, d, m);
    const bool t2a = hadamard_distributes(c, d, 2);

    const Matrix cd = matmul(c, d);
    bool t2b = true;
    bool cond = true;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            bool witnessed = false;
            for (std::size_t k = 1; k <= n; ++k) {
                const Scalar term = f.mul(c(i, k), d(k, j));
                witnessed = witnessed || f.eq(cd(i, j), term);
                for (std::size_t k2 = k + 1; k2 <= n; ++k2) {
                    if (!f.is_zero(f.mul(term, f.mul(c(i, k2), d(k2, j))))) cond = false;
                }
            }
            t2b = t2b && witnessed;
        }
    }
    r.holds = t1;
    r.condition_holds = t2a && t2b;
    r.side_checks = r.condition_holds == cond;
    r.note = std::string("T1=") + (t1 ? "1" : "0") + " T2a=" + (t2a ? "1" : "0") + " T2b=" + (t2b ? "1" : "0") +
             " COND=" + (cond ? "1" : "0");
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> classify_2x2_submatrices(const Matrix& c) {
    require_square(c, "C");
    const Field& f = c.field();
    auto prod = [&](const Scalar& w, const Scalar& x, const Scalar& y, const Scalar& z) {
        return f.mul(f.mul(w, x), f.mul(y, z));
    };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= c.rows(); ++i) {
        for (std::size_t j = i + 1; j <= c.rows(); ++j) {
            const Scalar &ii = c(i, i), &ij = c(i, j), &ji = c(j, i), &jj = c(j, j);
            const bool bad = !f.is_zero(prod(ii, ii, ij, ji)) || !f.is_zero(prod(ii, ij, ij, jj)) ||
                             !f.is_zero(prod(jj, jj, ji, ij)) || !f.is_zero(prod(ji, ii, jj, ji));
            if (bad) out.emplace_back(i, j);
        }
    }
    return out;
}

LawReport check_submatrix_forms(const Matrix& c, std::uint64_t m_max) {
    require_ordered(c.field(), "submatrix forms");
    LawReport r;
    r.law_id = "submatrix-forms";
    r.relation = Relation::implication;
    r.inputs = {{"C", c}};
    r.params = {{"m_max", static_cast<long long>(m_max)}};
    bool t1 = true;
    for (std::uint64_t m = 1; m <= m_max && t1; ++m) t1 = hadamard_distributes(c, c, m);
    const auto violations = classify_2x2_submatrices(c);
    r.condition_holds = t1;
    r.holds = violations.empty();
    for (const auto& [i, j] : violations) r.note += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return r;
}

namespace {

std::size_t nonzero_rows(const Matrix& c) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= c.rows(); ++i) {
        bool any = false;
        for (std::size_t j = 1; j <= c.cols(); ++j) any = any || !c.field().is_zero(c(i, j));
        count += any ? 1 : 0;
    }
    return count;
}

}  // namespace

bool in_diagonal_family(const Matrix& c) { return is_diagonal(c); }
bool in_single_row_family(const Matrix& c) { return nonzero_rows(c) <= 1; }
bool in_single_column_family(const Matrix& c) { return nonzero_rows(transpose(c)) <= 1; }

LawReport check_monoid_2x2(const Matrix& c, const Matrix& d, std::uint64_t m_max) {
    require_same_dim(c, d, "C and D");
    if (c.rows() != 2) throw Error(Errc::shape_mismatch, "monoid characterization is for 2x2 matrices");
    const Field& f = c.field();
    require_ordered(f, "2x2 monoid characterization");
    LawReport r;
    r.law_id = "monoid-2x2";
    r.relation = Relation::implication;
    r.inputs = {{"C", c}, {"D", d}};
    r.params = {{"m_max", static_cast<long long>(m_max)}};

    auto dc_family = [](const Matrix& x) { return in_diagonal_family(x) || in_single_column_family(x); };
    auto dr_family = [](const Matrix& x) { return in_diagonal_family(x) || in_single_row_family(x); };
    r.condition_holds = (dc_family(c) && dc_family(d)) || (dr_family(c) && dr_family(d));

    bool laws = true;
    std::string failed;
    for (std::uint64_t m = 1; m <= m_max && laws; ++m) {
        const bool det_c = f.eq(det(hadamard_power(c, m)), f.pow(det(c), m));
        const bool det_d = f.eq(det(hadamard_power(d, m)), f.pow(det(d), m));
        const bool cd = hadamard_distributes(c, d, m);
        const bool dc = hadamard_distributes(d, c, m);
        laws = det_c && det_d && cd && dc;
        if (!laws) {
            failed = "m=" + std::to_string(m) + (det_c ? "" : " det(C)") + (det_d ? "" : " det(D)") + (cd ? "" : " CD") +
                     (dc ? "" : " DC");
        }
    }
    r.holds = laws;
    r.note = failed;
    return r;
}

namespace {

Matrix gf2_from_bits(const Field& f, std::size_t n, std::uint64_t bits) {
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) e.push_back(f.from_int(static_cast<long long>((bits >> k) & 1u)));
    return Matrix(f, n, n, std::move(e));
}

}  // namespace

LawReport exhaustive_gf2_multiplicativity(std::size_t m, std::size_t n, std::uint64_t seed, std::uint64_t samples) {
    if (m == 0 || n == 0) throw Error(Errc::shape_mismatch, "dimensions must be positive");
    const Field f = Field::prime(2);
    const std::uint64_t bits = 2 * m * m + 2 * n * n;
    constexpr std::uint64_t max_bits = 20;
    const bool full = bits <= max_bits;
    if (!full && samples == 0) {
        throw Error(Errc::sweep_too_large, std::to_string(bits) + "-bit tuple space exceeds 2^" + std::to_string(max_bits));
    }

    LawReport r;
    r.law_id = "gf2-exhaustive";
    r.params = {{"m", static_cast<long long>(m)},
                {"n", static_cast<long long>(n)},
                {"sampled", full ? 0 : 1},
                {"seed", static_cast<long long>(seed)},
                {"samples", static_cast<long long>(samples)}};

    const std::uint64_t mm = m * m, nn = n * n;
    const std::uint64_t total = full ? (std::uint64_t{1} << bits) : samples;
    Generator gen(f, seed);
    std::uint64_t violations = 0, hadamard_violations = 0;
    for (std::uint64_t t = 0; t < total; ++t) {
        Matrix a = full ? gf2_from_bits(f, m, t & ((1ull << mm) - 1)) : gen.square(m);
        Matrix b = full ? gf2_from_bits(f, m, (t >> mm) & ((1ull << mm) - 1)) : gen.square(m);
        Matrix c = full ? gf2_from_bits(f, n, (t >> (2 * mm)) & ((1ull << nn) - 1)) : gen.square(n);
        Matrix d = full ? gf2_from_bits(f, n, (t >> (2 * mm + nn)) & ((1ull << nn) - 1)) : gen.square(n);
        const FactorShape shape(m, n);
        const Matrix lhs = partial_det_1(matmul(kron(a, c), kron(b, d)), shape);
        const Matrix rhs = matmul(partial_det_1(kron(a, c), shape), partial_det_1(kron(b, d), shape));
        if (!(lhs == rhs)) {
            if (violations == 0) r.inputs = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
            ++violations;
        }
        if (!hadamard_distributes(c, d, m)) ++hadamard_violations;
    }
    r.holds = violations == 0 && hadamard_violations == 0;
    r.note = std::to_string(total) + (full ? " tuples (full sweep), " : " tuples (sampled), ") + std::to_string(violations) +
             " multiplicativity violations, " + std::to_string(hadamard_violations) + " Hadamard violations";
    return r;
}

TriangularizationSearch search_permutation_triangularization(const Matrix& b) {
    require_square(b, "B");
    const std::size_t n = b.rows();
    if (n > 6) throw Error(Errc::search_too_large, "exhaustive permutation search is limited to n <= 6");
    std::vector<char> nonzero(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) nonzero[i * n + j] = b.field().is_zero(b(i + 1, j + 1)) ? 0 : 1;
    }
    TriangularizationSearch result;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<std::size_t> q(n);
        std::iota(q.begin(), q.end(), 0);
        do {
            ++result.pairs_examined;
            // (P B Q^T)_{ij} = B_{p(i), q(j)}
            bool upper = true, lower = true;
            for (std::size_t i = 0; i < n && (upper || lower); ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (!nonzero[p[i] * n + q[j]]) continue;
                    if (i > j) upper = false;
                    if (i < j) lower = false;
                }
            }
            if (upper || lower) {
                const Field& f = b.field();
                auto perm_matrix = [&](const std::vector<std::size_t>& s) {
                    return Matrix::generate(f, n, n, [&](std::size_t i, std::size_t j) {
                        return s[i - 1] == j - 1 ? f.one() : f.zero();
                    });
                };
                result.found = std::make_pair(perm_matrix(p), perm_matrix(q));
                return result;
            }
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
}

Matrix counterexample_4x4(const Field& f) {
    return Matrix::from_ints(f, {{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
}

LawReport check_completion(CompletionKind kind, const Matrix& a, const FactorShape& shape) {
    shape.require_conforming(a);
    const Field& f = a.field();
    LawReport r;
    r.inputs = {{"M", a}};
    r.params = {{"m", static_cast<long long>(shape.m())}, {"n", static_cast<long long>(shape.n())}};
    switch (kind) {
    case CompletionKind::trace: {
        r.law_id = "completion-trace";
        r.relation = Relation::identity;
        const Scalar whole = trace(a);
        r.holds = f.eq(trace(partial_trace_1(a, shape)), whole) && f.eq(trace(partial_trace_2(a, shape)), whole);
        break;
    }
    case CompletionKind::transpose: {
        r.law_id = "completion-transpose";
        r.relation = Relation::equivalence;
        const Matrix lhs = transpose(a);
        const Matrix rhs = transpose(partial_transpose_2(a, shape));
        r.holds = lhs == rhs;
        r.condition_holds = is_blockwise_symmetric(a, shape);
        r.witnesses = {{"lhs", lhs}, {"rhs", rhs}};
        break;
    }
    case CompletionKind::det: {
        r.law_id = "completion-det";
        const Scalar lhs = det(partial_det_1(a, shape));
        const Scalar rhs = det(a);
        r.holds = f.eq(lhs, rhs);
        r.witnesses = {{"det(det1(M))", one(f, lhs)}, {"det(M)", one(f, rhs)}};
        if (auto factors = kron_factor(a, shape)) {
            r.relation = Relation::equivalence;
            r.condition_holds = completion_condition(factors->first, factors->second);
            r.note = "Kronecker product";
        } else {
            r.relation = Relation::implication;
            r.condition_holds = false;
            r.note = "not a Kronecker product; no condition";
        }
        break;
    }
    }
    return r;
}

LawReport check_phi(const Matrix& c, const Matrix& d, std::uint64_t m_max) {
    require_same_dim(c, d, "C and D");
    const Field& f = c.field();
    const std::size_t n = c.rows();
    const FactorShape shape(n, n);
    LawReport r;
    r.law_id = "phi";
    r.inputs = {{"C", c}, {"D", d}};
    r.params = {{"m_max", static_cast<long long>(m_max)}};

    const Matrix p = phi(c, d);
    const Matrix eye = Matrix::identity(f, n);
    const Matrix triple = matmul(matmul(kron(eye, c), shuffle(shape, f)), kron(eye, d));
    const Matrix cd = matmul(c, d);
    bool ok = partial_trace_1(p, shape) == cd && partial_trace_2(p, shape) == matmul(d, c) && p == triple;
    for (std::uint64_t m = 1; m <= m_max && ok; ++m) {
        const Matrix pm = hadamard_power(p, m);
        ok = pm == phi(hadamard_power(c, m), hadamard_power(d, m));
        const bool traced = partial_trace_1(pm, shape) == hadamard_power(partial_trace_1(p, shape), m);
        ok = ok && traced == hadamard_distributes(c, d, m);
    }
    r.holds = ok;
    return r;
}

LawReport check_thompson_psd(const Matrix& b, const FactorShape& shape) {
    shape.require_conforming(b);
    const Field& f = b.field();
    if (f.kind() != FieldKind::complex64) throw Error(Errc::unsupported_field, "Thompson inequality needs complex64");
    const std::size_t size = b.rows();

    for (std::size_t i = 1; i <= size; ++i) {
        for (std::size_t j = 1; j <= size; ++j) {
            if (!f.eq(b(i, j), Scalar(std::conj(b(j, i).complex())))) throw Error(Errc::invalid_input, "B is not Hermitian");
        }
    }
    // Cholesky pivots must be positive.
    std::vector<Complex> l(size * size, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < size; ++j) {
        double diag = b(j + 1, j + 1).complex().real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l[j * size + k]);
        if (!(diag > 0.0)) throw Error(Errc::invalid_input, "B is not positive definite (pivot " + std::to_string(j + 1) + ")");
        const double root = std::sqrt(diag);
        l[j * size + j] = root;
        for (std::size_t i = j + 1; i < size; ++i) {
            Complex s = b(i + 1, j + 1).complex();
            for (std::size_t k = 0; k < j; ++k) s -= l[i * size + k] * std::conj(l[j * size + k]);
            l[i * size + j] = s / root;
        }
    }

    LawReport r;
    r.law_id = "thompson";
    r.inputs = {{"B", b}};
    r.params = {{"m", static_cast<long long>(shape.m())}, {"n", static_cast<long long>(shape.n())}};
    const Complex lhs = det(partial_det_2(b, shape)).complex();
    const Complex rhs = det(b).complex();
    const double tol = 1e-9 * (1.0 + std::abs(rhs));
    bool block_diagonal = true;
    for (std::size_t i = 1; i <= shape.m(); ++i) {
        for (std::size_t j = 1; j <= shape.m(); ++j) {
            if (i != j && !is_zero(block(b, shape, i, j))) block_diagonal = false;
        }
    }
    const bool equal = std::abs(lhs - rhs) <= tol;
    r.holds = lhs.real() >= rhs.real() - tol && std::abs(lhs.imag()) <= tol;
    r.condition_holds = block_diagonal;
    r.side_checks = !block_diagonal || equal;
    r.witnesses = {{"det(det2(B))", one(f, Scalar(lhs))}, {"det(B)", one(f, Scalar(rhs))}};
    return r;
}

LawReport check_naive_completion(const Matrix& a, const Matrix& b) {
    LawReport r = check_completability(a, b);
    r.law_id = "naive-completion";
    r.relation = Relation::identity;
    return r;
}

}  // namespace kpd
