#include "vna/free_monoid.hpp"

#include <random>
#include <set>

namespace vna {

FiniteSet::FiniteSet(int n) : size(n) {
    if (n < 0) throw std::invalid_argument("set size must be nonnegative");
}

FiniteSet::FiniteSet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
    if (n < 0) throw std::invalid_argument("set size must be nonnegative");
    if (!labels.empty()) {
        if (labels.size() != static_cast<size_t>(n))
            throw std::invalid_argument("label count mismatch");
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (distinct.size() != labels.size()) throw std::invalid_argument("labels must be distinct");
    }
}

std::vector<Character> nsp(const Algebra& a) {
    std::vector<Character> characters;
    for (int b = 0; b < a.num_blocks(); ++b) {
        if (a.block_size(b) != 1) continue;
        Mat action = Mat::Zero(1, a.dim());
        action(0, a.block_offset(b)) = 1.0;
        characters.push_back({b, LinMap(a, scalar_algebra(), std::move(action))});
    }
    return characters;
}

Algebra linf(const FiniteSet& x) { return linf(x.size); }

Algebra linf(int size) {
    if (size < 0) throw std::invalid_argument("set size must be nonnegative");
    return Algebra(std::vector<int>(static_cast<size_t>(size), 1));
}

LinMap linf_map(const std::vector<int>& h, int y_size) {
    const int x_size = static_cast<int>(h.size());
    for (int v : h)
        if (v < 0 || v >= y_size) throw std::invalid_argument("function value out of range");
    Mat action = Mat::Zero(x_size, y_size);
    for (int x = 0; x < x_size; ++x) action(x, h[static_cast<size_t>(x)]) = 1.0;
    return LinMap(linf(y_size), linf(x_size), std::move(action));
}

LinMap eta(const Algebra& a) {
    std::vector<Character> characters = nsp(a);
    Mat action(static_cast<Eigen::Index>(characters.size()), a.dim());
    for (size_t i = 0; i < characters.size(); ++i) action.row(static_cast<Eigen::Index>(i)) =
        characters[i].map.action();
    return LinMap(a, linf(static_cast<int>(characters.size())), std::move(action));
}

Monoid canonical_monoid(const FiniteSet& x) { return canonical_monoid(x.size); }

Monoid canonical_monoid(int x_size) {
    const Algebra carrier = linf(x_size);
    // linf(X) (x) linf(X) and linf(X x X) coincide coordinatewise under the
    // lexicographic pair order, so the monoidality iso is the identity.
    const Algebra square = tensor_algebra(carrier, carrier);
    LinMap iso(square, linf(x_size * x_size), Mat::Identity(square.dim(), square.dim()));

    std::vector<int> diagonal(static_cast<size_t>(x_size));
    for (int i = 0; i < x_size; ++i) diagonal[static_cast<size_t>(i)] = i * x_size + i;
    LinMap m = compose(linf_map(diagonal, x_size * x_size), iso);

    std::vector<int> collapse(static_cast<size_t>(x_size), 0);
    LinMap u = linf_map(collapse, 1);

    return Monoid{carrier, std::move(m), std::move(u)};
}

Report verify_monoid(const Monoid& monoid, bool check_commutative) {
    const Algebra& c = monoid.carrier;
    const Algebra square = tensor_algebra(c, c);
    if (monoid.m.domain() != square || monoid.m.codomain() != c)
        throw std::invalid_argument("multiplication boundary mismatch");
    if (monoid.u.domain() != scalar_algebra() || monoid.u.codomain() != c)
        throw std::invalid_argument("unit boundary mismatch");

    Report report;
    const LinMap id = LinMap::identity(c);

    LinMap lhs = compose(monoid.m, tensor_maps(monoid.m, id));
    LinMap rhs = compose(monoid.m, compose(tensor_maps(id, monoid.m), associator(c, c, c)));
    report.add("associativity", approx_equal(lhs, rhs));

    report.add("left_unit", approx_equal(compose(monoid.m, tensor_maps(monoid.u, id)),
                                         left_unitor(c)));
    report.add("right_unit", approx_equal(compose(monoid.m, tensor_maps(id, monoid.u)),
                                          right_unitor(c)));

    if (check_commutative)
        report.add("commutative", approx_equal(compose(monoid.m, symmetry(c, c)), monoid.m));

    report.add("m_miu", check_miu(monoid.m).all());
    report.add("m_cp", check_cp(monoid.m));
    report.add("m_subunital", check_subunital(monoid.m));
    report.add("u_miu", check_miu(monoid.u).all());
    report.add("u_cp", check_cp(monoid.u));
    report.add("u_subunital", check_subunital(monoid.u));
    return report;
}

namespace {

// Match a map A -> C against the characters of A; returns the character
// index or -1.
int match_character(const LinMap& functional, const std::vector<Character>& characters) {
    for (size_t i = 0; i < characters.size(); ++i)
        if (approx_equal(functional.action(), characters[i].map.action()))
            return static_cast<int>(i);
    return -1;
}

}  // namespace

Factorization factorize(const LinMap& f, const Monoid& monoid) {
    if (!check_miu(f).all()) throw std::invalid_argument("f must be an MIU-map");
    if (f.codomain() != monoid.carrier) throw std::invalid_argument("f must land in the carrier");
    if (!is_abelian(monoid.carrier)) throw std::invalid_argument("carrier must be abelian");
    if (!verify_monoid(monoid, false).all_pass())
        throw std::invalid_argument("monoid does not verify");

    const Algebra& a = f.domain();
    const std::vector<Character> characters = nsp(a);
    const std::vector<Character> target_points = nsp(monoid.carrier);
    const int y_size = static_cast<int>(target_points.size());

    std::vector<int> h(static_cast<size_t>(y_size));
    for (int y = 0; y < y_size; ++y) {
        LinMap point_of_f = compose(target_points[static_cast<size_t>(y)].map, f);
        int index = match_character(point_of_f, characters);
        if (index < 0)
            throw std::runtime_error(
                "internal inconsistency: pi_y . f matches no character of the domain");
        h[static_cast<size_t>(y)] = index;
    }

    Factorization result{linf_map(h, static_cast<int>(characters.size())), h, {}};
    const LinMap& g = result.g;
    const LinMap eta_a = eta(a);

    result.certificate.add("g_after_eta_equals_f", approx_equal(compose(g, eta_a), f));

    const Monoid free = canonical_monoid(static_cast<int>(characters.size()));
    result.certificate.add(
        "monoid_morphism_mult",
        approx_equal(compose(monoid.m, tensor_maps(g, g)), compose(g, free.m)));
    result.certificate.add("monoid_morphism_unit",
                           approx_equal(compose(g, free.u), monoid.u));

    bool recovered = false;
    try {
        recovered = canonicalize_monoid_morphism(g) == h;
    } catch (const std::exception&) {
        recovered = false;
    }
    result.certificate.add("canonicalize_recovers_h", recovered);
    return result;
}

std::vector<int> canonicalize_monoid_morphism(const LinMap& g) {
    if (!is_abelian(g.domain()) || !is_abelian(g.codomain()))
        throw std::invalid_argument("expected a map between linf algebras");
    const int x_size = g.domain().dim();
    const int y_size = g.codomain().dim();
    const Mat& action = g.action();

    const double tol = kTol * (1.0 + max_abs(action));
    for (int y = 0; y < y_size; ++y)
        for (int x = 0; x < x_size; ++x) {
            const Complex v = action(y, x);
            if (std::abs(v) > tol && std::abs(v - 1.0) > tol)
                throw std::invalid_argument("entry (" + std::to_string(y) + "," +
                                            std::to_string(x) + ") is neither 0 nor 1");
        }
    // Disjoint column supports: g(e_x) g(e_x') = 0 for x != x'.
    for (int y = 0; y < y_size; ++y)
        for (int x = 0; x < x_size; ++x)
            for (int x2 = x + 1; x2 < x_size; ++x2)
                if (std::abs(action(y, x)) > tol && std::abs(action(y, x2)) > tol)
                    throw std::invalid_argument("columns " + std::to_string(x) + " and " +
                                                std::to_string(x2) + " overlap at row " +
                                                std::to_string(y));

    std::vector<int> h(static_cast<size_t>(y_size), -1);
    for (int y = 0; y < y_size; ++y) {
        int ones = 0;
        for (int x = 0; x < x_size; ++x)
            if (std::abs(action(y, x) - Complex(1.0)) <= tol) {
                ones += 1;
                h[static_cast<size_t>(y)] = x;
            }
        if (ones != 1)
            throw std::invalid_argument("row " + std::to_string(y) + " has " +
                                        std::to_string(ones) + " ones, expected exactly 1");
    }
    return h;
}

namespace {

// Damped Gauss-Newton on a real-parameterised residual; small systems only.
Eigen::VectorXd levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual, Eigen::VectorXd x,
    int max_iters) {
    const double h = 1e-7;
    double lambda = 1e-3;
    Eigen::VectorXd r = residual(x);
    for (int iter = 0; iter < max_iters; ++iter) {
        if (r.norm() < 1e-13) break;
        Eigen::MatrixXd jac(r.size(), x.size());
        for (Eigen::Index p = 0; p < x.size(); ++p) {
            Eigen::VectorXd xp = x;
            xp[p] += h;
            jac.col(p) = (residual(xp) - r) / h;
        }
        Eigen::MatrixXd normal = jac.transpose() * jac;
        normal.diagonal().array() += lambda;
        Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * r);
        Eigen::VectorXd x_new = x + step;
        Eigen::VectorXd r_new = residual(x_new);
        if (r_new.squaredNorm() < r.squaredNorm()) {
            x = x_new;
            r = r_new;
            lambda = std::max(lambda * 0.5, 1e-12);
        } else {
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
    }
    return x;
}

}  // namespace

MorphismEnumeration enumerate_monoid_morphisms(int x_size, int y_size, uint64_t seed) {
    if (x_size < 0 || y_size < 0) throw std::invalid_argument("sizes must be nonnegative");
    if (x_size * y_size > 12) throw std::invalid_argument("size cap exceeded (x*y <= 12)");

    const Monoid mx = canonical_monoid(x_size);
    const Monoid my = canonical_monoid(y_size);
    const Algebra& dom = mx.carrier;
    const Algebra& cod = my.carrier;

    auto is_morphism = [&](const LinMap& g) {
        if (!approx_equal(compose(g, mx.u), my.u)) return false;
        return approx_equal(compose(my.m, tensor_maps(g, g)), compose(g, mx.m));
    };

    MorphismEnumeration out;
    const int cells = x_size * y_size;
    for (long mask = 0; mask < (1L << cells); ++mask) {
        Mat action = Mat::Zero(y_size, x_size);
        for (int c = 0; c < cells; ++c)
            if (mask & (1L << c)) action(c / x_size, c % x_size) = 1.0;
        LinMap g(dom, cod, std::move(action));
        if (is_morphism(g)) out.morphisms.push_back(std::move(g));
    }
    out.count = static_cast<int>(out.morphisms.size());

    // Numerical sweep: solve the morphism equations from random starts and
    // insist every solution canonicalizes to a function.
    const int unknowns = 2 * x_size * y_size;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto unpack = [&](const Eigen::VectorXd& v) {
        Mat action(y_size, x_size);
        for (int y = 0; y < y_size; ++y)
            for (int x = 0; x < x_size; ++x) {
                const int base = 2 * (y * x_size + x);
                action(y, x) = Complex(v[base], v[base + 1]);
            }
        return LinMap(dom, cod, std::move(action));
    };
    auto residual = [&](const Eigen::VectorXd& v) {
        LinMap g = unpack(v);
        Mat unit_gap = compose(g, mx.u).action() - my.u.action();
        Mat mult_gap = compose(my.m, tensor_maps(g, g)).action() - compose(g, mx.m).action();
        Eigen::VectorXd r(2 * (unit_gap.size() + mult_gap.size()));
        Eigen::Index pos = 0;
        for (Eigen::Index i = 0; i < unit_gap.size(); ++i) {
            r[pos++] = unit_gap.reshaped()[i].real();
            r[pos++] = unit_gap.reshaped()[i].imag();
        }
        for (Eigen::Index i = 0; i < mult_gap.size(); ++i) {
            r[pos++] = mult_gap.reshaped()[i].real();
            r[pos++] = mult_gap.reshaped()[i].imag();
        }
        return r;
    };

    const int starts = 24;
    int converged = 0, canonical = 0;
    for (int s = 0; s < starts && unknowns > 0; ++s) {
        Eigen::VectorXd x0(unknowns);
        for (int i = 0; i < unknowns; ++i) x0[i] = gauss(rng);
        Eigen::VectorXd solution = levenberg_marquardt(residual, x0, 300);
        if (residual(solution).norm() > 1e-10) continue;
        converged += 1;
        try {
            std::vector<int> h = canonicalize_monoid_morphism(unpack(solution));
            bool matches = false;
            for (const LinMap& g : out.morphisms)
                if (canonicalize_monoid_morphism(g) == h) matches = true;
            if (matches) canonical += 1;
        } catch (const std::exception&) {
            throw std::runtime_error("numeric solve found a non-function-induced solution");
        }
    }
    out.numeric_check.add("random_start_solutions_are_functions", converged == canonical,
                          converged == canonical
                              ? ""
                              : std::to_string(converged - canonical) + " stray solutions");
    out.numeric_check.add("solver_runs", true,
                          std::to_string(converged) + "/" + std::to_string(starts) +
                              " starts converged");
    return out;
}

Report nsp_monoidality_check(const Algebra& a, const Algebra& b) {
    Report report;
    const std::vector<Character> chars_a = nsp(a);
    const std::vector<Character> chars_b = nsp(b);
    const Algebra ab = tensor_algebra(a, b);
    const std::vector<Character> chars_ab = nsp(ab);

    report.add("character_count_multiplies",
               chars_ab.size() == chars_a.size() * chars_b.size(),
               std::to_string(chars_ab.size()) + " vs " +
                   std::to_string(chars_a.size() * chars_b.size()));

    // Each character of A (x) B is a tensor pair through C (x) C ~ C.
    bool pairs_ok = true;
    std::string ce;
    const LinMap collapse = left_unitor(scalar_algebra());
    for (const Character& ca : chars_a)
        for (const Character& cb : chars_b) {
            const int block = tensor_block_index(a, b, ca.block_index, cb.block_index);
            const Character* found = nullptr;
            for (const Character& c : chars_ab)
                if (c.block_index == block) found = &c;
            if (found == nullptr) {
                pairs_ok = false;
                ce = "missing character at block " + std::to_string(block);
                break;
            }
            LinMap paired = compose(collapse, tensor_maps(ca.map, cb.map));
            if (!approx_equal(paired, found->map)) {
                pairs_ok = false;
                ce = "character mismatch at block " + std::to_string(block);
                break;
            }
        }
    report.add("characters_are_tensor_pairs", pairs_ok, ce);

    // Counit: nsp(linf(X)) recovers X coordinatewise.
    auto counit_ok = [](int size) {
        const Algebra lx = linf(size);
        const std::vector<Character> chars = nsp(lx);
        if (chars.size() != static_cast<size_t>(size)) return false;
        for (int i = 0; i < size; ++i) {
            Mat expected = Mat::Zero(1, size);
            expected(0, i) = 1.0;
            if (chars[static_cast<size_t>(i)].block_index != i) return false;
            if (!approx_equal(chars[static_cast<size_t>(i)].map.action(), expected)) return false;
        }
        return true;
    };
    report.add("counit_iso_on_nsp_a", counit_ok(static_cast<int>(chars_a.size())));
    report.add("counit_iso_on_nsp_b", counit_ok(static_cast<int>(chars_b.size())));
    return report;
}

}  // namespace vna
