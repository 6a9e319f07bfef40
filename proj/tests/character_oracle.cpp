#include "character_oracle.hpp"

#include <functional>
#include <random>

namespace vna::testing {

namespace {

// Real residual of the MIU constraint system for a functional given by its
// complex coefficient vector on the matrix-unit basis.
Eigen::VectorXd miu_residual(const Algebra& a, const Vec& coeffs) {
    const int d = a.dim();
    std::vector<double> parts;
    parts.reserve(static_cast<size_t>(2 * (d * d + d + 1)));

    auto value_of = [&](const Element& x) {
        // x is always a matrix unit or zero here
        Complex total = 0.0;
        const Vec v = x.coords();
        for (int i = 0; i < d; ++i) total += v[i] * coeffs[i];
        return total;
    };

    // unital
    Complex unit_value = 0.0;
    for (int b = 0; b < a.num_blocks(); ++b) {
        const int n = a.block_size(b);
        for (int k = 0; k < n; ++k) unit_value += coeffs[a.block_offset(b) + k * n + k];
    }
    parts.push_back(unit_value.real() - 1.0);
    parts.push_back(unit_value.imag());

    // multiplicative on all basis pairs
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            const Complex lhs =
                value_of(multiply(Element::basis(a, s), Element::basis(a, t)));
            const Complex rhs = coeffs[s] * coeffs[t];
            parts.push_back((lhs - rhs).real());
            parts.push_back((lhs - rhs).imag());
        }

    // involutive
    for (int s = 0; s < d; ++s) {
        const Complex lhs = value_of(adjoint(Element::basis(a, s)));
        const Complex rhs = std::conj(coeffs[s]);
        parts.push_back((lhs - rhs).real());
        parts.push_back((lhs - rhs).imag());
    }

    Eigen::VectorXd out(static_cast<Eigen::Index>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i) out[static_cast<Eigen::Index>(i)] = parts[i];
    return out;
}

Vec unpack(const Eigen::VectorXd& reals) {
    Vec out(reals.size() / 2);
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out[i] = Complex(reals[2 * i], reals[2 * i + 1]);
    return out;
}

Eigen::VectorXd lm_minimize(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            Eigen::VectorXd x, int max_iters) {
    const double h = 1e-7;
    double lambda = 1e-3;
    Eigen::VectorXd r = f(x);
    for (int iter = 0; iter < max_iters; ++iter) {
        if (r.norm() < 1e-13) break;
        Eigen::MatrixXd jac(r.size(), x.size());
        for (Eigen::Index p = 0; p < x.size(); ++p) {
            Eigen::VectorXd xp = x;
            xp[p] += h;
            jac.col(p) = (f(xp) - r) / h;
        }
        Eigen::MatrixXd normal = jac.transpose() * jac;
        normal.diagonal().array() += lambda;
        Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * r);
        Eigen::VectorXd candidate = x + step;
        Eigen::VectorXd r_candidate = f(candidate);
        if (r_candidate.squaredNorm() < r.squaredNorm()) {
            x = candidate;
            r = r_candidate;
            lambda = std::max(lambda * 0.5, 1e-12);
        } else {
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
    }
    return x;
}

}  // namespace

CharacterSolveResult solve_character_constraints(const Algebra& a, int starts, uint64_t seed) {
    CharacterSolveResult result;
    result.best_residual = std::numeric_limits<double>::infinity();
    const int d = a.dim();
    if (d == 0) {
        // phi(1) = phi(0) = 0 != 1: infeasible with residual exactly 1
        result.best_residual = 1.0;
        return result;
    }

    auto residual = [&](const Eigen::VectorXd& reals) { return miu_residual(a, unpack(reals)); };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < starts; ++s) {
        Eigen::VectorXd x0(2 * d);
        for (int i = 0; i < 2 * d; ++i) x0[i] = gauss(rng);
        Eigen::VectorXd solved = lm_minimize(residual, x0, 400);
        const double res = residual(solved).norm();
        result.best_residual = std::min(result.best_residual, res);
        if (res > 1e-10) continue;
        Vec coeffs = unpack(solved);
        bool duplicate = false;
        for (const Vec& known : result.solutions)
            if ((known - coeffs).cwiseAbs().maxCoeff() < 1e-6) duplicate = true;
        if (!duplicate) result.solutions.push_back(std::move(coeffs));
    }
    return result;
}

namespace {

void enumerate_profiles(int remaining, int min_size, std::vector<int>& current,
                        std::vector<Algebra>& out) {
    out.emplace_back(current);
    for (int n = min_size; n * n <= remaining; ++n) {
        current.push_back(n);
        enumerate_profiles(remaining - n * n, n, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Algebra> all_algebras_up_to_dim(int max_dim) {
    std::vector<Algebra> out;
    std::vector<int> current;
    enumerate_profiles(max_dim, 1, current, out);
    return out;
}

}  // namespace vna::testing
