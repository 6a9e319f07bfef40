#include "vna/states.hpp"

namespace vna {

namespace {

bool approx_complex(Complex a, Complex b) {
    return std::abs(a - b) <= kTol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

State::State(Element density) : density_(std::move(density)) {
    if (!is_positive_element(density_)) throw std::invalid_argument("density must be positive");
    const double total = trace(density_).real();
    if (std::abs(total - 1.0) > 1e-6 && !density_.algebra().is_zero())
        throw std::invalid_argument("density trace must be one");
}

Complex State::evaluate(const Element& a) const {
    if (a.algebra() != algebra()) throw std::invalid_argument("algebra mismatch");
    Complex value = 0.0;
    for (int b = 0; b < algebra().num_blocks(); ++b)
        value += (density_.block(b) * a.block(b)).trace();
    return value;
}

LinMap State::as_linmap() const {
    Mat action(1, algebra().dim());
    for (int s = 0; s < algebra().dim(); ++s)
        action(0, s) = evaluate(Element::basis(algebra(), s));
    return LinMap(algebra(), scalar_algebra(), std::move(action));
}

State State::point_mass(const Algebra& a, int block) {
    Element rho(a);
    rho.block(block)(0, 0) = 1.0;
    return State(std::move(rho));
}

State State::uniform(const Algebra& a) {
    Element rho = Element::unit(a);
    const double total = trace(rho).real();
    if (total <= 0.0) throw std::invalid_argument("uniform state needs a nonzero algebra");
    return State(scale(1.0 / total, rho));
}

State State::random(const Algebra& a, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Element v(a);
    for (int b = 0; b < a.num_blocks(); ++b) {
        const int n = a.block_size(b);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) v.block(b)(r, c) = Complex(gauss(rng), gauss(rng));
    }
    Element rho = multiply(adjoint(v), v);
    const double total = trace(rho).real();
    if (total <= 0.0) throw std::invalid_argument("random state needs a nonzero algebra");
    return State(scale(1.0 / total, rho));
}

bool is_broadcast(const State& omega, const LinMap& delta) {
    const Algebra& a = omega.algebra();
    if (delta.domain() != tensor_algebra(a, a) || delta.codomain() != a)
        throw std::invalid_argument("boundary mismatch");
    const Element one = Element::unit(a);
    for (int s = 0; s < a.dim(); ++s) {
        Element b = Element::basis(a, s);
        const Complex expected = omega.evaluate(b);
        if (!approx_complex(omega.evaluate(apply(delta, tensor_elements(one, b))), expected))
            return false;
        if (!approx_complex(omega.evaluate(apply(delta, tensor_elements(b, one))), expected))
            return false;
    }
    return true;
}

bool is_cloned(const State& omega, const LinMap& delta) {
    const Algebra& a = omega.algebra();
    if (delta.domain() != tensor_algebra(a, a) || delta.codomain() != a)
        throw std::invalid_argument("boundary mismatch");
    for (int s = 0; s < a.dim(); ++s)
        for (int t = 0; t < a.dim(); ++t) {
            Element x = Element::basis(a, s);
            Element y = Element::basis(a, t);
            const Complex lhs = omega.evaluate(apply(delta, tensor_elements(x, y)));
            if (!approx_complex(lhs, omega.evaluate(x) * omega.evaluate(y))) return false;
        }
    return true;
}

namespace {

bool is_point_mass(const State& omega) {
    const Algebra& a = omega.algebra();
    for (int b = 0; b < a.num_blocks(); ++b) {
        if (a.block_size(b) != 1) continue;
        Element candidate(a);
        candidate.block(b)(0, 0) = 1.0;
        if (approx_equal(omega.density(), candidate)) return true;
    }
    return false;
}

}  // namespace

Report cloned_states_of_duplicator(const Algebra& a, uint64_t seed) {
    if (!is_abelian(a)) throw std::invalid_argument("requires an abelian algebra");
    Report report;
    if (a.is_zero()) {
        report.add("vacuous_zero_algebra", true);
        return report;
    }
    const Duplicator dup = canonical_duplicator(a);
    const int k = a.num_blocks();

    auto record = [&](const std::string& name, const State& omega) {
        const bool cloned = is_cloned(omega, dup.delta);
        const bool mass = is_point_mass(omega);
        const bool miu = check_miu(omega.as_linmap()).all();
        const bool consistent = (cloned == mass) && (mass == miu);
        report.add(name, consistent,
                   consistent ? ""
                              : "cloned=" + std::to_string(cloned) +
                                    " point_mass=" + std::to_string(mass) +
                                    " miu=" + std::to_string(miu));
    };

    for (int b = 0; b < k; ++b) record("point_mass_" + std::to_string(b), State::point_mass(a, b));
    record("uniform", State::uniform(a));
    if (k >= 2)
        for (int step = 1; step <= 9; ++step) {
            const double t = 0.1 * step;
            Element rho(a);
            rho.block(0)(0, 0) = t;
            rho.block(1)(0, 0) = 1.0 - t;
            record("mixture_t=" + std::to_string(step), State(std::move(rho)));
        }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) record("random_" + std::to_string(i), State::random(a, rng));
    return report;
}

// ---------------------------------------------------------------------------
// Broadcast feasibility probe.

namespace {

// Choi coordinates of a map D -> C: all blocks (i, j) stacked i-major,
// each block row-major.
struct ChoiLayout {
    Algebra domain, codomain;
    std::vector<int> offsets;  // per (i, j) pair
    int total = 0;

    ChoiLayout(const Algebra& d, const Algebra& c) : domain(d), codomain(c) {
        offsets.reserve(static_cast<size_t>(d.num_blocks() * c.num_blocks()));
        for (int i = 0; i < d.num_blocks(); ++i)
            for (int j = 0; j < c.num_blocks(); ++j) {
                offsets.push_back(total);
                const int side = d.block_size(i) * c.block_size(j);
                total += side * side;
            }
    }
    int offset(int i, int j) const {
        return offsets[static_cast<size_t>(i * codomain.num_blocks() + j)];
    }
    int side(int i, int j) const { return domain.block_size(i) * codomain.block_size(j); }
    int index(int i, int j, int row, int col) const {
        return offset(i, j) + row * side(i, j) + col;
    }
};

// Action matrix read off Choi coordinates; the two are entrywise bijective.
Mat action_from_choi(const ChoiLayout& layout, const Vec& choi) {
    const Algebra& d = layout.domain;
    const Algebra& c = layout.codomain;
    Mat action = Mat::Zero(c.dim(), d.dim());
    for (int i = 0; i < d.num_blocks(); ++i) {
        const int n = d.block_size(i);
        for (int j = 0; j < c.num_blocks(); ++j) {
            const int m = c.block_size(j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int r = 0; r < m; ++r)
                        for (int s = 0; s < m; ++s)
                            action(c.block_offset(j) + r * m + s,
                                   d.block_offset(i) + k * n + l) =
                                choi[layout.index(i, j, k * m + r, l * m + s)];
        }
    }
    return action;
}

Vec project_psd_blockwise(const ChoiLayout& layout, const Vec& choi) {
    Vec out = choi;
    for (int i = 0; i < layout.domain.num_blocks(); ++i)
        for (int j = 0; j < layout.codomain.num_blocks(); ++j) {
            const int side = layout.side(i, j);
            Mat block(side, side);
            for (int r = 0; r < side; ++r)
                for (int c = 0; c < side; ++c) block(r, c) = choi[layout.index(i, j, r, c)];
            Mat herm = 0.5 * (block + block.adjoint());
            Eigen::SelfAdjointEigenSolver<Mat> es(herm);
            Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
            Mat psd = es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().adjoint();
            for (int r = 0; r < side; ++r)
                for (int c = 0; c < side; ++c) out[layout.index(i, j, r, c)] = psd(r, c);
        }
    return out;
}

}  // namespace

ProbeResult broadcast_feasibility_probe(const Algebra& a, int iters, uint64_t seed) {
    if (a.dim() > 8) throw std::invalid_argument("dimension cap exceeded (dim <= 8)");
    if (iters < 1) throw std::invalid_argument("need at least one iteration");

    const Algebra dom = tensor_algebra(a, a);
    const ChoiLayout layout(dom, a);

    if (a.dim() == 0) {
        ProbeResult result{0.0, {0.0}, 1, true, LinMap(dom, a)};
        return result;
    }

    // Affine constraints delta(1 (x) a) = a = delta(a (x) 1) over Choi
    // coordinates: each action entry is a single Choi entry, so rows are
    // assembled from the input element's block entries.
    const Element one = Element::unit(a);
    const int rows = 2 * a.dim() * a.dim();
    Mat constraints = Mat::Zero(rows, layout.total);
    Vec rhs = Vec::Zero(rows);
    int row = 0;
    for (int t = 0; t < a.dim(); ++t) {
        const Element basis_t = Element::basis(a, t);
        const Vec target = basis_t.coords();
        for (const Element& input :
             {tensor_elements(one, basis_t), tensor_elements(basis_t, one)}) {
            for (int j = 0; j < a.num_blocks(); ++j) {
                const int m = a.block_size(j);
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s) {
                        for (int i = 0; i < dom.num_blocks(); ++i) {
                            const int n = dom.block_size(i);
                            const Mat& x = input.block(i);
                            for (int k = 0; k < n; ++k)
                                for (int l = 0; l < n; ++l) {
                                    if (x(k, l) == Complex(0.0)) continue;
                                    constraints(row, layout.index(i, j, k * m + r, l * m + s)) +=
                                        x(k, l);
                                }
                        }
                        rhs[row] = target[a.block_offset(j) + r * m + s];
                        row += 1;
                    }
            }
        }
    }

    Eigen::CompleteOrthogonalDecomposition<Mat> cod(constraints);
    const Mat pinv = cod.pseudoInverse();
    auto project_affine = [&](const Vec& v) -> Vec { return v - pinv * (constraints * v - rhs); };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.5);
    Vec v(layout.total);
    for (int i = 0; i < layout.total; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    v = project_psd_blockwise(layout, v);  // hermitises the start

    ProbeResult result;
    result.recovered = LinMap(dom, a);
    Vec last_psd = v;
    for (int k = 0; k < iters; ++k) {
        Vec affine = project_affine(v);
        Vec psd = project_psd_blockwise(layout, affine);
        result.final_residual = (affine - psd).norm();
        result.trajectory.push_back(result.final_residual);
        result.iterations = k + 1;
        v = psd;
        last_psd = psd;
        if (result.final_residual < 1e-12) break;
    }
    result.feasible = result.final_residual < 1e-7;
    result.recovered = LinMap(dom, a, action_from_choi(layout, last_psd));
    return result;
}

BroadcastCheck broadcast_all_states_check(const Algebra& a, int iters, uint64_t seed) {
    BroadcastCheck out;
    const DuplicabilityVerdict verdict = decide_duplicable(a);
    out.duplicable = verdict.duplicable;

    if (verdict.duplicable) {
        const Duplicator& dup = *verdict.duplicator;
        const Element one = Element::unit(a);
        bool exact = true;
        for (int s = 0; s < a.dim() && exact; ++s) {
            Element b = Element::basis(a, s);
            exact = approx_equal(apply(dup.delta, tensor_elements(one, b)), b) &&
                    approx_equal(apply(dup.delta, tensor_elements(b, one)), b);
        }
        // By linearity this settles every normal state at once: the normal
        // states separate elements.
        out.report.add("separating_reduction_exact", exact);

        bool sampled = true;
        if (!a.is_zero()) {
            std::mt19937_64 rng(seed);
            for (int i = 0; i < 20 && sampled; ++i)
                sampled = is_broadcast(State::random(a, rng), dup.delta);
            for (int b = 0; b < a.num_blocks() && sampled; ++b)
                if (a.block_size(b) == 1) sampled = is_broadcast(State::point_mass(a, b), dup.delta);
        }
        out.report.add("sampled_states_broadcast", sampled);
        return out;
    }

    out.report.add("all_blocks_size_one", false,
                   "block " + std::to_string(*verdict.witness_block) + " has size " +
                       std::to_string(a.block_size(*verdict.witness_block)));
    if (a.dim() <= 8) {
        out.probe = broadcast_feasibility_probe(a, iters, seed);
        out.report.add("probe_infeasible", !out.probe->feasible,
                       "final residual " + std::to_string(out.probe->final_residual));
    } else {
        out.report.add("probe_skipped_dimension_cap", true);
    }
    return out;
}

}  // namespace vna
