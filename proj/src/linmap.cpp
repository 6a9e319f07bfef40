#include "vna/linmap.hpp"

#include <random>

namespace vna {

LinMap::LinMap(Algebra domain, Algebra codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      action_(Mat::Zero(codomain_.dim(), domain_.dim())) {}

LinMap::LinMap(Algebra domain, Algebra codomain, Mat action)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), action_(std::move(action)) {
    if (action_.rows() != codomain_.dim() || action_.cols() != domain_.dim())
        throw std::invalid_argument("action shape mismatch");
}

LinMap LinMap::identity(const Algebra& a) {
    return LinMap(a, a, Mat::Identity(a.dim(), a.dim()));
}

LinMap LinMap::from_function(const Algebra& domain, const Algebra& codomain,
                             const std::function<Element(const Element&)>& f) {
    Mat action(codomain.dim(), domain.dim());
    for (int s = 0; s < domain.dim(); ++s) {
        Element image = f(Element::basis(domain, s));
        if (image.algebra() != codomain) throw std::invalid_argument("image algebra mismatch");
        action.col(s) = image.coords();
    }
    return LinMap(domain, codomain, std::move(action));
}

Element apply(const LinMap& phi, const Element& x) {
    if (x.algebra() != phi.domain()) throw std::invalid_argument("algebra mismatch");
    return Element::from_coords(phi.codomain(), phi.action() * x.coords());
}

LinMap compose(const LinMap& psi, const LinMap& phi) {
    if (phi.codomain() != psi.domain()) throw std::invalid_argument("boundary mismatch");
    return LinMap(phi.domain(), psi.codomain(), psi.action() * phi.action());
}

bool approx_equal(const LinMap& a, const LinMap& b) {
    return a.domain() == b.domain() && a.codomain() == b.codomain() &&
           approx_equal(a.action(), b.action());
}

MiuReport check_miu(const LinMap& phi) {
    MiuReport report;
    const Algebra& dom = phi.domain();
    const int d = dom.dim();

    report.unital = approx_equal(apply(phi, Element::unit(dom)), Element::unit(phi.codomain()));

    report.involutive = true;
    for (int s = 0; s < d && report.involutive; ++s) {
        Element b = Element::basis(dom, s);
        if (!approx_equal(apply(phi, adjoint(b)), adjoint(apply(phi, b)))) {
            report.involutive = false;
            report.counterexample = "involution fails at basis " + std::to_string(s);
        }
    }

    report.multiplicative = true;
    std::vector<Element> images;
    images.reserve(static_cast<size_t>(d));
    for (int s = 0; s < d; ++s) images.push_back(apply(phi, Element::basis(dom, s)));
    for (int s = 0; s < d && report.multiplicative; ++s)
        for (int t = 0; t < d && report.multiplicative; ++t) {
            Element product = multiply(Element::basis(dom, s), Element::basis(dom, t));
            if (!approx_equal(apply(phi, product),
                              multiply(images[static_cast<size_t>(s)],
                                       images[static_cast<size_t>(t)]))) {
                report.multiplicative = false;
                report.counterexample = "multiplication fails at basis pair (" +
                                        std::to_string(s) + "," + std::to_string(t) + ")";
            }
        }
    return report;
}

std::vector<std::vector<Mat>> choi_blocks(const LinMap& phi) {
    const Algebra& dom = phi.domain();
    const Algebra& cod = phi.codomain();
    std::vector<std::vector<Mat>> blocks;
    blocks.reserve(static_cast<size_t>(dom.num_blocks()));
    for (int i = 0; i < dom.num_blocks(); ++i) {
        const int n = dom.block_size(i);
        std::vector<Mat> row;
        row.reserve(static_cast<size_t>(cod.num_blocks()));
        for (int j = 0; j < cod.num_blocks(); ++j) {
            const int m = cod.block_size(j);
            Mat c = Mat::Zero(n * m, n * m);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Element unit = Element::basis(dom, dom.block_offset(i) + k * n + l);
                    Mat image = apply(phi, unit).block(j);
                    c.block(k * m, l * m, m, m) = image;
                }
            row.push_back(std::move(c));
        }
        blocks.push_back(std::move(row));
    }
    return blocks;
}

namespace {

bool psd_within_tol(const Mat& c) {
    if (c.size() == 0) return true;
    if ((c - c.adjoint()).cwiseAbs().maxCoeff() > kTol * (1.0 + max_abs(c))) return false;
    Mat h = 0.5 * (c + c.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double radius = std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
    return ev[0] >= -kTol * (1.0 + radius);
}

}  // namespace

bool check_cp(const LinMap& phi) {
    for (const auto& row : choi_blocks(phi))
        for (const Mat& c : row)
            if (!psd_within_tol(c)) return false;
    return true;
}

PositivityVerdict check_positive(const LinMap& phi, int samples_per_block, uint64_t seed) {
    const Algebra& dom = phi.domain();

    if (is_abelian(dom)) {
        // Positives of an abelian algebra are nonnegative combinations of the
        // minimal projections, so checking those is exact.
        for (int b = 0; b < dom.num_blocks(); ++b) {
            Element e = Element::basis(dom, dom.block_offset(b));
            if (!is_positive_element(apply(phi, e)))
                return {PositivityVerdict::Kind::RefutedWithWitness, e, 0};
        }
        return {PositivityVerdict::Kind::VerifiedExact, std::nullopt, 0};
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int b = 0; b < dom.num_blocks(); ++b) {
        const int n = dom.block_size(b);
        for (int s = 0; s < samples_per_block; ++s) {
            Vec v(n);
            for (int k = 0; k < n; ++k) v[k] = Complex(gauss(rng), gauss(rng));
            v.normalize();
            Element p(dom);
            p.block(b) = v * v.adjoint();
            if (!is_positive_element(apply(phi, p)))
                return {PositivityVerdict::Kind::RefutedWithWitness, p, samples_per_block};
        }
    }
    return {PositivityVerdict::Kind::NotRefuted, std::nullopt, samples_per_block};
}

bool check_subunital(const LinMap& phi) {
    Element image_of_unit = apply(phi, Element::unit(phi.domain()));
    return is_positive_element(complement(image_of_unit));
}

}  // namespace vna
