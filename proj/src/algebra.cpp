#include "vna/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace vna {

double max_abs(const Mat& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.size() == 0) return true;
    const double scale = 1.0 + std::max(max_abs(a), max_abs(b));
    return (a - b).cwiseAbs().maxCoeff() <= kTol * scale;
}

bool approx_zero(const Mat& a) {
    if (a.size() == 0) return true;
    return a.cwiseAbs().maxCoeff() <= kTol * (1.0 + max_abs(a));
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Algebra::Algebra(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    offsets_.reserve(blocks_.size());
    for (int n : blocks_) {
        if (n < 1) throw std::invalid_argument("block sizes must be positive");
        offsets_.push_back(dim_);
        dim_ += n * n;
    }
}

Algebra Algebra::parse(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return Algebra{};
    if (trimmed.empty()) throw std::invalid_argument("expected block sizes, e.g. \"1,1,2\"");
    std::vector<int> blocks;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid block size '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("invalid block size '" + item + "'");
        blocks.push_back(n);
    }
    return Algebra(std::move(blocks));
}

std::string Algebra::to_string() const {
    if (blocks_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(blocks_[i]);
    }
    return out;
}

bool is_abelian(const Algebra& a) {
    return std::all_of(a.blocks().begin(), a.blocks().end(), [](int n) { return n == 1; });
}

bool is_isomorphic(const Algebra& a, const Algebra& b) {
    std::vector<int> lhs = a.blocks(), rhs = b.blocks();
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

Element::Element(Algebra algebra) : algebra_(std::move(algebra)) {
    mats_.reserve(static_cast<size_t>(algebra_.num_blocks()));
    for (int n : algebra_.blocks()) mats_.push_back(Mat::Zero(n, n));
}

Element::Element(Algebra algebra, std::vector<Mat> mats)
    : algebra_(std::move(algebra)), mats_(std::move(mats)) {
    if (mats_.size() != static_cast<size_t>(algebra_.num_blocks()))
        throw std::invalid_argument("block count mismatch");
    for (int b = 0; b < algebra_.num_blocks(); ++b) {
        const int n = algebra_.block_size(b);
        if (mats_[static_cast<size_t>(b)].rows() != n || mats_[static_cast<size_t>(b)].cols() != n)
            throw std::invalid_argument("block shape mismatch");
    }
}

Vec Element::coords() const {
    Vec v(algebra_.dim());
    for (int b = 0; b < algebra_.num_blocks(); ++b) {
        const int n = algebra_.block_size(b);
        const int off = algebra_.block_offset(b);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) v[off + k * n + l] = mats_[static_cast<size_t>(b)](k, l);
    }
    return v;
}

Element Element::from_coords(const Algebra& algebra, const Vec& coords) {
    if (coords.size() != algebra.dim()) throw std::invalid_argument("coordinate length mismatch");
    Element x(algebra);
    for (int b = 0; b < algebra.num_blocks(); ++b) {
        const int n = algebra.block_size(b);
        const int off = algebra.block_offset(b);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) x.block(b)(k, l) = coords[off + k * n + l];
    }
    return x;
}

Element Element::zero(const Algebra& algebra) { return Element(algebra); }

Element Element::unit(const Algebra& algebra) {
    Element x(algebra);
    for (int b = 0; b < algebra.num_blocks(); ++b)
        x.block(b) = Mat::Identity(algebra.block_size(b), algebra.block_size(b));
    return x;
}

Element Element::basis(const Algebra& algebra, int index) {
    if (index < 0 || index >= algebra.dim()) throw std::out_of_range("basis index");
    Element x(algebra);
    for (int b = 0; b < algebra.num_blocks(); ++b) {
        const int n = algebra.block_size(b);
        const int off = algebra.block_offset(b);
        if (index < off + n * n) {
            const int rel = index - off;
            x.block(b)(rel / n, rel % n) = 1.0;
            return x;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void require_same_algebra(const Element& x, const Element& y) {
    if (x.algebra() != y.algebra()) throw std::invalid_argument("algebra mismatch");
}

}  // namespace

Element multiply(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Element out(x.algebra());
    for (int b = 0; b < x.algebra().num_blocks(); ++b) out.block(b) = x.block(b) * y.block(b);
    return out;
}

Element add(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Element out(x.algebra());
    for (int b = 0; b < x.algebra().num_blocks(); ++b) out.block(b) = x.block(b) + y.block(b);
    return out;
}

Element subtract(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Element out(x.algebra());
    for (int b = 0; b < x.algebra().num_blocks(); ++b) out.block(b) = x.block(b) - y.block(b);
    return out;
}

Element scale(Complex c, const Element& x) {
    Element out(x.algebra());
    for (int b = 0; b < x.algebra().num_blocks(); ++b) out.block(b) = c * x.block(b);
    return out;
}

Element adjoint(const Element& x) {
    Element out(x.algebra());
    for (int b = 0; b < x.algebra().num_blocks(); ++b) out.block(b) = x.block(b).adjoint();
    return out;
}

Element complement(const Element& x) { return subtract(Element::unit(x.algebra()), x); }

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
Element operator+(const Element& x, const Element& y) { return add(x, y); }
Element operator-(const Element& x, const Element& y) { return subtract(x, y); }

bool approx_equal(const Element& x, const Element& y) {
    if (x.algebra() != y.algebra()) return false;
    for (int b = 0; b < x.algebra().num_blocks(); ++b)
        if (!approx_equal(x.block(b), y.block(b))) return false;
    return true;
}

double max_abs(const Element& x) {
    double m = 0.0;
    for (int b = 0; b < x.algebra().num_blocks(); ++b) m = std::max(m, max_abs(x.block(b)));
    return m;
}

double norm(const Element& x) {
    double m = 0.0;
    for (int b = 0; b < x.algebra().num_blocks(); ++b) {
        if (x.block(b).size() == 0) continue;
        Eigen::JacobiSVD<Mat> svd(x.block(b));
        if (svd.singularValues().size() > 0) m = std::max(m, svd.singularValues()[0]);
    }
    return m;
}

Complex trace(const Element& x) {
    Complex t = 0.0;
    for (int b = 0; b < x.algebra().num_blocks(); ++b) t += x.block(b).trace();
    return t;
}

bool is_hermitian(const Element& x) {
    for (int b = 0; b < x.algebra().num_blocks(); ++b) {
        const Mat& m = x.block(b);
        if (m.size() == 0) continue;
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTol * (1.0 + max_abs(m))) return false;
    }
    return true;
}

bool is_positive_element(const Element& x) {
    if (!is_hermitian(x)) return false;
    for (int b = 0; b < x.algebra().num_blocks(); ++b) {
        const Mat& m = x.block(b);
        if (m.size() == 0) continue;
        Mat h = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        const double radius = std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
        if (ev[0] < -kTol * (1.0 + radius)) return false;
    }
    return true;
}

bool is_in_unit_interval(const Element& x) {
    return is_positive_element(x) && is_positive_element(complement(x));
}

bool is_central(const Element& x) {
    // Enough to commute with every matrix unit of the own block.
    for (int b = 0; b < x.algebra().num_blocks(); ++b) {
        const int n = x.algebra().block_size(b);
        const Mat& m = x.block(b);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                Mat unit = Mat::Zero(n, n);
                unit(k, l) = 1.0;
                if (!approx_equal(m * unit, unit * m)) return false;
            }
    }
    return true;
}

}  // namespace vna
