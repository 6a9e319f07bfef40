// Finite-dimensional von Neumann algebras as direct sums of complex matrix
// blocks, their elements, and the order/centrality predicates built on them.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace vna {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Entrywise tolerance; comparisons scale it by (1 + max entry magnitude).
inline constexpr double kTol = 1e-9;

double max_abs(const Mat& m);
bool approx_equal(const Mat& a, const Mat& b);
bool approx_zero(const Mat& a);
Mat kron(const Mat& a, const Mat& b);

// A direct sum of full matrix algebras, recorded as the sequence of block
// sizes. The empty sequence is the zero algebra {0}, in which 1 = 0.
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(std::vector<int> blocks);

    const std::vector<int>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_size(int b) const { return blocks_.at(static_cast<size_t>(b)); }
    // Coordinate offset of block b in the fixed basis (block-major,
    // row-major matrix units within each block).
    int block_offset(int b) const { return offsets_.at(static_cast<size_t>(b)); }
    int dim() const { return dim_; }
    bool is_zero() const { return blocks_.empty(); }

    bool operator==(const Algebra& other) const { return blocks_ == other.blocks_; }
    bool operator!=(const Algebra& other) const { return !(*this == other); }

    // Literal syntax: comma-separated block sizes ("1,1,2"); "0" is {0}.
    static Algebra parse(const std::string& text);
    std::string to_string() const;

private:
    std::vector<int> blocks_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

bool is_abelian(const Algebra& a);

// MIU-isomorphism of finite direct sums: equal multisets of block sizes.
bool is_isomorphic(const Algebra& a, const Algebra& b);

// One complex matrix per block of the owning algebra.
class Element {
public:
    explicit Element(Algebra algebra);  // zero element
    Element(Algebra algebra, std::vector<Mat> mats);

    const Algebra& algebra() const { return algebra_; }
    const Mat& block(int b) const { return mats_.at(static_cast<size_t>(b)); }
    Mat& block(int b) { return mats_.at(static_cast<size_t>(b)); }

    // Coordinates in the fixed basis (block-major matrix units).
    Vec coords() const;
    static Element from_coords(const Algebra& algebra, const Vec& coords);

    static Element zero(const Algebra& algebra);
    static Element unit(const Algebra& algebra);
    // Matrix unit at flat basis index.
    static Element basis(const Algebra& algebra, int index);

private:
    Algebra algebra_;
    std::vector<Mat> mats_;
};

Element multiply(const Element& x, const Element& y);
Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(Complex c, const Element& x);
Element adjoint(const Element& x);
// 1 - x, the complement a⊥ used for effects.
Element complement(const Element& x);

Element operator*(const Element& x, const Element& y);
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);

bool approx_equal(const Element& x, const Element& y);
double max_abs(const Element& x);
// Max operator norm over blocks.
double norm(const Element& x);
Complex trace(const Element& x);

bool is_hermitian(const Element& x);
bool is_positive_element(const Element& x);
bool is_in_unit_interval(const Element& x);
bool is_central(const Element& x);

}  // namespace vna
