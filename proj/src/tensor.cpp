#include "vna/tensor.hpp"

namespace vna {

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    std::vector<int> blocks;
    blocks.reserve(static_cast<size_t>(a.num_blocks() * b.num_blocks()));
    for (int i = 0; i < a.num_blocks(); ++i)
        for (int j = 0; j < b.num_blocks(); ++j) blocks.push_back(a.block_size(i) * b.block_size(j));
    return Algebra(std::move(blocks));
}

int tensor_block_index(const Algebra& a, const Algebra& b, int i, int j) {
    (void)a;
    return i * b.num_blocks() + j;
}

Element tensor_elements(const Element& x, const Element& y) {
    Algebra out_algebra = tensor_algebra(x.algebra(), y.algebra());
    Element out(out_algebra);
    for (int i = 0; i < x.algebra().num_blocks(); ++i)
        for (int j = 0; j < y.algebra().num_blocks(); ++j)
            out.block(tensor_block_index(x.algebra(), y.algebra(), i, j)) =
                kron(x.block(i), y.block(j));
    return out;
}

namespace {

// Decomposition of a flat basis index of A (x) B into the pair of factor
// basis indices it is the Kronecker product of.
struct TensorBasisSplit {
    int a_index;
    int b_index;
};

TensorBasisSplit split_tensor_basis(const Algebra& a, const Algebra& b, int index) {
    const Algebra t = tensor_algebra(a, b);
    for (int i = 0; i < a.num_blocks(); ++i)
        for (int j = 0; j < b.num_blocks(); ++j) {
            const int block = tensor_block_index(a, b, i, j);
            const int size = t.block_size(block);
            const int off = t.block_offset(block);
            if (index < off || index >= off + size * size) continue;
            const int n = a.block_size(i);
            const int m = b.block_size(j);
            const int rel = index - off;
            const int row = rel / size;
            const int col = rel % size;
            const int ka = row / m, kb = row % m;
            const int la = col / m, lb = col % m;
            return {a.block_offset(i) + ka * n + la, b.block_offset(j) + kb * m + lb};
        }
    throw std::out_of_range("tensor basis index");
}

}  // namespace

std::pair<int, int> TensorAlgebra::basis_factors(int index) const {
    auto [left_index, right_index] = split_tensor_basis(left, right, index);
    return {left_index, right_index};
}

TensorAlgebra tensor_product(const Algebra& a, const Algebra& b) {
    return TensorAlgebra{tensor_algebra(a, b), a, b};
}

LinMap tensor_maps(const LinMap& phi, const LinMap& psi) {
    const Algebra dom = tensor_algebra(phi.domain(), psi.domain());
    const Algebra cod = tensor_algebra(phi.codomain(), psi.codomain());
    Mat action = Mat::Zero(cod.dim(), dom.dim());
    // Every basis unit of the tensor is a Kronecker product of factor units.
    for (int s = 0; s < dom.dim(); ++s) {
        auto [sa, sb] = split_tensor_basis(phi.domain(), psi.domain(), s);
        Element image = tensor_elements(apply(phi, Element::basis(phi.domain(), sa)),
                                        apply(psi, Element::basis(psi.domain(), sb)));
        action.col(s) = image.coords();
    }
    return LinMap(dom, cod, std::move(action));
}

Algebra scalar_algebra() { return Algebra({1}); }

namespace {

// Triple split of a basis index of (A (x) B) (x) C.
struct TripleSplit {
    int a_index, b_index, c_index;
};

TripleSplit split_left_nested(const Algebra& a, const Algebra& b, const Algebra& c, int index) {
    auto [ab_index, c_index] = split_tensor_basis(tensor_algebra(a, b), c, index);
    auto [a_index, b_index] = split_tensor_basis(a, b, ab_index);
    return {a_index, b_index, c_index};
}

}  // namespace

LinMap associator(const Algebra& a, const Algebra& b, const Algebra& c) {
    const Algebra dom = tensor_algebra(tensor_algebra(a, b), c);
    const Algebra cod = tensor_algebra(a, tensor_algebra(b, c));
    Mat action = Mat::Zero(cod.dim(), dom.dim());
    for (int s = 0; s < dom.dim(); ++s) {
        auto [sa, sb, sc] = split_left_nested(a, b, c, s);
        Element image = tensor_elements(
            Element::basis(a, sa),
            tensor_elements(Element::basis(b, sb), Element::basis(c, sc)));
        action.col(s) = image.coords();
    }
    return LinMap(dom, cod, std::move(action));
}

LinMap associator_inverse(const Algebra& a, const Algebra& b, const Algebra& c) {
    LinMap fwd = associator(a, b, c);
    // Permutation matrix: the inverse is the transpose.
    return LinMap(fwd.codomain(), fwd.domain(), fwd.action().transpose());
}

LinMap left_unitor(const Algebra& a) {
    const Algebra dom = tensor_algebra(scalar_algebra(), a);
    return LinMap(dom, a, Mat::Identity(a.dim(), dom.dim()));
}

LinMap right_unitor(const Algebra& a) {
    const Algebra dom = tensor_algebra(a, scalar_algebra());
    return LinMap(dom, a, Mat::Identity(a.dim(), dom.dim()));
}

LinMap symmetry(const Algebra& a, const Algebra& b) {
    const Algebra dom = tensor_algebra(a, b);
    const Algebra cod = tensor_algebra(b, a);
    Mat action = Mat::Zero(cod.dim(), dom.dim());
    for (int s = 0; s < dom.dim(); ++s) {
        auto [sa, sb] = split_tensor_basis(a, b, s);
        Element image = tensor_elements(Element::basis(b, sb), Element::basis(a, sa));
        action.col(s) = image.coords();
    }
    return LinMap(dom, cod, std::move(action));
}

LinMap structural_iso(StructuralIsoKind kind, const std::vector<Algebra>& algebras) {
    switch (kind) {
        case StructuralIsoKind::Associator:
            if (algebras.size() != 3) throw std::invalid_argument("associator takes 3 algebras");
            return associator(algebras[0], algebras[1], algebras[2]);
        case StructuralIsoKind::LeftUnitor:
            if (algebras.size() != 1) throw std::invalid_argument("left unitor takes 1 algebra");
            return left_unitor(algebras[0]);
        case StructuralIsoKind::RightUnitor:
            if (algebras.size() != 1) throw std::invalid_argument("right unitor takes 1 algebra");
            return right_unitor(algebras[0]);
        case StructuralIsoKind::Symmetry:
            if (algebras.size() != 2) throw std::invalid_argument("symmetry takes 2 algebras");
            return symmetry(algebras[0], algebras[1]);
    }
    throw std::invalid_argument("unknown structural isomorphism");
}

DirectSum direct_sum(const Algebra& a, const Algebra& b) {
    std::vector<int> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    Algebra sum(std::move(blocks));

    Mat inj1 = Mat::Zero(sum.dim(), a.dim());
    inj1.topLeftCorner(a.dim(), a.dim()) = Mat::Identity(a.dim(), a.dim());
    Mat inj2 = Mat::Zero(sum.dim(), b.dim());
    inj2.bottomLeftCorner(b.dim(), b.dim()) = Mat::Identity(b.dim(), b.dim());
    Mat proj1 = Mat::Zero(a.dim(), sum.dim());
    proj1.topLeftCorner(a.dim(), a.dim()) = Mat::Identity(a.dim(), a.dim());
    Mat proj2 = Mat::Zero(b.dim(), sum.dim());
    proj2.bottomRightCorner(b.dim(), b.dim()) = Mat::Identity(b.dim(), b.dim());

    return DirectSum{sum, LinMap(a, sum, std::move(inj1)), LinMap(b, sum, std::move(inj2)),
                     LinMap(sum, a, std::move(proj1)), LinMap(sum, b, std::move(proj2))};
}

}  // namespace vna
