// Spatial tensor product (blockwise Kronecker), direct sums with their
// injections/projections, and the structural isomorphisms of the symmetric
// monoidal structure.

#pragma once

#include "vna/linmap.hpp"

namespace vna {

// Blocks are the products n_i * m_j in lexicographic (i, j) order.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

// Index of block (i, j) of a (tensor) b.
int tensor_block_index(const Algebra& a, const Algebra& b, int i, int j);

// A tensor product together with its provenance. The product compares equal
// to any algebra with the same block sequence; the factors only carry the
// index bookkeeping.
struct TensorAlgebra {
    Algebra product;
    Algebra left;
    Algebra right;

    int block_index(int i, int j) const { return tensor_block_index(left, right, i, j); }
    // Factor basis indices whose Kronecker product is the given basis unit.
    std::pair<int, int> basis_factors(int index) const;
};

TensorAlgebra tensor_product(const Algebra& a, const Algebra& b);

Element tensor_elements(const Element& x, const Element& y);
LinMap tensor_maps(const LinMap& phi, const LinMap& psi);

// The one-dimensional algebra C, the tensor unit.
Algebra scalar_algebra();

// alpha: (A (x) B) (x) C -> A (x) (B (x) C)
LinMap associator(const Algebra& a, const Algebra& b, const Algebra& c);
LinMap associator_inverse(const Algebra& a, const Algebra& b, const Algebra& c);
// lambda: C (x) A -> A, rho: A (x) C -> A
LinMap left_unitor(const Algebra& a);
LinMap right_unitor(const Algebra& a);
// gamma: A (x) B -> B (x) A
LinMap symmetry(const Algebra& a, const Algebra& b);

enum class StructuralIsoKind { Associator, LeftUnitor, RightUnitor, Symmetry };

// Dispatcher over the named isomorphisms; arity of `algebras` must match.
LinMap structural_iso(StructuralIsoKind kind, const std::vector<Algebra>& algebras);

struct DirectSum {
    Algebra sum;
    LinMap inj1, inj2;    // kappa_i: non-unital *-homomorphisms
    LinMap proj1, proj2;  // pi_i: MIU onto the summands
};

DirectSum direct_sum(const Algebra& a, const Algebra& b);

}  // namespace vna
