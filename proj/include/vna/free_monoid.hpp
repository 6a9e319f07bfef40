// Characters and the nsp / linf adjunction, canonical commutative monoids
// on linf(X), the free-monoid construction linf(nsp(A)) with its universal
// property, and the function-extraction of monoid morphisms.
//
// Everything here is indexed by MIU characters. The analogous free-monoid
// carrier over all normal subunital CP functionals has a continuum-sized
// index set with no finite representation and is deliberately absent.

#pragma once

#include "vna/duplicability.hpp"

#include <cstdint>

namespace vna {

// A normal MIU-map A -> C; in finite dimension, the coordinate of a 1x1 block.
struct Character {
    int block_index;
    LinMap map;
};

struct FiniteSet {
    int size = 0;
    std::vector<std::string> labels;  // optional; distinct, length == size

    FiniteSet() = default;
    explicit FiniteSet(int n);
    FiniteSet(int n, std::vector<std::string> names);
};

// An object with multiplication m: A (x) A -> A and unit u: C -> A.
struct Monoid {
    Algebra carrier;
    LinMap m;
    LinMap u;
};

std::vector<Character> nsp(const Algebra& a);

Algebra linf(const FiniteSet& x);
Algebra linf(int size);

// For h: X -> Y (h[x] in [0, y_size)), the precomposition map
// linf(Y) -> linf(X), f |-> f . h.
LinMap linf_map(const std::vector<int>& h, int y_size);

// eta: A -> linf(nsp(A)), a |-> (phi(a))_phi.
LinMap eta(const Algebra& a);

// Pointwise multiplication through linf(X) (x) linf(X) ~ linf(X x X)
// precomposed with the diagonal, and the unit embedding of scalars.
Monoid canonical_monoid(const FiniteSet& x);
Monoid canonical_monoid(int x_size);

// Associativity/unit diagrams, optional commutativity, and the
// MIU/CP/subunital status of m and u.
Report verify_monoid(const Monoid& monoid, bool check_commutative);

struct Factorization {
    LinMap g;            // linf(nsp(A)) -> B
    std::vector<int> h;  // Y -> nsp(A), the function inducing g
    Report certificate;
};

// Factors an MIU-map f: A -> B through eta, for B an abelian carrier of a
// verified monoid. g is certified as the monoid morphism with g . eta = f.
Factorization factorize(const LinMap& f, const Monoid& monoid);

// Extracts h: Y -> X with g = linf_map(h) from a monoid morphism
// g: linf(X) -> linf(Y); throws if g is not function-induced.
std::vector<int> canonicalize_monoid_morphism(const LinMap& g);

struct MorphismEnumeration {
    int count = 0;
    std::vector<LinMap> morphisms;
    Report numeric_check;  // random-start solves canonicalize to functions
};

// Brute force over 0/1 matrices filtered by the monoid-morphism equations
// for the canonical monoids; requires x_size * y_size <= 12.
MorphismEnumeration enumerate_monoid_morphisms(int x_size, int y_size, uint64_t seed = 1);

// |nsp(A (x) B)| = |nsp(A)| * |nsp(B)|, characters of the tensor are the
// tensor pairs, and nsp(linf(X)) recovers X.
Report nsp_monoidality_check(const Algebra& a, const Algebra& b);

}  // namespace vna
