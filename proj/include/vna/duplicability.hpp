// Duplicability: the structural decision procedure, the canonical
// duplicator on abelian algebras, candidate verification against the
// defining laws, and the Tomiyama decomposition of positive unital
// left inverses of the diagonal.

#pragma once

#include "vna/report.hpp"
#include "vna/tensor.hpp"

#include <optional>
#include <utility>

namespace vna {

// delta: A (x) A -> A together with its unit element u, 0 <= u <= 1.
struct Duplicator {
    LinMap delta;
    Element unit;
};

struct DuplicabilityVerdict {
    bool duplicable = false;
    // Positive verdict: an MIU isomorphism onto linf(X) and the canonical
    // duplicator, both re-verified.
    std::optional<int> x_size;
    std::optional<LinMap> iso;
    std::optional<Duplicator> duplicator;
    // Negative verdict: a block of size >= 2 and a concrete noncommuting
    // pair inside it.
    std::optional<int> witness_block;
    std::optional<std::pair<Element, Element>> noncommuting_pair;
    Report report;
};

DuplicabilityVerdict decide_duplicable(const Algebra& a);

// delta(a (x) b) = a.b with u = 1; requires an abelian algebra.
Duplicator canonical_duplicator(const Algebra& a);

// Checks the defining laws and the derived facts in order:
// unit interval, positivity, subunitality, unit laws, then u = 1,
// delta(1 (x) 1) = 1, abelianness, delta(a (x) b) = a.b.
Report verify_duplicator(const Algebra& a, const Duplicator& candidate,
                         int positivity_samples = 64, uint64_t positivity_seed = 1);

struct TomiyamaResult {
    Element p;      // f(1, 0), central
    Report report;  // preconditions and the decomposition identity
};

// f: A (+) A -> A positive unital with f(a, a) = a yields
// f(a, b) = a.p + b.p_perp for the central p = f(1, 0).
TomiyamaResult tomiyama_decompose(const LinMap& f);

// pi_s . delta . (kappa_s (x) kappa_s) for summand s of A (+) B;
// requires a duplicator that verifies on the sum.
LinMap restrict_duplicator_to_summand(const Algebra& a, const Algebra& b,
                                      const Duplicator& dup, int summand);

}  // namespace vna
