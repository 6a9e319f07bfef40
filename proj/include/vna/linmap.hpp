// Linear maps between algebras over the fixed matrix-unit basis, with
// executable predicates: MIU, complete positivity via Choi blocks,
// sampled positivity, and subunitality.

#pragma once

#include "vna/algebra.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace vna {

class LinMap {
public:
    LinMap() : LinMap(Algebra{}, Algebra{}) {}
    LinMap(Algebra domain, Algebra codomain);  // zero map
    LinMap(Algebra domain, Algebra codomain, Mat action);

    static LinMap identity(const Algebra& a);
    static LinMap from_function(const Algebra& domain, const Algebra& codomain,
                                const std::function<Element(const Element&)>& f);

    const Algebra& domain() const { return domain_; }
    const Algebra& codomain() const { return codomain_; }
    // Shape dim(codomain) x dim(domain); columns are images of basis units.
    const Mat& action() const { return action_; }

private:
    Algebra domain_;
    Algebra codomain_;
    Mat action_;
};

Element apply(const LinMap& phi, const Element& x);
LinMap compose(const LinMap& psi, const LinMap& phi);
bool approx_equal(const LinMap& a, const LinMap& b);

struct MiuReport {
    bool multiplicative = false;
    bool involutive = false;
    bool unital = false;
    bool normal = true;  // automatic between finite-dimensional algebras
    std::string normal_note = "finite-dimensional";
    std::string counterexample;  // first failing basis pair, if any

    bool all() const { return multiplicative && involutive && unital && normal; }
};

MiuReport check_miu(const LinMap& phi);

// Choi block for domain block i, codomain block j:
//   C_ij = sum_{k,l} e_kl (tensor) (pi_j . phi . kappa_i)(e_kl).
std::vector<std::vector<Mat>> choi_blocks(const LinMap& phi);

// True iff every Choi block is Hermitian and PSD within tolerance.
bool check_cp(const LinMap& phi);

struct PositivityVerdict {
    enum class Kind { VerifiedExact, RefutedWithWitness, NotRefuted };
    Kind kind;
    std::optional<Element> witness;  // positive input mapped to a non-positive image
    int samples = 0;

    bool refuted() const { return kind == Kind::RefutedWithWitness; }
};

// Exact on abelian domains (minimal projections span the positive cone);
// otherwise evaluates phi on seeded random rank-1 projections per block and
// can only refute.
PositivityVerdict check_positive(const LinMap& phi, int samples_per_block = 64,
                                 uint64_t seed = 1);

// True iff 1 - phi(1) is positive.
bool check_subunital(const LinMap& phi);

}  // namespace vna
