// Normal states, cloning/broadcasting predicates, and the alternating
// projection probe for broadcast feasibility over the CP cone.

#pragma once

#include "vna/duplicability.hpp"

#include <cstdint>
#include <random>

namespace vna {

// omega(a) = sum_i trace(rho_i a_i) for a density element rho >= 0 with
// total trace one.
class State {
public:
    explicit State(Element density);

    const Algebra& algebra() const { return density_.algebra(); }
    const Element& density() const { return density_; }
    Complex evaluate(const Element& a) const;
    LinMap as_linmap() const;  // A -> C

    static State point_mass(const Algebra& a, int block);
    static State uniform(const Algebra& a);
    static State random(const Algebra& a, std::mt19937_64& rng);

private:
    Element density_;
};

// omega(delta(1 (x) a)) = omega(a) = omega(delta(a (x) 1)) on all basis a.
bool is_broadcast(const State& omega, const LinMap& delta);

// omega(delta(a (x) b)) = omega(a) omega(b) on all basis pairs.
bool is_cloned(const State& omega, const LinMap& delta);

// Grid plus random sweep on an abelian algebra: cloned by the canonical
// duplicator iff a standard point mass iff multiplicative.
Report cloned_states_of_duplicator(const Algebra& a, uint64_t seed = 7);

struct ProbeResult {
    double final_residual = 0.0;
    std::vector<double> trajectory;
    int iterations = 0;
    bool feasible = false;  // final residual below 1e-7
    LinMap recovered;       // map read off the last PSD iterate
};

// Alternating projections between the affine set of maps with
// delta(1 (x) a) = a = delta(a (x) 1) and the CP cone (PSD Choi blocks),
// in the Choi parameterisation. Requires dim(A) <= 8.
ProbeResult broadcast_feasibility_probe(const Algebra& a, int iters, uint64_t seed);

struct BroadcastCheck {
    bool duplicable = false;
    Report report;
    std::optional<ProbeResult> probe;
};

// Positive verdicts get the exact separating-set reduction on basis
// elements plus sampled states; negative verdicts get the probe residual.
BroadcastCheck broadcast_all_states_check(const Algebra& a, int iters = 20000,
                                          uint64_t seed = 42);

}  // namespace vna
