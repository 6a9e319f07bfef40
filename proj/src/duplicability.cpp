#include "vna/duplicability.hpp"

namespace vna {

namespace {

std::string basis_label(int index) { return "basis " + std::to_string(index); }

std::string pair_label(int s, int t) {
    return "basis pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
}

}  // namespace

Duplicator canonical_duplicator(const Algebra& a) {
    if (!is_abelian(a)) throw std::invalid_argument("canonical duplicator requires an abelian algebra");
    const int k = a.num_blocks();
    const Algebra dom = tensor_algebra(a, a);
    // All blocks have size 1, so the flat basis index of A (x) A is the
    // lexicographic pair index itself.
    Mat action = Mat::Zero(k, k * k);
    for (int i = 0; i < k; ++i) action(i, i * k + i) = 1.0;
    return Duplicator{LinMap(dom, a, std::move(action)), Element::unit(a)};
}

Report verify_duplicator(const Algebra& a, const Duplicator& candidate, int positivity_samples,
                         uint64_t positivity_seed) {
    const Algebra dom = tensor_algebra(a, a);
    if (candidate.delta.domain() != dom || candidate.delta.codomain() != a)
        throw std::invalid_argument("duplicator boundary mismatch");
    if (candidate.unit.algebra() != a) throw std::invalid_argument("unit algebra mismatch");

    Report report;
    const LinMap& delta = candidate.delta;
    const Element& u = candidate.unit;
    const Element one = Element::unit(a);

    report.add("unit_in_interval", is_in_unit_interval(u));

    PositivityVerdict pos = check_positive(delta, positivity_samples, positivity_seed);
    std::string pos_name = "positive";
    switch (pos.kind) {
        case PositivityVerdict::Kind::VerifiedExact: pos_name += " (VerifiedExact)"; break;
        case PositivityVerdict::Kind::NotRefuted:
            pos_name += " (NotRefuted, " + std::to_string(pos.samples) + " samples)";
            break;
        case PositivityVerdict::Kind::RefutedWithWitness: pos_name += " (Refuted)"; break;
    }
    report.add(pos_name, !pos.refuted(),
               pos.refuted() ? "positive input with non-positive image" : "");

    report.add("subunital", check_subunital(delta));

    bool right_ok = true, left_ok = true;
    std::string right_ce, left_ce;
    for (int s = 0; s < a.dim(); ++s) {
        Element b = Element::basis(a, s);
        if (right_ok && !approx_equal(apply(delta, tensor_elements(b, u)), b)) {
            right_ok = false;
            right_ce = basis_label(s);
        }
        if (left_ok && !approx_equal(apply(delta, tensor_elements(u, b)), b)) {
            left_ok = false;
            left_ce = basis_label(s);
        }
    }
    report.add("unit_law_right", right_ok, right_ce);
    report.add("unit_law_left", left_ok, left_ce);

    // Derived facts: forced for genuine duplicators.
    report.add("unit_is_one", approx_equal(u, one));
    report.add("delta_one_tensor_one", approx_equal(apply(delta, tensor_elements(one, one)), one));
    report.add("abelian", is_abelian(a));

    bool mult_ok = true;
    std::string mult_ce;
    for (int s = 0; s < a.dim() && mult_ok; ++s)
        for (int t = 0; t < a.dim() && mult_ok; ++t) {
            Element x = Element::basis(a, s);
            Element y = Element::basis(a, t);
            if (!approx_equal(apply(delta, tensor_elements(x, y)), multiply(x, y))) {
                mult_ok = false;
                mult_ce = pair_label(s, t);
            }
        }
    report.add("delta_is_multiplication", mult_ok, mult_ce);

    return report;
}

DuplicabilityVerdict decide_duplicable(const Algebra& a) {
    DuplicabilityVerdict verdict;

    int bad_block = -1;
    for (int b = 0; b < a.num_blocks(); ++b)
        if (a.block_size(b) >= 2) {
            bad_block = b;
            break;
        }

    if (bad_block < 0) {
        verdict.duplicable = true;
        verdict.x_size = a.num_blocks();
        verdict.iso = LinMap::identity(a);  // blocks already are linf(X)
        verdict.duplicator = canonical_duplicator(a);
        verdict.report.add("all_blocks_size_one", true);
        verdict.report.add("iso_miu", check_miu(*verdict.iso).all());
        Report dup_report = verify_duplicator(a, *verdict.duplicator);
        for (auto& c : dup_report.checks) verdict.report.checks.push_back(std::move(c));
        return verdict;
    }

    verdict.duplicable = false;
    verdict.witness_block = bad_block;
    // sigma_x-like symmetrised (0,1) unit against the (0,0) unit.
    Element x(a);
    x.block(bad_block)(0, 1) = 1.0;
    x.block(bad_block)(1, 0) = 1.0;
    Element p(a);
    p.block(bad_block)(0, 0) = 1.0;
    verdict.noncommuting_pair = std::make_pair(x, p);
    verdict.report.add("all_blocks_size_one", false,
                       "block " + std::to_string(bad_block) + " has size " +
                           std::to_string(a.block_size(bad_block)));
    verdict.report.add("noncommuting_witness", !approx_equal(multiply(x, p), multiply(p, x)));
    return verdict;
}

TomiyamaResult tomiyama_decompose(const LinMap& f) {
    const Algebra& a = f.codomain();
    const DirectSum sum = direct_sum(a, a);
    if (f.domain() != sum.sum) throw std::invalid_argument("domain is not A (+) A");

    // Preconditions: positive, unital, f(a, a) = a.
    PositivityVerdict pos = check_positive(f);
    if (pos.refuted()) throw std::invalid_argument("precondition violation: f is not positive");
    const Element one = Element::unit(a);
    Element one_pair = apply(sum.inj1, one) + apply(sum.inj2, one);
    if (!approx_equal(apply(f, one_pair), one))
        throw std::invalid_argument("precondition violation: f is not unital");
    for (int s = 0; s < a.dim(); ++s) {
        Element b = Element::basis(a, s);
        Element diag = apply(sum.inj1, b) + apply(sum.inj2, b);
        if (!approx_equal(apply(f, diag), b))
            throw std::invalid_argument("precondition violation: f(a,a) = a fails at " +
                                        basis_label(s));
    }

    TomiyamaResult result{apply(f, apply(sum.inj1, one)), {}};
    const Element& p = result.p;
    result.report.add("p_central", is_central(p));

    Element p_perp = complement(p);
    bool decomposition_ok = true;
    std::string ce;
    for (int s = 0; s < a.dim() && decomposition_ok; ++s)
        for (int t = 0; t < a.dim() && decomposition_ok; ++t) {
            Element x = Element::basis(a, s);
            Element y = Element::basis(a, t);
            Element lhs = apply(f, apply(sum.inj1, x) + apply(sum.inj2, y));
            Element rhs = multiply(x, p) + multiply(y, p_perp);
            if (!approx_equal(lhs, rhs)) {
                decomposition_ok = false;
                ce = pair_label(s, t);
            }
        }
    result.report.add("decomposition_identity", decomposition_ok, ce);
    return result;
}

LinMap restrict_duplicator_to_summand(const Algebra& a, const Algebra& b, const Duplicator& dup,
                                      int summand) {
    if (summand != 0 && summand != 1) throw std::invalid_argument("summand must be 0 or 1");
    const DirectSum sum = direct_sum(a, b);
    Report report = verify_duplicator(sum.sum, dup);
    if (!report.all_pass())
        throw std::invalid_argument("duplicator does not verify on the direct sum");
    const LinMap& inj = summand == 0 ? sum.inj1 : sum.inj2;
    const LinMap& proj = summand == 0 ? sum.proj1 : sum.proj2;
    return compose(proj, compose(dup.delta, tensor_maps(inj, inj)));
}

}  // namespace vna
