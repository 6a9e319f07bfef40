#include "vna/duplicability.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace vna;

TEST_CASE("decide_duplicable") {
    DuplicabilityVerdict yes = decide_duplicable(Algebra({1, 1, 1}));
    CHECK(yes.duplicable);
    CHECK(*yes.x_size == 3);
    CHECK(yes.report.all_pass());
    CHECK(check_miu(*yes.iso).all());

    DuplicabilityVerdict no = decide_duplicable(Algebra({1, 2}));
    CHECK_FALSE(no.duplicable);
    CHECK(*no.witness_block == 1);
    REQUIRE(no.noncommuting_pair.has_value());
    auto& [x, p] = *no.noncommuting_pair;
    CHECK_FALSE(approx_equal(multiply(x, p), multiply(p, x)));

    // the qubit algebra is not duplicable
    DuplicabilityVerdict qubit = decide_duplicable(Algebra({2}));
    CHECK_FALSE(qubit.duplicable);
    CHECK(*qubit.witness_block == 0);

    DuplicabilityVerdict zero = decide_duplicable(Algebra{});
    CHECK(zero.duplicable);
    CHECK(*zero.x_size == 0);
}

TEST_CASE("decision agrees with abelianness and block sizes") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Algebra a = testing::random_algebra(rng);
        const bool by_theorem = decide_duplicable(a).duplicable;
        const bool by_commutation = is_abelian(a);
        bool by_blocks = true;
        for (int n : a.blocks()) by_blocks = by_blocks && n == 1;
        CHECK(by_theorem == by_commutation);
        CHECK(by_commutation == by_blocks);
    }
}

TEST_CASE("canonical duplicator") {
    Algebra c2({1, 1});
    Duplicator dup = canonical_duplicator(c2);
    Element e1 = Element::basis(c2, 0);
    Element e2 = Element::basis(c2, 1);
    CHECK(approx_equal(apply(dup.delta, tensor_elements(e1, e1)), e1));
    CHECK(approx_equal(apply(dup.delta, tensor_elements(e1, e2)), Element::zero(c2)));
    CHECK(approx_equal(dup.unit, Element::unit(c2)));
    CHECK(verify_duplicator(c2, dup).all_pass());

    Algebra c({1});
    Duplicator scalar_dup = canonical_duplicator(c);
    Element z(c);
    z.block(0)(0, 0) = Complex(2.0, 1.0);
    Element w(c);
    w.block(0)(0, 0) = Complex(0.0, 3.0);
    CHECK(approx_equal(apply(scalar_dup.delta, tensor_elements(z, w)), multiply(z, w)));

    Duplicator empty = canonical_duplicator(Algebra{});
    CHECK(verify_duplicator(Algebra{}, empty).all_pass());

    CHECK_THROWS_AS(canonical_duplicator(Algebra({2})), std::invalid_argument);
}

TEST_CASE("verify_duplicator flags broken candidates") {
    Algebra c2({1, 1});

    // delta'(a (x) b) = (a_1 b_1, a_1 b_2) fails the unit law at a = e_2
    Mat action = Mat::Zero(2, 4);
    action(0, 0) = 1.0;  // (e1, e1) -> e1
    action(1, 1) = 1.0;  // (e1, e2) -> e2
    Duplicator skew{LinMap(tensor_algebra(c2, c2), c2, action), Element::unit(c2)};
    Report report = verify_duplicator(c2, skew);
    CHECK_FALSE(report.all_pass());
    const CheckResult* unit_right = report.find("unit_law_right");
    REQUIRE(unit_right != nullptr);
    CHECK_FALSE(unit_right->pass);
    CHECK_FALSE(unit_right->counterexample.empty());
    // the defining failure: delta'(e_2 (x) u) = 0 != e_2
    Element e2 = Element::basis(c2, 1);
    CHECK(approx_equal(apply(skew.delta, tensor_elements(e2, skew.unit)), Element::zero(c2)));

    // a half unit fails: delta(a (x) u) = a/2
    Duplicator half = canonical_duplicator(c2);
    half.unit = scale(0.5, Element::unit(c2));
    Report half_report = verify_duplicator(c2, half);
    CHECK_FALSE(half_report.all_pass());
    CHECK_FALSE(half_report.find("unit_law_right")->pass);
    CHECK_FALSE(half_report.find("unit_is_one")->pass);

    CHECK_THROWS_AS(verify_duplicator(Algebra({1}), skew), std::invalid_argument);
}

TEST_CASE("uniqueness under perturbation") {
    Algebra c3({1, 1, 1});
    Duplicator canonical = canonical_duplicator(c3);
    REQUIRE(verify_duplicator(c3, canonical).all_pass());

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Mat direction = testing::random_matrix(3, 9, rng);
        direction /= direction.norm();
        Duplicator perturbed{
            LinMap(canonical.delta.domain(), c3, canonical.delta.action() + 1e-2 * direction),
            canonical.unit};
        CHECK_FALSE(verify_duplicator(c3, perturbed).all_pass());
    }
}

TEST_CASE("tomiyama decomposition") {
    Algebra c2({1, 1});
    DirectSum sum2 = direct_sum(c2, c2);

    // f(a, b) = (a_1, b_2)
    Mat action = Mat::Zero(2, 4);
    action(0, 0) = 1.0;
    action(1, 3) = 1.0;
    TomiyamaResult picked = tomiyama_decompose(LinMap(sum2.sum, c2, action));
    Element expected(c2);
    expected.block(0)(0, 0) = 1.0;
    CHECK(approx_equal(picked.p, expected));
    CHECK(picked.report.all_pass());

    // f(a, b) = (a + b)/2 on M_2
    Algebra m2({2});
    DirectSum summ = direct_sum(m2, m2);
    LinMap average = LinMap::from_function(summ.sum, m2, [&](const Element& x) {
        Element out(m2);
        out.block(0) = 0.5 * (x.block(0) + x.block(1));
        return out;
    });
    TomiyamaResult averaged = tomiyama_decompose(average);
    CHECK(approx_equal(averaged.p, scale(0.5, Element::unit(m2))));
    CHECK(averaged.report.all_pass());

    // f(a, b) = a ignores b: p = 1
    LinMap first(sum2.sum, c2, (Mat(2, 4) << 1, 0, 0, 0, 0, 1, 0, 0).finished());
    TomiyamaResult ignored = tomiyama_decompose(first);
    CHECK(approx_equal(ignored.p, Element::unit(c2)));
    CHECK(ignored.report.all_pass());
}

TEST_CASE("tomiyama preconditions are enforced") {
    Algebra c2({1, 1});
    DirectSum sum = direct_sum(c2, c2);
    // f(a, b) = (a_1, a_1) is not a left inverse of the diagonal
    Mat action = Mat::Zero(2, 4);
    action(0, 0) = 1.0;
    action(1, 0) = 1.0;
    CHECK_THROWS_WITH_AS(tomiyama_decompose(LinMap(sum.sum, c2, action)),
                         doctest::Contains("f(a,a) = a fails"), std::invalid_argument);

    // not unital
    CHECK_THROWS_WITH_AS(tomiyama_decompose(LinMap(sum.sum, c2)),
                         doctest::Contains("not unital"), std::invalid_argument);
}

TEST_CASE("tomiyama recovers random central effects") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Algebra a = testing::random_algebra(rng, 3, 2);
        if (a.dim() > 9 || a.is_zero()) continue;
        // central p: a multiple of the identity in each block
        Element p(a);
        for (int b = 0; b < a.num_blocks(); ++b)
            p.block(b) = unit(rng) * Mat::Identity(a.block_size(b), a.block_size(b));
        Element p_perp = complement(p);

        DirectSum sum = direct_sum(a, a);
        LinMap f = LinMap::from_function(sum.sum, a, [&](const Element& x) {
            Element first(a), second(a);
            for (int b = 0; b < a.num_blocks(); ++b) {
                first.block(b) = x.block(b);
                second.block(b) = x.block(b + a.num_blocks());
            }
            return add(multiply(first, p), multiply(second, p_perp));
        });
        TomiyamaResult result = tomiyama_decompose(f);
        CHECK(max_abs(subtract(result.p, p)) < 1e-9);
        CHECK(result.report.all_pass());
    }
}

TEST_CASE("restriction to summands") {
    Algebra c1({1}), c2({1, 1});
    Algebra c3({1, 1, 1});
    Duplicator dup3 = canonical_duplicator(c3);

    LinMap to_c2 = restrict_duplicator_to_summand(c1, c2, dup3, 1);
    CHECK(approx_equal(to_c2, canonical_duplicator(c2).delta));

    LinMap to_c1 = restrict_duplicator_to_summand(c1, c2, dup3, 0);
    CHECK(approx_equal(to_c1, canonical_duplicator(c1).delta));

    // restriction of a restriction equals the direct restriction
    Algebra c4({1, 1, 1, 1});
    Duplicator dup4 = canonical_duplicator(c4);
    LinMap middle = restrict_duplicator_to_summand(c2, c2, dup4, 0);
    Duplicator middle_dup{middle, Element::unit(c2)};
    LinMap twice = restrict_duplicator_to_summand(c1, c1, middle_dup, 0);
    LinMap direct = restrict_duplicator_to_summand(c1, c3, dup4, 0);
    CHECK(approx_equal(twice, direct));

    // unverified duplicators are rejected
    Duplicator broken = dup3;
    broken.unit = scale(0.5, broken.unit);
    CHECK_THROWS_AS(restrict_duplicator_to_summand(c1, c2, broken, 0), std::invalid_argument);
}

TEST_CASE("summand monotonicity of duplicability") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Algebra a = testing::random_algebra(rng, 2, 1);
        Algebra b = testing::random_algebra(rng, 2, 1);
        Algebra sum = direct_sum(a, b).sum;
        REQUIRE(decide_duplicable(sum).duplicable);
        Duplicator dup = canonical_duplicator(sum);
        LinMap da = restrict_duplicator_to_summand(a, b, dup, 0);
        LinMap db = restrict_duplicator_to_summand(a, b, dup, 1);
        CHECK(verify_duplicator(a, Duplicator{da, Element::unit(a)}).all_pass());
        CHECK(verify_duplicator(b, Duplicator{db, Element::unit(b)}).all_pass());
    }
}
