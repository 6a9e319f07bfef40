#include "vna/tensor.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace vna;

TEST_CASE("tensor_algebra block structure") {
    CHECK(tensor_algebra(Algebra({1, 1}), Algebra({2})) == Algebra({2, 2}));
    CHECK(tensor_algebra(Algebra({2}), Algebra({2})) == Algebra({4}));
    CHECK(tensor_algebra(Algebra({1, 1}), Algebra({1, 1})) == Algebra({1, 1, 1, 1}));
    CHECK(tensor_algebra(Algebra({2, 3}), Algebra{}) == Algebra{});
    CHECK(tensor_algebra(Algebra({2, 3}), scalar_algebra()) == Algebra({2, 3}));

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        Algebra a = testing::random_algebra(rng);
        Algebra b = testing::random_algebra(rng);
        CHECK(tensor_algebra(a, b).dim() == a.dim() * b.dim());
    }
}

TEST_CASE("tensor_product keeps factor provenance") {
    TensorAlgebra t = tensor_product(Algebra({1, 2}), Algebra({2}));
    CHECK(t.product == Algebra({2, 4}));
    CHECK(t.left == Algebra({1, 2}));
    CHECK(t.block_index(1, 0) == 1);
    // basis unit 0 of the product is e_0 (x) e_00 of the factors
    auto [la, rb] = t.basis_factors(0);
    CHECK(la == 0);
    CHECK(rb == 0);
    for (int s = 0; s < t.product.dim(); ++s) {
        auto [i, j] = t.basis_factors(s);
        Element rebuilt =
            tensor_elements(Element::basis(t.left, i), Element::basis(t.right, j));
        CHECK(approx_equal(rebuilt, Element::basis(t.product, s)));
    }
}

TEST_CASE("tensor_elements") {
    Algebra c2({1, 1});
    Element e1 = Element::basis(c2, 0);
    Element e2 = Element::basis(c2, 1);
    Element t = tensor_elements(e1, e2);
    CHECK(approx_equal(t, Element::basis(tensor_algebra(c2, c2), 1)));  // block (0,1)

    Algebra m2({2});
    CHECK(approx_equal(tensor_elements(Element::unit(m2), Element::unit(c2)),
                       Element::unit(tensor_algebra(m2, c2))));

    Element sigma_x(m2);
    sigma_x.block(0) << 0, 1, 1, 0;
    Element pair = tensor_elements(sigma_x, sigma_x);
    Mat expected = Mat::Zero(4, 4);
    expected(0, 3) = expected(1, 2) = expected(2, 1) = expected(3, 0) = 1.0;
    CHECK(approx_equal(pair.block(0), expected));
}

TEST_CASE("tensor elements multiply componentwise") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Algebra a = testing::random_algebra(rng, 3, 3);
        Algebra b = testing::random_algebra(rng, 3, 3);
        Element x = testing::random_element(a, rng);
        Element x2 = testing::random_element(a, rng);
        Element y = testing::random_element(b, rng);
        Element y2 = testing::random_element(b, rng);
        CHECK(approx_equal(multiply(tensor_elements(x, y), tensor_elements(x2, y2)),
                           tensor_elements(multiply(x, x2), multiply(y, y2))));
    }
}

TEST_CASE("tensor_maps") {
    Algebra c2({1, 1});
    CHECK(approx_equal(tensor_maps(LinMap::identity(c2), LinMap::identity(c2)),
                       LinMap::identity(tensor_algebra(c2, c2))));

    // pi_1 (x) pi_1 is the character at block (0,0)
    Mat pi1 = Mat::Zero(1, 2);
    pi1(0, 0) = 1.0;
    LinMap character(c2, scalar_algebra(), pi1);
    LinMap paired = tensor_maps(character, character);
    Mat expected = Mat::Zero(1, 4);
    expected(0, 0) = 1.0;
    CHECK(approx_equal(paired.action(), expected));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        Algebra a = testing::random_algebra(rng, 2, 2);
        Algebra b = testing::random_algebra(rng, 2, 2);
        LinMap f = testing::random_miu_automorphism(a, rng);
        LinMap g = testing::random_miu_automorphism(b, rng);
        CHECK(check_miu(tensor_maps(f, g)).all());
    }
}

TEST_CASE("tensor_maps is functorial") {
    std::mt19937_64 rng(7);
    Algebra a({2}), b({1, 1});
    LinMap f1 = testing::random_cp_map(a, a, rng);
    LinMap f2 = testing::random_cp_map(a, a, rng);
    LinMap g1 = testing::random_cp_map(b, b, rng);
    LinMap g2 = testing::random_cp_map(b, b, rng);
    CHECK(approx_equal(compose(tensor_maps(f1, g1), tensor_maps(f2, g2)),
                       tensor_maps(compose(f1, f2), compose(g1, g2))));
}

TEST_CASE("tensor of CP maps is CP") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        Algebra a = testing::random_algebra(rng, 2, 2);
        Algebra b = testing::random_algebra(rng, 2, 2);
        LinMap f = testing::random_cp_map(a, a, rng);
        LinMap g = testing::random_cp_map(b, b, rng);
        CHECK(check_cp(tensor_maps(f, g)));
    }
}

TEST_CASE("unitors act by scalar multiplication") {
    Algebra c2({1, 1});
    LinMap lambda = left_unitor(c2);
    std::mt19937_64 rng(11);
    Element a = testing::random_element(c2, rng);
    Element scalar(scalar_algebra());
    scalar.block(0)(0, 0) = Complex(0.25, -2.0);
    CHECK(approx_equal(apply(lambda, tensor_elements(scalar, a)),
                       scale(Complex(0.25, -2.0), a)));

    LinMap rho = right_unitor(c2);
    CHECK(approx_equal(apply(rho, tensor_elements(a, scalar)), scale(Complex(0.25, -2.0), a)));
}

TEST_CASE("symmetry is an involution and swaps factors") {
    Algebra a({1, 1}), b({1, 1, 1});
    LinMap gamma = symmetry(a, b);
    LinMap gamma_back = symmetry(b, a);
    CHECK(approx_equal(compose(gamma_back, gamma), LinMap::identity(tensor_algebra(a, b))));

    std::mt19937_64 rng(13);
    Element x = testing::random_element(a, rng);
    Element y = testing::random_element(b, rng);
    CHECK(approx_equal(apply(gamma, tensor_elements(x, y)), tensor_elements(y, x)));
}

TEST_CASE("associator reindexes the triple tensor") {
    Algebra c2({1, 1});
    LinMap alpha = associator(c2, c2, c2);
    // with the lexicographic block order the permutation is the identity
    CHECK(approx_equal(alpha.action(), Mat::Identity(8, 8)));

    std::mt19937_64 rng(15);
    Algebra a({2}), b({1, 1}), c({1, 2});
    LinMap alpha2 = associator(a, b, c);
    Element x = testing::random_element(a, rng);
    Element y = testing::random_element(b, rng);
    Element z = testing::random_element(c, rng);
    CHECK(approx_equal(apply(alpha2, tensor_elements(tensor_elements(x, y), z)),
                       tensor_elements(x, tensor_elements(y, z))));
    CHECK(approx_equal(compose(associator_inverse(a, b, c), alpha2),
                       LinMap::identity(tensor_algebra(tensor_algebra(a, b), c))));
}

TEST_CASE("structural isos pass check_miu") {
    Algebra a({2}), b({1, 1}), c({3});
    CHECK(check_miu(structural_iso(StructuralIsoKind::Associator, {a, b, c})).all());
    CHECK(check_miu(structural_iso(StructuralIsoKind::LeftUnitor, {a})).all());
    CHECK(check_miu(structural_iso(StructuralIsoKind::RightUnitor, {b})).all());
    CHECK(check_miu(structural_iso(StructuralIsoKind::Symmetry, {a, b})).all());
    CHECK_THROWS_AS(structural_iso(StructuralIsoKind::Associator, {a}), std::invalid_argument);
}

TEST_CASE("coherence: pentagon and triangle") {
    Algebra a({2}), b({1, 1}), c({1}), d({2});

    // pentagon
    LinMap lhs = compose(tensor_maps(LinMap::identity(a), associator(b, c, d)),
                         compose(associator(a, tensor_algebra(b, c), d),
                                 tensor_maps(associator(a, b, c), LinMap::identity(d))));
    LinMap rhs = compose(associator(a, b, tensor_algebra(c, d)),
                         associator(tensor_algebra(a, b), c, d));
    CHECK(approx_equal(lhs, rhs));

    // triangle
    LinMap tri_lhs = compose(tensor_maps(LinMap::identity(a), left_unitor(b)),
                             associator(a, scalar_algebra(), b));
    LinMap tri_rhs = tensor_maps(right_unitor(a), LinMap::identity(b));
    CHECK(approx_equal(tri_lhs, tri_rhs));
}

TEST_CASE("direct sum injections and projections") {
    Algebra a({1}), b({2});
    DirectSum sum = direct_sum(a, b);
    CHECK(sum.sum == Algebra({1, 2}));

    std::mt19937_64 rng(17);
    Element x = testing::random_element(a, rng);
    Element embedded = apply(sum.inj1, x);
    CHECK(approx_equal(embedded.block(0), x.block(0)));
    CHECK(max_abs(embedded.block(1)) == 0.0);

    CHECK(approx_equal(compose(sum.proj1, sum.inj1), LinMap::identity(a)));
    CHECK(approx_equal(compose(sum.proj2, sum.inj2), LinMap::identity(b)));
    CHECK(approx_equal(compose(sum.proj1, sum.inj2), LinMap(b, a)));
    CHECK(approx_equal(compose(sum.proj2, sum.inj1), LinMap(a, b)));

    // projections are MIU, injections are *-homomorphisms but not unital
    CHECK(check_miu(sum.proj1).all());
    CHECK(check_miu(sum.proj2).all());
    MiuReport inj_report = check_miu(sum.inj1);
    CHECK(inj_report.multiplicative);
    CHECK(inj_report.involutive);
    CHECK_FALSE(inj_report.unital);

    CHECK(direct_sum(a, Algebra{}).sum == a);
}
