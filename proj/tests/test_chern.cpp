#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rho/chern.hpp"
#include "rho/errors.hpp"
#include "rho/rng.hpp"

using namespace rho;

namespace {

GRingMatrix scalar_idempotent(const Group& g, const NCForm& f) {
    FormMatrix m(1);
    m.at(0, 0) = f;
    return certify_idempotent(g, m);
}

GRingMatrix generator_unit(const Group& g, const Elt& x) {
    FormMatrix u(1), ui(1);
    u.at(0, 0) = group_form(g, x);
    ui.at(0, 0) = group_form(g, g.inv(x));
    return certify_invertible(g, u, ui);
}

NCForm averaging(const Group& g, const Elt& invol) {
    return scalar_form(g, CRat(Rat(1, 2))) + group_form(g, invol, CRat(Rat(1, 2)));
}

// diagonal of 0/1/averaging idempotents conjugated by elementary factors
GRingMatrix random_idempotent(const Group& g, Rng& rng, const std::vector<Elt>& ball, int n) {
    FormMatrix p(n);
    std::vector<Elt> invol;
    for (const auto& e : ball)
        if (!g.is_id(e) && g.is_id(g.mul(e, e))) invol.push_back(e);
    for (int i = 0; i < n; ++i) {
        switch (rng.below(invol.empty() ? 2 : 3)) {
            case 0: break;
            case 1: p.at(i, i) = scalar_form(g, CRat(1)); break;
            default: p.at(i, i) = averaging(g, invol[rng.below(invol.size())]);
        }
    }
    for (int f = 0, factors = rng.range(1, 3); f < factors && n > 1; ++f) {
        int i = rng.range(0, n - 1), j = rng.range(0, n - 1);
        if (i == j) continue;
        NCForm w = group_form(g, ball[rng.below(ball.size())], rng.small_crat());
        FormMatrix v = mat_elementary(g, n, i, j, w);
        FormMatrix vinv = mat_elementary(g, n, i, j, CRat(-1) * w);
        p = mat_mul(g, v, mat_mul(g, p, vinv));
    }
    return certify_idempotent(g, p);
}

MatrixPath conjugation_path(const Group& g, const GRingMatrix& p, int i, int j, const NCForm& w) {
    FormMatrix lin(p.m.n);
    lin.at(i, j) = w;
    PolyMat et(mat_identity(g, p.m.n)), etinv(mat_identity(g, p.m.n));
    et.c.push_back(lin);
    etinv.c.push_back(mat_scale(CRat(-1), lin));
    return certify_idempotent_path(g, pm_mul(g, pm_mul(g, et, PolyMat(p.m)), etinv));
}

}  // namespace

TEST_CASE("even character of a constant projection vanishes positively") {
    auto z2 = make_cyclic(2);
    GRingMatrix one = scalar_idempotent(*z2, scalar_form(*z2, CRat(1)));
    CHECK(ch_even_form(*z2, one, 1).is_zero());
    CHECK(ch_even_form(*z2, one, 2).is_zero());
    CHECK(ch_even_form(*z2, one, 0) == scalar_form(*z2, CRat(1)));
}

TEST_CASE("averaging idempotent has the expected degree-two character") {
    auto z2 = make_cyclic(2);
    Elt x = z2->parse("1");
    GRingMatrix p = scalar_idempotent(*z2, averaging(*z2, x));

    // written out by hand: (1/8)(1 + g) dg dg
    NCForm expect;
    expect.add(BasisForm{z2->id(), {x, x}}, CRat(Rat(1, 8)));
    expect.add(BasisForm{x, {x, x}}, CRat(Rat(1, 8)));
    CHECK(ch_even_form(*z2, p, 1) == expect);

    FormCalculus calc(*z2, 1);
    CHECK_FALSE(ch_even(calc, p, 1).is_zero());
}

TEST_CASE("even character is additive over block sums") {
    auto s3 = make_symmetric3();
    Rng rng(31);
    auto ball = s3->elements();
    for (int trial = 0; trial < 6; ++trial) {
        GRingMatrix a = random_idempotent(*s3, rng, ball, 2);
        GRingMatrix b = random_idempotent(*s3, rng, ball, 2);
        FormMatrix zero(2);
        GRingMatrix sum = certify_idempotent(*s3, mat_block2(a.m, zero, zero, b.m));
        for (int k = 0; k <= 2; ++k)
            CHECK(ch_even_form(*s3, sum, k) ==
                  ch_even_form(*s3, a, k) + ch_even_form(*s3, b, k));
    }
}

TEST_CASE("closedness certificate holds for seeded idempotents") {
    Rng rng(37);
    auto z2 = make_cyclic(2);
    auto s3 = make_symmetric3();
    for (int trial = 0; trial < 10; ++trial) {
        GRingMatrix a = random_idempotent(*z2, rng, z2->elements(), rng.range(1, 3));
        GRingMatrix b = random_idempotent(*s3, rng, s3->elements(), rng.range(1, 3));
        for (int k = 0; k <= 2; ++k) {
            CHECK(ch_even_closed_certificate(*z2, a, k));
            CHECK(ch_even_closed_certificate(*s3, b, k));
        }
    }
}

TEST_CASE("closedness also visible in the abelianized complex") {
    auto z2 = make_cyclic(2);
    Rng rng(41);
    FormCalculus calc(*z2, 1);
    for (int trial = 0; trial < 5; ++trial) {
        GRingMatrix p = random_idempotent(*z2, rng, z2->elements(), 2);
        NCForm ch = ch_even_form(*z2, p, 1);
        CHECK(calc.closed_mod_commutators(ch, 2));
    }
}

TEST_CASE("similarity moves the even character by an exact form") {
    auto z2 = make_cyclic(2);
    Elt x = z2->parse("1");
    FormMatrix pm(2);
    pm.at(0, 0) = averaging(*z2, x);
    GRingMatrix p = certify_idempotent(*z2, pm);

    FormMatrix z = mat_elementary(*z2, 2, 0, 1, group_form(*z2, x));
    FormMatrix zi = mat_elementary(*z2, 2, 0, 1, CRat(-1) * group_form(*z2, x));
    GRingMatrix q = certify_idempotent(*z2, mat_mul(*z2, z, mat_mul(*z2, p.m, zi)));

    FormCalculus calc(*z2, 1);
    NCForm diff = ch_even_form(*z2, q, 1) - ch_even_form(*z2, p, 1);
    CHECK(is_exact_mod_commutators(calc, diff, 2));
}

TEST_CASE("character is functorial under pointwise group maps") {
    auto z = make_free_abelian(1);
    auto z4 = make_cyclic(4);
    FormHom phi{z.get(), z4.get(), [&](const Elt& e) {
                    int r = ((e[0] % 4) + 4) % 4;
                    return Elt{r};
                }};

    // idempotent over Z built from the order-2 image class: conjugate
    // diag(1,0) by an elementary factor with a long generator word
    Elt x = z->parse("3");
    FormMatrix pm(2);
    pm.at(0, 0) = scalar_form(*z, CRat(1));
    FormMatrix v = mat_elementary(*z, 2, 1, 0, group_form(*z, x));
    FormMatrix vi = mat_elementary(*z, 2, 1, 0, CRat(-1) * group_form(*z, x));
    GRingMatrix p = certify_idempotent(*z, mat_mul(*z, v, mat_mul(*z, pm, vi)));
    GRingMatrix fp = certify_idempotent(*z4, apply_hom(phi, p.m));

    for (int k = 0; k <= 2; ++k)
        CHECK(apply_hom(phi, ch_even_form(*z, p, k)) == ch_even_form(*z4, fp, k));
}

TEST_CASE("odd character of the unit vanishes and of a generator is one term") {
    auto z = make_free_abelian(1);
    FormMatrix one(1), onei(1);
    one.at(0, 0) = scalar_form(*z, CRat(1));
    onei.at(0, 0) = scalar_form(*z, CRat(1));
    GRingMatrix u1 = certify_invertible(*z, one, onei);
    CHECK(ch_odd_form(*z, u1, 0).is_zero());
    CHECK(ch_odd_form(*z, u1, 1).is_zero());

    Elt x = z->parse("1");
    GRingMatrix u = generator_unit(*z, x);
    // c_0 g^{-1} dg with the calibrated c_0 = -1
    NCForm expect;
    expect.add(BasisForm{z->inv(x), {x}}, CRat(-1));
    CHECK(ch_odd_form(*z, u, 0) == expect);

    // degree-3 part survives abelianization over the free abelian group
    FormCalculus calc(*z, 2);
    CHECK_FALSE(ch_odd(calc, u, 1).is_zero());
}

TEST_CASE("frozen odd constants match a fresh suspension measurement") {
    auto z = make_free_abelian(1);
    GRingMatrix u = generator_unit(*z, z->parse("1"));
    CHECK(measure_odd_constant(*z, u, 0, 4) == odd_constant(0));
    CHECK(measure_odd_constant(*z, u, 1, 5) == odd_constant(1));
    CHECK_THROWS_AS(odd_constant(2), std::out_of_range);
}

TEST_CASE("transgression of a constant path vanishes") {
    auto z2 = make_cyclic(2);
    GRingMatrix p = scalar_idempotent(*z2, averaging(*z2, z2->parse("1")));
    MatrixPath still = certify_idempotent_path(*z2, PolyMat(p.m));
    CHECK(poly_is_zero(transgression(*z2, still, 1)));
    CHECK(poly_is_zero(transgression(*z2, still, 0)));
}

TEST_CASE("transgression identity holds on seeded conjugation paths") {
    Rng rng(43);
    auto z2 = make_cyclic(2);
    auto s3 = make_symmetric3();
    FormCalculus calc2(*z2, 1);
    FormCalculus calc3(*s3, 3);
    int checked = 0;
    for (int trial = 0; trial < 6; ++trial) {
        GRingMatrix p = random_idempotent(*z2, rng, z2->elements(), 2);
        NCForm w = group_form(*z2, z2->parse("1"), rng.small_crat());
        MatrixPath path = conjugation_path(*z2, p, 0, 1, w);
        CHECK(transgression_identity(calc2, path, 1));
        CHECK(transgression_identity(calc2, path, 2));
        ++checked;
    }
    for (int trial = 0; trial < 4; ++trial) {
        GRingMatrix p = random_idempotent(*s3, rng, s3->elements(), 2);
        NCForm w = group_form(*s3, s3->elements()[rng.below(6)], rng.small_crat());
        MatrixPath path = conjugation_path(*s3, p, 1, 0, w);
        CHECK(transgression_identity(calc3, path, 1));
        ++checked;
    }
    CHECK(checked == 10);
}

TEST_CASE("integrated transgression matches the endpoint difference") {
    auto z2 = make_cyclic(2);
    Elt x = z2->parse("1");
    FormMatrix pm(2);
    pm.at(0, 0) = averaging(*z2, x);
    GRingMatrix p = certify_idempotent(*z2, pm);
    MatrixPath path = conjugation_path(*z2, p, 0, 1, group_form(*z2, x));
    FormCalculus calc(*z2, 1);

    for (int k = 1; k <= 2; ++k) {
        FormPoly along = ch_even_along(*z2, path, k);
        NCForm ch1 = poly_eval(along, Rat(1));
        NCForm ch0 = poly_eval(along, Rat(0));
        NCForm primitive = poly_integrate01(transgression(*z2, path, k));
        CHECK(calc.equivalent(ch1 - ch0, CRat(-1) * dga_differential(*z2, primitive), 2 * k));
    }
}

TEST_CASE("symmetrized and reduced integrands agree modulo commutators") {
    auto z = make_free_abelian(1);
    GRingMatrix u = generator_unit(*z, z->parse("1"));
    MatrixPath loop = suspension_loop(*z, u);
    FormCalculus calc(*z, 4);

    FormPoly a = transgression(*z, loop, 1);
    FormPoly b = transgression_symmetrized(*z, loop, 1);
    FormPoly diff = poly_sub(a, b);
    for (const auto& c : diff) CHECK(calc.abelianize(c, 1).is_zero());

    // (2p-1) pdot dp reduction, opposite orientation to Tr(Xi)
    PolyMat dp = pm_d(*z, loop.p);
    PolyMat two_p = pm_scale(CRat(2), loop.p);
    two_p.c[0] = mat_sub(two_p.c[0], mat_identity(*z, loop.p.n));
    FormPoly reduced = pm_trace(pm_mul(*z, two_p, pm_mul(*z, pm_derivative(loop.p), dp)));
    FormPoly sum = poly_add(pm_trace(transgression_xi(*z, loop)), reduced);
    for (const auto& c : sum) CHECK(calc.abelianize(c, 1).is_zero());
}

TEST_CASE("transgression identity holds on the suspension loop") {
    auto z = make_free_abelian(1);
    GRingMatrix u = generator_unit(*z, z->parse("1"));
    MatrixPath loop = suspension_loop(*z, u);
    FormCalculus calc(*z, 4);
    CHECK(transgression_identity(calc, loop, 1));
}

TEST_CASE("relative character of a constant pair is zero") {
    auto z2 = make_cyclic(2);
    GRingMatrix p = scalar_idempotent(*z2, averaging(*z2, z2->parse("1")));
    FormHom id{z2.get(), z2.get(), [](const Elt& e) { return e; }};
    MatrixPath still = certify_idempotent_path(*z2, PolyMat(p.m));
    RelativeChern rc = relative_ch(id, p, p, still, 1);
    CHECK(rc.even.is_zero());
    CHECK(rc.odd.is_zero());

    FormCalculus calc(*z2, 1);
    CHECK(relative_closed(calc, calc, id, rc, 1));
}

TEST_CASE("conjugation loops leave the relative class exact") {
    auto z2 = make_cyclic(2);
    Elt x = z2->parse("1");
    FormMatrix pm(2);
    pm.at(0, 0) = averaging(*z2, x);
    GRingMatrix p = certify_idempotent(*z2, pm);
    FormHom id{z2.get(), z2.get(), [](const Elt& e) { return e; }};

    // t(1-t) vanishes at both ends, so the path is a loop at p
    FormMatrix lin(2);
    lin.at(0, 1) = group_form(*z2, x);
    PolyMat et(mat_identity(*z2, 2)), etinv(mat_identity(*z2, 2));
    et.c.push_back(lin);
    et.c.push_back(mat_scale(CRat(-1), lin));
    etinv.c.push_back(mat_scale(CRat(-1), lin));
    etinv.c.push_back(lin);
    PolyMat prod = pm_mul(*z2, et, etinv);
    // unipotent with nilpotent off-diagonal square: exact inverse
    REQUIRE(prod == PolyMat(mat_identity(*z2, 2)));
    MatrixPath loop = certify_idempotent_path(
        *z2, pm_mul(*z2, pm_mul(*z2, et, PolyMat(p.m)), etinv));

    RelativeChern rc = relative_ch(id, p, p, loop, 1);
    CHECK(rc.even.is_zero());
    FormCalculus calc(*z2, 1);
    CHECK(relative_closed(calc, calc, id, rc, 1));
    CHECK(is_exact_mod_commutators(calc, rc.odd, 1));
}

TEST_CASE("rotation path carries a nonzero odd slot") {
    auto z = make_free_abelian(1);
    GRingMatrix u = generator_unit(*z, z->parse("1"));
    MatrixPath swap = rotation_swap_path(*z, u);
    FormMatrix e00(2), e11(2);
    e00.at(0, 0) = scalar_form(*z, CRat(1));
    e11.at(1, 1) = scalar_form(*z, CRat(1));
    GRingMatrix p0 = certify_idempotent(*z, e00);
    GRingMatrix p1 = certify_idempotent(*z, e11);
    FormHom id{z.get(), z.get(), [](const Elt& e) { return e; }};

    RelativeChern rc = relative_ch(id, p0, p1, swap, 1);
    CHECK(rc.even.is_zero());  // constant projections have no curvature
    FormCalculus calc(*z, 4);
    CHECK(relative_closed(calc, calc, id, rc, 1));
    CHECK_FALSE(calc.abelianize(rc.odd, 1).is_zero());
    CHECK_FALSE(is_exact_mod_commutators(calc, rc.odd, 1));

    CHECK_THROWS_AS(relative_ch(id, p1, p0, swap, 1), CertificationError);
}

TEST_CASE("uncertified inputs are rejected") {
    auto z2 = make_cyclic(2);
    FormMatrix m(1);
    m.at(0, 0) = scalar_form(*z2, CRat(1));
    GRingMatrix fake{m, false, false, FormMatrix()};
    CHECK_THROWS_AS(curvature(*z2, fake), CertificationError);
    CHECK_THROWS_AS(ch_odd_form(*z2, fake, 0), CertificationError);
}
