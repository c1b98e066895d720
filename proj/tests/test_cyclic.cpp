#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rho/cyclic.hpp"
#include "rho/errors.hpp"
#include "rho/rng.hpp"

using namespace rho;

namespace {

CyclicChain chain(const Group& g, const Tuple& t, CRat c = CRat(1)) {
    CyclicChain out;
    out.degree = static_cast<int>(t.size()) - 1;
    out.add(g, t, c);
    return out;
}

CyclicChain random_chain(const Group& g, Rng& rng, const std::vector<Elt>& ball,
                         int degree, int nterms) {
    std::vector<Elt> nonid;
    for (const auto& e : ball)
        if (!g.is_id(e)) nonid.push_back(e);
    CyclicChain out;
    out.degree = degree;
    for (int t = 0; t < nterms; ++t) {
        Tuple tup;
        tup.push_back(ball[rng.below(ball.size())]);
        for (int i = 0; i < degree; ++i) tup.push_back(nonid[rng.below(nonid.size())]);
        out.add(g, tup, rng.small_crat());
    }
    return out;
}

CyclicChain sum(const Group& g, const CyclicChain& a, const CyclicChain& b, int sgn = 1) {
    CyclicChain out = a;
    for (auto& [t, c] : b.terms) out.add(g, t, sgn > 0 ? c : -c);
    return out;
}

// bH + Hb - (iota rho - id) must vanish on every basis tuple
bool homotopy_identity_holds(const Group& g, const LocalizedTransfer& lt, int max_deg,
                             const Elt& x) {
    for (int deg = 0; deg <= max_deg; ++deg) {
        TupleBasis basis(g, deg, -1, TupleTrunc::TotalLength, &x);
        for (int i = 0; i < basis.dim(); ++i) {
            CyclicChain c = chain(g, basis.at(i));
            CyclicChain lhs = hochschild_b(g, lt.homotopy_H(c));
            if (deg >= 1) lhs = sum(g, lhs, lt.homotopy_H(hochschild_b(g, c)));
            CyclicChain rhs = sum(g, lt.rho(g, c), c, -1);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("faces merge adjacent slots and the last face wraps") {
    auto s3 = make_symmetric3();
    Elt a = s3->parse("1"), b = s3->parse("3");
    CHECK(face(*s3, 0, {a, b}) == Tuple{s3->mul(a, b)});
    CHECK(face(*s3, 1, {a, b}) == Tuple{s3->mul(b, a)});
    CHECK(face(*s3, 0, {s3->id(), s3->id()}) == Tuple{s3->id()});
    Elt c = s3->parse("4");
    CHECK(face(*s3, 1, {a, b, c}) == Tuple{a, s3->mul(b, c)});
    CHECK(face(*s3, 2, {a, b, c}) == Tuple{s3->mul(c, a), b});
    CHECK_THROWS_AS(face(*s3, 2, {a, b}), std::out_of_range);
    CHECK_THROWS_AS(face(*s3, 0, {a}), std::out_of_range);
}

TEST_CASE("cyclic rotation moves the last slot to the front") {
    auto z = make_free_abelian(1);
    Tuple t{{0}, {1}, {2}};
    CHECK(cyclic_t(t) == Tuple{{2}, {0}, {1}});
    CHECK(cyclic_t(Tuple{{5}}) == Tuple{{5}});
    CHECK(cyclic_t(cyclic_t(cyclic_t(t))) == t);
}

TEST_CASE("degree-one differential is the commutator defect") {
    auto s3 = make_symmetric3();
    Elt a = s3->parse("1"), b = s3->parse("3");
    CyclicChain d = hochschild_b(*s3, chain(*s3, {a, b}));
    CyclicChain expect = sum(*s3, chain(*s3, {s3->mul(a, b)}), chain(*s3, {s3->mul(b, a)}), -1);
    CHECK(d == expect);

    // abelian groups kill b in degree one
    auto z2ab = make_free_abelian(2);
    Rng rng(11);
    auto ball = z2ab->ball(2);
    for (int i = 0; i < 20; ++i)
        CHECK(hochschild_b(*z2ab, random_chain(*z2ab, rng, ball, 1, 3)).is_zero());

    // b vanishes on degree zero
    CHECK(hochschild_b(*s3, chain(*s3, {a})).is_zero());
}

TEST_CASE("triple with an inverse pair expands without the degenerate middle") {
    auto z3 = make_cyclic(3);
    Elt g{1}, gi{2};
    CyclicChain d = hochschild_b(*z3, chain(*z3, {z3->id(), g, gi}));
    // faces: (g, g^-1), (e, e) dropped, (g^-1, g)
    CyclicChain expect = sum(*z3, chain(*z3, {g, gi}), chain(*z3, {gi, g}));
    CHECK(d == expect);
}

TEST_CASE("b and B assemble into a mixed complex") {
    auto s3 = make_symmetric3();
    Rng rng(23);
    auto ball = s3->elements();
    for (int deg = 1; deg <= 3; ++deg) {
        for (int trial = 0; trial < 10; ++trial) {
            CyclicChain c = random_chain(*s3, rng, ball, deg, 4);
            CHECK(hochschild_b(*s3, hochschild_b(*s3, c)).is_zero());
            CHECK(connes_B(*s3, connes_B(*s3, c)).is_zero());
            CyclicChain mixed = sum(*s3, hochschild_b(*s3, connes_B(*s3, c)),
                                    connes_B(*s3, hochschild_b(*s3, c)));
            CHECK(mixed.is_zero());
        }
    }
}

TEST_CASE("B inserts the identity up front and kills symmetric odd chains") {
    auto z4 = make_cyclic(4);
    Elt g{1};
    CHECK(connes_B(*z4, chain(*z4, {g})) == chain(*z4, {z4->id(), g}));
    CHECK(connes_B(*z4, chain(*z4, {z4->id()})).is_zero());

    // rotation-invariant chains of odd degree die after normalization
    auto s3 = make_symmetric3();
    Rng rng(31);
    auto elems = s3->elements();
    for (int trial = 0; trial < 10; ++trial) {
        Elt a = elems[rng.below(elems.size())], b = elems[rng.below(elems.size())];
        if (s3->is_id(a) || s3->is_id(b)) continue;
        CyclicChain sym = sum(*s3, chain(*s3, {a, b}), chain(*s3, {b, a}));
        CHECK(connes_B(*s3, sym).is_zero());
    }
}

TEST_CASE("localized bases pick out tuples with product in the class") {
    auto z2 = make_cyclic(2);
    Elt g{1};
    TupleBasis b0(*z2, 0, -1, TupleTrunc::TotalLength, &g);
    CHECK(b0.dim() == 1);
    CHECK(b0.at(0) == Tuple{g});

    auto s3 = make_symmetric3();
    Elt flip = s3->parse("1");
    TupleBasis f0(*s3, 0, -1, TupleTrunc::TotalLength, &flip);
    CHECK(f0.dim() == 3);

    auto z = make_free_abelian(1);
    Elt two{2};
    TupleBasis slot(*z, 1, 3, TupleTrunc::PerSlotBall, &two);
    // (a, b) with a + b = 2, |a|, |b| <= 3, b != 0
    CHECK(slot.dim() == 4);
    CHECK(slot.index_of({{0}, {2}}) >= 0);
    CHECK(slot.index_of({{1}, {1}}) >= 0);
    CHECK(slot.index_of({{-1}, {3}}) >= 0);
    CHECK(slot.index_of({{3}, {-1}}) >= 0);

    // total-length mode also bounds the sum of slot lengths
    TupleBasis total(*z, 1, 3, TupleTrunc::TotalLength, &two);
    CHECK(total.dim() == 2);
    CHECK(total.index_of({{0}, {2}}) >= 0);
    CHECK(total.index_of({{1}, {1}}) >= 0);
}

TEST_CASE("localization splits the full basis over conjugacy classes") {
    auto s3 = make_symmetric3();
    for (int deg = 0; deg <= 2; ++deg) {
        TupleBasis full(*s3, deg, -1, TupleTrunc::TotalLength, nullptr);
        int split = 0;
        for (const auto& cls : conjugacy_classes(*s3)) {
            TupleBasis part(*s3, deg, -1, TupleTrunc::TotalLength, &cls.rep);
            split += part.dim();
        }
        CHECK(split == full.dim());
    }
}

TEST_CASE("homology of hand-built slices matches the rank count") {
    ChainComplexSlice zero;
    zero.label = "zero";
    zero.dims = {2, 3, 0};
    zero.d.resize(3);
    zero.d[1].rows = 2;
    zero.d[1].cols.resize(3);
    zero.d[2].rows = 3;
    HomologyReport hz = homology(zero);
    CHECK(hz.dims == std::vector<int>{2, 3});

    ChainComplexSlice ident;
    ident.label = "identity";
    ident.dims = {2, 2, 0};
    ident.d.resize(3);
    ident.d[1].rows = 2;
    ident.d[1].cols = {{{0, CRat(1)}}, {{1, CRat(1)}}};
    ident.d[2].rows = 2;
    HomologyReport hi = homology(ident);
    CHECK(hi.dims == std::vector<int>{0, 0});

    // a non-complex fails validation
    ChainComplexSlice broken;
    broken.label = "broken";
    broken.dims = {1, 1, 1};
    broken.d.resize(3);
    broken.d[1].rows = 1;
    broken.d[1].cols = {{{0, CRat(1)}}};
    broken.d[2].rows = 1;
    broken.d[2].cols = {{{0, CRat(1)}}};
    CHECK_THROWS_AS(homology(broken), IdentityFailure);
}

TEST_CASE("hochschild table of small group rings") {
    auto z2 = make_cyclic(2);
    HomologyReport hh = hochschild_homology(*z2, nullptr, 4);
    CHECK(hh.dims == std::vector<int>{2, 0, 0, 0, 0});
    CHECK(hh.radius == -1);
    CHECK(hh.stabilized);

    auto s3 = make_symmetric3();
    HomologyReport hs = hochschild_homology(*s3, nullptr, 4);
    CHECK(hs.dims == std::vector<int>{3, 0, 0, 0, 0});
}

TEST_CASE("cyclic table alternates with the class count") {
    auto z2 = make_cyclic(2);
    CHECK(cyclic_homology(*z2, nullptr, 4).dims == std::vector<int>{2, 0, 2, 0, 2});
    auto z3 = make_cyclic(3);
    CHECK(cyclic_homology(*z3, nullptr, 4).dims == std::vector<int>{3, 0, 3, 0, 3});
}

TEST_CASE("localized cyclic homology of the integers stabilizes") {
    auto z = make_free_abelian(1);
    Elt two{2};
    HomologyReport hc = cyclic_homology(*z, &two, 2);
    CHECK(hc.dims == std::vector<int>{1, 0, 0});
    CHECK(hc.stabilized);
    CHECK(hc.radius <= 8);
}

TEST_CASE("transfer conjugates tuples into the centralizer") {
    auto s3 = make_symmetric3();
    Elt x = s3->parse("1");
    LocalizedTransfer lt(*s3, x);

    // another transposition maps to x itself in degree zero
    Elt other = s3->parse("2");
    CHECK(lt.rho(Tuple{other}) == Tuple{x});
    CHECK(lt.conjugator_to_x(x) == s3->id());

    // slots land in the centralizer and the product is preserved up to x
    TupleBasis b2(*s3, 2, -1, TupleTrunc::TotalLength, &x);
    for (int i = 0; i < b2.dim(); ++i) {
        Tuple r = lt.rho(b2.at(i));
        CHECK(lt.in_centralizer_tuple(r));
        CHECK(tuple_product(*s3, r) == x);
    }

    // rho restricted to centralizer tuples is the identity
    auto cent = centralizer_ball(*s3, x, 3);
    for (const auto& a : cent)
        for (const auto& b : cent) {
            Tuple t{a, b};
            if (!conjugate_in(*s3, tuple_product(*s3, t), x)) continue;
            if (tuple_degenerate(*s3, t)) continue;
            CHECK(lt.rho(t) == t);
        }
}

TEST_CASE("abelian transfer is trivial and its homotopy dies in normalization") {
    auto z4 = make_cyclic(4);
    Elt one{1};
    LocalizedTransfer lt(*z4, one);
    for (int deg = 0; deg <= 3; ++deg) {
        TupleBasis basis(*z4, deg, -1, TupleTrunc::TotalLength, &one);
        for (int i = 0; i < basis.dim(); ++i) {
            CyclicChain c = chain(*z4, basis.at(i));
            CHECK(lt.rho(*z4, c) == c);
            CHECK(lt.homotopy_H(c).is_zero());
        }
    }
}

TEST_CASE("simplicial homotopy links the transfer to the identity") {
    auto z4 = make_cyclic(4);
    Elt one{1};
    CHECK(homotopy_identity_holds(*z4, LocalizedTransfer(*z4, one), 3, one));

    auto s3 = make_symmetric3();
    Elt flip = s3->parse("1");
    CHECK(homotopy_identity_holds(*s3, LocalizedTransfer(*s3, flip), 2, flip));
}

TEST_CASE("conjugator lengths stay within the witness offset") {
    auto f2 = make_free(2);
    Elt a{1};
    LocalizedTransfer lt(*f2, a, 4);
    TupleBasis basis(*f2, 1, 3, TupleTrunc::TotalLength, &a);
    // D0 = longest anchor over the degree-zero witness set
    int d0 = 0;
    TupleBasis members(*f2, 0, 3, TupleTrunc::TotalLength, &a);
    for (int i = 0; i < members.dim(); ++i) {
        auto y = lt.tuple_conjugators(members.at(i));
        d0 = std::max(d0, f2->length(y[0]));
    }
    for (int i = 0; i < basis.dim(); ++i) {
        const Tuple& t = basis.at(i);
        auto y = lt.tuple_conjugators(t);
        for (const auto& yi : y)
            CHECK(f2->length(yi) <= d0 + tuple_length(*f2, t));
    }
}

TEST_CASE("bar homology of finite and free abelian groups") {
    auto z4 = make_cyclic(4);
    CHECK(bar_homology(*z4, 3).dims == std::vector<int>{1, 0, 0, 0});
    auto s3 = make_symmetric3();
    CHECK(bar_homology(*s3, 2).dims == std::vector<int>{1, 0, 0});

    auto z = make_free_abelian(1);
    HomologyReport bz = bar_homology(*z, 2);
    CHECK(bz.dims == std::vector<int>{1, 1, 0});
    CHECK(bz.stabilized);

    auto z2ab = make_free_abelian(2);
    HomologyReport bz2 = bar_homology(*z2ab, 2, 1, 6);
    CHECK(bz2.dims == std::vector<int>{1, 2, 1});
    CHECK(bz2.stabilized);
}

TEST_CASE("periodicity drops the top column of the total complex") {
    auto triv = make_cyclic(1);
    PeriodicityMap p = periodicity_S(*triv, nullptr, 2);
    CHECK(p.from_dim == 1);
    CHECK(p.to_dim == 1);
    CHECK(p.rank == 1);

    auto z2 = make_cyclic(2);
    PeriodicityMap q = periodicity_S(*z2, nullptr, 4);
    CHECK(q.from_dim == 2);
    CHECK(q.to_dim == 2);
    CHECK(q.rank == 2);

    PeriodicityMap odd = periodicity_S(*z2, nullptr, 3);
    CHECK(odd.from_dim == 0);
    CHECK(odd.to_dim == 0);
    CHECK(odd.rank == 0);
}

TEST_CASE("burghelea comparison at small classes") {
    auto z2 = make_cyclic(2);
    Elt g{1};
    BurgheleaReport b = burghelea_check(*z2, &g, 4);
    CHECK(b.match);
    CHECK(b.direct == std::vector<int>{1, 0, 1, 0, 1});

    auto z = make_free_abelian(1);
    Elt two{2};
    BurgheleaReport bz = burghelea_check(*z, &two, 2);
    CHECK(bz.match);
    CHECK(bz.direct == std::vector<int>{1, 0, 0});
    CHECK(bz.stabilized);
}

TEST_CASE("burghelea comparison over all classes of the permutation group") {
    auto s3 = make_symmetric3();
    BurgheleaReport b = burghelea_check(*s3, nullptr, 4);
    CHECK(b.match);
    CHECK(b.direct == std::vector<int>{3, 0, 3, 0, 3});
}

TEST_CASE("polynomial growth bound is an exact ball predicate") {
    auto z = make_free_abelian(1);
    auto constant = [](const Tuple&) { return CRat(1); };
    CHECK(polynomial_growth_bound(*z, 1, 4, constant, 0, Rat(1)));

    auto sq = [&](const Tuple& t) {
        int l = z->length(t[0]);
        return CRat(l * l);
    };
    CHECK(polynomial_growth_bound(*z, 0, 6, sq, 2, Rat(1)));

    auto expo = [&](const Tuple& t) {
        Rat v = 1;
        for (int i = 0; i < tuple_length(*z, t); ++i) v *= 2;
        return CRat{v, Rat(0)};
    };
    CHECK_FALSE(polynomial_growth_bound(*z, 0, 12, expo, 2, Rat(1)));
}

TEST_CASE("chains drop degenerate tuples and cancel exactly") {
    auto z4 = make_cyclic(4);
    CyclicChain c;
    c.degree = 1;
    c.add(*z4, {{1}, {0}}, CRat(5));  // degenerate slot
    CHECK(c.is_zero());
    c.add(*z4, {{1}, {2}}, CRat(3));
    c.add(*z4, {{1}, {2}}, CRat(-3));
    CHECK(c.is_zero());
}

TEST_CASE("coords reject tuples outside the enumerated window") {
    auto z = make_free_abelian(1);
    Elt two{2};
    TupleBasis basis(*z, 1, 2, TupleTrunc::TotalLength, &two);
    CyclicChain c = chain(*z, {{-1}, {3}});
    CHECK_THROWS_AS(basis.coords(*z, c), TruncationOverflow);
}
