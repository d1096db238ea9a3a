#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezcat/diagonal.hpp"
#include "ezcat/instances.hpp"

using namespace ezcat;

namespace {

std::shared_ptr<const SimplexCat> sx(int b) { return std::make_shared<SimplexCat>(b); }
std::shared_ptr<const BoxCat> bx(int b, bool c) { return std::make_shared<BoxCat>(b, c); }

// Independent oracle for the non-degenerate cells of a product of simplicial
// representables: pairs of monotone maps that jump jointly at every step.
std::vector<int> product_census_oracle(const SimplexCat& s, int m, int n, int upto) {
    std::vector<int> census;
    for (int k = 0; k <= upto; ++k) {
        int count = 0;
        for (MorId f : s.hom(ObjId{k}, ObjId{m}))
            for (MorId g : s.hom(ObjId{k}, ObjId{n})) {
                const auto& vf = s.values(f);
                const auto& vg = s.values(g);
                bool nondeg = true;
                for (int i = 0; i < k; ++i)
                    if (vf[i] == vf[i + 1] && vg[i] == vg[i + 1]) nondeg = false;
                if (nondeg) ++count;
            }
        census.push_back(count);
    }
    while (!census.empty() && census.back() == 0) census.pop_back();
    return census;
}

}  // namespace

TEST_CASE("categorical diagonal of an external product is the product") {
    auto s = sx(2);
    Cat sq = square_category(s);
    CellComplex k = representable(Cat(s), ObjId{1});
    CellComplex l = representable(Cat(s), ObjId{1});
    CellComplex kl = external_product(k, l, sq);
    DiagCat d = diagonal_categorical(kl);
    // levelwise sizes |K_a| * |L_a|
    for (int av = 0; av <= 2; ++av)
        CHECK(d.complex().elements_at(ObjId{av}).size() ==
              k.elements_at(ObjId{av}).size() * l.elements_at(ObjId{av}).size());
    // isomorphic to the categorical product, computed levelwise
    CatProduct pr = categorical_product(k, l);
    CHECK(is_isomorphic(d.complex(), pr.cz.complex).has_value());
    // against the monotone-pair enumeration oracle
    CHECK(d.complex().census() == product_census_oracle(*s, 1, 1, 2));
    CHECK(d.complex().census() == std::vector<int>{4, 5, 2});
    // empty bicomplex
    CHECK(diagonal_categorical(CellComplex::empty(sq)).complex().cell_count() == 0);
}

TEST_CASE("day diagonal preserves representables") {
    auto s3 = sx(3);
    Promonoidal join = Promonoidal::join_on(sx(1), s3);
    Cat base = Cat(sx(1));
    Cat sq = square_category(base);
    const ProductCat& p = require_product(sq);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            CellComplex r = representable(sq, p.pair_object(ObjId{a}, ObjId{b}));
            Day d = day_diagonal(r, join);
            CHECK(is_isomorphic(d.complex(),
                                representable(Cat(s3), ObjId{a + b + 1}))
                      .has_value());
        }
    // geometric, on both box variants
    for (bool conn : {false, true}) {
        auto b3 = bx(2, conn);
        Promonoidal geom = Promonoidal::geometric_on(bx(1, conn), b3);
        Cat bb = Cat(bx(1, conn));
        Cat bsq = square_category(bb);
        const ProductCat& bp = require_product(bsq);
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                CellComplex r = representable(bsq, bp.pair_object(ObjId{a}, ObjId{b}));
                Day d = day_diagonal(r, geom);
                CHECK(is_isomorphic(d.complex(),
                                    representable(Cat(b3), ObjId{a + b}))
                          .has_value());
            }
    }
}

TEST_CASE("join examples") {
    auto s0 = sx(1);
    Promonoidal join01 = Promonoidal::join_on(sx(0), sx(1));
    CellComplex pt = representable(Cat(sx(0)), ObjId{0});
    CHECK(is_isomorphic(tensor(pt, pt, join01),
                        representable(Cat(sx(1)), ObjId{1}))
              .has_value());
    // join(Δ¹, Δ⁰) = Δ² with cells (3,3,1)
    auto s1 = sx(1);
    Promonoidal join = Promonoidal::join_on(s1, sx(3));
    CellComplex edge = representable(Cat(s1), ObjId{1});
    CellComplex point = representable(Cat(s1), ObjId{0});
    CellComplex j = tensor(edge, point, join);
    CHECK(j.census() == std::vector<int>{3, 3, 1});
    CHECK(is_isomorphic(j, representable(Cat(sx(3)), ObjId{2})).has_value());
    (void)s0;
}

TEST_CASE("geometric product examples") {
    auto b1 = bx(1, false);
    Promonoidal geom = Promonoidal::geometric_on(b1, bx(2, false));
    CellComplex sq1 = representable(Cat(b1), ObjId{1});
    CellComplex g = tensor(sq1, sq1, geom);
    CHECK(is_isomorphic(g, representable(Cat(bx(2, false)), ObjId{2})).has_value());
    // unit behavior
    CellComplex pt = representable(Cat(b1), ObjId{0});
    CHECK(is_isomorphic(tensor(sq1, pt, geom), representable(Cat(bx(2, false)), ObjId{1}))
              .has_value());
}

TEST_CASE("categorical tensor unit") {
    auto s = sx(2);
    CellComplex edge = representable(Cat(s), ObjId{1});
    CellComplex pt = representable(Cat(s), ObjId{0});
    CatProduct pr = categorical_product(edge, pt);
    CHECK(is_isomorphic(pr.cz.complex, edge).has_value());
}

TEST_CASE("day diagonal refuses an insufficient output bound") {
    auto s1 = sx(1);
    Promonoidal join_small = Promonoidal::join_on(s1, sx(2));  // needs 3 for 1⋆1
    CellComplex edge = representable(Cat(s1), ObjId{1});
    CHECK_THROWS_AS((void)tensor(edge, edge, join_small), BoundError);
    try {
        (void)tensor(edge, edge, join_small);
    } catch (const BoundError& e) {
        CHECK(e.required_bound() == 3);
    }
}

TEST_CASE("induced maps are functorial") {
    auto s = sx(1);
    Cat base = Cat(s);
    Cat sq = square_category(base);
    const ProductCat& p = require_product(sq);
    CellComplex x = representable(sq, p.pair_object(ObjId{1}, ObjId{1}));
    // identity maps to identity (categorical and Day)
    DiagCat dx = diagonal_categorical(x);
    ComplexMap idm = diagonal_categorical_map(ComplexMap::identity(x), dx, dx);
    CHECK(idm == ComplexMap::identity(dx.complex()));
    Promonoidal join = Promonoidal::join_on(s, sx(3));
    Day dayx = day_diagonal(x, join);
    CHECK(day_map(ComplexMap::identity(x), dayx, dayx) ==
          ComplexMap::identity(dayx.complex()));

    // composition: collapse both coordinates in two steps
    CellComplex y = representable(sq, p.pair_object(ObjId{0}, ObjId{1}));
    CellComplex z = representable(sq, p.pair_object(ObjId{0}, ObjId{0}));
    Representable rx = representable_with_arrows(sq, p.pair_object(ObjId{1}, ObjId{1}));
    Representable ry = representable_with_arrows(sq, p.pair_object(ObjId{0}, ObjId{1}));
    Representable rz = representable_with_arrows(sq, p.pair_object(ObjId{0}, ObjId{0}));
    auto s00 = std::dynamic_pointer_cast<const SimplexCat>(base);
    MorId collapse = s00->monotone(ObjId{1}, ObjId{0}, {0, 0});
    MorId one = base->identity(ObjId{1});
    MorId zero = base->identity(ObjId{0});
    ComplexMap f = representable_map(rx, ry, p.pair_morphism(collapse, one));
    ComplexMap g = representable_map(ry, rz, p.pair_morphism(zero, collapse));
    DiagCat dy = diagonal_categorical(y);
    DiagCat dz = diagonal_categorical(z);
    ComplexMap lhs = diagonal_categorical_map(compose(g, f), dx, dz);
    ComplexMap rhs = compose(diagonal_categorical_map(g, dy, dz),
                             diagonal_categorical_map(f, dx, dy));
    CHECK(lhs == rhs);
    Day dayy = day_diagonal(y, join);
    Day dayz = day_diagonal(z, join);
    CHECK(day_map(compose(g, f), dayx, dayz) ==
          compose(day_map(g, dayy, dayz), day_map(f, dayx, dayy)));

    // the collapse of the first factor induces the projection on diagonals
    CellComplex edge = representable(base, ObjId{1});
    CHECK(is_isomorphic(dy.complex(), edge).has_value());
    ComplexMap proj = diagonal_categorical_map(f, dx, dy);
    // surjective on cells of the segment: both vertices and the edge are hit
    std::set<int> hit;
    for (const Element& e : proj.cell_images())
        if (dy.complex().category()->is_identity(e.sigma)) hit.insert(e.cell);
    CHECK(hit.size() == static_cast<std::size_t>(dy.complex().cell_count()));
}

TEST_CASE("geometric product is unital and associative on representables") {
    auto b2 = bx(2, false);
    Promonoidal geom = Promonoidal::geometric_on(b2, bx(4, false));
    Cat base = Cat(b2);
    CellComplex unit = representable(base, ObjId{0});
    for (int m = 0; m <= 2; ++m) {
        CellComplex r = representable(base, ObjId{m});
        CHECK(is_isomorphic(tensor(r, unit, geom), representable(Cat(bx(4, false)), ObjId{m}))
                  .has_value());
        CHECK(is_isomorphic(tensor(unit, r, geom), representable(Cat(bx(4, false)), ObjId{m}))
                  .has_value());
    }
    // associativity on representables: both bracketings land on [1]^{p+q+r}
    for (int pdeg = 0; pdeg <= 1; ++pdeg)
        for (int q = 0; q <= 1; ++q)
            for (int r = 0; r <= 2 - pdeg - q + 1 && pdeg + q + r <= 3; ++r) {
                if (pdeg + q > 2 || q + r > 2) continue;
                CellComplex left = tensor(representable(base, ObjId{pdeg + q}),
                                          representable(base, ObjId{r}), geom);
                CellComplex right = tensor(representable(base, ObjId{pdeg}),
                                           representable(base, ObjId{q + r}), geom);
                CHECK(is_isomorphic(left, right).has_value());
                CHECK(is_isomorphic(left,
                                    representable(Cat(bx(4, false)), ObjId{pdeg + q + r}))
                          .has_value());
            }
}

TEST_CASE("day diagonal commutes with coproducts") {
    auto s = sx(1);
    Cat base = Cat(s);
    Cat sq = square_category(base);
    const ProductCat& p = require_product(sq);
    Promonoidal join = Promonoidal::join_on(s, sx(3));
    CellComplex x = representable(sq, p.pair_object(ObjId{1}, ObjId{0}));
    CellComplex y = representable(sq, p.pair_object(ObjId{0}, ObjId{1}));
    CoproductResult cop = coproduct(sq, {x, y});
    Day dcop = day_diagonal(cop.complex, join);
    Day dx = day_diagonal(x, join);
    Day dy = day_diagonal(y, join);
    CoproductResult expect = coproduct(join.out(), {dx.complex(), dy.complex()});
    CHECK(is_isomorphic(dcop.complex(), expect.complex).has_value());
}

TEST_CASE("day diagonal is cocontinuous on a pushout of bicomplexes") {
    auto s = sx(1);
    Cat base = Cat(s);
    Cat sq = square_category(base);
    const ProductCat& p = require_product(sq);
    // span: glue two copies of ⟦([0],[1])⟧ along ⟦([0],[0])⟧
    Representable rpt = representable_with_arrows(sq, p.pair_object(ObjId{0}, ObjId{0}));
    Representable redge = representable_with_arrows(sq, p.pair_object(ObjId{0}, ObjId{1}));
    auto s0 = std::dynamic_pointer_cast<const SimplexCat>(base);
    MorId v0 = s0->monotone(ObjId{0}, ObjId{1}, {0});
    MorId v1 = s0->monotone(ObjId{0}, ObjId{1}, {1});
    MorId z = base->identity(ObjId{0});
    ComplexMap f = representable_map(rpt, redge, p.pair_morphism(z, v1));
    ComplexMap g = representable_map(rpt, redge, p.pair_morphism(z, v0));
    PushoutResult po = pushout(f, g);
    Promonoidal join = Promonoidal::join_on(s, sx(3));
    Day ds = day_diagonal(rpt.complex, join);
    Day db = day_diagonal(redge.complex, join);
    Day dc = day_diagonal(redge.complex, join);
    Day dp = day_diagonal(po.complex, join);
    Square dsq{day_map(f, ds, db), day_map(g, ds, dc), day_map(po.from_b, db, dp),
               day_map(po.from_c, dc, dp)};
    CHECK(is_pushout(dsq));
}
