#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace hopf;
using test::mat_mor;

TEST_CASE("composition: units, absorption, matrix product") {
    auto cat = mat_category(Semiring::integers());
    const Obj a = cat->object(1), b = cat->object(2);
    const Mor f = cat->mor(a, b, {1, 2});

    CHECK(cat->mor_eq(cat->compose(cat->identity(b), f), f));
    CHECK(cat->mor_eq(cat->compose(f, cat->identity(a)), f));

    const Obj c = cat->object(3);
    const Mor z = cat->zero_mor(b, c);
    CHECK(cat->mor_eq(cat->compose(z, f), cat->zero_mor(a, c)));

    const Mor row = cat->mor(b, a, {1, 1}); // [[1,1]]
    const Mor prod = cat->compose(row, f);  // [[1,1]] . [[1],[2]]
    CHECK(cat->entries(prod) == std::vector<std::int64_t>{3});
}

TEST_CASE("composition errors") {
    auto cat = mat_category(Semiring::integers());
    auto other = mat_category(Semiring::integers());
    const Mor f = mat_mor(*cat, 1, 2, {1, 2});
    const Mor g = mat_mor(*cat, 3, 1, {1, 1, 1});
    CHECK_THROWS_AS((void)cat->compose(f, f), DomainMismatch);
    CHECK_THROWS_AS((void)cat->compose(g, f), DomainMismatch);
    const Mor foreign = mat_mor(*other, 2, 1, {1, 1});
    CHECK_THROWS_AS((void)cat->compose(foreign, f), CategoryMismatch);
}

TEST_CASE("addition is a commutative monoid with zero") {
    auto nat = mat_category(Semiring::nat());
    const Mor f = mat_mor(*nat, 2, 1, {1, 2});
    const Mor g = mat_mor(*nat, 2, 1, {3, 0});
    CHECK(nat->entries(nat->add(f, g)) == std::vector<std::int64_t>{4, 2});
    CHECK(nat->mor_eq(nat->add(f, g), nat->add(g, f)));
    CHECK(nat->mor_eq(nat->add(f, nat->zero_mor(f.dom, f.cod)), f));
    const Mor wrong = mat_mor(*nat, 1, 1, {1});
    CHECK_THROWS_AS((void)nat->add(f, wrong), ShapeMismatch);
}

TEST_CASE("biproduct witnesses") {
    auto cat = mat_category(Semiring::integers());
    const Biproduct w = cat->biproduct(cat->object(2), cat->object(3));
    CHECK(cat->dim(w.total) == 5);
    CHECK(cat->entries(w.inj1) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 0, 0, 0, 0});

    SUBCASE("projection/injection delta laws and decomposition of identity") {
        for (int da = 0; da <= 3; ++da)
            for (int db = 0; db <= 3; ++db) {
                const Obj a = cat->object(da), b = cat->object(db);
                const Biproduct v = cat->biproduct(a, b);
                CHECK(cat->mor_eq(cat->compose(v.proj1, v.inj1), cat->identity(a)));
                CHECK(cat->mor_eq(cat->compose(v.proj2, v.inj2), cat->identity(b)));
                CHECK(cat->mor_eq(cat->compose(v.proj1, v.inj2), cat->zero_mor(b, a)));
                CHECK(cat->mor_eq(cat->compose(v.proj2, v.inj1), cat->zero_mor(a, b)));
                const Mor decomp = cat->add(cat->compose(v.inj1, v.proj1),
                                            cat->compose(v.inj2, v.proj2));
                CHECK(cat->mor_eq(decomp, cat->identity(v.total)));
            }
    }

    SUBCASE("zero object is a strict unit") {
        const Obj a = cat->object(2);
        const Biproduct v = cat->biproduct(a, cat->zero_object());
        CHECK(cat->obj_eq(v.total, a));
        CHECK(cat->mor_eq(cat->compose(v.proj1, v.inj1), cat->identity(a)));
    }

    SUBCASE("fgab biproduct concatenates order lists") {
        auto ab = fgab_category();
        const Biproduct v = ab->biproduct(ab->object({0}), ab->object({2}));
        CHECK(ab->orders(v.total) == std::vector<std::int64_t>{0, 2});
    }
}

TEST_CASE("oplus of morphisms") {
    auto cat = mat_category(Semiring::integers());
    const Obj a = cat->object(1), b = cat->object(2);

    CHECK(cat->mor_eq(oplus_mor(cat->identity(a), cat->identity(b)),
                      cat->identity(cat->object(3))));
    CHECK(cat->mor_eq(oplus_mor(cat->zero_mor(a, a), cat->zero_mor(b, b)),
                      cat->zero_mor(cat->object(3), cat->object(3))));

    const Mor two = mat_mor(*cat, 1, 1, {2});
    const Mor three = mat_mor(*cat, 1, 1, {3});
    CHECK(cat->entries(oplus_mor(two, three)) == std::vector<std::int64_t>{2, 0, 0, 3});

    SUBCASE("interchange with injections and projections") {
        Rng rng(7);
        for (int i = 0; i < 20; ++i) {
            const Obj x = cat->object(static_cast<int>(rng.below(3)));
            const Obj y = cat->object(static_cast<int>(rng.below(3)) + 1);
            const Mor f = cat->random_mor(x, x, rng);
            const Mor g = cat->random_mor(y, y, rng);
            const Biproduct wd = cat->biproduct(x, y);
            const Mor fg = oplus_mor(f, g);
            CHECK(cat->mor_eq(cat->compose(fg, wd.inj1), cat->compose(wd.inj1, f)));
            CHECK(cat->mor_eq(cat->compose(wd.proj2, fg), cat->compose(g, wd.proj2)));
        }
    }
}

TEST_CASE("zero, identity, negation") {
    auto cat = mat_category(Semiring::integers());
    const Mor f = mat_mor(*cat, 2, 1, {1, -2});
    CHECK(cat->entries(cat->neg(f)) == std::vector<std::int64_t>{-1, 2});
    CHECK(cat->mor_eq(cat->neg(cat->neg(f)), f));
    CHECK(cat->mor_eq(cat->neg(cat->zero_mor(f.dom, f.cod)), cat->zero_mor(f.dom, f.cod)));
    CHECK(cat->mor_eq(cat->add(f, cat->neg(f)), cat->zero_mor(f.dom, f.cod)));

    auto nat = mat_category(Semiring::nat());
    CHECK_FALSE(nat->has_negatives());
    CHECK_THROWS_AS((void)nat->neg(mat_mor(*nat, 1, 1, {1})), NegationUnsupported);
}

TEST_CASE("composition distributes over addition (sampled)") {
    for (auto cat : {mat_category(Semiring::integers()), mat_category(Semiring::mod(4))}) {
        Rng rng(11);
        for (int i = 0; i < 30; ++i) {
            const Obj a = cat->object(static_cast<int>(rng.below(4)));
            const Obj b = cat->object(static_cast<int>(rng.below(4)));
            const Obj c = cat->object(static_cast<int>(rng.below(4)));
            const Mor f = cat->random_mor(a, b, rng);
            const Mor g = cat->random_mor(a, b, rng);
            const Mor h = cat->random_mor(b, c, rng);
            const Mor e = cat->random_mor(c, a, rng);
            CHECK(cat->mor_eq(cat->compose(h, cat->add(f, g)),
                              cat->add(cat->compose(h, f), cat->compose(h, g))));
            CHECK(cat->mor_eq(cat->compose(cat->add(f, g), e),
                              cat->add(cat->compose(f, e), cat->compose(g, e))));
            CHECK(cat->mor_eq(cat->compose(cat->zero_mor(b, c), f), cat->zero_mor(a, c)));
        }
    }
}

TEST_CASE("n-ary biproduct flattening") {
    auto cat = mat_category(Semiring::integers());
    const std::vector<Obj> parts = {cat->object(1), cat->object(2), cat->object(1)};
    const NaryBiproduct nb = nary_biproduct(parts);
    CHECK(cat->dim(nb.total) == 4);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const Mor comp = cat->compose(nb.proj[i], nb.inj[j]);
            if (i == j)
                CHECK(cat->mor_eq(comp, cat->identity(parts[i])));
            else
                CHECK(cat->mor_eq(comp, cat->zero_mor(parts[j], parts[i])));
        }
    Mor sum = cat->compose(nb.inj[0], nb.proj[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        sum = cat->add(sum, cat->compose(nb.inj[i], nb.proj[i]));
    CHECK(cat->mor_eq(sum, cat->identity(nb.total)));
}
