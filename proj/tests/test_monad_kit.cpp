#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "hopf/monad.hpp"
#include "test_support.hpp"

using namespace hopf;

namespace {

SamplePlan small_plan(std::uint64_t seed = 0) {
    SamplePlan plan;
    plan.limits.max_dim = 3;
    plan.limits.fgab_orders = {0, 2, 3, 4};
    plan.limits.max_generators = 2;
    plan.morphism_samples = 4;
    plan.seed = seed;
    return plan;
}

} // namespace

TEST_CASE("identity monad") {
    auto cat = mat_category(Semiring::integers());
    const Monad m = identity_monad(cat);
    const Obj a = cat->object(2);
    CHECK(cat->obj_eq(m.map_object(a), a));
    CHECK(cat->mor_eq(m.mu(a), cat->identity(a)));
    CHECK(check_monad_laws(m, small_plan()).all_passed());
    CHECK(is_idempotent(m, small_plan()).value);
}

TEST_CASE("representable monad structure") {
    auto cat = mat_category(Semiring::integers());
    const Obj h = cat->object(1);
    const Monad m = representable_monad(cat, h);
    const Obj a = cat->object(1);

    SUBCASE("multiplication adds the two H coordinates") {
        CHECK(cat->entries(m.mu(a)) == std::vector<std::int64_t>{1, 1, 0, 0, 0, 1});
    }
    SUBCASE("unit is the second injection") {
        CHECK(cat->entries(m.eta(a)) == std::vector<std::int64_t>{0, 1});
    }
    SUBCASE("laws hold on the plan") {
        CHECK(check_monad_laws(m, small_plan()).all_passed());
    }
    SUBCASE("not idempotent, with a witness") {
        const IdempotenceResult r = is_idempotent(m, small_plan());
        CHECK_FALSE(r.value);
        CHECK(r.witness.has_value());
    }
    SUBCASE("T of a zero morphism keeps the H coordinate") {
        const Obj b = cat->object(2);
        const Mor tz = m.map_morphism(cat->zero_mor(a, b));
        const Biproduct wa = cat->biproduct(h, a);
        const Biproduct wb = cat->biproduct(h, b);
        CHECK(cat->mor_eq(tz, cat->compose(wb.inj1, wa.proj1)));
        CHECK_FALSE(cat->mor_eq(tz, cat->zero_mor(tz.dom, tz.cod)));
    }
    SUBCASE("H = 0 behaves like the identity monad on samples") {
        const Monad m0 = representable_monad(cat, cat->zero_object());
        const Monad id = identity_monad(cat);
        Rng rng(5);
        for (int i = 0; i < 20; ++i) {
            const Obj x = cat->object(static_cast<int>(rng.below(4)));
            const Obj y = cat->object(static_cast<int>(rng.below(4)));
            CHECK(cat->obj_eq(m0.map_object(x), id.map_object(x)));
            const Mor f = cat->random_mor(x, y, rng);
            CHECK(cat->mor_eq(m0.map_morphism(f), id.map_morphism(f)));
            CHECK(cat->mor_eq(m0.mu(x), id.mu(x)));
            CHECK(cat->mor_eq(m0.eta(x), id.eta(x)));
        }
    }
}

TEST_CASE("cyclic tensor monad") {
    auto ab = fgab_category();
    const Monad m = cyclic_tensor_monad(ab, 2);

    const Obj z = ab->object({0});
    SUBCASE("eta on Z is the quotient onto Z2") {
        const Mor e = m.eta(z);
        CHECK(ab->orders(e.cod) == std::vector<std::int64_t>{2});
        CHECK(ab->entries(e) == std::vector<std::int64_t>{1});
    }
    SUBCASE("mu on Z is the identity of Z2") {
        const Mor mu = m.mu(z);
        CHECK(ab->orders(mu.dom) == std::vector<std::int64_t>{2});
        CHECK(ab->entries(mu) == std::vector<std::int64_t>{1});
    }
    SUBCASE("coprime torsion collapses to the zero object") {
        const Obj z3 = ab->object({3});
        CHECK(ab->orders(m.map_object(z3)).empty());
        CHECK(ab->entries(m.mu(z3)).empty());
        CHECK(ab->entries(m.eta(z3)).empty());
    }
    SUBCASE("laws and idempotence") {
        SamplePlan plan = small_plan();
        CHECK(check_monad_laws(m, plan).all_passed());
        CHECK(is_idempotent(m, plan).value);
    }
    SUBCASE("preserves zero morphisms") {
        SamplePlan plan = small_plan();
        const auto objs = plan_objects(*ab, plan);
        CHECK(preserves_zero_morphisms(m, objs));
    }
}

TEST_CASE("zero monad") {
    auto cat = mat_category(Semiring::integers());
    const Monad m = zero_monad(cat);
    const Obj a = cat->object(2);
    CHECK(cat->dim(m.map_object(a)) == 0);
    CHECK(cat->mor_eq(m.eta(a), cat->zero_mor(a, cat->zero_object())));
    CHECK(check_monad_laws(m, small_plan()).all_passed());
    CHECK(is_idempotent(m, small_plan()).value);
}

TEST_CASE("product monad") {
    auto c1 = mat_category(Semiring::integers());
    auto c2 = mat_category(Semiring::integers());

    SUBCASE("pair of identities acts like the identity of the product") {
        const Monad m = product_monad(identity_monad(c1), identity_monad(c2));
        auto prod = std::static_pointer_cast<const ProductCategory>(m.base);
        const Obj a = prod->object(c1->object(1), c2->object(2));
        CHECK(prod->obj_eq(m.map_object(a), a));
        CHECK(prod->mor_eq(m.mu(a), prod->identity(a)));
    }

    SUBCASE("representable x zero matches the expected object map") {
        const Monad m =
            product_monad(representable_monad(c1, c1->object(1)), zero_monad(c2));
        auto prod = std::static_pointer_cast<const ProductCategory>(m.base);
        const Obj a = prod->object(c1->object(2), c2->object(3));
        auto [ta1, ta2] = prod->parts(m.map_object(a));
        CHECK(c1->dim(ta1) == 3); // H (+) A in the first component
        CHECK(c2->dim(ta2) == 0); // collapsed second component
        // mu factors through the zero object in the second component
        auto [mu1, mu2] = prod->mor_parts(m.mu(a));
        CHECK(c2->dim(mu2.cod) == 0);

        SamplePlan plan = small_plan();
        plan.limits.max_dim = 2;
        CHECK(check_monad_laws(m, plan).all_passed());
        CHECK_FALSE(is_idempotent(m, plan).value);
    }

    SUBCASE("a corrupted component fails the product's law report") {
        const Monad bad = product_monad(
            corrupt_mu_swap_projection(representable_monad(c1, c1->object(1))),
            zero_monad(c2));
        SamplePlan plan = small_plan();
        plan.limits.max_dim = 2;
        CHECK_FALSE(check_monad_laws(bad, plan).all_passed());
    }
}

TEST_CASE("law checker finds corruption and its counterexamples replay") {
    auto cat = mat_category(Semiring::integers());
    const Monad good = representable_monad(cat, cat->object(1));

    SUBCASE("projection swap breaks associativity or a unit law") {
        const Monad bad = corrupt_mu_swap_projection(good);
        const LawReport report = check_monad_laws(bad, small_plan());
        CHECK_FALSE(report.all_passed());
        bool found = false;
        for (const auto& law : report.laws) {
            if (!law.first_failure) continue;
            found = true;
            const Counterexample& ce = *law.first_failure;
            CHECK_FALSE(eval_monad_law(bad, ce.check, ce.objects, ce.morphisms));
            // the same data passes on the uncorrupted monad
            CHECK(eval_monad_law(good, ce.check, ce.objects, ce.morphisms));
        }
        CHECK(found);
    }

    SUBCASE("dropping the middle multiplication term breaks the laws") {
        Monad bad = good;
        auto base = cat;
        const Obj h = cat->object(1);
        bad.mu = [base, h](const Obj& a) {
            const std::array<Obj, 3> parts = {h, h, a};
            const NaryBiproduct nb = nary_biproduct(std::span<const Obj>(parts));
            const Biproduct w = base->biproduct(h, a);
            return base->add(base->compose(w.inj1, nb.proj[0]),
                             base->compose(w.inj2, nb.proj[2]));
        };
        CHECK_FALSE(check_monad_laws(bad, small_plan()).all_passed());
    }

    SUBCASE("zeroed mu breaks the unit laws") {
        const LawReport report = check_monad_laws(corrupt_mu_zero(good), small_plan());
        CHECK_FALSE(report.all_passed());
        CHECK_FALSE(report.find("unit_left")->passed());
    }
}

TEST_CASE("law reports are deterministic and parallel-stable") {
    auto ab = fgab_category();
    const Monad m = cyclic_tensor_monad(ab, 2);
    SamplePlan plan = small_plan(42);
    const LawReport r1 = check_monad_laws(m, plan, 1);
    const LawReport r2 = check_monad_laws(m, plan, 8);
    REQUIRE(r1.laws.size() == r2.laws.size());
    for (std::size_t i = 0; i < r1.laws.size(); ++i) {
        CHECK(r1.laws[i].name == r2.laws[i].name);
        CHECK(r1.laws[i].checked == r2.laws[i].checked);
        CHECK(r1.laws[i].failed == r2.laws[i].failed);
    }
}
