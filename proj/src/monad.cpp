#include "hopf/monad.hpp"

#include <algorithm>
#include <array>

#include "hopf/parallel.hpp"

namespace hopf {

Monad identity_monad(Category::Ptr cat) {
    Monad m;
    m.base = cat;
    m.label = "identity";
    m.map_object = [](const Obj& a) { return a; };
    m.map_morphism = [](const Mor& f) { return f; };
    m.mu = [cat](const Obj& a) { return cat->identity(a); };
    m.eta = [cat](const Obj& a) { return cat->identity(a); };
    return m;
}

Monad representable_monad(Category::Ptr cat, const Obj& h) {
    if (h.cat != cat) throw CategoryMismatch("representable monad: H must live in the base category");
    Monad m;
    m.base = cat;
    m.label = "representable(" + cat->obj_label(h) + ")";
    m.representable_h = h;
    m.map_object = [cat, h](const Obj& a) { return cat->biproduct(h, a).total; };
    m.map_morphism = [cat, h](const Mor& f) { return oplus_mor(cat->identity(h), f); };
    m.mu = [cat, h](const Obj& a) {
        // TT(A) = H (+) (H (+) A), flattened 3-ary accessors.
        const std::array<Obj, 3> parts = {h, h, a};
        const NaryBiproduct nb = nary_biproduct(std::span<const Obj>(parts));
        const Biproduct w = cat->biproduct(h, a);
        const Mor t1 = cat->compose(w.inj1, nb.proj[0]);
        const Mor t2 = cat->compose(w.inj1, nb.proj[1]);
        const Mor t3 = cat->compose(w.inj2, nb.proj[2]);
        return cat->add(cat->add(t1, t2), t3);
    };
    m.eta = [cat, h](const Obj& a) { return cat->biproduct(h, a).inj2; };
    return m;
}

Monad zero_monad(Category::Ptr cat) {
    Monad m;
    m.base = cat;
    m.label = "zero";
    const Obj z = cat->zero_object();
    m.map_object = [z](const Obj&) { return z; };
    m.map_morphism = [cat, z](const Mor&) { return cat->zero_mor(z, z); };
    m.mu = [cat, z](const Obj&) { return cat->zero_mor(z, z); };
    m.eta = [cat, z](const Obj& a) { return cat->zero_mor(a, z); };
    return m;
}

Monad cyclic_tensor_monad(std::shared_ptr<const FgAbCategory> cat, std::int64_t n) {
    auto functor = std::make_shared<CyclicTensorFunctor>(cat, n);
    Monad m;
    m.base = cat;
    m.label = "cyclic_tensor(" + std::to_string(n) + ")";
    m.map_object = [functor](const Obj& a) { return functor->map_object(a); };
    m.map_morphism = [functor](const Mor& f) { return functor->map_morphism(f); };
    m.mu = [cat, functor](const Obj& a) {
        const Obj ta = functor->map_object(a);
        const Obj tta = functor->map_object(ta);
        if (cat->orders(tta) != cat->orders(ta))
            throw Error("cyclic tensor: TT(A) and T(A) presentations differ");
        // gcd(n, gcd(n, d)) = gcd(n, d), so the identification is the
        // identity matrix on the surviving generators.
        const std::size_t k = cat->orders(ta).size();
        std::vector<std::int64_t> e(k * k, 0);
        for (std::size_t i = 0; i < k; ++i) e[i * k + i] = 1;
        return cat->mor(tta, ta, e);
    };
    m.eta = [cat, functor](const Obj& a) {
        const Obj ta = functor->map_object(a);
        const std::vector<int> kept = functor->kept_indices(a);
        const std::size_t cols = cat->orders(a).size();
        std::vector<std::int64_t> e(kept.size() * cols, 0);
        for (std::size_t i = 0; i < kept.size(); ++i)
            e[i * cols + static_cast<std::size_t>(kept[i])] = 1;
        return cat->mor(a, ta, e);
    };
    return m;
}

Monad product_monad(const Monad& m1, const Monad& m2) {
    auto prod = product_category(m1.base, m2.base);
    Monad m;
    m.base = prod;
    m.label = "product(" + m1.label + ", " + m2.label + ")";
    auto f1 = m1;
    auto f2 = m2;
    m.map_object = [prod, f1, f2](const Obj& a) {
        auto [x, y] = prod->parts(a);
        return prod->object(f1.map_object(x), f2.map_object(y));
    };
    m.map_morphism = [prod, f1, f2](const Mor& f) {
        auto [x, y] = prod->mor_parts(f);
        return prod->mor(f1.map_morphism(x), f2.map_morphism(y));
    };
    m.mu = [prod, f1, f2](const Obj& a) {
        auto [x, y] = prod->parts(a);
        return prod->mor(f1.mu(x), f2.mu(y));
    };
    m.eta = [prod, f1, f2](const Obj& a) {
        auto [x, y] = prod->parts(a);
        return prod->mor(f1.eta(x), f2.eta(y));
    };
    return m;
}

// --------------------------------------------------------------------------

std::vector<Obj> plan_objects(const Category& cat, const SamplePlan& plan) {
    return cat.enumerate_objects(plan.limits);
}

Mor plan_morphism(const Category& cat, const SamplePlan& plan, std::size_t dom_index,
                  const Obj& dom, std::size_t cod_index, const Obj& cod, int sample_index) {
    Rng rng(mix_seed(mix_seed(mix_seed(plan.seed, dom_index + 1), cod_index + 1),
                     static_cast<std::uint64_t>(sample_index + 1)));
    return cat.random_mor(dom, cod, rng);
}

// --------------------------------------------------------------------------

void CheckStat::merge(const CheckStat& other) {
    checked += other.checked;
    failed += other.failed;
    if (!first_failure) first_failure = other.first_failure;
}

bool LawReport::all_passed() const {
    return std::all_of(laws.begin(), laws.end(), [](const CheckStat& s) { return s.passed(); });
}

const CheckStat* LawReport::find(std::string_view law) const {
    for (const auto& s : laws)
        if (s.name == law) return &s;
    return nullptr;
}

bool eval_monad_law(const Monad& m, std::string_view law, std::span<const Obj> objects,
                    std::span<const Mor> morphisms) {
    const Category& cat = *m.base;
    if (law == "functor_identity") {
        const Obj& a = objects[0];
        return cat.mor_eq(m.map_morphism(cat.identity(a)), cat.identity(m.map_object(a)));
    }
    if (law == "functor_composition") {
        const Mor& f = morphisms[0];
        const Mor& g = morphisms[1];
        return cat.mor_eq(m.map_morphism(cat.compose(g, f)),
                          cat.compose(m.map_morphism(g), m.map_morphism(f)));
    }
    if (law == "mu_naturality") {
        const Mor& f = morphisms[0];
        const Mor tf = m.map_morphism(f);
        const Mor ttf = m.map_morphism(tf);
        return cat.mor_eq(cat.compose(m.mu(f.cod), ttf), cat.compose(tf, m.mu(f.dom)));
    }
    if (law == "eta_naturality") {
        const Mor& f = morphisms[0];
        return cat.mor_eq(cat.compose(m.eta(f.cod), f), cat.compose(m.map_morphism(f), m.eta(f.dom)));
    }
    if (law == "mu_associativity") {
        const Obj& a = objects[0];
        const Obj ta = m.map_object(a);
        return cat.mor_eq(cat.compose(m.mu(a), m.map_morphism(m.mu(a))),
                          cat.compose(m.mu(a), m.mu(ta)));
    }
    if (law == "unit_left") {
        const Obj& a = objects[0];
        const Obj ta = m.map_object(a);
        return cat.mor_eq(cat.compose(m.mu(a), m.eta(ta)), cat.identity(ta));
    }
    if (law == "unit_right") {
        const Obj& a = objects[0];
        const Obj ta = m.map_object(a);
        return cat.mor_eq(cat.compose(m.mu(a), m.map_morphism(m.eta(a))), cat.identity(ta));
    }
    throw Error("unknown monad law: " + std::string(law));
}

namespace {

Counterexample make_ce(std::string law, std::vector<Obj> objs, std::vector<Mor> mors,
                       std::string note = {}) {
    return Counterexample{std::move(law), std::move(objs), std::move(mors), std::move(note)};
}

} // namespace

LawReport check_monad_laws(const Monad& m, const SamplePlan& plan, int jobs) {
    const Category& cat = *m.base;
    const std::vector<Obj> objs = plan_objects(cat, plan);
    const int k = plan.morphism_samples;
    const std::size_t n = objs.size();

    LawReport report;
    report.seed = plan.seed;
    report.object_count = static_cast<int>(n);
    report.morphism_samples = k;

    // One slot per (law, leading object index); merged in index order below
    // so the outcome is independent of the worker count.
    struct Slice {
        CheckStat stat;
    };
    const std::size_t law_count = std::size(kMonadLawNames);
    std::vector<Slice> slices(law_count * n);

    auto law_of_slot = [&](std::size_t slot) { return slot / n; };
    auto obj_of_slot = [&](std::size_t slot) { return slot % n; };

    parallel_for(slices.size(), jobs, [&](std::size_t slot) {
        const std::string law = kMonadLawNames[law_of_slot(slot)];
        const std::size_t ia = obj_of_slot(slot);
        const Obj& a = objs[ia];
        CheckStat& stat = slices[slot].stat;
        stat.name = law;
        if (law == "functor_identity" || law == "mu_associativity" || law == "unit_left" ||
            law == "unit_right") {
            const std::array<Obj, 1> os = {a};
            stat.record(eval_monad_law(m, law, os, {}),
                        [&] { return make_ce(law, {a}, {}); });
        } else if (law == "functor_composition") {
            for (std::size_t ib = 0; ib < n; ++ib)
                for (std::size_t ic = 0; ic < n; ++ic)
                    for (int s = 0; s < k; ++s) {
                        const Mor f = plan_morphism(cat, plan, ia, a, ib, objs[ib], s);
                        const Mor g = plan_morphism(cat, plan, ib, objs[ib], ic, objs[ic], s);
                        const std::array<Obj, 3> os = {a, objs[ib], objs[ic]};
                        const std::array<Mor, 2> ms = {f, g};
                        stat.record(eval_monad_law(m, law, os, ms),
                                    [&] { return make_ce(law, {a, objs[ib], objs[ic]}, {f, g}); });
                    }
        } else { // mu_naturality, eta_naturality
            for (std::size_t ib = 0; ib < n; ++ib)
                for (int s = 0; s < k; ++s) {
                    const Mor f = plan_morphism(cat, plan, ia, a, ib, objs[ib], s);
                    const std::array<Obj, 2> os = {a, objs[ib]};
                    const std::array<Mor, 1> ms = {f};
                    stat.record(eval_monad_law(m, law, os, ms),
                                [&] { return make_ce(law, {a, objs[ib]}, {f}); });
                }
        }
    });

    for (std::size_t l = 0; l < law_count; ++l) {
        CheckStat merged;
        merged.name = kMonadLawNames[l];
        for (std::size_t i = 0; i < n; ++i) merged.merge(slices[l * n + i].stat);
        report.laws.push_back(std::move(merged));
    }
    return report;
}

IdempotenceResult is_idempotent(const Monad& m, const SamplePlan& plan) {
    const Category& cat = *m.base;
    for (const Obj& a : plan_objects(cat, plan)) {
        const Obj ta = m.map_object(a);
        const Obj tta = m.map_object(ta);
        const Mor lhs = cat.compose(m.eta(ta), m.mu(a));
        if (!cat.mor_eq(lhs, cat.identity(tta))) return IdempotenceResult{false, a};
    }
    return IdempotenceResult{true, std::nullopt};
}

bool preserves_zero_morphisms(const Monad& m, std::span<const Obj> objects) {
    const Category& cat = *m.base;
    for (const Obj& a : objects)
        for (const Obj& b : objects) {
            const Mor tz = m.map_morphism(cat.zero_mor(a, b));
            if (!cat.mor_eq(tz, cat.zero_mor(m.map_object(a), m.map_object(b)))) return false;
        }
    return true;
}

Monad corrupt_mu_zero(Monad m) {
    auto base = m.base;
    auto map_object = m.map_object;
    m.label += " [mu:=0]";
    m.mu = [base, map_object](const Obj& a) {
        const Obj ta = map_object(a);
        return base->zero_mor(map_object(ta), ta);
    };
    return m;
}

Monad corrupt_mu_swap_projection(Monad m) {
    if (!m.representable_h) throw PreconditionViolated("mu projection swap requires a representable monad");
    auto cat = m.base;
    const Obj h = *m.representable_h;
    m.label += " [mu:pi-swap]";
    m.mu = [cat, h](const Obj& a) {
        const std::array<Obj, 3> parts = {h, h, a};
        const NaryBiproduct nb = nary_biproduct(std::span<const Obj>(parts));
        const Biproduct w = cat->biproduct(h, a);
        const Mor t1 = cat->compose(w.inj1, nb.proj[0]);
        const Mor t2 = cat->compose(w.inj1, nb.proj[0]); // should read proj[1]
        const Mor t3 = cat->compose(w.inj2, nb.proj[2]);
        return cat->add(cat->add(t1, t2), t3);
    };
    return m;
}

} // namespace hopf
