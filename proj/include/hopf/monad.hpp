#pragma once

#include <optional>
#include <span>
#include <string>

#include "hopf/core.hpp"
#include "hopf/fgab.hpp"
#include "hopf/product_category.hpp"

namespace hopf {

// A monad (T, mu, eta) on a category with finite biproducts. All function
// members are pure and safe to call concurrently.
struct Monad {
    Category::Ptr base;
    std::string label;
    std::function<Obj(const Obj&)> map_object;   // T on objects
    std::function<Mor(const Mor&)> map_morphism; // T on morphisms
    std::function<Mor(const Obj&)> mu;           // TT(A) -> T(A)
    std::function<Mor(const Obj&)> eta;          // A -> T(A)
    // Set when the monad was built as H (+) -; enables the representable
    // invertor candidate.
    std::optional<Obj> representable_h;
};

// T = Id, mu = eta = identity.
Monad identity_monad(Category::Ptr cat);

// T(A) = H (+) A with T(f) = 1_H (+) f,
// mu = inj1.proj1 + inj1.proj2 + inj2.proj3 (3-ary accessors on H(+)(H(+)A)),
// eta = inj2.
Monad representable_monad(Category::Ptr cat, const Obj& h);

// T(A) = 0 with all structure maps zero.
Monad zero_monad(Category::Ptr cat);

// T(G) = Z_n (x) G on fgab; mu is the canonical identification TT = T and
// eta the quotient onto the surviving generators.
Monad cyclic_tensor_monad(std::shared_ptr<const FgAbCategory> cat, std::int64_t n);

// Componentwise monad on product_category(m1.base, m2.base); the product
// handle is created here and exposed as the result's base.
Monad product_monad(const Monad& m1, const Monad& m2);

// --------------------------------------------------------------------------

// Deterministic verification plan: objects are enumerated up to the limits,
// morphisms are drawn per hom-set from a stream derived from (seed, object
// indices, sample index) only, so any check is replayable from the plan.
struct SamplePlan {
    SampleLimits limits;
    int morphism_samples = 8;
    std::uint64_t seed = 0;
};

std::vector<Obj> plan_objects(const Category& cat, const SamplePlan& plan);
Mor plan_morphism(const Category& cat, const SamplePlan& plan, std::size_t dom_index,
                  const Obj& dom, std::size_t cod_index, const Obj& cod, int sample_index);

// --------------------------------------------------------------------------

struct Counterexample {
    std::string check;
    std::vector<Obj> objects;
    std::vector<Mor> morphisms;
    std::string note;
};

struct CheckStat {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::optional<Counterexample> first_failure;

    bool passed() const { return failed == 0; }
    void record(bool ok, const std::function<Counterexample()>& make_ce) {
        ++checked;
        if (!ok) {
            ++failed;
            if (!first_failure) first_failure = make_ce();
        }
    }
    void merge(const CheckStat& other);
};

struct LawReport {
    std::vector<CheckStat> laws;
    std::uint64_t seed = 0;
    int object_count = 0;
    int morphism_samples = 0;

    bool all_passed() const;
    const CheckStat* find(std::string_view law) const;
};

inline constexpr const char* kMonadLawNames[] = {
    "functor_identity",    "functor_composition", "mu_naturality", "eta_naturality",
    "mu_associativity",    "unit_left",           "unit_right",
};

// Evaluates one instance of a named law on explicit data; used both by the
// checker and to replay recorded counterexamples.
//   functor_identity      objects {A}
//   functor_composition   objects {A,B,C}, morphisms {f: A->B, g: B->C}
//   mu_naturality         objects {A,B}, morphisms {f: A->B}
//   eta_naturality        objects {A,B}, morphisms {f: A->B}
//   mu_associativity      objects {A}
//   unit_left             objects {A}   (mu . eta_T = 1)
//   unit_right            objects {A}   (mu . T(eta) = 1)
bool eval_monad_law(const Monad& m, std::string_view law, std::span<const Obj> objects,
                    std::span<const Mor> morphisms);

LawReport check_monad_laws(const Monad& m, const SamplePlan& plan, int jobs = 1);

// --------------------------------------------------------------------------

struct IdempotenceResult {
    bool value = false;
    std::optional<Obj> witness; // an A with eta_T(A) . mu_A != 1, when false
};

// eta_T(A) . mu_A = 1_TT(A) on every plan object.
IdempotenceResult is_idempotent(const Monad& m, const SamplePlan& plan);

// T sends every zero morphism between plan objects to a zero morphism.
bool preserves_zero_morphisms(const Monad& m, std::span<const Obj> objects);

// --------------------------------------------------------------------------
// Test hooks: deliberately broken copies of a monad.

// mu replaced by the zero morphism.
Monad corrupt_mu_zero(Monad m);
// Representable monads only: the middle mu term reads the wrong coordinate
// (inj1.proj1 + inj1.proj1 + inj2.proj3).
Monad corrupt_mu_swap_projection(Monad m);

} // namespace hopf
