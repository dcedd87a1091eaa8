#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopf/errors.hpp"
#include "hopf/rng.hpp"

namespace hopf {

class Category;

// Opaque per-category payloads. A category only ever sees payloads it created
// itself (guarded by handle identity), so implementations downcast internally.
struct ObjData {
    virtual ~ObjData() = default;
};
struct MorData {
    virtual ~MorData() = default;
};

// An object of some category. Values are immutable and freely shareable
// across threads; two objects are comparable only when they carry the same
// category handle.
struct Obj {
    std::shared_ptr<const Category> cat;
    std::shared_ptr<const ObjData> data;

    bool valid() const { return cat != nullptr; }
};

// An arrow dom -> cod in the category `dom.cat`.
struct Mor {
    Obj dom;
    Obj cod;
    std::shared_ptr<const MorData> data;
};

// A biproduct A (+) B: the total object together with the two injections and
// two projections. Satisfies proj_i . inj_j = delta_ij and
// inj1.proj1 + inj2.proj2 = identity(total).
struct Biproduct {
    Obj total;
    Mor inj1, inj2;   // A -> total, B -> total
    Mor proj1, proj2; // total -> A, total -> B
};

// Bounds for deterministic object enumeration; each category interprets the
// fields relevant to it.
struct SampleLimits {
    int max_dim = 3;                                // matrix categories: dims 0..max_dim
    std::vector<std::int64_t> fgab_orders = {0, 2, 3, 4}; // cyclic orders to draw from
    int max_generators = 2;                         // fgab: order-list length bound
};

// Description of a bounded enumeration of a hom-set, entry by entry.
// Candidate values for each entry are listed smallest-first; the whole space
// is walked in lexicographic (odometer) order over the entry tuples.
struct HomSpace {
    bool complete = false; // true when the bound did not truncate the hom-set
    std::vector<std::vector<std::int64_t>> entry_values;
    std::function<Mor(std::span<const std::int64_t>)> build;

    // Number of morphisms in the space, clamped to `clamp` on overflow.
    std::uint64_t size(std::uint64_t clamp) const;
};

// Interface realized by every concrete category with finite biproducts.
// Hom-sets carry a commutative monoid structure (add/zero) over which
// composition distributes; `has_negatives` reports whether every morphism
// has an additive inverse. All public entry points validate handle identity
// and object compatibility before dispatching.
class Category : public std::enable_shared_from_this<Category> {
  public:
    using Ptr = std::shared_ptr<const Category>;

    virtual ~Category() = default;

    virtual std::string name() const = 0;
    virtual bool has_negatives() const = 0;

    // -- objects -----------------------------------------------------------
    virtual Obj zero_object() const = 0;
    bool obj_eq(const Obj& a, const Obj& b) const;
    virtual std::string obj_label(const Obj& a) const = 0;
    virtual nlohmann::json obj_to_json(const Obj& a) const = 0;

    // -- morphisms ---------------------------------------------------------
    Mor identity(const Obj& a) const;
    Mor zero_mor(const Obj& dom, const Obj& cod) const;
    Mor compose(const Mor& g, const Mor& f) const; // g . f
    Mor add(const Mor& f, const Mor& g) const;
    Mor neg(const Mor& f) const;
    bool mor_eq(const Mor& f, const Mor& g) const;
    virtual nlohmann::json mor_to_json(const Mor& f) const = 0;

    // -- biproducts --------------------------------------------------------
    // Canonical witness: deterministic in (a, b), left summand first.
    Biproduct biproduct(const Obj& a, const Obj& b) const;

    // -- sampling / enumeration -------------------------------------------
    virtual std::vector<Obj> enumerate_objects(const SampleLimits& limits) const = 0;
    virtual Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const = 0;
    // Bounded enumeration of hom(dom, cod); `bound` caps free integer entries.
    virtual HomSpace hom_space(const Obj& dom, const Obj& cod, std::int64_t bound) const = 0;

    Ptr ptr() const { return shared_from_this(); }

  protected:
    virtual bool do_obj_eq(const Obj& a, const Obj& b) const = 0;
    virtual Mor do_identity(const Obj& a) const = 0;
    virtual Mor do_zero_mor(const Obj& dom, const Obj& cod) const = 0;
    virtual Mor do_compose(const Mor& g, const Mor& f) const = 0;
    virtual Mor do_add(const Mor& f, const Mor& g) const = 0;
    virtual Mor do_neg(const Mor& f) const;
    virtual bool do_mor_eq(const Mor& f, const Mor& g) const = 0;
    virtual Biproduct do_biproduct(const Obj& a, const Obj& b) const = 0;

    void require_mine(const Obj& a) const;
    void require_mine(const Mor& f) const;
};

// f (+) g : dom(f) (+) dom(g) -> cod(f) (+) cod(g), computed against the
// canonical biproduct witnesses as inj1.f.proj1 + inj2.g.proj2.
Mor oplus_mor(const Mor& f, const Mor& g);

// Right-nested n-ary biproduct A1 (+) (A2 (+) (... An)) with flattened
// injections/projections. n = 0 yields the zero object, n = 1 the object
// itself with identity accessors.
struct NaryBiproduct {
    Obj total;
    std::vector<Mor> inj;
    std::vector<Mor> proj;
};
NaryBiproduct nary_biproduct(std::span<const Obj> parts);

} // namespace hopf
