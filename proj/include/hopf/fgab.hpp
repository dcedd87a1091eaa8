#pragma once

#include "hopf/core.hpp"
#include "hopf/smith.hpp"

namespace hopf {

// Finitely generated abelian groups presented as lists of cyclic orders:
// entry 0 stands for Z, entry d >= 2 for Z_d; order-1 (trivial) generators
// are never stored. No divisibility chain is imposed on the list, so the
// biproduct is plain concatenation with positional injections;
// smith_normal_form is available separately as a canonicalization tool.
//
// A morphism is an integer matrix whose column j lists the image of source
// generator j; entries targeting a Z_e generator are kept reduced into
// [0, e). A matrix is a well-defined homomorphism iff for every source
// generator of order d >= 2, entries m targeting Z vanish and entries
// targeting Z_e satisfy e | d*m. Constructors reject anything else.
class FgAbCategory final : public Category {
  public:
    FgAbCategory() = default;

    // orders: each entry 0 or >= 2.
    Obj object(const std::vector<std::int64_t>& orders) const;
    const std::vector<std::int64_t>& orders(const Obj& a) const;
    // Entries row-major, rows = generators of cod, cols = generators of dom.
    // Throws IllDefinedMorphism when the matrix is not a homomorphism.
    Mor mor(const Obj& dom, const Obj& cod, const std::vector<std::int64_t>& entries) const;
    const std::vector<std::int64_t>& entries(const Mor& f) const;

    std::string name() const override { return "fgab"; }
    bool has_negatives() const override { return true; }
    Obj zero_object() const override;
    std::string obj_label(const Obj& a) const override;
    nlohmann::json obj_to_json(const Obj& a) const override;
    nlohmann::json mor_to_json(const Mor& f) const override;
    std::vector<Obj> enumerate_objects(const SampleLimits& limits) const override;
    Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const override;
    HomSpace hom_space(const Obj& dom, const Obj& cod, std::int64_t bound) const override;

  protected:
    bool do_obj_eq(const Obj& a, const Obj& b) const override;
    Mor do_identity(const Obj& a) const override;
    Mor do_zero_mor(const Obj& dom, const Obj& cod) const override;
    Mor do_compose(const Mor& g, const Mor& f) const override;
    Mor do_add(const Mor& f, const Mor& g) const override;
    Mor do_neg(const Mor& f) const override;
    bool do_mor_eq(const Mor& f, const Mor& g) const override;
    Biproduct do_biproduct(const Obj& a, const Obj& b) const override;

  private:
    Mor make_unchecked(const Obj& dom, const Obj& cod, std::vector<std::int64_t> entries) const;
};

std::shared_ptr<const FgAbCategory> fgab_category();

// The endofunctor G |-> Z_n (x) G on fgab, computed generator-wise:
// order 0 |-> n, order d |-> gcd(n, d), with resulting order-1 generators
// dropped. The kept-index mask transports morphisms: keep the surviving
// rows/columns and reduce entries into the new target order.
class CyclicTensorFunctor {
  public:
    CyclicTensorFunctor(std::shared_ptr<const FgAbCategory> cat, std::int64_t n);

    std::int64_t n() const { return n_; }

    Obj map_object(const Obj& a) const;
    Mor map_morphism(const Mor& f) const;
    // Indices of the source generators that survive tensoring.
    std::vector<int> kept_indices(const Obj& a) const;

  private:
    std::shared_ptr<const FgAbCategory> cat_;
    std::int64_t n_;
};

} // namespace hopf
