#pragma once

#include "hopf/core.hpp"
#include "hopf/semiring.hpp"

namespace hopf {

// Category of finite free modules over a commutative semiring S: objects are
// dimensions, morphisms are matrices (rows = dim cod, cols = dim dom), and
// composition is matrix product (arrows act on column vectors). The biproduct
// of dims m and n is dim m+n with block injections, left summand leading.
class MatCategory final : public Category {
  public:
    explicit MatCategory(Semiring s);

    const Semiring& semiring() const { return semiring_; }

    Obj object(int dim) const;
    int dim(const Obj& a) const;
    // Entries row-major, rows = dim(cod), cols = dim(dom). Entries are
    // normalized; values outside the carrier are rejected.
    Mor mor(const Obj& dom, const Obj& cod, const std::vector<std::int64_t>& entries) const;
    const std::vector<std::int64_t>& entries(const Mor& f) const;

    std::string name() const override;
    bool has_negatives() const override { return semiring_.is_ring(); }
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
    Semiring semiring_;
};

// Builds the handle and runs the sampled semiring axiom checks; throws
// hopf::Error when the semiring is not a commutative semiring on its samples.
std::shared_ptr<const MatCategory> mat_category(Semiring s);

} // namespace hopf
