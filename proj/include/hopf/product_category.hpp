#pragma once

#include "hopf/core.hpp"

namespace hopf {

// Binary product of two categories with finite biproducts. Objects and
// morphisms are ordered pairs; every piece of structure is componentwise, and
// negatives exist exactly when both factors have them.
class ProductCategory final : public Category {
  public:
    ProductCategory(Category::Ptr first, Category::Ptr second);

    const Category::Ptr& first() const { return first_; }
    const Category::Ptr& second() const { return second_; }

    Obj object(const Obj& a, const Obj& b) const;
    Mor mor(const Mor& f, const Mor& g) const;
    std::pair<Obj, Obj> parts(const Obj& a) const;
    std::pair<Mor, Mor> mor_parts(const Mor& f) const;

    std::string name() const override;
    bool has_negatives() const override;
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
    Category::Ptr first_;
    Category::Ptr second_;
};

std::shared_ptr<const ProductCategory> product_category(Category::Ptr first, Category::Ptr second);

} // namespace hopf
