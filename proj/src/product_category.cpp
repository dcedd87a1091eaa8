#include "hopf/product_category.hpp"

namespace hopf {

namespace {

struct PairObj final : ObjData {
    Obj a, b;
    PairObj(Obj x, Obj y) : a(std::move(x)), b(std::move(y)) {}
};

struct PairMor final : MorData {
    Mor f, g;
    PairMor(Mor x, Mor y) : f(std::move(x)), g(std::move(y)) {}
};

const PairObj& obj_of(const Obj& a) { return static_cast<const PairObj&>(*a.data); }
const PairMor& mor_of(const Mor& f) { return static_cast<const PairMor&>(*f.data); }

} // namespace

ProductCategory::ProductCategory(Category::Ptr first, Category::Ptr second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (!first_ || !second_) throw Error("product category requires two factors");
}

std::string ProductCategory::name() const {
    return first_->name() + " x " + second_->name();
}

bool ProductCategory::has_negatives() const {
    return first_->has_negatives() && second_->has_negatives();
}

Obj ProductCategory::object(const Obj& a, const Obj& b) const {
    if (a.cat != first_ || b.cat != second_)
        throw CategoryMismatch("pair components must come from the product's factors");
    return Obj{ptr(), std::make_shared<PairObj>(a, b)};
}

Mor ProductCategory::mor(const Mor& f, const Mor& g) const {
    return Mor{object(f.dom, g.dom), object(f.cod, g.cod), std::make_shared<PairMor>(f, g)};
}

std::pair<Obj, Obj> ProductCategory::parts(const Obj& a) const {
    require_mine(a);
    return {obj_of(a).a, obj_of(a).b};
}

std::pair<Mor, Mor> ProductCategory::mor_parts(const Mor& f) const {
    require_mine(f);
    return {mor_of(f).f, mor_of(f).g};
}

Obj ProductCategory::zero_object() const {
    return object(first_->zero_object(), second_->zero_object());
}

std::string ProductCategory::obj_label(const Obj& a) const {
    const PairObj& p = obj_of(a);
    return "(" + first_->obj_label(p.a) + ", " + second_->obj_label(p.b) + ")";
}

nlohmann::json ProductCategory::obj_to_json(const Obj& a) const {
    const PairObj& p = obj_of(a);
    return nlohmann::json{{"first", first_->obj_to_json(p.a)}, {"second", second_->obj_to_json(p.b)}};
}

nlohmann::json ProductCategory::mor_to_json(const Mor& f) const {
    const PairMor& p = mor_of(f);
    return nlohmann::json{{"first", first_->mor_to_json(p.f)}, {"second", second_->mor_to_json(p.g)}};
}

bool ProductCategory::do_obj_eq(const Obj& a, const Obj& b) const {
    return first_->obj_eq(obj_of(a).a, obj_of(b).a) && second_->obj_eq(obj_of(a).b, obj_of(b).b);
}

Mor ProductCategory::do_identity(const Obj& a) const {
    const PairObj& p = obj_of(a);
    return mor(first_->identity(p.a), second_->identity(p.b));
}

Mor ProductCategory::do_zero_mor(const Obj& dom, const Obj& cod) const {
    return mor(first_->zero_mor(obj_of(dom).a, obj_of(cod).a),
               second_->zero_mor(obj_of(dom).b, obj_of(cod).b));
}

Mor ProductCategory::do_compose(const Mor& g, const Mor& f) const {
    return mor(first_->compose(mor_of(g).f, mor_of(f).f), second_->compose(mor_of(g).g, mor_of(f).g));
}

Mor ProductCategory::do_add(const Mor& f, const Mor& g) const {
    return mor(first_->add(mor_of(f).f, mor_of(g).f), second_->add(mor_of(f).g, mor_of(g).g));
}

Mor ProductCategory::do_neg(const Mor& f) const {
    return mor(first_->neg(mor_of(f).f), second_->neg(mor_of(f).g));
}

bool ProductCategory::do_mor_eq(const Mor& f, const Mor& g) const {
    return first_->mor_eq(mor_of(f).f, mor_of(g).f) && second_->mor_eq(mor_of(f).g, mor_of(g).g);
}

Biproduct ProductCategory::do_biproduct(const Obj& a, const Obj& b) const {
    const Biproduct wa = first_->biproduct(obj_of(a).a, obj_of(b).a);
    const Biproduct wb = second_->biproduct(obj_of(a).b, obj_of(b).b);
    Biproduct w;
    w.total = object(wa.total, wb.total);
    w.inj1 = mor(wa.inj1, wb.inj1);
    w.inj2 = mor(wa.inj2, wb.inj2);
    w.proj1 = mor(wa.proj1, wb.proj1);
    w.proj2 = mor(wa.proj2, wb.proj2);
    return w;
}

std::vector<Obj> ProductCategory::enumerate_objects(const SampleLimits& limits) const {
    std::vector<Obj> out;
    const auto fa = first_->enumerate_objects(limits);
    const auto fb = second_->enumerate_objects(limits);
    for (const Obj& a : fa)
        for (const Obj& b : fb) out.push_back(object(a, b));
    return out;
}

Mor ProductCategory::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    require_mine(dom);
    require_mine(cod);
    return mor(first_->random_mor(obj_of(dom).a, obj_of(cod).a, rng),
               second_->random_mor(obj_of(dom).b, obj_of(cod).b, rng));
}

HomSpace ProductCategory::hom_space(const Obj& dom, const Obj& cod, std::int64_t bound) const {
    require_mine(dom);
    require_mine(cod);
    HomSpace ha = first_->hom_space(obj_of(dom).a, obj_of(cod).a, bound);
    HomSpace hb = second_->hom_space(obj_of(dom).b, obj_of(cod).b, bound);
    HomSpace out;
    out.complete = ha.complete && hb.complete;
    out.entry_values = ha.entry_values;
    out.entry_values.insert(out.entry_values.end(), hb.entry_values.begin(), hb.entry_values.end());
    const std::size_t na = ha.entry_values.size();
    auto self = std::static_pointer_cast<const ProductCategory>(ptr());
    auto build_a = ha.build;
    auto build_b = hb.build;
    out.build = [self, build_a, build_b, na](std::span<const std::int64_t> entries) {
        return self->mor(build_a(entries.subspan(0, na)), build_b(entries.subspan(na)));
    };
    return out;
}

std::shared_ptr<const ProductCategory> product_category(Category::Ptr first, Category::Ptr second) {
    return std::make_shared<ProductCategory>(std::move(first), std::move(second));
}

} // namespace hopf
