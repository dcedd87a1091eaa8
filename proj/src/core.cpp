#include "hopf/core.hpp"

namespace hopf {

std::uint64_t HomSpace::size(std::uint64_t clamp) const {
    std::uint64_t n = 1;
    for (const auto& vals : entry_values) {
        if (vals.empty()) return 0;
        const std::uint64_t k = vals.size();
        if (n > clamp / k) return clamp + 1;
        n *= k;
    }
    return n;
}

void Category::require_mine(const Obj& a) const {
    if (a.cat.get() != this)
        throw CategoryMismatch("object does not belong to category " + name());
}

void Category::require_mine(const Mor& f) const {
    if (f.dom.cat.get() != this || f.cod.cat.get() != this)
        throw CategoryMismatch("morphism does not belong to category " + name());
}

bool Category::obj_eq(const Obj& a, const Obj& b) const {
    require_mine(a);
    require_mine(b);
    return do_obj_eq(a, b);
}

Mor Category::identity(const Obj& a) const {
    require_mine(a);
    return do_identity(a);
}

Mor Category::zero_mor(const Obj& dom, const Obj& cod) const {
    require_mine(dom);
    require_mine(cod);
    return do_zero_mor(dom, cod);
}

Mor Category::compose(const Mor& g, const Mor& f) const {
    require_mine(g);
    require_mine(f);
    if (!do_obj_eq(g.dom, f.cod))
        throw DomainMismatch("compose: cod(" + obj_label(f.cod) + ") != dom(" +
                             obj_label(g.dom) + ")");
    return do_compose(g, f);
}

Mor Category::add(const Mor& f, const Mor& g) const {
    require_mine(f);
    require_mine(g);
    if (!do_obj_eq(f.dom, g.dom) || !do_obj_eq(f.cod, g.cod))
        throw ShapeMismatch("add: morphisms are not parallel");
    return do_add(f, g);
}

Mor Category::neg(const Mor& f) const {
    require_mine(f);
    if (!has_negatives())
        throw NegationUnsupported("category " + name() + " has no additive inverses");
    return do_neg(f);
}

Mor Category::do_neg(const Mor& f) const {
    (void)f;
    throw NegationUnsupported("category " + name() + " has no additive inverses");
}

bool Category::mor_eq(const Mor& f, const Mor& g) const {
    require_mine(f);
    require_mine(g);
    if (!do_obj_eq(f.dom, g.dom) || !do_obj_eq(f.cod, g.cod))
        throw ShapeMismatch("mor_eq: morphisms are not parallel");
    return do_mor_eq(f, g);
}

Biproduct Category::biproduct(const Obj& a, const Obj& b) const {
    require_mine(a);
    require_mine(b);
    return do_biproduct(a, b);
}

Mor oplus_mor(const Mor& f, const Mor& g) {
    const Category& cat = *f.dom.cat;
    const Biproduct dom = cat.biproduct(f.dom, g.dom);
    const Biproduct cod = cat.biproduct(f.cod, g.cod);
    const Mor left = cat.compose(cod.inj1, cat.compose(f, dom.proj1));
    const Mor right = cat.compose(cod.inj2, cat.compose(g, dom.proj2));
    return cat.add(left, right);
}

NaryBiproduct nary_biproduct(std::span<const Obj> parts) {
    if (parts.empty())
        throw Error("nary_biproduct: at least one part required");
    const Category& cat = *parts.front().cat;
    NaryBiproduct out;
    if (parts.size() == 1) {
        out.total = parts.front();
        out.inj = {cat.identity(out.total)};
        out.proj = {cat.identity(out.total)};
        return out;
    }
    NaryBiproduct tail = nary_biproduct(parts.subspan(1));
    const Biproduct w = cat.biproduct(parts.front(), tail.total);
    out.total = w.total;
    out.inj.push_back(w.inj1);
    out.proj.push_back(w.proj1);
    for (std::size_t i = 0; i < tail.inj.size(); ++i) {
        out.inj.push_back(cat.compose(w.inj2, tail.inj[i]));
        out.proj.push_back(cat.compose(tail.proj[i], w.proj2));
    }
    return out;
}

} // namespace hopf
