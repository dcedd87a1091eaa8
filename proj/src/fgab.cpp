#include "hopf/fgab.hpp"

#include <numeric>

namespace hopf {

namespace {

struct FgAbObj final : ObjData {
    std::vector<std::int64_t> orders;
    explicit FgAbObj(std::vector<std::int64_t> o) : orders(std::move(o)) {}
};

struct FgAbMor final : MorData {
    std::vector<std::int64_t> entries; // row-major, rows = |cod|, cols = |dom|
    explicit FgAbMor(std::vector<std::int64_t> e) : entries(std::move(e)) {}
};

const FgAbObj& obj_of(const Obj& a) { return static_cast<const FgAbObj&>(*a.data); }
const FgAbMor& mor_of(const Mor& f) { return static_cast<const FgAbMor&>(*f.data); }

std::int64_t reduce_entry(std::int64_t m, std::int64_t order) {
    if (order == 0) return m;
    const std::int64_t r = m % order;
    return r < 0 ? r + order : r;
}

// Homomorphism condition for a single entry: source generator of order d,
// target generator of order e, coefficient m.
bool entry_well_defined(std::int64_t d, std::int64_t e, std::int64_t m) {
    if (d == 0) return true;
    if (e == 0) return m == 0;
    return (d * m) % e == 0;
}

} // namespace

Obj FgAbCategory::object(const std::vector<std::int64_t>& orders) const {
    for (std::int64_t d : orders)
        if (d == 1 || d < 0)
            throw Error("fgab orders must be 0 (for Z) or >= 2, got " + std::to_string(d));
    return Obj{ptr(), std::make_shared<FgAbObj>(orders)};
}

const std::vector<std::int64_t>& FgAbCategory::orders(const Obj& a) const {
    require_mine(a);
    return obj_of(a).orders;
}

Mor FgAbCategory::make_unchecked(const Obj& dom, const Obj& cod,
                                 std::vector<std::int64_t> entries) const {
    return Mor{dom, cod, std::make_shared<FgAbMor>(std::move(entries))};
}

Mor FgAbCategory::mor(const Obj& dom, const Obj& cod,
                      const std::vector<std::int64_t>& entries) const {
    require_mine(dom);
    require_mine(cod);
    const auto& src = obj_of(dom).orders;
    const auto& dst = obj_of(cod).orders;
    if (entries.size() != src.size() * dst.size())
        throw ShapeMismatch("fgab matrix entry count does not match generators");
    std::vector<std::int64_t> norm(entries.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            const std::int64_t m = reduce_entry(entries[i * src.size() + j], dst[i]);
            if (!entry_well_defined(src[j], dst[i], m))
                throw IllDefinedMorphism("entry " + std::to_string(m) + " does not define a map Z_" +
                                         std::to_string(src[j]) + " -> Z_" + std::to_string(dst[i]));
            norm[i * src.size() + j] = m;
        }
    return make_unchecked(dom, cod, std::move(norm));
}

const std::vector<std::int64_t>& FgAbCategory::entries(const Mor& f) const {
    require_mine(f);
    return mor_of(f).entries;
}

Obj FgAbCategory::zero_object() const {
    return object({});
}

std::string FgAbCategory::obj_label(const Obj& a) const {
    const auto& o = obj_of(a).orders;
    if (o.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += "+";
        s += o[i] == 0 ? "Z" : "Z" + std::to_string(o[i]);
    }
    return s;
}

nlohmann::json FgAbCategory::obj_to_json(const Obj& a) const {
    return nlohmann::json{{"orders", obj_of(a).orders}};
}

nlohmann::json FgAbCategory::mor_to_json(const Mor& f) const {
    const auto& src = obj_of(f.dom).orders;
    const auto& dst = obj_of(f.cod).orders;
    const auto& e = mor_of(f).entries;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < src.size(); ++j) row.push_back(e[i * src.size() + j]);
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"dom", obj_to_json(f.dom)}, {"cod", obj_to_json(f.cod)}, {"entries", rows}};
}

bool FgAbCategory::do_obj_eq(const Obj& a, const Obj& b) const {
    return obj_of(a).orders == obj_of(b).orders;
}

Mor FgAbCategory::do_identity(const Obj& a) const {
    const std::size_t n = obj_of(a).orders.size();
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = obj_of(a).orders[i] == 0 ? 1 : reduce_entry(1, obj_of(a).orders[i]);
    return make_unchecked(a, a, std::move(e));
}

Mor FgAbCategory::do_zero_mor(const Obj& dom, const Obj& cod) const {
    const std::size_t n = obj_of(dom).orders.size() * obj_of(cod).orders.size();
    return make_unchecked(dom, cod, std::vector<std::int64_t>(n, 0));
}

Mor FgAbCategory::do_compose(const Mor& g, const Mor& f) const {
    const auto& a = mor_of(g).entries;
    const auto& b = mor_of(f).entries;
    const std::size_t rows = obj_of(g.cod).orders.size();
    const std::size_t mid = obj_of(g.dom).orders.size();
    const std::size_t cols = obj_of(f.dom).orders.size();
    const auto& dst = obj_of(g.cod).orders;
    std::vector<std::int64_t> out(rows * cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < mid; ++k) {
            const std::int64_t aik = a[i * mid + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] += aik * b[k * cols + j];
        }
        for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = reduce_entry(out[i * cols + j], dst[i]);
    }
    return make_unchecked(f.dom, g.cod, std::move(out));
}

Mor FgAbCategory::do_add(const Mor& f, const Mor& g) const {
    const auto& a = mor_of(f).entries;
    const auto& b = mor_of(g).entries;
    const auto& dst = obj_of(f.cod).orders;
    const std::size_t cols = obj_of(f.dom).orders.size();
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out[i * cols + j] = reduce_entry(a[i * cols + j] + b[i * cols + j], dst[i]);
    return make_unchecked(f.dom, f.cod, std::move(out));
}

Mor FgAbCategory::do_neg(const Mor& f) const {
    const auto& a = mor_of(f).entries;
    const auto& dst = obj_of(f.cod).orders;
    const std::size_t cols = obj_of(f.dom).orders.size();
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = reduce_entry(-a[i * cols + j], dst[i]);
    return make_unchecked(f.dom, f.cod, std::move(out));
}

bool FgAbCategory::do_mor_eq(const Mor& f, const Mor& g) const {
    return mor_of(f).entries == mor_of(g).entries;
}

Biproduct FgAbCategory::do_biproduct(const Obj& a, const Obj& b) const {
    const auto& oa = obj_of(a).orders;
    const auto& ob = obj_of(b).orders;
    std::vector<std::int64_t> concat = oa;
    concat.insert(concat.end(), ob.begin(), ob.end());
    const Obj total = object(concat);
    const std::size_t m = oa.size(), n = ob.size(), t = m + n;
    auto block = [&](std::size_t rows, std::size_t cols, std::size_t roff, std::size_t coff,
                     std::size_t k, const std::vector<std::int64_t>& dst) {
        std::vector<std::int64_t> e(rows * cols, 0);
        for (std::size_t i = 0; i < k; ++i)
            e[(roff + i) * cols + (coff + i)] = reduce_entry(1, dst[roff + i]);
        return e;
    };
    Biproduct w;
    w.total = total;
    w.inj1 = make_unchecked(a, total, block(t, m, 0, 0, m, concat));
    w.inj2 = make_unchecked(b, total, block(t, n, m, 0, n, concat));
    w.proj1 = make_unchecked(total, a, block(m, t, 0, 0, m, oa));
    w.proj2 = make_unchecked(total, b, block(n, t, 0, m, n, ob));
    return w;
}

std::vector<Obj> FgAbCategory::enumerate_objects(const SampleLimits& limits) const {
    // All order lists of length 0..max_generators over the configured order
    // set, in length-then-lexicographic order.
    std::vector<Obj> out;
    std::vector<std::vector<std::int64_t>> layer = {{}};
    out.push_back(object({}));
    for (int len = 1; len <= limits.max_generators; ++len) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& prefix : layer)
            for (std::int64_t d : limits.fgab_orders) {
                auto lst = prefix;
                lst.push_back(d);
                out.push_back(object(lst));
                next.push_back(std::move(lst));
            }
        layer = std::move(next);
    }
    return out;
}

Mor FgAbCategory::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    require_mine(dom);
    require_mine(cod);
    const auto& src = obj_of(dom).orders;
    const auto& dst = obj_of(cod).orders;
    std::vector<std::int64_t> e(src.size() * dst.size(), 0);
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            const std::int64_t d = src[j], t = dst[i];
            std::int64_t m = 0;
            if (d == 0 && t == 0) {
                m = rng.range(-3, 3);
            } else if (d == 0) {
                m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(t)));
            } else if (t == 0) {
                m = 0;
            } else {
                // valid coefficients are the multiples of t / gcd(d, t)
                const std::int64_t g = std::gcd(d, t);
                m = reduce_entry(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g))) *
                                     (t / g),
                                 t);
            }
            e[i * src.size() + j] = m;
        }
    return make_unchecked(dom, cod, std::move(e));
}

HomSpace FgAbCategory::hom_space(const Obj& dom, const Obj& cod, std::int64_t bound) const {
    require_mine(dom);
    require_mine(cod);
    const auto& src = obj_of(dom).orders;
    const auto& dst = obj_of(cod).orders;
    HomSpace space;
    space.complete = true;
    space.entry_values.reserve(src.size() * dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            const std::int64_t d = src[j], t = dst[i];
            std::vector<std::int64_t> vals;
            if (d == 0 && t == 0) {
                space.complete = false; // hom(Z, Z) = Z is infinite
                vals.push_back(0);
                for (std::int64_t v = 1; v <= bound; ++v) {
                    vals.push_back(v);
                    vals.push_back(-v);
                }
            } else if (d == 0) {
                for (std::int64_t v = 0; v < t; ++v) vals.push_back(v);
            } else if (t == 0) {
                vals.push_back(0);
            } else {
                const std::int64_t g = std::gcd(d, t);
                for (std::int64_t k = 0; k < g; ++k) vals.push_back(k * (t / g));
            }
            space.entry_values.push_back(std::move(vals));
        }
    Obj d = dom, c = cod;
    auto self = std::static_pointer_cast<const FgAbCategory>(ptr());
    space.build = [self, d, c](std::span<const std::int64_t> entries) {
        return self->make_unchecked(d, c, std::vector<std::int64_t>(entries.begin(), entries.end()));
    };
    return space;
}

std::shared_ptr<const FgAbCategory> fgab_category() {
    return std::make_shared<FgAbCategory>();
}

// ---------------------------------------------------------------------------

CyclicTensorFunctor::CyclicTensorFunctor(std::shared_ptr<const FgAbCategory> cat, std::int64_t n)
    : cat_(std::move(cat)), n_(n) {
    if (n_ < 2) throw Error("cyclic tensor functor requires n >= 2");
}

std::vector<int> CyclicTensorFunctor::kept_indices(const Obj& a) const {
    const auto& orders = cat_->orders(a);
    std::vector<int> kept;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        const std::int64_t d = orders[j];
        const std::int64_t nd = d == 0 ? n_ : std::gcd(n_, d);
        if (nd >= 2) kept.push_back(static_cast<int>(j));
    }
    return kept;
}

Obj CyclicTensorFunctor::map_object(const Obj& a) const {
    const auto& orders = cat_->orders(a);
    std::vector<std::int64_t> out;
    for (std::int64_t d : orders) {
        const std::int64_t nd = d == 0 ? n_ : std::gcd(n_, d);
        if (nd >= 2) out.push_back(nd);
    }
    return cat_->object(out);
}

Mor CyclicTensorFunctor::map_morphism(const Mor& f) const {
    const auto& src = cat_->orders(f.dom);
    const auto& entries = cat_->entries(f);
    const Obj tdom = map_object(f.dom);
    const Obj tcod = map_object(f.cod);
    const std::vector<int> keep_src = kept_indices(f.dom);
    const std::vector<int> keep_dst = kept_indices(f.cod);
    std::vector<std::int64_t> out;
    out.reserve(keep_src.size() * keep_dst.size());
    for (int i : keep_dst)
        for (int j : keep_src)
            out.push_back(entries[static_cast<std::size_t>(i) * src.size() + j]);
    return cat_->mor(tdom, tcod, out);
}

} // namespace hopf
