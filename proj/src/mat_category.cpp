#include "hopf/mat_category.hpp"

namespace hopf {

namespace {

struct MatObj final : ObjData {
    int dim;
    explicit MatObj(int d) : dim(d) {}
};

struct MatMor final : MorData {
    int rows, cols;
    std::vector<std::int64_t> entries; // row-major
    MatMor(int r, int c, std::vector<std::int64_t> e) : rows(r), cols(c), entries(std::move(e)) {}
};

const MatObj& obj_of(const Obj& a) { return static_cast<const MatObj&>(*a.data); }
const MatMor& mor_of(const Mor& f) { return static_cast<const MatMor&>(*f.data); }

} // namespace

MatCategory::MatCategory(Semiring s) : semiring_(std::move(s)) {}

std::string MatCategory::name() const {
    return "mat(" + semiring_.name() + ")";
}

Obj MatCategory::object(int d) const {
    if (d < 0) throw Error("matrix object dimension must be >= 0");
    return Obj{ptr(), std::make_shared<MatObj>(d)};
}

int MatCategory::dim(const Obj& a) const {
    require_mine(a);
    return obj_of(a).dim;
}

Mor MatCategory::mor(const Obj& dom, const Obj& cod,
                     const std::vector<std::int64_t>& entries) const {
    require_mine(dom);
    require_mine(cod);
    const int r = obj_of(cod).dim, c = obj_of(dom).dim;
    if (entries.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(c))
        throw ShapeMismatch("matrix entry count does not match " + std::to_string(r) + "x" +
                            std::to_string(c));
    std::vector<std::int64_t> norm(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!semiring_.is_element(semiring_.normalize(entries[i])))
            throw Error("entry is not an element of " + semiring_.name());
        norm[i] = semiring_.normalize(entries[i]);
    }
    return Mor{dom, cod, std::make_shared<MatMor>(r, c, std::move(norm))};
}

const std::vector<std::int64_t>& MatCategory::entries(const Mor& f) const {
    require_mine(f);
    return mor_of(f).entries;
}

Obj MatCategory::zero_object() const {
    return object(0);
}

std::string MatCategory::obj_label(const Obj& a) const {
    return "dim " + std::to_string(obj_of(a).dim);
}

nlohmann::json MatCategory::obj_to_json(const Obj& a) const {
    return nlohmann::json{{"dim", obj_of(a).dim}};
}

nlohmann::json MatCategory::mor_to_json(const Mor& f) const {
    const MatMor& m = mor_of(f);
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.entries[static_cast<std::size_t>(i) * m.cols + j]);
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"dom", obj_to_json(f.dom)}, {"cod", obj_to_json(f.cod)}, {"entries", rows}};
}

bool MatCategory::do_obj_eq(const Obj& a, const Obj& b) const {
    return obj_of(a).dim == obj_of(b).dim;
}

Mor MatCategory::do_identity(const Obj& a) const {
    const int n = obj_of(a).dim;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n, semiring_.zero());
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = semiring_.one();
    return Mor{a, a, std::make_shared<MatMor>(n, n, std::move(e))};
}

Mor MatCategory::do_zero_mor(const Obj& dom, const Obj& cod) const {
    const int r = obj_of(cod).dim, c = obj_of(dom).dim;
    return Mor{dom, cod,
               std::make_shared<MatMor>(r, c, std::vector<std::int64_t>(
                                                  static_cast<std::size_t>(r) * c, semiring_.zero()))};
}

Mor MatCategory::do_compose(const Mor& g, const Mor& f) const {
    const MatMor& a = mor_of(g); // rows x k
    const MatMor& b = mor_of(f); // k x cols
    const int rows = a.rows, k = a.cols, cols = b.cols;
    std::vector<std::int64_t> out(static_cast<std::size_t>(rows) * cols, semiring_.zero());
    for (int i = 0; i < rows; ++i) {
        for (int t = 0; t < k; ++t) {
            const std::int64_t aik = a.entries[static_cast<std::size_t>(i) * k + t];
            if (aik == semiring_.zero()) continue;
            for (int j = 0; j < cols; ++j) {
                auto& acc = out[static_cast<std::size_t>(i) * cols + j];
                acc = semiring_.add(acc, semiring_.mul(aik, b.entries[static_cast<std::size_t>(t) * cols + j]));
            }
        }
    }
    return Mor{f.dom, g.cod, std::make_shared<MatMor>(rows, cols, std::move(out))};
}

Mor MatCategory::do_add(const Mor& f, const Mor& g) const {
    const MatMor& a = mor_of(f);
    const MatMor& b = mor_of(g);
    std::vector<std::int64_t> out(a.entries.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = semiring_.add(a.entries[i], b.entries[i]);
    return Mor{f.dom, f.cod, std::make_shared<MatMor>(a.rows, a.cols, std::move(out))};
}

Mor MatCategory::do_neg(const Mor& f) const {
    const MatMor& a = mor_of(f);
    std::vector<std::int64_t> out(a.entries.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = semiring_.neg(a.entries[i]);
    return Mor{f.dom, f.cod, std::make_shared<MatMor>(a.rows, a.cols, std::move(out))};
}

bool MatCategory::do_mor_eq(const Mor& f, const Mor& g) const {
    return mor_of(f).entries == mor_of(g).entries;
}

Biproduct MatCategory::do_biproduct(const Obj& a, const Obj& b) const {
    const int m = obj_of(a).dim, n = obj_of(b).dim;
    const Obj total = object(m + n);
    auto block = [&](int rows, int cols, int roff, int coff, int k) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(rows) * cols, semiring_.zero());
        for (int i = 0; i < k; ++i)
            e[static_cast<std::size_t>(roff + i) * cols + (coff + i)] = semiring_.one();
        return e;
    };
    Biproduct w;
    w.total = total;
    w.inj1 = Mor{a, total, std::make_shared<MatMor>(m + n, m, block(m + n, m, 0, 0, m))};
    w.inj2 = Mor{b, total, std::make_shared<MatMor>(m + n, n, block(m + n, n, m, 0, n))};
    w.proj1 = Mor{total, a, std::make_shared<MatMor>(m, m + n, block(m, m + n, 0, 0, m))};
    w.proj2 = Mor{total, b, std::make_shared<MatMor>(n, m + n, block(n, m + n, 0, m, n))};
    return w;
}

std::vector<Obj> MatCategory::enumerate_objects(const SampleLimits& limits) const {
    std::vector<Obj> out;
    for (int d = 0; d <= limits.max_dim; ++d) out.push_back(object(d));
    return out;
}

Mor MatCategory::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    require_mine(dom);
    require_mine(cod);
    const int r = obj_of(cod).dim, c = obj_of(dom).dim;
    const auto& pool = semiring_.sample_elements();
    std::vector<std::int64_t> e(static_cast<std::size_t>(r) * c);
    for (auto& x : e) x = pool[rng.below(pool.size())];
    return Mor{dom, cod, std::make_shared<MatMor>(r, c, std::move(e))};
}

HomSpace MatCategory::hom_space(const Obj& dom, const Obj& cod, std::int64_t bound) const {
    require_mine(dom);
    require_mine(cod);
    const int r = obj_of(cod).dim, c = obj_of(dom).dim;
    HomSpace space;
    bool complete = true;
    const std::vector<std::int64_t> values = semiring_.enumeration_values(bound, complete);
    space.complete = complete;
    space.entry_values.assign(static_cast<std::size_t>(r) * c, values);
    Obj d = dom, co = cod;
    space.build = [d, co, r, c](std::span<const std::int64_t> entries) {
        return Mor{d, co,
                   std::make_shared<MatMor>(r, c, std::vector<std::int64_t>(entries.begin(), entries.end()))};
    };
    return space;
}

std::shared_ptr<const MatCategory> mat_category(Semiring s) {
    if (auto err = s.validate())
        throw Error("semiring " + s.name() + " failed validation: " + *err);
    return std::make_shared<MatCategory>(std::move(s));
}

} // namespace hopf
