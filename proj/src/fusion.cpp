#include "hopf/fusion.hpp"

#include <algorithm>
#include <array>
#include <atomic>

#include "hopf/parallel.hpp"

namespace hopf {

Obj t_zero_object(const Monad& m) {
    return m.map_object(m.base->zero_object());
}

Obj invertor_codomain(const Monad& m, const Obj& a) {
    return m.map_object(m.base->biproduct(a, t_zero_object(m)).total);
}

Mor fusion_operator(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Obj tb = m.map_object(b);
    const Biproduct w = cat.biproduct(a, tb);               // A (+) T(B)
    const Biproduct p = cat.biproduct(m.map_object(a), tb); // T(A) (+) T(B)
    const Mor left = cat.compose(p.inj1, m.map_morphism(w.proj1));
    const Mor right = cat.compose(p.inj2, cat.compose(m.mu(b), m.map_morphism(w.proj2)));
    return cat.add(left, right);
}

namespace {

// T(1_A (+) T(0 -> B)) : T(A (+) T(0)) -> T(A (+) T(B))
Mor lift_zero_to(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Mor tz = m.map_morphism(cat.zero_mor(cat.zero_object(), b));
    return m.map_morphism(oplus_mor(cat.identity(a), tz));
}

} // namespace

InvertorAxioms::InvertorAxioms(const Monad& m, const Obj& a) : cat_(m.base.get()) {
    const Category& cat = *m.base;
    const Obj zero = cat.zero_object();
    const Obj t0 = m.map_object(zero);
    ta_ = m.map_object(a);
    const Biproduct w0 = cat.biproduct(a, t0);
    cod_ = m.map_object(w0.total);
    t_proj1_ = m.map_morphism(w0.proj1);
    const Mor mu0 = m.mu(zero);
    mu0_t_proj2_ = cat.compose(mu0, m.map_morphism(w0.proj2));
    fi30_fixed_ = cat.compose(m.map_morphism(w0.inj2), cat.compose(m.eta(t0), mu0_t_proj2_));
    id_ta_ = cat.identity(ta_);
    id_cod_ = cat.identity(cod_);
    zero_ta_t0_ = cat.zero_mor(ta_, t0);
}

bool InvertorAxioms::fi1(const Mor& cand) const {
    return cat_->mor_eq(cat_->compose(t_proj1_, cand), id_ta_);
}

bool InvertorAxioms::fi2(const Mor& cand) const {
    return cat_->mor_eq(cat_->compose(mu0_t_proj2_, cand), zero_ta_t0_);
}

bool InvertorAxioms::fi3_zero(const Mor& cand) const {
    return cat_->mor_eq(cat_->add(cat_->compose(cand, t_proj1_), fi30_fixed_), id_cod_);
}

bool check_fi1(const Monad& m, const Mor& cand_at_a, const Obj& a) {
    return InvertorAxioms(m, a).fi1(cand_at_a);
}

bool check_fi2(const Monad& m, const Mor& cand_at_a, const Obj& a) {
    return InvertorAxioms(m, a).fi2(cand_at_a);
}

bool check_fi3_zero(const Monad& m, const Mor& cand_at_a, const Obj& a) {
    return InvertorAxioms(m, a).fi3_zero(cand_at_a);
}

bool check_fi3(const Monad& m, const Mor& cand_at_a, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Mor term1 =
        cat.compose(lift_zero_to(m, a, b), cat.compose(cand_at_a, m.map_morphism(wb.proj1)));
    const Mor term2 = cat.compose(
        m.map_morphism(wb.inj2),
        cat.compose(m.eta(tb), cat.compose(m.mu(b), m.map_morphism(wb.proj2))));
    return cat.mor_eq(cat.add(term1, term2), cat.identity(m.map_object(wb.total)));
}

Mor build_inverse(const Monad& m, const Mor& cand_at_a, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Biproduct p = cat.biproduct(m.map_object(a), tb);
    const Mor term1 = cat.compose(lift_zero_to(m, a, b), cat.compose(cand_at_a, p.proj1));
    const Mor term2 = cat.compose(m.map_morphism(wb.inj2), cat.compose(m.eta(tb), p.proj2));
    return cat.add(term1, term2);
}

std::pair<bool, bool> verify_two_sided(const Monad& m, const Mor& cand_at_a, const Obj& a,
                                       const Obj& b) {
    const Category& cat = *m.base;
    const Mor h = fusion_operator(m, a, b);
    const Mor hinv = build_inverse(m, cand_at_a, a, b);
    const bool left = cat.mor_eq(cat.compose(hinv, h), cat.identity(h.dom));
    const bool right = cat.mor_eq(cat.compose(h, hinv), cat.identity(h.cod));
    return {left, right};
}

Mor extract_invertor(const Monad& m, const Obj& a, const Mor& inverse_at_a0) {
    const Category& cat = *m.base;
    const Mor h = fusion_operator(m, a, cat.zero_object());
    if (!cat.mor_eq(cat.compose(inverse_at_a0, h), cat.identity(h.dom)) ||
        !cat.mor_eq(cat.compose(h, inverse_at_a0), cat.identity(h.cod)))
        throw NotInvertible("extract_invertor: supplied morphism is not a two-sided inverse at (A, 0)");
    const Biproduct p = cat.biproduct(m.map_object(a), t_zero_object(m));
    return cat.compose(inverse_at_a0, p.inj1);
}

std::pair<bool, bool> check_inverse_injections(const Monad& m, const Mor& cand_at_a, const Obj& a,
                                               const Obj& b) {
    const Category& cat = *m.base;
    const Obj zero = cat.zero_object();
    const auto [lb, rb] = verify_two_sided(m, cand_at_a, a, b);
    const auto [l0, r0] = verify_two_sided(m, cand_at_a, a, zero);
    if (!(lb && rb && l0 && r0))
        throw NotInvertible("inverse decomposition needs verified inverses at (A,B) and (A,0)");
    const Obj tb = m.map_object(b);
    const Mor hinv_ab = build_inverse(m, cand_at_a, a, b);
    const Mor hinv_a0 = build_inverse(m, cand_at_a, a, zero);
    const Biproduct p = cat.biproduct(m.map_object(a), tb);
    const Biproduct p0 = cat.biproduct(m.map_object(a), t_zero_object(m));
    const Biproduct wb = cat.biproduct(a, tb);
    const bool sq1 =
        cat.mor_eq(cat.compose(hinv_ab, p.inj1),
                   cat.compose(lift_zero_to(m, a, b), cat.compose(hinv_a0, p0.inj1)));
    const bool sq2 = cat.mor_eq(cat.compose(hinv_ab, p.inj2),
                                cat.compose(m.map_morphism(wb.inj2), m.eta(tb)));
    return {sq1, sq2};
}

// --- closed forms -----------------------------------------------------------

Mor representable_invertor(const Category& cat, const Obj& h, const Obj& a) {
    if (!cat.has_negatives())
        throw NegationUnsupported("representable invertor needs an additive inverse of 1_H");
    const std::array<Obj, 4> parts = {h, a, h, cat.zero_object()};
    const NaryBiproduct nb = nary_biproduct(std::span<const Obj>(parts));
    const Biproduct w = cat.biproduct(h, a); // T(A) = H (+) A
    const Mor t1 = cat.compose(nb.inj[0], w.proj1);
    const Mor t2 = cat.compose(nb.inj[1], w.proj2);
    const Mor t3 = cat.compose(nb.inj[2], cat.compose(cat.neg(cat.identity(h)), w.proj1));
    return cat.add(cat.add(t1, t2), t3);
}

Mor idempotent_invertor(const Monad& m, const Obj& a) {
    const Category& cat = *m.base;
    return m.map_morphism(cat.biproduct(a, t_zero_object(m)).inj1);
}

Mor negatives_invertor(const Monad& m, const Obj& a) {
    const Category& cat = *m.base;
    if (!cat.has_negatives())
        throw NegationUnsupported("negatives-form invertor needs additive inverses");
    const Obj t0 = t_zero_object(m);
    const Biproduct w0 = cat.biproduct(a, t0);
    const Mor term1 = m.map_morphism(w0.inj1);
    const Mor term2 = cat.compose(
        m.map_morphism(w0.inj2),
        cat.compose(m.eta(t0), m.map_morphism(cat.zero_mor(a, cat.zero_object()))));
    return cat.add(term1, cat.neg(term2));
}

Mor inverse_form_idempotent(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Biproduct p = cat.biproduct(m.map_object(a), tb);
    return cat.add(cat.compose(m.map_morphism(wb.inj1), p.proj1),
                   cat.compose(m.map_morphism(wb.inj2), cat.compose(m.eta(tb), p.proj2)));
}

Mor inverse_form_negatives(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    if (!cat.has_negatives())
        throw NegationUnsupported("negatives-form inverse needs additive inverses");
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Biproduct p = cat.biproduct(m.map_object(a), tb);
    const Mor term1 = cat.compose(m.map_morphism(wb.inj1), p.proj1);
    const Mor term2 = cat.compose(
        m.map_morphism(wb.inj2),
        cat.compose(m.eta(tb), cat.compose(m.map_morphism(cat.zero_mor(a, b)), p.proj1)));
    const Mor term3 = cat.compose(m.map_morphism(wb.inj2), cat.compose(m.eta(tb), p.proj2));
    return cat.add(cat.add(term1, cat.neg(term2)), term3);
}

// --- shortcuts ----------------------------------------------------------------

bool shortcut_idempotent(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Mor term1 = m.map_morphism(cat.compose(wb.inj1, wb.proj1)); // T(1 (+) 0)
    const Mor term2 = m.map_morphism(cat.compose(wb.inj2, wb.proj2)); // T(0 (+) 1)
    return cat.mor_eq(cat.add(term1, term2), cat.identity(m.map_object(wb.total)));
}

bool shortcut_idempotent_checked(const Monad& m, const SamplePlan& plan, const Obj& a,
                                 const Obj& b) {
    const IdempotenceResult idem = is_idempotent(m, plan);
    if (!idem.value)
        throw PreconditionViolated("shortcut_idempotent: monad is not idempotent (witness " +
                                   m.base->obj_label(*idem.witness) + ")");
    return shortcut_idempotent(m, a, b);
}

bool shortcut_negatives(const Monad& m, const Obj& a, const Obj& b) {
    const Category& cat = *m.base;
    if (!cat.has_negatives())
        throw NegationUnsupported("shortcut_negatives needs additive inverses");
    const Obj tb = m.map_object(b);
    const Biproduct wb = cat.biproduct(a, tb);
    const Mor term1 = m.map_morphism(cat.compose(wb.inj1, wb.proj1));
    const Mor term2 = cat.compose(
        m.map_morphism(wb.inj2),
        cat.compose(m.eta(tb), cat.compose(m.mu(b), m.map_morphism(wb.proj2))));
    const Mor term3 = cat.compose(m.map_morphism(wb.inj2),
                                  cat.compose(m.eta(tb), m.map_morphism(cat.zero_mor(wb.total, b))));
    return cat.mor_eq(cat.add(cat.add(term1, term2), cat.neg(term3)),
                      cat.identity(m.map_object(wb.total)));
}

// --- candidate families -------------------------------------------------------

InvertorCandidate candidate_representable(const Monad& m) {
    if (!m.representable_h)
        throw PreconditionViolated("candidate_representable: monad is not representable-tagged");
    if (!m.base->has_negatives())
        throw NegationUnsupported("candidate_representable needs additive inverses");
    const Monad mm = m;
    return InvertorCandidate{
        "representable", [mm](const Obj& a) -> std::optional<Mor> {
            return representable_invertor(*mm.base, *mm.representable_h, a);
        }};
}

InvertorCandidate candidate_idempotent(const Monad& m) {
    const Monad mm = m;
    return InvertorCandidate{"idempotent_form", [mm](const Obj& a) -> std::optional<Mor> {
                                 return idempotent_invertor(mm, a);
                             }};
}

InvertorCandidate candidate_negatives(const Monad& m) {
    if (!m.base->has_negatives())
        throw NegationUnsupported("candidate_negatives needs additive inverses");
    const Monad mm = m;
    return InvertorCandidate{"negatives_form", [mm](const Obj& a) -> std::optional<Mor> {
                                 return negatives_invertor(mm, a);
                             }};
}

// --- bounded search -------------------------------------------------------------

SearchResult search_invertor(const Monad& m, const Obj& a, std::int64_t bound, std::uint64_t cap,
                             int jobs) {
    const Category& cat = *m.base;
    const InvertorAxioms ax(m, a);
    const HomSpace space = cat.hom_space(ax.domain(), ax.codomain(), bound);
    const std::uint64_t size = space.size(cap);
    if (size > cap)
        throw SearchSpaceTooLarge("invertor search space at " + cat.obj_label(a) +
                                  " exceeds the enumeration cap " + std::to_string(cap));

    SearchResult out;
    out.complete = space.complete;
    out.space_size = size;
    if (size == 0) return out;

    const std::size_t nentries = space.entry_values.size();
    auto decode = [&](std::uint64_t index, std::vector<std::size_t>& digits,
                      std::vector<std::int64_t>& values) {
        for (std::size_t i = nentries; i-- > 0;) {
            const std::size_t s = space.entry_values[i].size();
            digits[i] = static_cast<std::size_t>(index % s);
            values[i] = space.entry_values[i][digits[i]];
            index /= s;
        }
    };

    // Chunked scan; the result is the minimum satisfying index, which is
    // independent of how chunks get scheduled across workers.
    std::atomic<std::uint64_t> best{size};
    const std::uint64_t chunk =
        std::max<std::uint64_t>(1024, size / (static_cast<std::uint64_t>(std::max(jobs, 1)) * 16) + 1);
    const std::uint64_t nchunks = (size + chunk - 1) / chunk;

    parallel_for(static_cast<std::size_t>(nchunks), jobs, [&](std::size_t c) {
        const std::uint64_t start = static_cast<std::uint64_t>(c) * chunk;
        if (start >= best.load(std::memory_order_relaxed)) return;
        const std::uint64_t end = std::min(size, start + chunk);
        std::vector<std::size_t> digits(nentries);
        std::vector<std::int64_t> values(nentries);
        decode(start, digits, values);
        for (std::uint64_t idx = start; idx < end; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) return;
            const Mor cand = space.build(values);
            if (ax.fi1(cand) && ax.fi2(cand) && ax.fi3_zero(cand)) {
                std::uint64_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
            for (std::size_t i = nentries; i-- > 0;) { // odometer step
                if (++digits[i] < space.entry_values[i].size()) {
                    values[i] = space.entry_values[i][digits[i]];
                    break;
                }
                digits[i] = 0;
                values[i] = space.entry_values[i][0];
            }
        }
    });

    const std::uint64_t found = best.load();
    if (found < size) {
        std::vector<std::size_t> digits(nentries);
        std::vector<std::int64_t> values(nentries);
        decode(found, digits, values);
        out.found = space.build(values);
    }
    return out;
}

// --- full verification ----------------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified_hopf: return "verified_hopf";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::automatic: return "auto";
        case Strategy::idempotent_form: return "idempotent_form";
        case Strategy::negatives_form: return "negatives_form";
        case Strategy::representable: return "representable";
        case Strategy::search: return "search";
        case Strategy::user: return "user";
    }
    return "auto";
}

bool CandidateReport::all_checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckStat& s) { return s.passed(); });
}

namespace {

enum CheckIdx {
    CK_FI1,
    CK_FI2,
    CK_FI3_ZERO,
    CK_NATURALITY,
    CK_FI3,
    CK_INV_LEFT,
    CK_INV_RIGHT,
    CK_INV_INJ1,
    CK_INV_INJ2,
    CK_FORM_IDEM,
    CK_FORM_NEG,
    CK_EXTRACT_ROUNDTRIP,
    CK_BUILD_ROUNDTRIP,
    CK_COUNT,
};

constexpr const char* kCheckNames[CK_COUNT] = {
    "fi1",
    "fi2",
    "fi3_zero",
    "naturality",
    "fi3",
    "inverse_left",
    "inverse_right",
    "inverse_inj1",
    "inverse_inj2",
    "inverse_form_idempotent",
    "inverse_form_negatives",
    "extract_roundtrip",
    "build_roundtrip",
};

struct Family {
    std::string provenance;
    bool applicable = false;
    std::string note;
    std::vector<std::optional<Mor>> at;

    int defined_count() const {
        int k = 0;
        for (const auto& c : at)
            if (c) ++k;
        return k;
    }
};

Counterexample ce(std::string check, std::vector<Obj> objs, std::vector<Mor> mors,
                  std::string note = {}) {
    return Counterexample{std::move(check), std::move(objs), std::move(mors), std::move(note)};
}

} // namespace

HopfReport verify_hopf(const Monad& m, const SamplePlan& plan, const HopfOptions& opts) {
    const Category& cat = *m.base;
    const std::vector<Obj> objs = plan_objects(cat, plan);
    const std::size_t n = objs.size();
    const Obj zero = cat.zero_object();

    HopfReport report;
    report.seed = plan.seed;

    const IdempotenceResult idem = is_idempotent(m, plan);
    report.idempotent = idem.value;
    if (!idem.value && idem.witness) report.idempotent_witness = cat.obj_label(*idem.witness);

    const bool negs = cat.has_negatives();
    const Strategy strat = opts.strategy;
    auto want = [&](Strategy s) { return strat == Strategy::automatic || strat == s; };

    // ---- assemble candidate families ----
    std::vector<Family> families;

    if (want(Strategy::idempotent_form)) {
        Family fam;
        fam.provenance = "idempotent_form";
        fam.applicable = strat == Strategy::idempotent_form || idem.value;
        fam.note = fam.applicable ? "" : "monad is not idempotent on this plan";
        fam.at.resize(n);
        if (fam.applicable)
            for (std::size_t i = 0; i < n; ++i) fam.at[i] = idempotent_invertor(m, objs[i]);
        families.push_back(std::move(fam));
    }
    if (want(Strategy::negatives_form)) {
        Family fam;
        fam.provenance = "negatives_form";
        fam.applicable = negs;
        fam.note = negs ? "" : "category has no negatives";
        fam.at.resize(n);
        if (negs)
            for (std::size_t i = 0; i < n; ++i) fam.at[i] = negatives_invertor(m, objs[i]);
        families.push_back(std::move(fam));
    }
    if (want(Strategy::representable)) {
        Family fam;
        fam.provenance = "representable";
        fam.applicable = m.representable_h.has_value() && negs;
        fam.note = fam.applicable ? ""
                   : m.representable_h ? "category has no negatives"
                                       : "monad is not representable-tagged";
        fam.at.resize(n);
        if (fam.applicable)
            for (std::size_t i = 0; i < n; ++i)
                fam.at[i] = representable_invertor(cat, *m.representable_h, objs[i]);
        families.push_back(std::move(fam));
    }
    if (want(Strategy::search)) {
        Family fam;
        fam.provenance = "searched";
        fam.applicable = true;
        fam.at.resize(n);
        SearchReport sr;
        sr.bound = opts.search_bound;
        sr.cap = opts.search_cap;
        for (std::size_t i = 0; i < n; ++i) {
            SearchObjectOutcome so;
            so.object = cat.obj_label(objs[i]);
            try {
                const SearchResult r =
                    search_invertor(m, objs[i], opts.search_bound, opts.search_cap, opts.jobs);
                so.complete = r.complete;
                so.space_size = r.space_size;
                if (r.found) {
                    so.outcome = "found";
                    fam.at[i] = r.found;
                } else {
                    so.outcome = "none";
                }
            } catch (const SearchSpaceTooLarge&) {
                so.outcome = "skipped_too_large";
            }
            sr.per_object.push_back(std::move(so));
        }
        fam.note = "bounded search, entry bound " + std::to_string(opts.search_bound);
        report.search = std::move(sr);
        families.push_back(std::move(fam));
    }
    if (strat == Strategy::user) {
        Family fam;
        fam.provenance = "user";
        fam.applicable = opts.user_candidate.has_value();
        fam.note = fam.applicable ? "" : "no user candidate supplied";
        fam.at.resize(n);
        if (opts.user_candidate)
            for (std::size_t i = 0; i < n; ++i) fam.at[i] = opts.user_candidate->at(objs[i]);
        families.push_back(std::move(fam));
    }

    // ---- run the battery per (family, object) slot ----
    const std::size_t nfam = families.size();
    std::vector<std::vector<CheckStat>> slot_stats(nfam * n, std::vector<CheckStat>(CK_COUNT));

    parallel_for(nfam * n, opts.jobs, [&](std::size_t slot) {
        const std::size_t fi = slot / n;
        const std::size_t ia = slot % n;
        const Family& fam = families[fi];
        if (!fam.at[ia]) return;
        const Mor& cand = *fam.at[ia];
        const Obj& a = objs[ia];
        std::vector<CheckStat>& st = slot_stats[slot];
        for (int c = 0; c < CK_COUNT; ++c) st[c].name = kCheckNames[c];

        const InvertorAxioms ax(m, a);
        st[CK_FI1].record(ax.fi1(cand), [&] { return ce("fi1", {a}, {cand}); });
        st[CK_FI2].record(ax.fi2(cand), [&] { return ce("fi2", {a}, {cand}); });
        st[CK_FI3_ZERO].record(ax.fi3_zero(cand), [&] { return ce("fi3_zero", {a}, {cand}); });

        // candidate naturality against every defined A'
        for (std::size_t ja = 0; ja < n; ++ja) {
            if (!fam.at[ja]) continue;
            for (int s = 0; s < plan.morphism_samples; ++s) {
                const Mor f = plan_morphism(cat, plan, ia, a, ja, objs[ja], s);
                const Mor lhs = cat.compose(
                    m.map_morphism(oplus_mor(f, cat.identity(t_zero_object(m)))), cand);
                const Mor rhs = cat.compose(*fam.at[ja], m.map_morphism(f));
                st[CK_NATURALITY].record(cat.mor_eq(lhs, rhs), [&] {
                    return ce("naturality", {a, objs[ja]}, {cand, f});
                });
            }
        }

        // inverse at (A, 0), needed by the decomposition squares & roundtrips
        const Mor hinv_a0 = build_inverse(m, cand, a, zero);
        const Mor h_a0 = fusion_operator(m, a, zero);
        const bool a0_ok = cat.mor_eq(cat.compose(hinv_a0, h_a0), cat.identity(h_a0.dom)) &&
                           cat.mor_eq(cat.compose(h_a0, hinv_a0), cat.identity(h_a0.cod));

        if (a0_ok) {
            const Biproduct p0 = cat.biproduct(m.map_object(a), t_zero_object(m));
            const Mor extracted = cat.compose(hinv_a0, p0.inj1);
            st[CK_EXTRACT_ROUNDTRIP].record(cat.mor_eq(extracted, cand), [&] {
                return ce("extract_roundtrip", {a}, {cand, extracted});
            });
        }

        for (std::size_t ib = 0; ib < n; ++ib) {
            const Obj& b = objs[ib];
            st[CK_FI3].record(check_fi3(m, cand, a, b), [&] { return ce("fi3", {a, b}, {cand}); });

            const Mor h = fusion_operator(m, a, b);
            const Mor hinv = build_inverse(m, cand, a, b);
            const bool left = cat.mor_eq(cat.compose(hinv, h), cat.identity(h.dom));
            const bool right = cat.mor_eq(cat.compose(h, hinv), cat.identity(h.cod));
            st[CK_INV_LEFT].record(left, [&] { return ce("inverse_left", {a, b}, {cand, hinv}); });
            st[CK_INV_RIGHT].record(right, [&] { return ce("inverse_right", {a, b}, {cand, hinv}); });

            if (left && right && a0_ok) {
                const Obj tb = m.map_object(b);
                const Biproduct p = cat.biproduct(m.map_object(a), tb);
                const Biproduct p0 = cat.biproduct(m.map_object(a), t_zero_object(m));
                const Biproduct wb = cat.biproduct(a, tb);
                const bool sq1 = cat.mor_eq(
                    cat.compose(hinv, p.inj1),
                    cat.compose(lift_zero_to(m, a, b), cat.compose(hinv_a0, p0.inj1)));
                const bool sq2 = cat.mor_eq(cat.compose(hinv, p.inj2),
                                            cat.compose(m.map_morphism(wb.inj2), m.eta(tb)));
                st[CK_INV_INJ1].record(sq1, [&] { return ce("inverse_inj1", {a, b}, {cand, hinv}); });
                st[CK_INV_INJ2].record(sq2, [&] { return ce("inverse_inj2", {a, b}, {cand, hinv}); });

                if (idem.value)
                    st[CK_FORM_IDEM].record(cat.mor_eq(hinv, inverse_form_idempotent(m, a, b)),
                                            [&] { return ce("inverse_form_idempotent", {a, b}, {hinv}); });
                if (negs)
                    st[CK_FORM_NEG].record(cat.mor_eq(hinv, inverse_form_negatives(m, a, b)),
                                           [&] { return ce("inverse_form_negatives", {a, b}, {hinv}); });

                const Mor extracted = cat.compose(hinv_a0, cat.biproduct(m.map_object(a), t_zero_object(m)).inj1);
                st[CK_BUILD_ROUNDTRIP].record(
                    cat.mor_eq(build_inverse(m, extracted, a, b), hinv),
                    [&] { return ce("build_roundtrip", {a, b}, {extracted, hinv}); });
            }
        }
    });

    // ---- merge slots into candidate reports ----
    for (std::size_t fi = 0; fi < nfam; ++fi) {
        const Family& fam = families[fi];
        CandidateReport cr;
        cr.provenance = fam.provenance;
        cr.applicable = fam.applicable;
        cr.note = fam.note;
        cr.defined_count = fam.defined_count();
        cr.object_count = static_cast<int>(n);
        for (int c = 0; c < CK_COUNT; ++c) {
            CheckStat merged;
            merged.name = kCheckNames[c];
            for (std::size_t ia = 0; ia < n; ++ia) merged.merge(slot_stats[fi * n + ia][c]);
            cr.checks.push_back(std::move(merged));
        }
        report.candidates.push_back(std::move(cr));
    }

    // ---- shortcuts ----
    {
        ShortcutReport sc;
        sc.name = "shortcut_idempotent";
        sc.applicable = idem.value;
        sc.note = idem.value ? "" : "monad is not idempotent on this plan";
        sc.stat.name = sc.name;
        if (sc.applicable)
            for (std::size_t ia = 0; ia < n; ++ia)
                for (std::size_t ib = 0; ib < n; ++ib)
                    sc.stat.record(shortcut_idempotent(m, objs[ia], objs[ib]), [&] {
                        return ce("shortcut_idempotent", {objs[ia], objs[ib]}, {});
                    });
        report.shortcuts.push_back(std::move(sc));
    }
    {
        ShortcutReport sc;
        sc.name = "shortcut_negatives";
        sc.applicable = negs;
        sc.note = negs ? "" : "category has no negatives";
        sc.stat.name = sc.name;
        if (sc.applicable)
            for (std::size_t ia = 0; ia < n; ++ia)
                for (std::size_t ib = 0; ib < n; ++ib)
                    sc.stat.record(shortcut_negatives(m, objs[ia], objs[ib]), [&] {
                        return ce("shortcut_negatives", {objs[ia], objs[ib]}, {});
                    });
        report.shortcuts.push_back(std::move(sc));
    }

    // ---- uniqueness across passing families (plus an extracted family) ----
    std::vector<const Family*> passing;
    std::vector<std::size_t> passing_idx;
    for (std::size_t fi = 0; fi < nfam; ++fi) {
        const CandidateReport& cr = report.candidates[fi];
        if (cr.ran() && cr.all_checks_passed()) {
            passing.push_back(&families[fi]);
            passing_idx.push_back(fi);
        }
    }
    Family extracted_family;
    for (std::size_t k = 0; k < passing.size(); ++k) {
        if (!report.candidates[passing_idx[k]].passed_fully()) continue;
        const Family& src = *passing[k];
        extracted_family.provenance = "extracted";
        extracted_family.applicable = true;
        extracted_family.at.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            extracted_family.at[i] =
                extract_invertor(m, objs[i], build_inverse(m, *src.at[i], objs[i], zero));
        passing.push_back(&extracted_family);
        break;
    }
    for (std::size_t x = 0; x < passing.size(); ++x)
        for (std::size_t y = x + 1; y < passing.size(); ++y) {
            CheckStat u;
            u.name = "uniqueness:" + passing[x]->provenance + "|" + passing[y]->provenance;
            for (std::size_t ia = 0; ia < n; ++ia) {
                if (!passing[x]->at[ia] || !passing[y]->at[ia]) continue;
                const Mor& ca = *passing[x]->at[ia];
                const Mor& cb = *passing[y]->at[ia];
                u.record(cat.mor_eq(ca, cb), [&] { return ce(u.name, {objs[ia]}, {ca, cb}); });
            }
            report.uniqueness.push_back(std::move(u));
        }

    // ---- verdict ----
    bool any_failure = false;
    for (const auto& cr : report.candidates)
        for (const auto& s : cr.checks) any_failure = any_failure || !s.passed();
    for (const auto& sc : report.shortcuts) any_failure = any_failure || !sc.stat.passed();
    for (const auto& u : report.uniqueness) any_failure = any_failure || !u.passed();

    std::vector<std::string> disproofs;
    auto family_failed = [&](const std::string& prov) {
        for (const auto& cr : report.candidates)
            if (cr.provenance == prov && cr.ran() && !cr.all_checks_passed()) return true;
        return false;
    };
    if (negs && family_failed("negatives_form"))
        disproofs.push_back("the negatives-form invertor (forced for every Hopf monad here) fails");
    if (idem.value && family_failed("idempotent_form"))
        disproofs.push_back("the idempotent-form invertor (forced for idempotent Hopf monads) fails");
    if (report.search)
        for (std::size_t i = 0; i < report.search->per_object.size(); ++i) {
            const auto& so = report.search->per_object[i];
            if (so.outcome == "none" && so.complete) {
                disproofs.push_back("exhaustive search over the full hom-set at " + so.object +
                                    " found no invertor");
                report.counterexamples.push_back(
                    ce("search_exhausted", {objs[i]}, {},
                       "the complete hom-set (" + std::to_string(so.space_size) +
                           " morphisms) contains no invertor at " + so.object));
            }
        }
    for (const auto& sc : report.shortcuts)
        if (sc.applicable && !sc.stat.passed()) disproofs.push_back(sc.name + " identity fails");

    bool any_full_pass = false;
    for (const auto& cr : report.candidates) any_full_pass = any_full_pass || cr.passed_fully();

    if (!disproofs.empty()) {
        report.verdict = Verdict::refuted;
        report.reason = disproofs.front();
        for (std::size_t i = 1; i < disproofs.size(); ++i) report.reason += "; " + disproofs[i];
    } else if (!any_failure && any_full_pass) {
        report.verdict = Verdict::verified_hopf;
        report.reason = "all checks passed on the sampled plan";
    } else {
        report.verdict = Verdict::inconclusive;
        if (report.search) {
            bool truncated = false;
            for (const auto& so : report.search->per_object)
                if (so.outcome == "skipped_too_large" || (so.outcome == "none" && !so.complete))
                    truncated = true;
            if (truncated) {
                report.reason = "bounded search (entry bound " +
                                std::to_string(report.search->bound) +
                                ") found no invertor; the hom-sets were not exhausted, so "
                                "existence beyond the bound is undecided";
            }
        }
        if (report.reason.empty())
            report.reason = any_failure
                                ? "a candidate failed its checks, which does not disprove the "
                                  "Hopf property for this strategy"
                                : "no applicable candidate strategy covered the plan";
    }

    // ---- counterexamples, in report order ----
    for (const auto& cr : report.candidates)
        for (const auto& s : cr.checks)
            if (s.first_failure) report.counterexamples.push_back(*s.first_failure);
    for (const auto& sc : report.shortcuts)
        if (sc.stat.first_failure) report.counterexamples.push_back(*sc.stat.first_failure);
    for (const auto& u : report.uniqueness)
        if (u.first_failure) report.counterexamples.push_back(*u.first_failure);

    return report;
}

} // namespace hopf
