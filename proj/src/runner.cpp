#include "hopf/runner.hpp"

#include <sstream>

#include "hopf/mat_category.hpp"
#include "hopf/version.hpp"

namespace hopf {

namespace {

using nlohmann::json;

Category::Ptr build_category(const CategorySpec& spec) {
    if (spec.kind == "mat") {
        if (spec.semiring == "NAT") return mat_category(Semiring::nat());
        if (spec.semiring == "INT") return mat_category(Semiring::integers());
        if (spec.semiring == "BOOL") return mat_category(Semiring::boolean());
        return mat_category(Semiring::mod(spec.modulus));
    }
    if (spec.kind == "fgab") return fgab_category();
    return product_category(build_category(*spec.first), build_category(*spec.second));
}

Obj build_object(const ObjectSpec& spec, const Category::Ptr& cat) {
    if (auto mat = std::dynamic_pointer_cast<const MatCategory>(cat)) return mat->object(spec.dim);
    if (auto ab = std::dynamic_pointer_cast<const FgAbCategory>(cat)) return ab->object(spec.orders);
    auto prod = std::static_pointer_cast<const ProductCategory>(cat);
    return prod->object(build_object(*spec.first, prod->first()),
                        build_object(*spec.second, prod->second()));
}

Monad build_monad(const MonadSpec& spec, const CategorySpec& cat_spec, const Category::Ptr& cat) {
    if (spec.kind == "identity") return identity_monad(cat);
    if (spec.kind == "zero") return zero_monad(cat);
    if (spec.kind == "representable") return representable_monad(cat, build_object(spec.h, cat));
    if (spec.kind == "cyclic_tensor")
        return cyclic_tensor_monad(std::static_pointer_cast<const FgAbCategory>(cat), spec.n);
    // product: component monads over the factors; product_monad builds its
    // own product handle, which becomes the run's authoritative category.
    auto prod = std::static_pointer_cast<const ProductCategory>(cat);
    const Monad m1 = build_monad(*spec.first, *cat_spec.first, prod->first());
    const Monad m2 = build_monad(*spec.second, *cat_spec.second, prod->second());
    return product_monad(m1, m2);
}

} // namespace

BuiltInstance build_instance(const RunConfig& cfg) {
    Category::Ptr cat = build_category(cfg.category);
    Monad monad = build_monad(cfg.monad, cfg.category, cat);
    if (cfg.corruption == "mu_zero") monad = corrupt_mu_zero(std::move(monad));
    if (cfg.corruption == "mu_pi_swap") monad = corrupt_mu_swap_projection(std::move(monad));
    return BuiltInstance{monad.base, monad};
}

RunReport run(const RunConfig& cfg, int jobs) {
    RunReport report;
    report.config = cfg;

    const BuiltInstance inst = build_instance(cfg);
    const SamplePlan plan = plan_from_spec(cfg.plan);

    report.laws = check_monad_laws(inst.monad, plan, jobs);
    if (!report.laws.all_passed()) {
        report.exit_status = kStatusLawFailure;
        return report;
    }

    HopfOptions opts;
    opts.strategy = strategy_from_string(cfg.strategy);
    opts.search_bound = cfg.search_bound;
    opts.search_cap = cfg.search_cap;
    opts.jobs = jobs;
    report.hopf = verify_hopf(inst.monad, plan, opts);

    switch (report.hopf->verdict) {
        case Verdict::verified_hopf: report.exit_status = kStatusVerified; break;
        case Verdict::refuted: report.exit_status = kStatusRefuted; break;
        case Verdict::inconclusive: report.exit_status = kStatusInconclusive; break;
    }
    return report;
}

// --- serialization -----------------------------------------------------------

namespace {

json counterexample_to_json(const Counterexample& ce) {
    json objects = json::array();
    for (const Obj& o : ce.objects) objects.push_back(o.cat->obj_to_json(o));
    json morphisms = json::array();
    for (const Mor& f : ce.morphisms) morphisms.push_back(f.dom.cat->mor_to_json(f));
    json j{{"check", ce.check}, {"objects", objects}, {"morphisms", morphisms}};
    if (!ce.note.empty()) j["note"] = ce.note;
    return j;
}

json stat_to_json(const CheckStat& s) {
    json j{{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}};
    j["counterexample"] = s.first_failure ? counterexample_to_json(*s.first_failure) : json();
    return j;
}

json law_report_to_json(const LawReport& r) {
    json laws = json::array();
    for (const auto& s : r.laws) laws.push_back(stat_to_json(s));
    return json{{"all_passed", r.all_passed()},
                {"laws", laws},
                {"object_count", r.object_count},
                {"morphism_samples", r.morphism_samples},
                {"seed", r.seed}};
}

json hopf_report_to_json(const HopfReport& r) {
    json candidates = json::array();
    for (const auto& c : r.candidates) {
        json checks = json::array();
        for (const auto& s : c.checks) checks.push_back(stat_to_json(s));
        candidates.push_back(json{{"provenance", c.provenance},
                                  {"applicable", c.applicable},
                                  {"note", c.note},
                                  {"defined_objects", c.defined_count},
                                  {"plan_objects", c.object_count},
                                  {"passed", c.ran() && c.all_checks_passed()},
                                  {"checks", checks}});
    }
    json shortcuts = json::array();
    for (const auto& s : r.shortcuts)
        shortcuts.push_back(json{{"name", s.name},
                                 {"applicable", s.applicable},
                                 {"note", s.note},
                                 {"result", stat_to_json(s.stat)}});
    json uniqueness = json::array();
    for (const auto& u : r.uniqueness) uniqueness.push_back(stat_to_json(u));
    json counterexamples = json::array();
    for (const auto& ce : r.counterexamples) counterexamples.push_back(counterexample_to_json(ce));
    json j{{"verdict", to_string(r.verdict)},
           {"reason", r.reason},
           {"idempotent", r.idempotent},
           {"idempotent_witness", r.idempotent_witness},
           {"candidates", candidates},
           {"shortcuts", shortcuts},
           {"uniqueness", uniqueness},
           {"counterexamples", counterexamples},
           {"seed", r.seed}};
    if (r.search) {
        json per_object = json::array();
        for (const auto& so : r.search->per_object)
            per_object.push_back(json{{"object", so.object},
                                      {"outcome", so.outcome},
                                      {"complete", so.complete},
                                      {"space_size", so.space_size}});
        j["search"] = json{{"bound", r.search->bound},
                           {"cap", r.search->cap},
                           {"per_object", per_object}};
    } else {
        j["search"] = json();
    }
    return j;
}

} // namespace

nlohmann::json report_to_json(const RunReport& report) {
    json j{{"schema_version", kReportSchemaVersion},
           {"tool", kToolName},
           {"tool_version", kToolVersion},
           {"config", config_to_json(report.config)},
           {"monad_laws", law_report_to_json(report.laws)},
           {"exit_status", report.exit_status}};
    j["hopf"] = report.hopf ? hopf_report_to_json(*report.hopf) : json();
    return j;
}

namespace {

void print_stat_line(std::ostringstream& out, const CheckStat& s) {
    if (s.checked == 0) return;
    out << "    " << s.name << ": " << (s.failed == 0 ? "pass" : "FAIL") << " (" << s.checked
        << " checks";
    if (s.failed > 0) out << ", " << s.failed << " failures";
    out << ")\n";
}

} // namespace

std::string report_to_text(const RunReport& report) {
    std::ostringstream out;
    out << kToolName << " " << kToolVersion << "\n";
    out << "config: " << config_to_json(report.config).dump() << "\n\n";

    out << "monad laws: " << (report.laws.all_passed() ? "PASS" : "FAIL") << " ("
        << report.laws.object_count << " objects, " << report.laws.morphism_samples
        << " morphisms per hom-set, seed " << report.laws.seed << ")\n";
    for (const auto& s : report.laws.laws) print_stat_line(out, s);
    if (!report.laws.all_passed()) {
        for (const auto& s : report.laws.laws)
            if (s.first_failure)
                out << "    counterexample [" << s.name
                    << "]: " << counterexample_to_json(*s.first_failure).dump() << "\n";
        out << "\nexit status: " << report.exit_status << "\n";
        return out.str();
    }

    const HopfReport& h = *report.hopf;
    out << "\nhopf verdict: " << to_string(h.verdict) << "\n";
    out << "  reason: " << h.reason << "\n";
    out << "  idempotent: " << (h.idempotent ? "yes" : "no");
    if (!h.idempotent && !h.idempotent_witness.empty())
        out << " (witness " << h.idempotent_witness << ")";
    out << "\n";
    for (const auto& c : h.candidates) {
        out << "  candidate " << c.provenance << ": ";
        if (!c.applicable)
            out << "inapplicable (" << c.note << ")\n";
        else if (c.defined_count == 0)
            out << "undefined on the plan" << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
        else {
            out << (c.all_checks_passed() ? "pass" : "FAIL") << " [" << c.defined_count << "/"
                << c.object_count << " objects]\n";
            for (const auto& s : c.checks) print_stat_line(out, s);
        }
    }
    for (const auto& s : h.shortcuts) {
        out << "  " << s.name << ": ";
        if (!s.applicable)
            out << "inapplicable (" << s.note << ")\n";
        else
            out << (s.stat.passed() ? "pass" : "FAIL") << " (" << s.stat.checked << " pairs)\n";
    }
    for (const auto& u : h.uniqueness) print_stat_line(out, u);
    if (h.search) {
        out << "  search: bound " << h.search->bound << ", cap " << h.search->cap << "\n";
        for (const auto& so : h.search->per_object)
            out << "    at " << so.object << ": " << so.outcome
                << (so.complete ? " (complete)" : "") << "\n";
    }
    if (!h.counterexamples.empty()) {
        out << "  counterexamples:\n";
        for (const auto& ce : h.counterexamples)
            out << "    " << counterexample_to_json(ce).dump() << "\n";
    }
    out << "\nexit status: " << report.exit_status << "\n";
    return out.str();
}

std::string emit_report(const RunReport& report, const std::string& format) {
    if (format == "text") return report_to_text(report);
    return report_to_json(report).dump(2) + "\n";
}

} // namespace hopf
