#include "hopf/config.hpp"

#include <set>

namespace hopf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a JSON object");
}

void reject_unknown_keys(const json& j, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) fail(path + "." + item.key(), "unknown field");
}

std::int64_t get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

ObjectSpec parse_object_spec(const json& j, const std::string& path, const CategorySpec& cat) {
    ObjectSpec spec;
    require_object(j, path);
    if (cat.kind == "mat") {
        reject_unknown_keys(j, path, {"dim"});
        if (!j.contains("dim")) fail(path + ".dim", "required for mat objects");
        const std::int64_t d = get_int(j.at("dim"), path + ".dim");
        if (d < 0) fail(path + ".dim", "must be >= 0");
        spec.dim = static_cast<int>(d);
    } else if (cat.kind == "fgab") {
        reject_unknown_keys(j, path, {"orders"});
        if (!j.contains("orders") || !j.at("orders").is_array())
            fail(path + ".orders", "required array for fgab objects");
        for (const auto& o : j.at("orders")) {
            const std::int64_t d = get_int(o, path + ".orders[]");
            if (d == 1 || d < 0) fail(path + ".orders[]", "orders must be 0 or >= 2");
            spec.orders.push_back(d);
        }
    } else { // product
        reject_unknown_keys(j, path, {"first", "second"});
        if (!j.contains("first") || !j.contains("second"))
            fail(path, "product objects need first and second");
        spec.first = std::make_shared<ObjectSpec>(
            parse_object_spec(j.at("first"), path + ".first", *cat.first));
        spec.second = std::make_shared<ObjectSpec>(
            parse_object_spec(j.at("second"), path + ".second", *cat.second));
    }
    return spec;
}

CategorySpec parse_category_spec(const json& j, const std::string& path) {
    CategorySpec spec;
    require_object(j, path);
    if (!j.contains("kind")) fail(path + ".kind", "required");
    spec.kind = get_string(j.at("kind"), path + ".kind");
    if (spec.kind == "mat") {
        reject_unknown_keys(j, path, {"kind", "semiring", "modulus"});
        if (!j.contains("semiring")) fail(path + ".semiring", "required for mat categories");
        spec.semiring = get_string(j.at("semiring"), path + ".semiring");
        if (spec.semiring != "NAT" && spec.semiring != "INT" && spec.semiring != "BOOL" &&
            spec.semiring != "MOD")
            fail(path + ".semiring", "must be one of NAT, INT, BOOL, MOD");
        if (spec.semiring == "MOD") {
            if (!j.contains("modulus")) fail(path + ".modulus", "required for MOD");
            spec.modulus = get_int(j.at("modulus"), path + ".modulus");
            if (spec.modulus < 2) fail(path + ".modulus", "must be >= 2");
        } else if (j.contains("modulus")) {
            fail(path + ".modulus", "only valid with semiring MOD");
        }
    } else if (spec.kind == "fgab") {
        reject_unknown_keys(j, path, {"kind"});
    } else if (spec.kind == "product") {
        reject_unknown_keys(j, path, {"kind", "first", "second"});
        if (!j.contains("first") || !j.contains("second"))
            fail(path, "product categories need first and second");
        spec.first =
            std::make_shared<CategorySpec>(parse_category_spec(j.at("first"), path + ".first"));
        spec.second =
            std::make_shared<CategorySpec>(parse_category_spec(j.at("second"), path + ".second"));
    } else {
        fail(path + ".kind", "must be one of mat, fgab, product");
    }
    return spec;
}

MonadSpec parse_monad_spec(const json& j, const std::string& path, const CategorySpec& cat) {
    MonadSpec spec;
    require_object(j, path);
    if (!j.contains("kind")) fail(path + ".kind", "required");
    spec.kind = get_string(j.at("kind"), path + ".kind");
    if (spec.kind == "identity" || spec.kind == "zero") {
        reject_unknown_keys(j, path, {"kind"});
    } else if (spec.kind == "representable") {
        reject_unknown_keys(j, path, {"kind", "h"});
        if (!j.contains("h")) fail(path + ".h", "required for representable monads");
        spec.h = parse_object_spec(j.at("h"), path + ".h", cat);
    } else if (spec.kind == "cyclic_tensor") {
        reject_unknown_keys(j, path, {"kind", "n"});
        if (cat.kind != "fgab")
            fail(path + ".kind", "cyclic_tensor is only defined over the fgab category");
        if (!j.contains("n")) fail(path + ".n", "required for cyclic_tensor");
        spec.n = get_int(j.at("n"), path + ".n");
        if (spec.n < 2) fail(path + ".n", "must be >= 2");
    } else if (spec.kind == "product") {
        reject_unknown_keys(j, path, {"kind", "first", "second"});
        if (cat.kind != "product")
            fail(path + ".kind", "product monads are only defined over product categories");
        if (!j.contains("first") || !j.contains("second"))
            fail(path, "product monads need first and second");
        spec.first = std::make_shared<MonadSpec>(
            parse_monad_spec(j.at("first"), path + ".first", *cat.first));
        spec.second = std::make_shared<MonadSpec>(
            parse_monad_spec(j.at("second"), path + ".second", *cat.second));
    } else {
        fail(path + ".kind", "must be one of identity, representable, cyclic_tensor, zero, product");
    }
    return spec;
}

PlanSpec parse_plan_spec(const json& j, const std::string& path) {
    PlanSpec spec;
    require_object(j, path);
    reject_unknown_keys(
        j, path, {"max_dim", "fgab_orders", "max_generators", "morphism_samples", "seed"});
    if (j.contains("max_dim")) {
        const std::int64_t v = get_int(j.at("max_dim"), path + ".max_dim");
        if (v < 0) fail(path + ".max_dim", "must be >= 0");
        spec.max_dim = static_cast<int>(v);
    }
    if (j.contains("fgab_orders")) {
        if (!j.at("fgab_orders").is_array()) fail(path + ".fgab_orders", "expected an array");
        spec.fgab_orders.clear();
        for (const auto& o : j.at("fgab_orders")) {
            const std::int64_t d = get_int(o, path + ".fgab_orders[]");
            if (d == 1 || d < 0) fail(path + ".fgab_orders[]", "orders must be 0 or >= 2");
            spec.fgab_orders.push_back(d);
        }
        if (spec.fgab_orders.empty()) fail(path + ".fgab_orders", "must not be empty");
    }
    if (j.contains("max_generators")) {
        const std::int64_t v = get_int(j.at("max_generators"), path + ".max_generators");
        if (v < 0) fail(path + ".max_generators", "must be >= 0");
        spec.max_generators = static_cast<int>(v);
    }
    if (j.contains("morphism_samples")) {
        const std::int64_t v = get_int(j.at("morphism_samples"), path + ".morphism_samples");
        if (v < 1) fail(path + ".morphism_samples", "must be >= 1");
        spec.morphism_samples = static_cast<int>(v);
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            fail(path + ".seed", "expected an integer");
        spec.seed = j.at("seed").get<std::uint64_t>();
    }
    return spec;
}

} // namespace

bool category_spec_has_negatives(const CategorySpec& spec) {
    if (spec.kind == "mat") return spec.semiring == "INT" || spec.semiring == "MOD";
    if (spec.kind == "fgab") return true;
    return category_spec_has_negatives(*spec.first) && category_spec_has_negatives(*spec.second);
}

RunConfig parse_config_json(const nlohmann::json& doc) {
    require_object(doc, "config");
    reject_unknown_keys(doc, "config",
                        {"category", "monad", "plan", "strategy", "search_bound", "search_cap",
                         "format", "corruption"});
    RunConfig cfg;
    if (!doc.contains("category")) fail("config.category", "required");
    cfg.category = parse_category_spec(doc.at("category"), "config.category");
    if (!doc.contains("monad")) fail("config.monad", "required");
    cfg.monad = parse_monad_spec(doc.at("monad"), "config.monad", cfg.category);
    if (doc.contains("plan")) cfg.plan = parse_plan_spec(doc.at("plan"), "config.plan");
    if (doc.contains("strategy")) {
        cfg.strategy = get_string(doc.at("strategy"), "config.strategy");
        static const std::set<std::string> kStrategies = {"auto", "idempotent_form",
                                                          "negatives_form", "representable",
                                                          "search"};
        if (!kStrategies.count(cfg.strategy))
            fail("config.strategy",
                 "must be one of auto, idempotent_form, negatives_form, representable, search");
        if (cfg.strategy == "negatives_form" && !category_spec_has_negatives(cfg.category))
            fail("config.strategy", "negatives_form needs a category with negatives");
        if (cfg.strategy == "representable" && cfg.monad.kind != "representable")
            fail("config.strategy", "representable strategy needs a representable monad");
        if (cfg.strategy == "representable" && !category_spec_has_negatives(cfg.category))
            fail("config.strategy", "representable strategy needs a category with negatives");
    }
    if (doc.contains("search_bound")) {
        cfg.search_bound = get_int(doc.at("search_bound"), "config.search_bound");
        if (cfg.search_bound < 0) fail("config.search_bound", "must be >= 0");
    }
    if (doc.contains("search_cap")) {
        const std::int64_t v = get_int(doc.at("search_cap"), "config.search_cap");
        if (v < 1) fail("config.search_cap", "must be >= 1");
        cfg.search_cap = static_cast<std::uint64_t>(v);
    }
    if (doc.contains("format")) {
        cfg.format = get_string(doc.at("format"), "config.format");
        if (cfg.format != "json" && cfg.format != "text")
            fail("config.format", "must be json or text");
    }
    if (doc.contains("corruption")) {
        cfg.corruption = get_string(doc.at("corruption"), "config.corruption");
        if (cfg.corruption != "none" && cfg.corruption != "mu_zero" &&
            cfg.corruption != "mu_pi_swap")
            fail("config.corruption", "must be one of none, mu_zero, mu_pi_swap");
        if (cfg.corruption == "mu_pi_swap" && cfg.monad.kind != "representable")
            fail("config.corruption", "mu_pi_swap only applies to representable monads");
    }
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config_json(doc);
}

namespace {

json object_spec_to_json(const ObjectSpec& spec, const CategorySpec& cat) {
    if (cat.kind == "mat") return json{{"dim", spec.dim}};
    if (cat.kind == "fgab") return json{{"orders", spec.orders}};
    return json{{"first", object_spec_to_json(*spec.first, *cat.first)},
                {"second", object_spec_to_json(*spec.second, *cat.second)}};
}

json category_spec_to_json(const CategorySpec& spec) {
    if (spec.kind == "mat") {
        json j{{"kind", "mat"}, {"semiring", spec.semiring}};
        if (spec.semiring == "MOD") j["modulus"] = spec.modulus;
        return j;
    }
    if (spec.kind == "fgab") return json{{"kind", "fgab"}};
    return json{{"kind", "product"},
                {"first", category_spec_to_json(*spec.first)},
                {"second", category_spec_to_json(*spec.second)}};
}

json monad_spec_to_json(const MonadSpec& spec, const CategorySpec& cat) {
    if (spec.kind == "representable")
        return json{{"kind", "representable"}, {"h", object_spec_to_json(spec.h, cat)}};
    if (spec.kind == "cyclic_tensor") return json{{"kind", "cyclic_tensor"}, {"n", spec.n}};
    if (spec.kind == "product")
        return json{{"kind", "product"},
                    {"first", monad_spec_to_json(*spec.first, *cat.first)},
                    {"second", monad_spec_to_json(*spec.second, *cat.second)}};
    return json{{"kind", spec.kind}};
}

} // namespace

nlohmann::json config_to_json(const RunConfig& cfg) {
    return json{{"category", category_spec_to_json(cfg.category)},
                {"monad", monad_spec_to_json(cfg.monad, cfg.category)},
                {"plan",
                 {{"max_dim", cfg.plan.max_dim},
                  {"fgab_orders", cfg.plan.fgab_orders},
                  {"max_generators", cfg.plan.max_generators},
                  {"morphism_samples", cfg.plan.morphism_samples},
                  {"seed", cfg.plan.seed}}},
                {"strategy", cfg.strategy},
                {"search_bound", cfg.search_bound},
                {"search_cap", cfg.search_cap},
                {"format", cfg.format},
                {"corruption", cfg.corruption}};
}

SamplePlan plan_from_spec(const PlanSpec& spec) {
    SamplePlan plan;
    plan.limits.max_dim = spec.max_dim;
    plan.limits.fgab_orders = spec.fgab_orders;
    plan.limits.max_generators = spec.max_generators;
    plan.morphism_samples = spec.morphism_samples;
    plan.seed = spec.seed;
    return plan;
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "auto") return Strategy::automatic;
    if (name == "idempotent_form") return Strategy::idempotent_form;
    if (name == "negatives_form") return Strategy::negatives_form;
    if (name == "representable") return Strategy::representable;
    if (name == "search") return Strategy::search;
    throw ConfigError("unknown strategy: " + name);
}

} // namespace hopf
