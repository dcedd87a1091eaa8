#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopf/fusion.hpp"

namespace hopf {

// Object description used for representable H; shape depends on the
// category kind (mat: dim, fgab: orders, product: pair).
struct ObjectSpec {
    int dim = 0;
    std::vector<std::int64_t> orders;
    std::shared_ptr<ObjectSpec> first, second;
};

struct CategorySpec {
    std::string kind;     // mat | fgab | product
    std::string semiring; // mat: NAT | INT | BOOL | MOD
    std::int64_t modulus = 0;
    std::shared_ptr<CategorySpec> first, second; // product factors
};

struct MonadSpec {
    std::string kind; // identity | representable | cyclic_tensor | zero | product
    ObjectSpec h;
    std::int64_t n = 0;
    std::shared_ptr<MonadSpec> first, second; // product components
};

struct PlanSpec {
    int max_dim = 3;
    std::vector<std::int64_t> fgab_orders = {0, 2, 3, 4};
    int max_generators = 2;
    int morphism_samples = 8;
    std::uint64_t seed = 0;
};

// A fully validated run configuration. Identical configs (seed included)
// produce identical runs; worker count is deliberately not part of it.
struct RunConfig {
    CategorySpec category;
    MonadSpec monad;
    PlanSpec plan;
    std::string strategy = "auto"; // auto | idempotent_form | negatives_form |
                                   // representable | search
    std::int64_t search_bound = 3;
    std::uint64_t search_cap = 1ull << 25;
    std::string format = "json"; // json | text
    std::string corruption = "none"; // none | mu_zero | mu_pi_swap (test hooks)
};

// Parses and validates a JSON configuration document. Throws ConfigError
// with the offending field path on any schema or cross-field violation.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_json(const nlohmann::json& doc);

// Normalized echo with every default materialized; parse_config_json of the
// result reproduces the config.
nlohmann::json config_to_json(const RunConfig& cfg);

// Whether the configured category has additive inverses (decidable from the
// description alone, used for parse-time strategy validation).
bool category_spec_has_negatives(const CategorySpec& spec);

SamplePlan plan_from_spec(const PlanSpec& spec);
Strategy strategy_from_string(const std::string& name);

} // namespace hopf
