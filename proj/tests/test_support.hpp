#pragma once

#include <vector>

#include "hopf/fgab.hpp"
#include "hopf/mat_category.hpp"
#include "hopf/product_category.hpp"

namespace hopf::test {

inline Mor mat_mor(const MatCategory& cat, int dom, int cod, std::vector<std::int64_t> entries) {
    return cat.mor(cat.object(dom), cat.object(cod), entries);
}

inline Mor fgab_mor(const FgAbCategory& cat, std::vector<std::int64_t> dom,
                    std::vector<std::int64_t> cod, std::vector<std::int64_t> entries) {
    return cat.mor(cat.object(dom), cat.object(cod), entries);
}

// Sampled morphisms for property-style checks.
inline std::vector<Mor> sample_homset(const Category& cat, const Obj& dom, const Obj& cod,
                                      int count, std::uint64_t seed) {
    std::vector<Mor> out;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) out.push_back(cat.random_mor(dom, cod, rng));
    return out;
}

} // namespace hopf::test
