#include "hopf/semiring.hpp"

#include <stdexcept>

namespace hopf {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
    const std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

} // namespace

Semiring Semiring::nat() {
    Semiring s;
    s.name_ = "NAT";
    s.kind_ = Kind::nat;
    s.is_ring_ = false;
    s.samples_ = {0, 1, 2, 3};
    return s;
}

Semiring Semiring::integers() {
    Semiring s;
    s.name_ = "INT";
    s.kind_ = Kind::integers;
    s.is_ring_ = true;
    s.samples_ = {-3, -2, -1, 0, 1, 2, 3};
    return s;
}

Semiring Semiring::mod(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("Semiring::mod requires modulus >= 2");
    Semiring s;
    s.name_ = "MOD(" + std::to_string(n) + ")";
    s.kind_ = Kind::mod;
    s.modulus_ = n;
    s.is_ring_ = true;
    for (std::int64_t x = 0; x < n && x < 8; ++x) s.samples_.push_back(x);
    if (n > 8) s.samples_.push_back(n - 1);
    return s;
}

Semiring Semiring::boolean() {
    Semiring s;
    s.name_ = "BOOL";
    s.kind_ = Kind::boolean;
    s.is_ring_ = false; // 1 has no additive inverse under OR
    s.samples_ = {0, 1};
    return s;
}

Semiring Semiring::custom(CustomOps ops) {
    Semiring s;
    s.name_ = ops.name;
    s.kind_ = Kind::custom;
    s.is_ring_ = ops.is_ring;
    s.samples_ = ops.sample_elements;
    s.custom_ = std::move(ops);
    return s;
}

std::int64_t Semiring::one() const {
    return 1;
}

std::int64_t Semiring::add(std::int64_t a, std::int64_t b) const {
    switch (kind_) {
        case Kind::nat:
        case Kind::integers: return a + b;
        case Kind::mod: return floor_mod(a + b, modulus_);
        case Kind::boolean: return (a != 0 || b != 0) ? 1 : 0;
        case Kind::custom: return custom_.add(a, b);
    }
    return 0;
}

std::int64_t Semiring::mul(std::int64_t a, std::int64_t b) const {
    switch (kind_) {
        case Kind::nat:
        case Kind::integers: return a * b;
        case Kind::mod: return floor_mod(a * b, modulus_);
        case Kind::boolean: return (a != 0 && b != 0) ? 1 : 0;
        case Kind::custom: return custom_.mul(a, b);
    }
    return 0;
}

std::int64_t Semiring::neg(std::int64_t a) const {
    switch (kind_) {
        case Kind::integers: return -a;
        case Kind::mod: return floor_mod(-a, modulus_);
        case Kind::custom:
            if (custom_.neg) return custom_.neg(a);
            break;
        default: break;
    }
    throw std::logic_error("semiring " + name_ + " has no negation");
}

std::int64_t Semiring::normalize(std::int64_t a) const {
    switch (kind_) {
        case Kind::nat:
        case Kind::integers: return a;
        case Kind::mod: return floor_mod(a, modulus_);
        case Kind::boolean: return a != 0 ? 1 : 0;
        case Kind::custom: return custom_.normalize ? custom_.normalize(a) : a;
    }
    return a;
}

bool Semiring::is_element(std::int64_t a) const {
    switch (kind_) {
        case Kind::nat: return a >= 0;
        case Kind::integers: return true;
        case Kind::mod: return a >= 0 && a < modulus_;
        case Kind::boolean: return a == 0 || a == 1;
        case Kind::custom: return normalize(a) == a;
    }
    return false;
}

std::vector<std::int64_t> Semiring::enumeration_values(std::int64_t bound, bool& complete) const {
    std::vector<std::int64_t> out;
    switch (kind_) {
        case Kind::nat:
            complete = false;
            for (std::int64_t v = 0; v <= bound; ++v) out.push_back(v);
            break;
        case Kind::integers:
            complete = false;
            out.push_back(0);
            for (std::int64_t v = 1; v <= bound; ++v) {
                out.push_back(v);
                out.push_back(-v);
            }
            break;
        case Kind::mod:
            complete = true;
            for (std::int64_t v = 0; v < modulus_; ++v) out.push_back(v);
            break;
        case Kind::boolean:
            complete = true;
            out = {0, 1};
            break;
        case Kind::custom:
            // Enumerate the declared sample carrier; honest only for finite
            // custom semirings, so report the space as truncated.
            complete = false;
            out = samples_;
            break;
    }
    return out;
}

std::optional<std::string> Semiring::validate() const {
    const auto& xs = samples_;
    if (xs.empty()) return "semiring has no sample elements";
    for (std::int64_t x : xs) {
        if (!is_element(x)) return "sample element not in canonical form";
        if (add(x, 0) != x) return "zero is not an additive unit";
        if (mul(x, 1) != x) return "one is not a multiplicative unit";
        if (mul(x, 0) != 0) return "zero does not absorb multiplication";
        if (is_ring_ && add(x, neg(x)) != 0) return "negation is not an additive inverse";
        for (std::int64_t y : xs) {
            if (add(x, y) != add(y, x)) return "addition is not commutative";
            if (mul(x, y) != mul(y, x)) return "multiplication is not commutative";
            for (std::int64_t z : xs) {
                if (add(add(x, y), z) != add(x, add(y, z))) return "addition is not associative";
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    return "multiplication is not associative";
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
                    return "multiplication does not distribute over addition";
            }
        }
    }
    return std::nullopt;
}

} // namespace hopf
