#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

// A commutative semiring on a subset of int64, with a canonical normal form
// per element so that equality is plain integer comparison. The built-in
// kinds dispatch through a switch; `custom` is the extension point for
// user-supplied structures and routes through std::function.
class Semiring {
  public:
    enum class Kind { nat, integers, mod, boolean, custom };

    static Semiring nat();
    static Semiring integers();
    static Semiring mod(std::int64_t n); // requires n >= 2
    static Semiring boolean();           // (or, and) on {0,1}

    struct CustomOps {
        std::string name;
        std::function<std::int64_t(std::int64_t, std::int64_t)> add;
        std::function<std::int64_t(std::int64_t, std::int64_t)> mul;
        std::function<std::int64_t(std::int64_t)> normalize; // canonical form
        std::function<std::int64_t(std::int64_t)> neg;       // required iff is_ring
        bool is_ring = false;
        std::vector<std::int64_t> sample_elements;
    };
    static Semiring custom(CustomOps ops);

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_ring() const { return is_ring_; }
    std::int64_t zero() const { return 0; }
    std::int64_t one() const;

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const; // only when is_ring
    std::int64_t normalize(std::int64_t a) const;
    bool is_element(std::int64_t a) const; // a already in canonical form?

    // Elements used for sampled axiom checks and random morphisms.
    const std::vector<std::int64_t>& sample_elements() const { return samples_; }

    // Candidate entry values for bounded hom-set enumeration, smallest
    // (by magnitude) first. Finite carriers ignore the bound and report
    // complete = true.
    std::vector<std::int64_t> enumeration_values(std::int64_t bound, bool& complete) const;

    // Checks the commutative-semiring axioms (and additive inverses when
    // is_ring) on all triples of sample elements. Returns a description of
    // the first violation, or nullopt when everything holds.
    std::optional<std::string> validate() const;

  private:
    Semiring() = default;

    std::string name_;
    Kind kind_ = Kind::integers;
    std::int64_t modulus_ = 0;
    bool is_ring_ = false;
    std::vector<std::int64_t> samples_;
    CustomOps custom_;
};

} // namespace hopf
