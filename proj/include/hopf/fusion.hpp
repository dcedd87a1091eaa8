#pragma once

#include "hopf/monad.hpp"

namespace hopf {

// The fusion operator of a monad (T, mu, eta) on a category with finite
// biproducts is the natural family
//     h_{A,B} = inj1 . T(proj1) + inj2 . mu_B . T(proj2)
//              : T(A (+) T(B)) -> T(A) (+) T(B).
// The monad is a Hopf monad exactly when every h_{A,B} is invertible, and
// that happens exactly when the monad carries a fusion invertor: a natural
// family h°_A : T(A) -> T(A (+) T(0)) satisfying
//     FI.1    T(proj1) . h°_A = 1_T(A)
//     FI.2    mu_0 . T(proj2) . h°_A = 0
//     FI.3    T(1_A (+) T(0->B)) . h°_A . T(proj1)
//               + T(inj2) . eta_T(B) . mu_B . T(proj2) = 1_T(A (+) T(B))
// (FI.3 at B = 0 is written fi3_zero below). The inverse is then
//     h^-1_{A,B} = T(1_A (+) T(0->B)) . h°_A . proj1
//               + T(inj2) . eta_T(B) . proj2,
// and conversely h°_A = h^-1_{A,0} . inj1.

Mor fusion_operator(const Monad& m, const Obj& a, const Obj& b);

// T(0), the object the invertor codomain is built from.
Obj t_zero_object(const Monad& m);
// T(A (+) T(0)).
Obj invertor_codomain(const Monad& m, const Obj& a);

// Precomputed composites for checking FI.1 / FI.2 / FI.3-at-zero against many
// candidate morphisms at a fixed A (the bounded search hot path).
class InvertorAxioms {
  public:
    InvertorAxioms(const Monad& m, const Obj& a);

    bool fi1(const Mor& cand) const;
    bool fi2(const Mor& cand) const;
    bool fi3_zero(const Mor& cand) const;

    const Obj& domain() const { return ta_; }   // T(A)
    const Obj& codomain() const { return cod_; } // T(A (+) T(0))

  private:
    const Category* cat_;
    Obj ta_, cod_;
    Mor t_proj1_;     // T(proj1) : T(A (+) T(0)) -> T(A)
    Mor mu0_t_proj2_; // mu_0 . T(proj2) : T(A (+) T(0)) -> T(0)
    Mor fi30_fixed_;  // T(inj2) . eta_T(0) . mu_0 . T(proj2)
    Mor id_ta_, id_cod_, zero_ta_t0_;
};

bool check_fi1(const Monad& m, const Mor& cand_at_a, const Obj& a);
bool check_fi2(const Monad& m, const Mor& cand_at_a, const Obj& a);
bool check_fi3(const Monad& m, const Mor& cand_at_a, const Obj& a, const Obj& b);
bool check_fi3_zero(const Monad& m, const Mor& cand_at_a, const Obj& a);

// h^-1_{A,B} built from an invertor candidate at A (validity is not assumed;
// verify_two_sided decides it).
Mor build_inverse(const Monad& m, const Mor& cand_at_a, const Obj& a, const Obj& b);

// (h^-1 . h == 1, h . h^-1 == 1) for the inverse built from the candidate.
std::pair<bool, bool> verify_two_sided(const Monad& m, const Mor& cand_at_a, const Obj& a,
                                       const Obj& b);

// h^-1_{A,0} . inj1, the invertor recovered from an inverse at (A, 0).
// Throws NotInvertible unless inverse_at_a0 really is a two-sided inverse of
// fusion_operator(m, a, 0).
Mor extract_invertor(const Monad& m, const Obj& a, const Mor& inverse_at_a0);

// Both decomposition squares of a verified inverse:
//   h^-1_{A,B} . inj1 == T(1_A (+) T(0->B)) . h^-1_{A,0} . inj1
//   h^-1_{A,B} . inj2 == T(inj2) . eta_T(B)
// Throws NotInvertible unless the candidate yields verified inverses at
// (A,B) and (A,0).
std::pair<bool, bool> check_inverse_injections(const Monad& m, const Mor& cand_at_a, const Obj& a,
                                               const Obj& b);

// --- closed-form invertor candidates ---------------------------------------

// For T = H (+) - when 1_H has an additive inverse:
//   inj1 . proj1 + inj2 . proj2 + inj3 . (-1_H) . proj1
// (4-ary accessors on H (+) (A (+) (H (+) 0)); projections are those of
// H (+) A). The middle term must read proj2: the proj1 variant does not
// type-check against the A summand.
Mor representable_invertor(const Category& cat, const Obj& h, const Obj& a);

// T(inj1 : A -> A (+) T(0)). The invertor of every idempotent Hopf monad.
Mor idempotent_invertor(const Monad& m, const Obj& a);

// T(inj1) - T(inj2) . eta_T(0) . T(0 : A -> 0). The invertor of every Hopf
// monad when the category has negatives.
Mor negatives_invertor(const Monad& m, const Obj& a);

// Closed forms of the inverse itself, for cross-checking a verified inverse:
//   idempotent: T(inj1) . proj1 + T(inj2) . eta_T(B) . proj2
//   negatives:  T(inj1) . proj1 - T(inj2) . eta_T(B) . T(0:A->B) . proj1
//                 + T(inj2) . eta_T(B) . proj2
Mor inverse_form_idempotent(const Monad& m, const Obj& a, const Obj& b);
Mor inverse_form_negatives(const Monad& m, const Obj& a, const Obj& b);

// --- single-identity shortcuts ---------------------------------------------

// T(1_A (+) 0) + T(0 (+) 1_T(B)) == 1_T(A (+) T(B)). For an idempotent monad
// this identity over all pairs is equivalent to being Hopf.
bool shortcut_idempotent(const Monad& m, const Obj& a, const Obj& b);
// Same, but verifies idempotence on the plan first; throws
// PreconditionViolated when the monad is not idempotent.
bool shortcut_idempotent_checked(const Monad& m, const SamplePlan& plan, const Obj& a, const Obj& b);

// T(1_A (+) 0) + T(inj2) . eta_T(B) . mu_B . T(proj2)
//   - T(inj2) . eta_T(B) . T(0) == 1_T(A (+) T(B)).
// In a category with negatives this identity over all pairs is equivalent to
// being Hopf. Throws NegationUnsupported without negatives.
bool shortcut_negatives(const Monad& m, const Obj& a, const Obj& b);

// --- candidate families ------------------------------------------------------

// An A-indexed family of invertor candidates. `at` returns nullopt where the
// family is undefined (bounded searches may not cover every object).
struct InvertorCandidate {
    std::string provenance; // representable | idempotent_form | negatives_form |
                            // extracted | searched | user
    std::function<std::optional<Mor>(const Obj&)> at;
};

InvertorCandidate candidate_representable(const Monad& m); // requires tag + negatives
InvertorCandidate candidate_idempotent(const Monad& m);
InvertorCandidate candidate_negatives(const Monad& m); // requires negatives

// --- bounded exhaustive search ----------------------------------------------

struct SearchResult {
    std::optional<Mor> found; // first (lexicographically) morphism satisfying
                              // FI.1, FI.2 and FI.3-at-zero
    bool complete = false;    // enumeration covered the whole hom-set
    std::uint64_t space_size = 0;
};

// Enumerates hom(T(A), T(A (+) T(0))) with entries bounded by `bound`;
// throws SearchSpaceTooLarge when the space exceeds `cap`.
SearchResult search_invertor(const Monad& m, const Obj& a, std::int64_t bound, std::uint64_t cap,
                             int jobs = 1);

// --- full verification -------------------------------------------------------

enum class Verdict { verified_hopf, refuted, inconclusive };
std::string to_string(Verdict v);

enum class Strategy { automatic, idempotent_form, negatives_form, representable, search, user };
std::string to_string(Strategy s);

struct HopfOptions {
    Strategy strategy = Strategy::automatic;
    std::int64_t search_bound = 3;
    std::uint64_t search_cap = 1ull << 25;
    int jobs = 1;
    std::optional<InvertorCandidate> user_candidate;
};

struct CandidateReport {
    std::string provenance;
    bool applicable = false;
    std::string note;
    int defined_count = 0; // plan objects where at(A) exists
    int object_count = 0;
    std::vector<CheckStat> checks;

    bool ran() const { return applicable && defined_count > 0; }
    bool all_checks_passed() const;
    // Passed everywhere: defined at every plan object with zero failures.
    bool passed_fully() const { return applicable && defined_count == object_count && all_checks_passed(); }
};

struct ShortcutReport {
    std::string name;
    bool applicable = false;
    std::string note;
    CheckStat stat;
};

struct SearchObjectOutcome {
    std::string object;
    std::string outcome; // found | none | skipped_too_large
    bool complete = false;
    std::uint64_t space_size = 0;
};

struct SearchReport {
    std::int64_t bound = 0;
    std::uint64_t cap = 0;
    std::vector<SearchObjectOutcome> per_object;
};

struct HopfReport {
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
    bool idempotent = false;
    std::string idempotent_witness; // label of a failing A when not idempotent
    std::vector<CandidateReport> candidates;
    std::optional<SearchReport> search;
    std::vector<ShortcutReport> shortcuts;
    std::vector<CheckStat> uniqueness;
    std::vector<Counterexample> counterexamples; // first failure of each failing check
    std::uint64_t seed = 0;
};

// Runs the whole battery: candidate axioms FI.1/FI.2/FI.3 (+ the B = 0 form),
// candidate naturality, two-sided inverse verification, the inverse
// decomposition squares, closed-form inverse comparisons, applicable
// shortcuts, bounded search, and cross-candidate uniqueness. Monad laws are
// assumed to have been checked already.
HopfReport verify_hopf(const Monad& m, const SamplePlan& plan, const HopfOptions& opts = {});

} // namespace hopf
