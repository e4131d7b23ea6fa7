#pragma once

// The statement registry and verdict engine. Each spec encodes one
// statement about 3-prime near-rings with multiplicative derivations
// as structural preconditions, hypothesis identities, and a decidable
// conclusion. Verdicts:
//
//   Skipped  - a precondition or hypothesis fails, nothing to test
//   Verified - hypotheses hold and the conclusion holds
//   Refuted  - hypotheses hold and the conclusion fails (never
//              expected on a sound engine; always carries a witness)

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrlab/derivations.hpp"
#include "nrlab/identity.hpp"
#include "nrlab/near_ring.hpp"

namespace nrlab {

enum class Status { Skipped, Verified, Refuted };
const char* to_string(Status s);

// Named element bindings plus a free-text reason, e.g. x=1, y=2,
// "addition not abelian".
struct Witness {
    std::vector<std::pair<std::string, Element>> bindings;
    std::string note;
};

struct Verdict {
    std::string structure;
    std::string spec;
    std::optional<int> derivation; // index in enumeration order
    Status status = Status::Skipped;
    std::optional<Witness> witness;
    std::optional<long long> timing_us;
};

enum class Scope { Structure, PerDerivation };

enum class ConclusionKind {
    CommutativeRing,       // abelian +, commutative *, both distributive laws
    DIsZero,               // the derivation is the zero map
    AbelianAddition,       // (N, +) abelian
    ElementIsZero,         // quantified element forced to 0
    ElementInCenter,       // quantified element forced into Z
    NotZeroDivisor,        // quantified element is not a zero divisor
    DerivationExistence,   // derivations exist iff zero-symmetric
    IdentityHolds          // a user-supplied identity holds
};

struct TheoremSpec {
    std::string id;
    std::string description;
    std::vector<std::string> structural_pre; // predicate names, e.g. "three_prime"
    Scope scope = Scope::Structure;
    bool require_nonzero_derivation = false;
    std::vector<std::string> hypothesis_sources; // identity DSL text
    std::vector<Identity> hypotheses;            // parsed from the sources
    ConclusionKind conclusion = ConclusionKind::CommutativeRing;
    std::optional<Identity> custom_identity;     // conclusion for IdentityHolds
};

// The twelve built-in statements, in fixed order:
// L1a, L1b, L1c, L2, L3, L5, T1, T2, T3, T4, T5, T6.
const std::vector<TheoremSpec>& registry();
std::optional<TheoremSpec> find_spec(const std::string& id);

// Wraps an ad-hoc identity as a per-derivation spec with id
// "identity" and no preconditions.
TheoremSpec make_identity_spec(Identity identity);

struct CheckOptions {
    // Evaluate hypothesis identities through the DSL engine; when
    // false, use the independent hand-coded predicates instead. Both
    // paths must agree (cross-checked in tests).
    bool use_dsl_hypotheses = true;
    bool with_timing = false;
};

// All verdicts of one spec over one structure. Structure-scope specs
// yield one verdict; per-derivation specs yield one per enumerated
// derivation, or a single Skipped verdict when a precondition fails
// or no derivation exists.
std::vector<Verdict> check_theorem(const NearRing& n, const TheoremSpec& spec,
                                   const CheckOptions& opts = {});

// Independent re-implementation of the per-derivation hypothesis of
// T1 through T6 without the identity engine; true for other ids.
bool hand_coded_hypothesis_holds(const std::string& id, const NearRing& n,
                                 const DerivationMap& d, const std::vector<bool>& center);

std::vector<Verdict> sweep(const std::vector<NearRing>& catalog,
                           const std::vector<TheoremSpec>& specs,
                           const CheckOptions& opts = {});

struct SweepSummary {
    int skipped = 0;
    int verified = 0;
    int refuted = 0;
    int total() const { return skipped + verified + refuted; }
};
SweepSummary summarize(const std::vector<Verdict>& verdicts);

// Removes named hypotheses: "three_prime" drops that structural
// precondition; "nonzero" lifts the nonzero-derivation requirement.
// Throws std::invalid_argument when the spec has no such hypothesis.
TheoremSpec weaken_spec(const TheoremSpec& spec, const std::vector<std::string>& drop);

// Refuted verdicts of the weakened spec over the candidates, at most
// max_witnesses of them, in candidate order.
std::vector<Verdict> hunt_counterexamples(const std::vector<NearRing>& candidates,
                                          const TheoremSpec& weakened, int max_witnesses,
                                          const CheckOptions& opts = {});

} // namespace nrlab
