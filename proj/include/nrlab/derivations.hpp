#pragma once

// Multiplicative derivations on a near-ring: maps d with
// d(xy) = x d(y) + d(x) y for all x, y. Additivity is not assumed,
// and enumeration places no a-priori constraint on d(0).

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nrlab/near_ring.hpp"

namespace nrlab {

// d as a total map on elements; d[x] is the image of x.
using DerivationMap = std::vector<Element>;

// First (x, y) in row-major order with d(xy) != x d(y) + d(x) y,
// or nullopt when d is a multiplicative derivation.
std::optional<std::pair<Element, Element>>
derivation_violation(const NearRing& n, const DerivationMap& d);

bool is_multiplicative_derivation(const NearRing& n, const DerivationMap& d);

// All multiplicative derivations, ordered lexicographically as vectors.
std::vector<DerivationMap> enumerate_mult_derivations(const NearRing& n);

// Streaming variant; return false from the callback to stop early.
void for_each_mult_derivation(const NearRing& n,
                              const std::function<bool(const DerivationMap&)>& fn);

// True when at least one multiplicative derivation exists.
bool admits_mult_derivation(const NearRing& n);

bool is_zero_map(const DerivationMap& d);

// d(x + y) == d(x) + d(y) for all x, y.
bool is_additive(const NearRing& n, const DerivationMap& d);

// (x d(y) + d(x) y) z == x d(y) z + d(x) y z for all x, y, z.
// Holds for every multiplicative derivation even without right
// distributivity; exposed so tests can exercise it directly.
bool partial_distributive_law(const NearRing& n, const DerivationMap& d);

// Annihilation of the image set d(N) by a fixed element a.
struct AnnihilatorChecks {
    bool dNa_zero; // d(x) a == 0 for all x
    bool adN_zero; // a d(x) == 0 for all x
};
AnnihilatorChecks annihilator_checks(const NearRing& n, const DerivationMap& d, Element a);

// Composition d(d(x)).
DerivationMap d_squared(const DerivationMap& d);

} // namespace nrlab
