#pragma once

// The test universe: every group of small order as an addition table,
// and every left near-ring on each group. Left distributivity means
// each multiplication row is an additive endomorphism, so near-ring
// search assigns one endomorphism per row and enforces associativity
// as closure under composition.

#include <string>
#include <vector>

#include "nrlab/near_ring.hpp"

namespace nrlab {

struct GroupTable {
    int order;
    CayleyTable table;
    std::string label; // Z1..Z8, K4, S3, Z4xZ2, Z2xZ2xZ2, D4, Q8
};

// All groups of the given order up to isomorphism, as Cayley tables
// with the identity at index 0. Dedup uses the lexicographically
// minimal relabeling fixing index 0; output is sorted by that
// canonical table. Supported orders: 1 through 8.
std::vector<GroupTable> enumerate_groups(int order);

// An additive endomorphism as its image vector.
using EndoMap = std::vector<Element>;

// All maps e with e(a + b) = e(a) + e(b), in lexicographic image
// order. Every such map fixes 0.
std::vector<EndoMap> additive_endomorphisms(const GroupTable& g);

// All left near-rings on the group, raw (no isomorphism dedup),
// named nr_<label>_<index> with zero-padded indices in search order.
std::vector<NearRing> enumerate_nearrings(const GroupTable& g);

// Keeps the first representative of each isomorphism class. Two
// structures are isomorphic when one bijection fixing 0 carries both
// tables onto the other's. Costs (n-1)! per structure.
std::vector<NearRing> dedup_up_to_isomorphism(const std::vector<NearRing>& list);

// Standard families. The ring of integers mod n exercises honest ring
// behavior; zero multiplication defeats 3-primeness; right projection
// x*y = y defeats zero-symmetry.
NearRing build_ring_zn(int n);
NearRing build_zero_mul(const GroupTable& g);
NearRing build_right_projection(const GroupTable& g);

// Candidate structures for counterexample hunting, cheapest witnesses
// first: the mod-n ring, then the constructed families on each group,
// then the full catalog when the order is at most 5. Duplicate tables
// are dropped, keeping the first occurrence.
std::vector<NearRing> hunt_candidates(int order);

} // namespace nrlab
