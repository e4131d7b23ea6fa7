#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nrlab {

/// Index of an element of a finite structure. Element 0 is, by convention,
/// the additive identity; every table entry must lie in [0, order).
using Element = int;

/// Full operation table of a binary operation, row-major.
/// Row index = left operand.
struct CayleyTable {
    int order = 0;
    std::vector<Element> entries;

    CayleyTable() = default;
    explicit CayleyTable(int n) : order(n), entries(static_cast<std::size_t>(n) * n, 0) {}

    Element at(Element row, Element col) const {
        return entries[static_cast<std::size_t>(row) * order + col];
    }
    Element& at(Element row, Element col) {
        return entries[static_cast<std::size_t>(row) * order + col];
    }

    /// Builds a table from nested rows. Rows must form a square matrix.
    static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);
    std::vector<std::vector<Element>> to_rows() const;

    bool operator==(const CayleyTable&) const = default;
};

/// One broken axiom instance: which law failed and at which elements.
struct Violation {
    std::string axiom;
    std::vector<Element> witness;
};

std::string to_string(const Violation& v);

/// A validated finite left near-ring: a group (add_table, not necessarily
/// abelian), an associative mul_table, and the left distributive law.
/// Immutable after validation; all operations on it are pure.
struct NearRing {
    int order = 0;
    CayleyTable add_table;
    CayleyTable mul_table;
    std::vector<Element> neg_table; // additive inverses
    std::string name;

    Element add(Element a, Element b) const { return add_table.at(a, b); }
    Element mul(Element a, Element b) const { return mul_table.at(a, b); }
    Element neg(Element a) const { return neg_table[static_cast<std::size_t>(a)]; }
    /// a - b, evaluated as a + (-b); the convention used everywhere a
    /// difference appears, including non-abelian addition.
    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    bool same_tables(const NearRing& other) const {
        return add_table == other.add_table && mul_table == other.mul_table;
    }
};

struct ValidationResult {
    std::optional<NearRing> near_ring; // engaged iff violations is empty
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every axiom exhaustively and reports ALL violations, not just the
/// first. On success the returned NearRing has its inverse table filled in.
ValidationResult validate_near_ring(const CayleyTable& add, const CayleyTable& mul,
                                    std::string name = {});

/// validate_near_ring that throws std::invalid_argument listing every
/// violation. For construction sites where an invalid table is a bug.
NearRing require_near_ring(const CayleyTable& add, const CayleyTable& mul,
                           std::string name = {});

/// 0x = 0 for all x. (x0 = 0 already follows from left distributivity.)
bool is_zero_symmetric(const NearRing& n);

/// xNy = {0} forces x = 0 or y = 0.
bool is_3_prime(const NearRing& n);
/// First pair (x, y), both nonzero, with x*t*y = 0 for every t; nullopt if 3-prime.
std::optional<std::pair<Element, Element>> three_prime_violation(const NearRing& n);

/// x + x = 0 only for x = 0.
bool is_2_torsion_free(const NearRing& n);

/// Multiplicative center Z = {x | yx = xy for all y}. May be empty;
/// 0 is central exactly when the structure is zero symmetric.
std::vector<Element> center(const NearRing& n);
std::vector<bool> center_mask(const NearRing& n);

/// [x, y] = xy - yx
Element lie(const NearRing& n, Element x, Element y);
/// x o y = xy + yx
Element jordan(const NearRing& n, Element x, Element y);

/// Some x != 0 annihilates z on either side: xz = 0 or zx = 0.
bool is_zero_divisor(const NearRing& n, Element z);

std::optional<std::pair<Element, Element>> abelian_violation(const NearRing& n);
std::optional<std::pair<Element, Element>> mul_commutativity_violation(const NearRing& n);
std::optional<std::array<Element, 3>> right_distributivity_violation(const NearRing& n);

struct StructuralPredicates {
    bool abelian_addition = false;
    bool commutative_mul = false;
    bool right_distributive = false;
    /// Strong reading: abelian +, commutative *, and both distributive laws.
    bool is_commutative_ring = false;
};
StructuralPredicates structural_predicates(const NearRing& n);

struct SemigroupIdeal {
    Element generator = 0;          // the central seed whose closure worked
    std::vector<Element> elements;  // sorted
};

/// A nonzero multiplicative two-sided semigroup ideal (NI ⊆ I, IN ⊆ I)
/// contained in the center, found by closing each nonzero central element
/// under left/right multiplication; nullopt when no seed's closure stays
/// inside the center.
std::optional<SemigroupIdeal> semigroup_ideal_in_center(const NearRing& n);

} // namespace nrlab
