#include "nrlab/near_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nrlab {

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
    CayleyTable t(static_cast<int>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw std::invalid_argument("ragged table at row " + std::to_string(r));
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            t.at(static_cast<Element>(r), static_cast<Element>(c)) = rows[r][c];
    }
    return t;
}

std::vector<std::vector<Element>> CayleyTable::to_rows() const {
    std::vector<std::vector<Element>> rows(static_cast<std::size_t>(order));
    for (int r = 0; r < order; ++r) {
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(order));
        for (int c = 0; c < order; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
    }
    return rows;
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    os << v.axiom;
    if (!v.witness.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) os << ",";
            os << v.witness[i];
        }
        os << ")";
    }
    return os.str();
}

namespace {

bool entries_in_range(const CayleyTable& t, const char* which,
                      std::vector<Violation>& out) {
    bool ok = true;
    for (Element r = 0; r < t.order; ++r)
        for (Element c = 0; c < t.order; ++c)
            if (t.at(r, c) < 0 || t.at(r, c) >= t.order) {
                out.push_back({std::string(which) + " entry out of range", {r, c}});
                ok = false;
            }
    return ok;
}

} // namespace

ValidationResult validate_near_ring(const CayleyTable& add, const CayleyTable& mul,
                                    std::string name) {
    ValidationResult result;
    auto& bad = result.violations;

    if (add.order < 1 || add.order != mul.order) {
        bad.push_back({"order mismatch", {add.order, mul.order}});
        return result;
    }
    const int n = add.order;
    if (add.entries.size() != static_cast<std::size_t>(n) * n ||
        mul.entries.size() != static_cast<std::size_t>(n) * n) {
        bad.push_back({"table size mismatch", {}});
        return result;
    }
    bool in_range = entries_in_range(add, "add", bad);
    in_range = entries_in_range(mul, "mul", bad) && in_range;
    if (!in_range) return result; // cannot index safely past this point

    // (N, +) is a group with identity 0. Not necessarily abelian.
    for (Element x = 0; x < n; ++x)
        if (add.at(0, x) != x || add.at(x, 0) != x)
            bad.push_back({"zero not additive identity", {x}});
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (add.at(add.at(x, y), z) != add.at(x, add.at(y, z)))
                    bad.push_back({"add not associative", {x, y, z}});
    std::vector<Element> neg(static_cast<std::size_t>(n), -1);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y)
            if (add.at(x, y) == 0 && add.at(y, x) == 0) {
                neg[static_cast<std::size_t>(x)] = y;
                break;
            }
        if (neg[static_cast<std::size_t>(x)] < 0)
            bad.push_back({"add inverse missing", {x}});
    }

    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z)))
                    bad.push_back({"mul not associative", {x, y, z}});

    // Left distributivity only: x(y + z) = xy + xz.
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z)))
                    bad.push_back({"left distributivity fails", {x, y, z}});

    // Sanity consequence of the group laws + left distributivity.
    for (Element x = 0; x < n; ++x)
        if (mul.at(x, 0) != 0) bad.push_back({"mul by zero", {x}});

    if (!bad.empty()) return result;

    NearRing nr;
    nr.order = n;
    nr.add_table = add;
    nr.mul_table = mul;
    nr.neg_table = std::move(neg);
    nr.name = std::move(name);
    result.near_ring = std::move(nr);
    return result;
}

NearRing require_near_ring(const CayleyTable& add, const CayleyTable& mul, std::string name) {
    ValidationResult r = validate_near_ring(add, mul, std::move(name));
    if (!r.ok()) {
        std::ostringstream os;
        os << "invalid near-ring (" << r.violations.size() << " violation(s)):";
        for (const auto& v : r.violations) os << "\n  " << to_string(v);
        throw std::invalid_argument(os.str());
    }
    return *std::move(r.near_ring);
}

bool is_zero_symmetric(const NearRing& n) {
    for (Element x = 0; x < n.order; ++x)
        if (n.mul(0, x) != 0) return false;
    return true;
}

std::optional<std::pair<Element, Element>> three_prime_violation(const NearRing& n) {
    for (Element x = 1; x < n.order; ++x)
        for (Element y = 1; y < n.order; ++y) {
            bool all_zero = true;
            for (Element t = 0; t < n.order; ++t)
                if (n.mul(n.mul(x, t), y) != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) return std::make_pair(x, y);
        }
    return std::nullopt;
}

bool is_3_prime(const NearRing& n) { return !three_prime_violation(n).has_value(); }

bool is_2_torsion_free(const NearRing& n) {
    for (Element x = 1; x < n.order; ++x)
        if (n.add(x, x) == 0) return false;
    return true;
}

std::vector<Element> center(const NearRing& n) {
    std::vector<Element> z;
    for (Element x = 0; x < n.order; ++x) {
        bool central = true;
        for (Element y = 0; y < n.order; ++y)
            if (n.mul(y, x) != n.mul(x, y)) {
                central = false;
                break;
            }
        if (central) z.push_back(x);
    }
    return z;
}

std::vector<bool> center_mask(const NearRing& n) {
    std::vector<bool> mask(static_cast<std::size_t>(n.order), false);
    for (Element x : center(n)) mask[static_cast<std::size_t>(x)] = true;
    return mask;
}

Element lie(const NearRing& n, Element x, Element y) {
    return n.sub(n.mul(x, y), n.mul(y, x));
}

Element jordan(const NearRing& n, Element x, Element y) {
    return n.add(n.mul(x, y), n.mul(y, x));
}

bool is_zero_divisor(const NearRing& n, Element z) {
    for (Element x = 1; x < n.order; ++x)
        if (n.mul(x, z) == 0 || n.mul(z, x) == 0) return true;
    return false;
}

std::optional<std::pair<Element, Element>> abelian_violation(const NearRing& n) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y)
            if (n.add(x, y) != n.add(y, x)) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::pair<Element, Element>> mul_commutativity_violation(const NearRing& n) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y)
            if (n.mul(x, y) != n.mul(y, x)) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::array<Element, 3>> right_distributivity_violation(const NearRing& n) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y)
            for (Element z = 0; z < n.order; ++z)
                if (n.mul(n.add(x, y), z) != n.add(n.mul(x, z), n.mul(y, z)))
                    return std::array<Element, 3>{x, y, z};
    return std::nullopt;
}

StructuralPredicates structural_predicates(const NearRing& n) {
    StructuralPredicates p;
    p.abelian_addition = !abelian_violation(n).has_value();
    p.commutative_mul = !mul_commutativity_violation(n).has_value();
    p.right_distributive = !right_distributivity_violation(n).has_value();
    p.is_commutative_ring = p.abelian_addition && p.commutative_mul && p.right_distributive;
    return p;
}

std::optional<SemigroupIdeal> semigroup_ideal_in_center(const NearRing& n) {
    const std::vector<bool> central = center_mask(n);
    // Principal closure per central seed; any nonzero ideal inside Z
    // contains a nonzero principal one, so this search is complete.
    for (Element a = 1; a < n.order; ++a) {
        if (!central[static_cast<std::size_t>(a)]) continue;
        std::vector<bool> in_ideal(static_cast<std::size_t>(n.order), false);
        std::vector<Element> queue{a};
        in_ideal[static_cast<std::size_t>(a)] = true;
        bool inside_center = true;
        while (!queue.empty() && inside_center) {
            Element s = queue.back();
            queue.pop_back();
            for (Element t = 0; t < n.order && inside_center; ++t) {
                for (Element prod : {n.mul(t, s), n.mul(s, t)}) {
                    if (!central[static_cast<std::size_t>(prod)]) {
                        inside_center = false;
                        break;
                    }
                    if (!in_ideal[static_cast<std::size_t>(prod)]) {
                        in_ideal[static_cast<std::size_t>(prod)] = true;
                        queue.push_back(prod);
                    }
                }
            }
        }
        if (inside_center) {
            SemigroupIdeal ideal;
            ideal.generator = a;
            for (Element x = 0; x < n.order; ++x)
                if (in_ideal[static_cast<std::size_t>(x)]) ideal.elements.push_back(x);
            return ideal;
        }
    }
    return std::nullopt;
}

} // namespace nrlab
