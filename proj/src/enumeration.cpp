#include "nrlab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nrlab {

namespace {

constexpr int kMaxOrder = 8;
constexpr Element kUnset = -1;

std::string indexed_name(const std::string& prefix, std::size_t i) {
    std::ostringstream os;
    os << prefix << "_";
    os.width(3);
    os.fill('0');
    os << i;
    return os.str();
}

// Associativity of a partial table: (x y) z = x (y z) whenever all
// four lookups are already assigned.
bool triple_consistent(const CayleyTable& t, Element x, Element y, Element z) {
    const Element p = t.at(x, y);
    if (p == kUnset) return true;
    const Element q = t.at(y, z);
    if (q == kUnset) return true;
    const Element l = t.at(p, z);
    const Element r = t.at(x, q);
    return l == kUnset || r == kUnset || l == r;
}

// Checks every triple whose last missing lookup could be the cell
// (a, b): as the leading product, the trailing product, or one of the
// two outer lookups.
bool cell_consistent(const CayleyTable& t, Element a, Element b) {
    const int n = t.order;
    for (Element z = 0; z < n; ++z)
        if (!triple_consistent(t, a, b, z)) return false;
    for (Element x = 0; x < n; ++x)
        if (!triple_consistent(t, x, a, b)) return false;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (t.at(x, y) == a && !triple_consistent(t, x, y, b)) return false;
            if (t.at(x, y) == b && !triple_consistent(t, a, x, y)) return false;
        }
    return true;
}

// Lexicographically minimal relabeling of a group table over all
// permutations fixing index 0. Comparison aborts early against the
// best candidate found so far.
std::vector<Element> canonical_group_form(const CayleyTable& t) {
    const int n = t.order;
    const auto un = static_cast<std::size_t>(n);
    std::vector<Element> best = t.entries;
    std::vector<Element> perm(un);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> inv(un);
    std::vector<Element> candidate(best.size());

    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        for (int i = 0; i < n; ++i)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        bool worse = false;
        bool better = false;
        for (std::size_t idx = 0; idx < candidate.size(); ++idx) {
            const Element x = inv[idx / un];
            const Element y = inv[idx % un];
            candidate[idx] = perm[static_cast<std::size_t>(t.at(x, y))];
            if (!better) {
                if (candidate[idx] > best[idx]) {
                    worse = true;
                    break;
                }
                if (candidate[idx] < best[idx]) better = true;
            }
        }
        if (!worse && better) best = candidate;
    }
    return best;
}

// Additive order of each element: least k with x added to itself k
// times reaching 0.
std::vector<int> element_orders(const CayleyTable& t) {
    std::vector<int> orders(static_cast<std::size_t>(t.order));
    for (Element x = 0; x < t.order; ++x) {
        Element acc = x;
        int k = 1;
        while (acc != 0) {
            acc = t.at(acc, x);
            ++k;
        }
        orders[static_cast<std::size_t>(x)] = k;
    }
    return orders;
}

// The element-order multiset separates all isomorphism classes at
// orders up to 8.
std::string group_label(const CayleyTable& t) {
    const int n = t.order;
    const std::vector<int> orders = element_orders(t);
    const int max_order = *std::max_element(orders.begin(), orders.end());
    if (max_order == n) return "Z" + std::to_string(n);
    if (n == 4) return "K4";
    if (n == 6) return "S3";
    if (n == 8) {
        const auto twos = std::count(orders.begin(), orders.end(), 2);
        if (twos == 7) return "Z2xZ2xZ2";
        if (twos == 5) return "D4";
        if (twos == 3) return "Z4xZ2";
        return "Q8";
    }
    throw std::logic_error("unrecognized group of order " + std::to_string(n));
}

// Simultaneous canonical form of (add, mul) over permutations fixing
// index 0, as one flat entry vector for set-based dedup.
std::vector<Element> canonical_nearring_form(const NearRing& nr) {
    const int n = nr.order;
    const auto un = static_cast<std::size_t>(n);
    auto relabel = [&](const std::vector<Element>& perm, const std::vector<Element>& inv) {
        std::vector<Element> flat(2 * un * un);
        for (std::size_t idx = 0; idx < un * un; ++idx) {
            const Element x = inv[idx / un];
            const Element y = inv[idx % un];
            flat[idx] = perm[static_cast<std::size_t>(nr.add_table.at(x, y))];
            flat[un * un + idx] = perm[static_cast<std::size_t>(nr.mul_table.at(x, y))];
        }
        return flat;
    };

    std::vector<Element> perm(un);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> inv = perm;
    std::vector<Element> best = relabel(perm, inv);
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        for (int i = 0; i < n; ++i)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        std::vector<Element> candidate = relabel(perm, inv);
        if (candidate < best) best = std::move(candidate);
    }
    return best;
}

} // namespace

std::vector<GroupTable> enumerate_groups(int order) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("group order must be between 1 and 8, got " +
                                    std::to_string(order));
    const int n = order;
    CayleyTable t(n);
    std::fill(t.entries.begin(), t.entries.end(), kUnset);
    for (Element i = 0; i < n; ++i) {
        t.at(0, i) = i;
        t.at(i, 0) = i;
    }
    std::vector<unsigned> row_used(static_cast<std::size_t>(n), 0u);
    std::vector<unsigned> col_used(static_cast<std::size_t>(n), 0u);
    for (Element i = 1; i < n; ++i) {
        row_used[static_cast<std::size_t>(i)] = 1u << i;
        col_used[static_cast<std::size_t>(i)] = 1u << i;
    }

    std::set<std::vector<Element>> canonical_forms;
    const int cells = (n - 1) * (n - 1);

    auto fill = [&](auto&& self, int cell) -> void {
        if (cell == cells) {
            canonical_forms.insert(canonical_group_form(t));
            return;
        }
        const Element r = 1 + cell / (n - 1);
        const Element c = 1 + cell % (n - 1);
        for (Element v = 0; v < n; ++v) {
            if (row_used[static_cast<std::size_t>(r)] >> v & 1u) continue;
            if (col_used[static_cast<std::size_t>(c)] >> v & 1u) continue;
            t.at(r, c) = v;
            row_used[static_cast<std::size_t>(r)] |= 1u << v;
            col_used[static_cast<std::size_t>(c)] |= 1u << v;
            if (cell_consistent(t, r, c)) self(self, cell + 1);
            row_used[static_cast<std::size_t>(r)] &= ~(1u << v);
            col_used[static_cast<std::size_t>(c)] &= ~(1u << v);
            t.at(r, c) = kUnset;
        }
    };
    fill(fill, 0);

    std::vector<GroupTable> out;
    for (const auto& entries : canonical_forms) {
        GroupTable g{n, CayleyTable(n), ""};
        g.table.entries = entries;
        g.label = group_label(g.table);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<EndoMap> additive_endomorphisms(const GroupTable& g) {
    const int n = g.order;
    const CayleyTable& add = g.table;

    // Constraint e(a + b) = e(a) + e(b) is checkable once positions
    // a, b, and a + b are all assigned.
    std::vector<std::vector<std::pair<Element, Element>>> pairs_by_max(
        static_cast<std::size_t>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            pairs_by_max[static_cast<std::size_t>(std::max({a, b, add.at(a, b)}))]
                .push_back({a, b});

    std::vector<EndoMap> out;
    EndoMap e(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(e);
            return;
        }
        for (Element v = 0; v < n; ++v) {
            e[static_cast<std::size_t>(k)] = v;
            bool ok = true;
            for (auto [a, b] : pairs_by_max[static_cast<std::size_t>(k)])
                if (e[static_cast<std::size_t>(add.at(a, b))] !=
                    add.at(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, k + 1);
        }
    };
    extend(extend, 0);
    return out;
}

std::vector<NearRing> enumerate_nearrings(const GroupTable& g) {
    const int n = g.order;
    const std::vector<EndoMap> endos = additive_endomorphisms(g);
    const int m = static_cast<int>(endos.size());

    // comp[i][j] = index of endos[i] applied after endos[j]; the
    // composite of two endomorphisms is again one.
    std::map<EndoMap, int> endo_index;
    for (int i = 0; i < m; ++i) endo_index[endos[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m)));
    EndoMap scratch(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const EndoMap& ei = endos[static_cast<std::size_t>(i)];
            const EndoMap& ej = endos[static_cast<std::size_t>(j)];
            for (Element x = 0; x < n; ++x)
                scratch[static_cast<std::size_t>(x)] =
                    ei[static_cast<std::size_t>(ej[static_cast<std::size_t>(x)])];
            comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                endo_index.at(scratch);
        }

    // Row assignment: E[x] names the endomorphism forming row x, so
    // mul[x][y] = endos[E[x]][y]. Associativity reduces to
    // E[x] . E[y] = E[E[x](y)]; a pair (x, y) becomes checkable at
    // the step that assigns the last of the three rows involved.
    std::vector<int> E(static_cast<std::size_t>(n), -1);
    std::vector<NearRing> out;

    auto row_of = [&](Element x, Element y) {
        return endos[static_cast<std::size_t>(E[static_cast<std::size_t>(x)])]
                    [static_cast<std::size_t>(y)];
    };
    auto assign = [&](auto&& self, Element k) -> void {
        if (k == n) {
            CayleyTable mul(n);
            for (Element x = 0; x < n; ++x)
                for (Element y = 0; y < n; ++y) mul.at(x, y) = row_of(x, y);
            out.push_back(
                require_near_ring(g.table, mul, indexed_name("nr_" + g.label, out.size())));
            return;
        }
        for (int choice = 0; choice < m; ++choice) {
            E[static_cast<std::size_t>(k)] = choice;
            bool ok = true;
            for (Element x = 0; x <= k && ok; ++x)
                for (Element y = 0; y <= k && ok; ++y) {
                    const Element target = row_of(x, y);
                    if (target > k || std::max({x, y, target}) != k) continue;
                    if (comp[static_cast<std::size_t>(E[static_cast<std::size_t>(x)])]
                            [static_cast<std::size_t>(E[static_cast<std::size_t>(y)])] !=
                        E[static_cast<std::size_t>(target)])
                        ok = false;
                }
            if (ok) self(self, k + 1);
        }
        E[static_cast<std::size_t>(k)] = -1;
    };
    assign(assign, 0);
    return out;
}

std::vector<NearRing> dedup_up_to_isomorphism(const std::vector<NearRing>& list) {
    std::vector<NearRing> out;
    std::set<std::vector<Element>> seen;
    for (const NearRing& nr : list)
        if (seen.insert(canonical_nearring_form(nr)).second) out.push_back(nr);
    return out;
}

NearRing build_ring_zn(int n) {
    if (n < 1) throw std::invalid_argument("ring order must be positive");
    CayleyTable add(n), mul(n);
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            add.at(i, j) = (i + j) % n;
            mul.at(i, j) = (i * j) % n;
        }
    return require_near_ring(add, mul, "ring_Z" + std::to_string(n));
}

NearRing build_zero_mul(const GroupTable& g) {
    CayleyTable mul(g.order);
    return require_near_ring(g.table, mul, "zero_mul_" + g.label);
}

NearRing build_right_projection(const GroupTable& g) {
    CayleyTable mul(g.order);
    for (Element x = 0; x < g.order; ++x)
        for (Element y = 0; y < g.order; ++y) mul.at(x, y) = y;
    return require_near_ring(g.table, mul, "rproj_" + g.label);
}

std::vector<NearRing> hunt_candidates(int order) {
    constexpr int kExhaustiveCap = 5;
    std::vector<NearRing> out;
    auto push_unique = [&](NearRing nr) {
        for (const NearRing& have : out)
            if (have.same_tables(nr)) return;
        out.push_back(std::move(nr));
    };

    push_unique(build_ring_zn(order));
    const std::vector<GroupTable> groups = enumerate_groups(order);
    for (const GroupTable& g : groups) {
        push_unique(build_zero_mul(g));
        push_unique(build_right_projection(g));
    }
    if (order <= kExhaustiveCap)
        for (const GroupTable& g : groups)
            for (NearRing& nr : enumerate_nearrings(g)) push_unique(std::move(nr));
    return out;
}

} // namespace nrlab
