#include "nrlab/derivations.hpp"

#include <algorithm>

namespace nrlab {

namespace {

Element derivation_rhs(const NearRing& n, const DerivationMap& d, Element x, Element y) {
    const auto xs = static_cast<std::size_t>(x);
    const auto ys = static_cast<std::size_t>(y);
    return n.add(n.mul(x, d[ys]), n.mul(d[xs], y));
}

} // namespace

std::optional<std::pair<Element, Element>>
derivation_violation(const NearRing& n, const DerivationMap& d) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y)
            if (d[static_cast<std::size_t>(n.mul(x, y))] != derivation_rhs(n, d, x, y))
                return std::make_pair(x, y);
    return std::nullopt;
}

bool is_multiplicative_derivation(const NearRing& n, const DerivationMap& d) {
    return !derivation_violation(n, d).has_value();
}

void for_each_mult_derivation(const NearRing& n,
                              const std::function<bool(const DerivationMap&)>& fn) {
    const int order = n.order;

    // Constraint d(xy) = x d(y) + d(x) y touches d at positions x, y and xy.
    // Schedule each pair at the largest position it touches so a partial
    // assignment d[0..k] can be checked as soon as position k is filled.
    std::vector<std::vector<std::pair<Element, Element>>> pairs_by_max(
        static_cast<std::size_t>(order));
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y) {
            Element hi = std::max({x, y, n.mul(x, y)});
            pairs_by_max[static_cast<std::size_t>(hi)].push_back({x, y});
        }

    DerivationMap d(static_cast<std::size_t>(order), 0);
    bool keep_going = true;

    auto extend = [&](auto&& self, int k) -> void {
        if (!keep_going) return;
        if (k == order) {
            keep_going = fn(d);
            return;
        }
        for (Element v = 0; v < order && keep_going; ++v) {
            d[static_cast<std::size_t>(k)] = v;
            bool consistent = true;
            for (auto [x, y] : pairs_by_max[static_cast<std::size_t>(k)])
                if (d[static_cast<std::size_t>(n.mul(x, y))] != derivation_rhs(n, d, x, y)) {
                    consistent = false;
                    break;
                }
            if (consistent) self(self, k + 1);
        }
    };
    extend(extend, 0);
}

std::vector<DerivationMap> enumerate_mult_derivations(const NearRing& n) {
    std::vector<DerivationMap> out;
    for_each_mult_derivation(n, [&](const DerivationMap& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

bool admits_mult_derivation(const NearRing& n) {
    bool found = false;
    for_each_mult_derivation(n, [&](const DerivationMap&) {
        found = true;
        return false;
    });
    return found;
}

bool is_zero_map(const DerivationMap& d) {
    return std::all_of(d.begin(), d.end(), [](Element v) { return v == 0; });
}

bool is_additive(const NearRing& n, const DerivationMap& d) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y)
            if (d[static_cast<std::size_t>(n.add(x, y))] !=
                n.add(d[static_cast<std::size_t>(x)], d[static_cast<std::size_t>(y)]))
                return false;
    return true;
}

bool partial_distributive_law(const NearRing& n, const DerivationMap& d) {
    for (Element x = 0; x < n.order; ++x)
        for (Element y = 0; y < n.order; ++y) {
            const Element xd = n.mul(x, d[static_cast<std::size_t>(y)]);
            const Element dx = n.mul(d[static_cast<std::size_t>(x)], y);
            for (Element z = 0; z < n.order; ++z)
                if (n.mul(n.add(xd, dx), z) != n.add(n.mul(xd, z), n.mul(dx, z)))
                    return false;
        }
    return true;
}

AnnihilatorChecks annihilator_checks(const NearRing& n, const DerivationMap& d, Element a) {
    AnnihilatorChecks c{true, true};
    for (Element x = 0; x < n.order; ++x) {
        if (n.mul(d[static_cast<std::size_t>(x)], a) != 0) c.dNa_zero = false;
        if (n.mul(a, d[static_cast<std::size_t>(x)]) != 0) c.adN_zero = false;
    }
    return c;
}

DerivationMap d_squared(const DerivationMap& d) {
    DerivationMap out(d.size());
    for (std::size_t x = 0; x < d.size(); ++x)
        out[x] = d[static_cast<std::size_t>(d[x])];
    return out;
}

} // namespace nrlab
