#pragma once

// Hand-built structures shared across test files. Everything goes
// through require_near_ring, so a fixture that stops satisfying the
// axioms fails loudly at construction time.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nrlab/near_ring.hpp"

namespace fixtures {

using nrlab::CayleyTable;
using nrlab::Element;
using nrlab::NearRing;

template <typename F>
CayleyTable build_table(int n, F f) {
    CayleyTable t(n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t.at(a, b) = f(a, b);
    return t;
}

inline CayleyTable mod_add(int n) {
    return build_table(n, [n](int a, int b) { return (a + b) % n; });
}
inline CayleyTable mod_mul(int n) {
    return build_table(n, [n](int a, int b) { return (a * b) % n; });
}
inline CayleyTable zero_table(int n) {
    return build_table(n, [](int, int) { return 0; });
}
inline CayleyTable right_proj_table(int n) {
    return build_table(n, [](int, int b) { return b; });
}

inline NearRing mod_ring(int n, std::string name) {
    return nrlab::require_near_ring(mod_add(n), mod_mul(n), std::move(name));
}

inline NearRing z2_field() { return mod_ring(2, "z2_field"); }
inline NearRing z3_ring() { return mod_ring(3, "z3_ring"); }
inline NearRing z4_ring() { return mod_ring(4, "z4_ring"); }
inline NearRing z5_ring() { return mod_ring(5, "z5_ring"); }
inline NearRing z6_ring() { return mod_ring(6, "z6_ring"); }
inline NearRing z8_ring() { return mod_ring(8, "z8_ring"); }

inline NearRing z2_zero() {
    return nrlab::require_near_ring(mod_add(2), zero_table(2), "z2_zero");
}
inline NearRing z4_zero() {
    return nrlab::require_near_ring(mod_add(4), zero_table(4), "z4_zero");
}
inline NearRing z2_rproj() {
    return nrlab::require_near_ring(mod_add(2), right_proj_table(2), "z2_rproj");
}

// Klein four-group (xor addition) with zero multiplication.
inline NearRing k4_zero() {
    CayleyTable add = build_table(4, [](int a, int b) { return a ^ b; });
    return nrlab::require_near_ring(add, zero_table(4), "k4_zero");
}

// Symmetric group on three points as the addition, zero multiplication.
// Elements are the six permutations of {0,1,2} in lexicographic order,
// so index 0 is the identity; p + q is composition p after q.
inline NearRing s3_zero() {
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    CayleyTable add(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> composed{};
            for (int t = 0; t < 3; ++t) composed[t] = perms[i][perms[j][t]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == composed) add.at(i, j) = k;
        }
    return nrlab::require_near_ring(add, zero_table(6), "s3_zero");
}

inline NearRing trivial() {
    return nrlab::require_near_ring(CayleyTable(1), CayleyTable(1), "trivial");
}

// Mod-2 addition with a non-associative product; raw tables because
// this is not a near-ring.
inline std::pair<CayleyTable, CayleyTable> bad_mul_2() {
    return {mod_add(2), CayleyTable::from_rows({{0, 1}, {0, 0}})};
}

} // namespace fixtures
