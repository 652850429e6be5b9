#pragma once

#include "g2sc/mpoly.hpp"
#include "g2sc/octonion.hpp"

#include <random>
#include <vector>

namespace g2sc {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/** Small rational in [-k, k] with denominator 1 or 2. */
inline Rat random_rat(Rng& rng, int k = 5) {
    std::uniform_int_distribution<int> num(-k, k), den(1, 2);
    return Rat(num(rng)) / den(rng);
}

/** Sparse polynomial in `vars` of total degree at most `max_deg`. */
inline MPoly random_poly(Rng& rng, const std::vector<Var>& vars, int max_deg, int terms = 6) {
    MPoly out;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1), deg(0, max_deg);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        int d = deg(rng);
        for (int j = 0; j < d; ++j) ++m.e[idx(vars[pick(rng)])];
        out.add_term(m, random_rat(rng));
    }
    return out;
}

/** Homogeneous polynomial of degree d in x1, x2. */
inline MPoly random_binary_form(Rng& rng, int d) {
    MPoly out;
    for (int k = 0; k <= d; ++k) {
        Monomial m;
        m.e[idx(Var::x1)] = static_cast<std::uint16_t>(d - k);
        m.e[idx(Var::x2)] = static_cast<std::uint16_t>(k);
        out.add_term(m, random_rat(rng));
    }
    return out;
}

inline VecV<Rat> random_vec(Rng& rng, int k = 3) {
    VecV<Rat> v;
    for (auto& x : v) x = random_rat(rng, k);
    return v;
}

inline Oct<Rat> random_oct(Rng& rng, int k = 3) { return Oct<Rat>{random_rat(rng, k), random_vec(rng, k)}; }

}  // namespace g2sc
