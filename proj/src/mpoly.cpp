#include "g2sc/mpoly.hpp"

#include "g2sc/errors.hpp"

namespace g2sc {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "x1", "x2", "y1", "y2", "t1", "t2", "v", "alpha", "h", "f",
    "c1F", "c2F", "c3F", "c1Q", "c2Q", "c3Q",
    "a", "b", "c", "d", "e", "g",
};

}  // namespace

std::string_view var_name(Var x) { return kNames[idx(x)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kNames[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

Rat MPoly::constant_term() const { return coeff(Monomial{}); }

Rat MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

int MPoly::degree_in(Var x) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[x]));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::uint32_t MPoly::support_mask() const {
    std::uint32_t mask = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i]) mask |= (1u << i);
    return mask;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, k] : terms_) k *= c;
    return *this;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly result(1), base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

MPoly MPoly::component(unsigned d) const {
    MPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::coeff_of(Var x, unsigned k) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[x] != k) continue;
        Monomial rest = m;
        rest.e[idx(x)] = 0;
        r.add_term(rest, c);
    }
    return r;
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += to_string(m);
        } else {
            out += to_string(mag) + "*" + to_string(m);
        }
    }
    return out;
}

namespace {

MPoly substitute_impl(const MPoly& f, const Assignment& a, bool strict) {
    // Powers of each image are cached lazily.
    std::array<std::vector<MPoly>, kNumVars> powers;
    std::array<const MPoly*, kNumVars> image{};
    for (const auto& [x, p] : a) image[idx(x)] = &p;

    auto power_of = [&](int i, unsigned k) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MPoly(1));
        while (cache.size() <= k) {
            MPoly base = image[i] ? *image[i] : MPoly::var(static_cast<Var>(i));
            cache.push_back(cache.back() * base);
        }
        return cache[k];
    };

    MPoly result;
    for (const auto& [m, c] : f.terms()) {
        MPoly t(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!image[i] && strict)
                throw UnboundVariable("no image for variable " + std::string(kNames[i]));
            t *= power_of(i, m.e[i]);
        }
        result += t;
    }
    return result;
}

}  // namespace

MPoly substitute(const MPoly& f, const Assignment& a) { return substitute_impl(f, a, true); }
MPoly substitute_some(const MPoly& f, const Assignment& a) { return substitute_impl(f, a, false); }

MPoly exact_divide(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
    const auto& [lm, lc] = g.leading();
    MPoly q, r = f;
    // The leading monomial strictly drops each round, and grlex is a well order.
    while (!r.is_zero()) {
        const auto [rm, rc] = r.leading();
        if (!lm.divides(rm))
            throw NotDivisible("(" + to_string(f) + ") is not divisible by (" + to_string(g) + ")");
        MPoly t = MPoly::term(rm / lm, rc / lc);
        q += t;
        r -= t * g;
    }
    return q;
}

}  // namespace g2sc
