#pragma once

#include "g2sc/rat.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2sc {

/**
 * The closed variable universe. Declaration order is the graded-lex precedence:
 * earlier variables are larger.
 */
enum class Var : std::uint8_t {
    x1, x2, y1, y2, t1, t2, v, alpha, h, f,
    c1F, c2F, c3F, c1Q, c2Q, c3Q,
    a, b, c, d, e, g,
};

constexpr int kNumVars = 22;

std::string_view var_name(Var x);
std::optional<Var> var_from_name(std::string_view name);

inline int idx(Var x) { return static_cast<int>(x); }

struct Monomial {
    std::array<std::uint16_t, kNumVars> e{};

    static Monomial of(Var x, unsigned power = 1) {
        Monomial m;
        m.e[idx(x)] = static_cast<std::uint16_t>(power);
        return m;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (auto k : e) d += k;
        return d;
    }
    unsigned operator[](Var x) const { return e[idx(x)]; }
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }
    // Precondition: o divides *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

/** Graded-lex: higher total degree first, ties broken by the variable precedence. */
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

std::string to_string(const Monomial& m);

/** Sparse polynomial over Q in the fixed universe; terms iterate in descending graded-lex order. */
class MPoly {
public:
    using Terms = std::map<Monomial, Rat, MonoGreater>;

    MPoly() = default;
    MPoly(int c) : MPoly(Rat(c)) {}
    MPoly(const Rat& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    static MPoly var(Var x) { return term(Monomial::of(x), Rat(1)); }
    static MPoly term(const Monomial& m, const Rat& c) {
        MPoly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rat constant_term() const;
    Rat coeff(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(Var x) const;
    bool is_homogeneous() const;
    bool uses(Var x) const { return degree_in(x) > 0; }
    // Bitmask over the universe of variables with positive degree somewhere.
    std::uint32_t support_mask() const;

    const std::pair<const Monomial, Rat>& leading() const { return *terms_.begin(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    void add_term(const Monomial& m, const Rat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    friend MPoly operator*(MPoly a, int c) { return a *= Rat(c); }
    friend MPoly operator*(int c, MPoly a) { return a *= Rat(c); }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned n) const;
    // Homogeneous component of degree d.
    MPoly component(unsigned d) const;
    // Coefficient of x^k as a polynomial in the other variables.
    MPoly coeff_of(Var x, unsigned k) const;

private:
    Terms terms_;
};

inline MPoly X(Var x) { return MPoly::var(x); }

/** Canonical text: graded-lex order, explicit '*', rational coefficients as p/q. */
std::string to_string(const MPoly& p);

using Assignment = std::map<Var, MPoly>;

/** Ring homomorphism sending each variable to its image; every variable of f must be bound. */
MPoly substitute(const MPoly& f, const Assignment& a);
/** Like substitute, but unbound variables map to themselves. */
MPoly substitute_some(const MPoly& f, const Assignment& a);

/** q with f = q*g, or NotDivisible. */
MPoly exact_divide(const MPoly& f, const MPoly& g);

}  // namespace g2sc
