#pragma once

#include "g2sc/errors.hpp"
#include "g2sc/linalg.hpp"
#include "g2sc/mpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g2sc {

/** Coordinates on the 7-dimensional imaginary space; index 0 holds basis vector 1. */
template <class K>
using VecV = std::array<K, 7>;

template <class K>
VecV<K> zero_vec() {
    VecV<K> v;
    v.fill(K(0));
    return v;
}

// Basis vector f_i (or e_i), 1-based.
template <class K>
VecV<K> basis_vec(int i) {
    auto v = zero_vec<K>();
    v[i - 1] = K(1);
    return v;
}

template <class K>
VecV<K> operator+(VecV<K> a, const VecV<K>& b) {
    for (int i = 0; i < 7; ++i) a[i] += b[i];
    return a;
}

template <class K>
VecV<K> operator-(VecV<K> a, const VecV<K>& b) {
    for (int i = 0; i < 7; ++i) a[i] -= b[i];
    return a;
}

template <class K>
VecV<K> scale(const K& c, VecV<K> a) {
    for (auto& x : a) x = c * x;
    return a;
}

/** Element s*e + v of k + V. */
template <class K>
struct Oct {
    K s = K(0);
    VecV<K> v = zero_vec<K>();

    static Oct unit() { return Oct{K(1), zero_vec<K>()}; }
    static Oct imag(const VecV<K>& u) { return Oct{K(0), u}; }
    static Oct basis(int i) { return imag(basis_vec<K>(i)); }

    bool is_zero() const {
        if (s != K(0)) return false;
        for (const auto& x : v)
            if (x != K(0)) return false;
        return true;
    }
    friend Oct operator+(const Oct& a, const Oct& b) { return Oct{a.s + b.s, a.v + b.v}; }
    friend Oct operator-(const Oct& a, const Oct& b) { return Oct{a.s - b.s, a.v - b.v}; }
    friend Oct operator*(const K& c, const Oct& a) { return Oct{c * a.s, scale(c, a.v)}; }
    friend bool operator==(const Oct& a, const Oct& b) { return a.s == b.s && a.v == b.v; }
    friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }
};

using Triple = std::array<int, 3>;

/** Alternating trilinear form stored on increasing triples (1-based). */
struct TriForm {
    std::map<Triple, Rat> coeffs;

    static TriForm from(std::initializer_list<std::pair<Triple, Rat>> list);

    // Value on basis vectors with the sign of the sorting permutation.
    Rat value(int p, int q, int r) const;
    bool is_zero() const { return coeffs.empty(); }

    template <class K>
    K eval(const VecV<K>& u, const VecV<K>& v, const VecV<K>& w) const {
        K total(0);
        for (const auto& [t, c] : coeffs) {
            int p = t[0] - 1, q = t[1] - 1, r = t[2] - 1;
            K det = u[p] * (v[q] * w[r] - v[r] * w[q]) - u[q] * (v[p] * w[r] - v[r] * w[p]) +
                    u[r] * (v[p] * w[q] - v[q] * w[p]);
            total += K(c) * det;
        }
        return total;
    }

    /** The functional gamma(u, v, .) as its 7 values on basis vectors. */
    template <class K>
    VecV<K> functional(const VecV<K>& u, const VecV<K>& v) const {
        auto out = zero_vec<K>();
        for (const auto& [t, c] : coeffs) {
            int p = t[0] - 1, q = t[1] - 1, r = t[2] - 1;
            K cc(c);
            out[r] += cc * (u[p] * v[q] - u[q] * v[p]);
            out[q] -= cc * (u[p] * v[r] - u[r] * v[p]);
            out[p] += cc * (u[q] * v[r] - u[r] * v[q]);
        }
        return out;
    }
};

/** Symmetric bilinear form as a 7x7 matrix. */
struct BilForm {
    Matrix<Rat> m = zero_matrix<Rat>(7, 7);

    Rat at(int p, int q) const { return m[p - 1][q - 1]; }
    bool is_symmetric() const;

    template <class K>
    K eval(const VecV<K>& u, const VecV<K>& v) const {
        K total(0);
        for (int i = 0; i < 7; ++i) {
            if (u[i] == K(0)) continue;
            for (int j = 0; j < 7; ++j)
                if (m[i][j] != 0) total += K(m[i][j]) * u[i] * v[j];
        }
        return total;
    }
    friend bool operator==(const BilForm& a, const BilForm& b) { return a.m == b.m; }
};

enum class BasisKind { FBasis, EBasis };

/** A compatible form pair together with the inverse Gram matrix used by dagger. */
struct AlgebraCtx {
    TriForm gamma;
    BilForm beta;
    Matrix<Rat> beta_inv;
    BasisKind basis_kind = BasisKind::FBasis;
};

/** Throws SingularForm if beta is degenerate. */
AlgebraCtx make_ctx(TriForm gamma, BilForm beta, BasisKind kind);
AlgebraCtx standard_forms(BasisKind kind);

TriForm standard_gamma(BasisKind kind);
BilForm standard_beta(BasisKind kind);

/** phi^dagger, the vector with beta(phi^dagger, u) = phi(u). */
template <class K>
VecV<K> dagger(const AlgebraCtx& ctx, const VecV<K>& phi) {
    auto out = zero_vec<K>();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (ctx.beta_inv[i][j] != 0) out[i] += K(ctx.beta_inv[i][j]) * phi[j];
    return out;
}

template <class K>
VecV<K> dagger_inv(const AlgebraCtx& ctx, const VecV<K>& v) {
    auto out = zero_vec<K>();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (ctx.beta.m[i][j] != 0) out[i] += K(ctx.beta.m[i][j]) * v[j];
    return out;
}

/** beta extended to k + V with beta'(e, e) = 2 and e orthogonal to V. */
template <class K>
K beta_prime(const AlgebraCtx& ctx, const Oct<K>& u, const Oct<K>& v) {
    return K(2) * u.s * v.s + ctx.beta.eval(u.v, v.v);
}

template <class K>
Oct<K> oct_mul(const AlgebraCtx& ctx, const Oct<K>& u, const Oct<K>& v) {
    // Imaginary part: m(u, v) = -1/2 beta(u, v) e + gamma(u, v, .)^dagger.
    K b = ctx.beta.eval(u.v, v.v);
    VecV<K> im = dagger(ctx, ctx.gamma.functional(u.v, v.v));
    Oct<K> out;
    out.s = u.s * v.s - K(Rat(1, 2)) * b;
    for (int i = 0; i < 7; ++i) out.v[i] = u.s * v.v[i] + v.s * u.v[i] + im[i];
    return out;
}

template <class K>
Oct<K> conjugate(const AlgebraCtx& ctx, const Oct<K>& u) {
    // beta'(u, e) e - u
    Oct<K> e = Oct<K>::unit();
    return beta_prime(ctx, u, e) * e - u;
}

template <class K>
K norm(const AlgebraCtx& ctx, const Oct<K>& u) {
    return K(Rat(1, 2)) * beta_prime(ctx, u, u);
}

/** Standard spanning set of V for biquadratic identities: all f_i and all f_i + f_j. */
std::vector<VecV<Rat>> spanning_sample();

struct CompatReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<VecV<Rat>, VecV<Rat>>> counterexample;
    // Sides of the identity at the counterexample, else at the last pair.
    Rat lhs, rhs;
};

/** Evaluates 2 gamma(u, v, gamma(u, v, .)^dagger) = beta(u,u) beta(v,v) - beta(u,v)^2 on each pair. */
CompatReport check_compatible(const TriForm& gamma, const BilForm& beta,
                              const std::vector<std::pair<VecV<Rat>, VecV<Rat>>>& sample);
/** All pairs drawn from spanning_sample(). */
std::vector<std::pair<VecV<Rat>, VecV<Rat>>> spanning_pairs();

struct BryantReport {
    BilForm form;
    // Coefficient of f*_1...7 in gamma(f_p,.,.) ^ gamma(f_q,.,.) ^ gamma, before dividing by -3.
    Matrix<Rat> wedge;
    bool nondegenerate = false;
    // False if gamma is integral but some wedge coefficient is not a multiple of 3.
    bool divisible = true;
};

BryantReport bryant_form(const TriForm& gamma);

/** Coefficient of f*_1...7 in gamma(u,.,.) ^ gamma(v,.,.) ^ gamma. */
Rat wedge_coefficient(const TriForm& gamma, const VecV<Rat>& u, const VecV<Rat>& v);

Rat norm_imag(const AlgebraCtx& ctx, const VecV<Rat>& u);

/** Basis of E_u = {v : gamma(u, v, .) = 0}. Throws NotIsotropic if N(u) != 0. */
std::vector<VecV<Rat>> isotropic_kernel(const AlgebraCtx& ctx, const VecV<Rat>& u);

/** lambda with v w = lambda u; throws NotProportional otherwise. */
Rat cross_lambda(const AlgebraCtx& ctx, const VecV<Rat>& u, const VecV<Rat>& v, const VecV<Rat>& w);

template <class K>
K cross_lambda_generic(const AlgebraCtx& ctx, const VecV<K>& u, const VecV<K>& v, const VecV<K>& w,
                       int pivot) {
    // Caller fixes a coordinate where u is a unit; exact for polynomial scalars.
    Oct<K> p = oct_mul(ctx, Oct<K>::imag(v), Oct<K>::imag(w));
    K lambda = p.v[pivot - 1];
    if (p.s != K(0)) throw NotProportional("product has a scalar part");
    for (int i = 0; i < 7; ++i)
        if (p.v[i] != lambda * u[i]) throw NotProportional("product is not a multiple of u");
    return lambda;
}

/** T-weights of f_1..f_7 as coefficient pairs of (t1, t2). */
std::array<std::array<int, 2>, 7> torus_weights();

struct TorusReport {
    bool ok = true;
    std::vector<std::string> offending;
    std::size_t triples = 0, pairs = 0;
};

TorusReport torus_invariance_check(const AlgebraCtx& ctx);

/** E_{f_i} for i in {1,2,3,5,6,7}, as (i, second, third) with the kernel indices ascending after i. */
std::vector<Triple> kernel_triples();

/** The 12 T-fixed flags e(i j). */
std::vector<std::pair<int, int>> fixed_points();

/** Rows (X,a,b,c,d,e,1) and (Y,Z,S,T,g,1,0) of the big cell. */
template <class K>
std::pair<VecV<K>, VecV<K>> big_cell_rows(const K& a, const K& b, const K& c, const K& d, const K& e,
                                          const K& g) {
    K X = -(a * e) - b * d - c * c;
    K Y = -a - b * g + c * d - c * e * g;
    K Z = -(c * g) - d * d + d * e * g;
    K S = c + d * e - e * e * g;
    K T = -d + e * g;
    VecV<K> r1{X, a, b, c, d, e, K(1)};
    VecV<K> r2{Y, Z, S, T, g, K(1), K(0)};
    return {r1, r2};
}

/** Columns are f_1..f_7 written in e-coordinates. */
Matrix<GaussRat> f_basis_in_e();
Matrix<GaussRat> e_basis_in_f();

VecV<GaussRat> e_to_f(const VecV<GaussRat>& x);
VecV<GaussRat> f_to_e(const VecV<GaussRat>& x);

/** Values of gamma on columns of P, i.e. the form written in the new basis. */
std::map<Triple, GaussRat> transport_tri(const TriForm& gamma, const Matrix<GaussRat>& p);
Matrix<GaussRat> transport_bil(const BilForm& beta, const Matrix<GaussRat>& p);

template <class K>
VecV<K> lift(const VecV<Rat>& x) {
    VecV<K> out;
    for (int i = 0; i < 7; ++i) out[i] = K(x[i]);
    return out;
}

/**
 * "f2 + 1/2 f3 - e" (e is the unit; basis letter then index 1..7), or a comma list of
 * 8 coordinates (unit first) or 7 (imaginary only). Throws SyntaxError.
 */
Oct<Rat> parse_oct(std::string_view text, char basis = 'f');

std::string to_string(const VecV<Rat>& v, const char* basis = "f");
std::string to_string(const Oct<Rat>& u, const char* basis = "f");
std::string to_string(const Oct<MPoly>& u, const char* basis = "f");

}  // namespace g2sc
