#include "g2sc/suites.hpp"

#include "g2sc/chern.hpp"
#include "g2sc/octonion.hpp"
#include "g2sc/parse.hpp"
#include "g2sc/presentation.hpp"
#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"
#include "g2sc/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2sc {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.ok; }));
}

namespace {

// Accumulates sub-checks; the first few failures are kept as detail lines.
struct Check {
    CheckResult r;
    explicit Check(std::string name) { r.name = std::move(name), r.ok = true; }
    bool expect(bool cond, const std::string& what) {
        if (!cond) {
            r.ok = false;
            if (r.detail.size() < 8) r.detail.push_back(what);
        }
        return cond;
    }
    void note(const std::string& s) { r.detail.push_back(s); }
    CheckResult done() { return r; }
};

// Runs a check body, turning an escaped exception into a failure.
CheckResult guarded(const std::string& name, const std::function<void(Check&)>& body) {
    Check c(name);
    try {
        body(c);
    } catch (const std::exception& ex) {
        c.expect(false, std::string("exception: ") + ex.what());
    }
    return c.done();
}

const AlgebraCtx& fctx() {
    static const AlgebraCtx ctx = standard_forms(BasisKind::FBasis);
    return ctx;
}

const std::vector<Var> kX{Var::x1, Var::x2};
const std::vector<Var> kXY{Var::x1, Var::x2, Var::y1, Var::y2};

// ---------------------------------------------------------------- octonion

CheckResult oct_table(std::uint64_t seed) {
    return guarded("multiplication: f2 f3 = f1, e is a unit, N(uv) = N(u)N(v) on 200 pairs", [&](Check& c) {
        const auto& ctx = fctx();
        auto p = oct_mul(ctx, Oct<Rat>::basis(2), Oct<Rat>::basis(3));
        c.expect(p == Oct<Rat>::basis(1), "f2 f3 = " + to_string(p));
        for (int i = 1; i <= 7; ++i) {
            auto u = Oct<Rat>::basis(i);
            c.expect(oct_mul(ctx, Oct<Rat>::unit(), u) == u && oct_mul(ctx, u, Oct<Rat>::unit()) == u,
                     "e is not a unit on f" + std::to_string(i));
        }
        Rng rng(seed);
        for (int k = 0; k < 200; ++k) {
            auto u = random_oct(rng), v = random_oct(rng);
            Rat lhs = norm(ctx, oct_mul(ctx, u, v)), rhs = norm(ctx, u) * norm(ctx, v);
            c.expect(lhs == rhs, "N(uv) != N(u)N(v) for u = " + to_string(u) + ", v = " + to_string(v));
        }
    });
}

CheckResult oct_minimal(std::uint64_t seed) {
    return guarded("minimal equation, conjugation and norm on 100 random octonions", [&](Check& c) {
        const auto& ctx = fctx();
        Rng rng(seed + 1);
        auto e = Oct<Rat>::unit();
        c.expect(conjugate(ctx, e) == e && norm(ctx, e) == 1, "conj(e) = e, N(e) = 1");
        c.expect(norm(ctx, Oct<Rat>::basis(1)) == 0, "N(f1) = 0");
        c.expect(norm(ctx, Oct<Rat>::basis(1) + Oct<Rat>::basis(7)) == -1, "N(f1 + f7) = -1");
        for (int k = 0; k < 100; ++k) {
            auto u = random_oct(rng);
            auto u2 = oct_mul(ctx, u, u);
            auto m = u2 - beta_prime(ctx, u, e) * u + norm(ctx, u) * e;
            c.expect(m.is_zero(), "u^2 - beta'(u,e)u + N(u)e != 0 for " + to_string(u));
            c.expect(oct_mul(ctx, u, conjugate(ctx, u)) == norm(ctx, u) * e, "u conj(u) != N(u) e");
            auto im = Oct<Rat>::imag(u.v);
            c.expect(conjugate(ctx, im) == Rat(-1) * im, "conj of imaginary is not -u");
        }
    });
}

CheckResult oct_adjoint(std::uint64_t seed) {
    return guarded("adjointness beta'(uv, w) = beta'(v, conj(u) w) = beta'(u, w conj(v)) on 100 triples",
                   [&](Check& c) {
                       const auto& ctx = fctx();
                       Rng rng(seed + 2);
                       for (int k = 0; k < 100; ++k) {
                           auto u = random_oct(rng), v = random_oct(rng), w = random_oct(rng);
                           Rat a = beta_prime(ctx, oct_mul(ctx, u, v), w);
                           Rat b = beta_prime(ctx, v, oct_mul(ctx, conjugate(ctx, u), w));
                           Rat d = beta_prime(ctx, u, oct_mul(ctx, w, conjugate(ctx, v)));
                           c.expect(a == b && b == d, "adjointness fails");
                       }
                   });
}

CheckResult oct_zero_divisors(std::uint64_t seed) {
    return guarded("left multiplication by u is singular iff N(u) = 0", [&](Check& c) {
        const auto& ctx = fctx();
        Rng rng(seed + 3);
        auto left_rank = [&](const Oct<Rat>& u) {
            Matrix<Rat> m = zero_matrix<Rat>(8, 8);
            for (int j = 0; j < 8; ++j) {
                Oct<Rat> b = j == 0 ? Oct<Rat>::unit() : Oct<Rat>::basis(j);
                auto p = oct_mul(ctx, u, b);
                m[0][j] = p.s;
                for (int i = 0; i < 7; ++i) m[i + 1][j] = p.v[i];
            }
            return rank(m);
        };
        for (int k = 0; k < 40; ++k) {
            auto u = random_oct(rng);
            bool null = norm(ctx, u) == 0;
            std::size_t r = left_rank(u);
            c.expect(null ? r < 8 : r == 8, "rank " + std::to_string(r) + " for " + to_string(u));
        }
        // Isotropic samples: f_i + f_j with beta(f_i, f_j) = 0, inside the kernel triples.
        for (const auto& t : kernel_triples()) {
            auto u = Oct<Rat>::basis(t[0]) + Oct<Rat>::basis(t[1]);
            c.expect(norm(ctx, u) == 0 && left_rank(u) < 8, "isotropic f" + std::to_string(t[0]) + " + f" +
                                                                  std::to_string(t[1]) + " is not a zero divisor");
        }
    });
}

CheckResult oct_basis_change() {
    return guarded("e-basis forms pushed to the f-basis equal the f-basis forms; e -> f -> e is the identity",
                   [&](Check& c) {
                       auto p = f_basis_in_e();
                       auto tri = transport_tri(standard_gamma(BasisKind::EBasis), p);
                       auto fg = standard_gamma(BasisKind::FBasis);
                       std::set<Triple> keys;
                       for (const auto& [t, v] : tri) keys.insert(t);
                       for (const auto& [t, v] : fg.coeffs) keys.insert(t);
                       for (const auto& t : keys) {
                           GaussRat got = tri.count(t) ? tri.at(t) : GaussRat(0);
                           GaussRat want = fg.coeffs.count(t) ? GaussRat(fg.coeffs.at(t)) : GaussRat(0);
                           c.expect(got == want, "gamma mismatch on f" + std::to_string(t[0]) + std::to_string(t[1]) +
                                                     std::to_string(t[2]) + ": " + to_string(got));
                       }
                       auto bil = transport_bil(standard_beta(BasisKind::EBasis), p);
                       auto fb = standard_beta(BasisKind::FBasis);
                       for (int i = 0; i < 7; ++i)
                           for (int j = 0; j < 7; ++j)
                               c.expect(bil[i][j] == GaussRat(fb.m[i][j]), "beta mismatch");
                       for (int i = 1; i <= 7; ++i) {
                           auto b = basis_vec<GaussRat>(i);
                           c.expect(f_to_e(e_to_f(b)) == b && e_to_f(f_to_e(b)) == b, "round trip fails");
                       }
                       const auto& g = fctx().gamma;
                       c.expect(g.value(1, 4, 7) == 1 && g.value(2, 3, 7) == -1 && g.value(1, 5, 6) == -1,
                                "f-basis gamma values");
                       c.expect(standard_gamma(BasisKind::EBasis).value(1, 2, 3) == 2, "gamma(e1,e2,e3) = 2");
                       c.expect(fb.at(4, 4) == -2 && fb.at(1, 7) == -1, "f-basis beta values");
                   });
}

CheckResult oct_dagger() {
    return guarded("dagger: (-f7*)^dagger = f1, (f4*)^dagger = -1/2 f4, dagger_inv inverts", [&](Check& c) {
        const auto& ctx = fctx();
        auto phi = zero_vec<Rat>();
        phi[6] = -1;
        c.expect(dagger(ctx, phi) == basis_vec<Rat>(1), "(-f7*)^dagger");
        auto f4 = zero_vec<Rat>();
        f4[3] = 1;
        auto half = zero_vec<Rat>();
        half[3] = Rat(-1, 2);
        c.expect(dagger(ctx, f4) == half, "(f4*)^dagger");
        for (int i = 1; i <= 7; ++i)
            c.expect(dagger_inv(ctx, dagger(ctx, basis_vec<Rat>(i))) == basis_vec<Rat>(i), "dagger_inv o dagger");
    });
}

CheckResult oct_bryant() {
    return guarded("Bryant form of gamma equals beta entry by entry (integer 7-form divided by -3)", [&](Check& c) {
        auto rep = bryant_form(standard_gamma(BasisKind::FBasis));
        auto beta = standard_beta(BasisKind::FBasis);
        c.expect(rep.nondegenerate, "Bryant form is degenerate");
        c.expect(rep.divisible, "wedge coefficient not divisible by 3");
        for (int p = 1; p <= 7; ++p)
            for (int q = 1; q <= 7; ++q)
                c.expect(rep.form.at(p, q) == beta.at(p, q),
                         "entry (" + std::to_string(p) + "," + std::to_string(q) + "): " + to_string(rep.form.at(p, q)));
        c.expect(rep.wedge[0][6] == 3 && rep.wedge[3][3] == 6, "wedge coefficients 3 and 6");
        auto zero = bryant_form(TriForm{});
        c.expect(!zero.nondegenerate, "zero form should be degenerate");
    });
}

CheckResult oct_compat() {
    return guarded("compatibility identity holds on the spanning sample; fails when beta(f4,f4) = -1", [&](Check& c) {
        auto pairs = spanning_pairs();
        auto rep = check_compatible(standard_gamma(BasisKind::FBasis), standard_beta(BasisKind::FBasis), pairs);
        c.expect(rep.ok, "standard forms fail");
        c.expect(rep.pairs_checked == pairs.size(), "not all pairs checked");
        auto bad = standard_beta(BasisKind::FBasis);
        bad.m[3][3] = -1;
        auto rep2 = check_compatible(standard_gamma(BasisKind::FBasis), bad, pairs);
        c.expect(!rep2.ok && rep2.counterexample.has_value(), "perturbed beta should fail with a counterexample");
        if (rep2.counterexample)
            c.note("counterexample u = " + to_string(rep2.counterexample->first) +
                   ", v = " + to_string(rep2.counterexample->second) + ": " + to_string(rep2.lhs) +
                   " != " + to_string(rep2.rhs));
        auto one = check_compatible(standard_gamma(BasisKind::FBasis), standard_beta(BasisKind::FBasis),
                                    {{basis_vec<Rat>(1), basis_vec<Rat>(7)}});
        c.expect(one.ok && one.lhs == -1 && one.rhs == -1, "(f1, f7): both sides -1");
    });
}

CheckResult oct_kernels() {
    return guarded("isotropic kernels E_{f_i} reproduce the six triples and the 12 fixed points", [&](Check& c) {
        const std::vector<Triple> want{{1, 2, 3}, {2, 1, 5}, {3, 1, 6}, {5, 2, 7}, {6, 3, 7}, {7, 5, 6}};
        c.expect(kernel_triples() == want, "kernel triples differ");
        const std::vector<std::pair<int, int>> pts{{1, 2}, {1, 3}, {2, 1}, {2, 5}, {3, 1}, {3, 6},
                                                   {5, 2}, {5, 7}, {6, 3}, {6, 7}, {7, 5}, {7, 6}};
        c.expect(fixed_points() == pts, "fixed points differ");
        const auto& ctx = fctx();
        for (const auto& t : want) {
            auto ker = isotropic_kernel(ctx, basis_vec<Rat>(t[0]));
            c.expect(ker.size() == 3, "kernel of f" + std::to_string(t[0]) + " is not 3-dimensional");
            Matrix<Rat> m;
            for (const auto& v : ker) m.push_back(std::vector<Rat>(v.begin(), v.end()));
            for (int k : t) {
                auto b = basis_vec<Rat>(k);
                m.push_back(std::vector<Rat>(b.begin(), b.end()));
            }
            c.expect(rank(m) == 3, "kernel of f" + std::to_string(t[0]) + " is not the listed span");
            for (const auto& v : ker)
                c.expect(oct_mul(ctx, Oct<Rat>::basis(t[0]), Oct<Rat>::imag(v)).is_zero(), "u v != 0 on the kernel");
        }
        auto u = basis_vec<Rat>(1) + basis_vec<Rat>(2);
        auto ker = isotropic_kernel(ctx, u);
        Matrix<Rat> m;
        for (const auto& v : ker) m.push_back(std::vector<Rat>(v.begin(), v.end()));
        std::size_t r = rank(m);
        m.push_back(std::vector<Rat>(u.begin(), u.end()));
        c.expect(ker.size() == 3 && r == 3 && rank(m) == 3, "kernel of f1 + f2");
        bool threw = false;
        try {
            isotropic_kernel(ctx, basis_vec<Rat>(1) + basis_vec<Rat>(7));
        } catch (const NotIsotropic&) {
            threw = true;
        }
        c.expect(threw, "f1 + f7 should raise NotIsotropic");
    });
}

CheckResult oct_cross_lambda() {
    return guarded("vw = lambda u on E_u: (f1,f2,f3) -> 1, (f1,f3,f2) -> -1, bilinear in v", [&](Check& c) {
        const auto& ctx = fctx();
        auto f = [](int i) { return basis_vec<Rat>(i); };
        c.expect(cross_lambda(ctx, f(1), f(2), f(3)) == 1, "(f1,f2,f3)");
        c.expect(cross_lambda(ctx, f(1), f(3), f(2)) == -1, "(f1,f3,f2)");
        // Symbolic a f2 + b f3 + c f1 against f3.
        using K = MPoly;
        auto u = lift<K>(f(1));
        auto v = scale(X(Var::a), lift<K>(f(2))) + scale(X(Var::b), lift<K>(f(3))) + scale(X(Var::c), lift<K>(f(1)));
        c.expect(cross_lambda_generic(ctx, u, v, lift<K>(f(3)), 1) == X(Var::a), "lambda = a");
        // lambda = 0 exactly when u lies in span{v, w}.
        auto w2 = scale(X(Var::d), lift<K>(f(2))) + scale(X(Var::e), lift<K>(f(3)));
        K lam = cross_lambda_generic(ctx, u, scale(X(Var::a), lift<K>(f(2))) + scale(X(Var::b), lift<K>(f(3))), w2, 1);
        c.expect(lam == X(Var::a) * X(Var::e) - X(Var::b) * X(Var::d), "lambda = ae - bd on a 2-plane");
        bool threw = false;
        try {
            cross_lambda(ctx, f(1), f(2), f(7));
        } catch (const NotProportional&) {
            threw = true;
        }
        c.expect(threw, "f2 f7 is not a multiple of f1");
    });
}

CheckResult oct_torus() {
    return guarded("torus weights sum to zero on every gamma and beta support", [&](Check& c) {
        auto rep = torus_invariance_check(fctx());
        c.expect(rep.ok, "offending supports");
        for (const auto& s : rep.offending) c.note(s);
        c.expect(rep.triples == 5, "expected 5 gamma triples, got " + std::to_string(rep.triples));
        auto w = torus_weights();
        c.expect(w[1][0] + w[2][0] + w[6][0] == 0 && w[1][1] + w[2][1] + w[6][1] == 0, "triple (2,3,7)");
    });
}

CheckResult oct_flags() {
    return guarded("gamma-isotropic implies beta-isotropic; basic triple e1, e2, e5 is orthogonal", [&](Check& c) {
        const auto& ctx = fctx();
        auto f1 = basis_vec<Rat>(1), f2 = basis_vec<Rat>(2);
        c.expect(oct_mul(ctx, Oct<Rat>::imag(f1), Oct<Rat>::imag(f2)).is_zero(), "f1 f2 = 0");
        c.expect(ctx.beta.eval(f1, f1) == 0 && ctx.beta.eval(f1, f2) == 0 && ctx.beta.eval(f2, f2) == 0,
                 "flag <f1> in <f1,f2> is beta-isotropic");
        auto ectx = standard_forms(BasisKind::EBasis);
        auto a = Oct<Rat>::basis(1), b = Oct<Rat>::basis(2), cc = Oct<Rat>::basis(5);
        auto ab = oct_mul(ectx, a, b);
        std::vector<Oct<Rat>> eight{Oct<Rat>::unit(), a, b, ab, cc, oct_mul(ectx, a, cc), oct_mul(ectx, b, cc),
                                    oct_mul(ectx, ab, cc)};
        for (std::size_t i = 0; i < 8; ++i) {
            c.expect(!eight[i].is_zero(), "basic product vanishes");
            for (std::size_t j = i + 1; j < 8; ++j)
                c.expect(beta_prime(ectx, eight[i], eight[j]) == 0, "basic products not orthogonal");
        }
    });
}

CheckResult oct_big_cell() {
    return guarded("big cell rows multiply to the zero octonion and are isotropic, symbolically in a..e, g",
                   [&](Check& c) {
                       const auto& ctx = fctx();
                       auto [r1, r2] = big_cell_rows<MPoly>(X(Var::a), X(Var::b), X(Var::c), X(Var::d), X(Var::e),
                                                            X(Var::g));
                       auto p = oct_mul(ctx, Oct<MPoly>::imag(r1), Oct<MPoly>::imag(r2));
                       c.expect(p.is_zero(), "row1 row2 = " + to_string(p));
                       c.expect(ctx.beta.eval(r1, r1).is_zero() && ctx.beta.eval(r2, r2).is_zero(),
                                "rows are not isotropic");
                       auto [z1, z2] = big_cell_rows<Rat>(0, 0, 0, 0, 0, 0);
                       c.expect(z1 == basis_vec<Rat>(7) && z2 == basis_vec<Rat>(6), "cell center is e(7 6)");
                       auto [a1, a2] = big_cell_rows<Rat>(1, 0, 0, 0, 0, 0);
                       VecV<Rat> want{0, 1, 0, 0, 0, 0, 1};
                       c.expect(a1 == want, "a = 1 row");
                       c.expect(oct_mul(ctx, Oct<Rat>::imag(a1), Oct<Rat>::imag(a2)).is_zero(), "a = 1 product");
                   });
}

// ---------------------------------------------------------------- weyl

CheckResult weyl_elements() {
    return guarded("W(G2) has 12 elements, lengths 1,2,2,2,2,2,1, s = 2 1, t = 1 3, w0 = 7 6", [&](Check& c) {
        const auto& el = all_elements();
        c.expect(el.size() == 12, "size");
        std::vector<int> mult(7, 0);
        for (const auto& w : el) ++mult[w.length()];
        c.expect(mult == std::vector<int>{1, 2, 2, 2, 2, 2, 1}, "length multiplicities");
        c.expect(WeylElt::s().pair() == std::pair(2, 1) && WeylElt::t().pair() == std::pair(1, 3), "s, t pairs");
        c.expect(WeylElt::id().pair() == std::pair(1, 2), "id = 1 2");
        c.expect(WeylElt::w0().pair() == std::pair(7, 6) && WeylElt::w0().length() == 6, "w0 = 7 6");
        c.expect(WeylElt::from_word("ststst") == WeylElt::from_word("tststs"), "two words of w0");
        int reduced_words = 0;
        for (const auto& w : el) {
            // Count reduced words by brute force over alternating words of that length.
            int n = 0;
            for (char first : {'s', 't'}) {
                std::string word;
                for (int i = 0; i < w.length(); ++i) word += (i % 2 == 0) ? first : (first == 's' ? 't' : 's');
                if (WeylElt::from_word(word) == w) ++n;
            }
            if (w.length() == 0) n = 1;
            if (w != WeylElt::w0()) c.expect(n == 1, "unique reduced word for " + w.name());
            reduced_words += n;
        }
        c.expect(reduced_words == 13, "13 reduced words in total");
        c.expect(embed_s7(WeylElt::s()).str() == "2 1 5 4 3 7 6", "s in S7");
        c.expect(embed_s7(WeylElt::t()).str() == "1 3 2 4 6 5 7", "t in S7");
    });
}

CheckResult weyl_group() {
    return guarded("word multiplication agrees with S7 composition on all 144 pairs; inverses, lengths",
                   [&](Check& c) {
                       const auto& el = all_elements();
                       for (const auto& u : el)
                           for (const auto& w : el)
                               c.expect(embed_s7(mul(u, w)) == embed_s7(u) * embed_s7(w),
                                        "mul(" + u.name() + ", " + w.name() + ")");
                       for (const auto& w : el) {
                           c.expect(mul(w, inv(w)) == WeylElt::id() && inv(w).length() == w.length(), "inverse");
                           auto p = embed_s7(w);
                           for (int i = 1; i <= 7; ++i) c.expect(p(i) + p(8 - i) == 8, "w(i) + w(8-i) = 8");
                           c.expect(p(1) == w.pair().first && p(2) == w.pair().second, "pair encoding");
                       }
                       c.expect(mul(WeylElt::s(), WeylElt::s()) == WeylElt::id(), "ss = id");
                       c.expect(inv(WeylElt::from_word("st")) == WeylElt::from_word("ts"), "inv(st) = ts");
                   });
}

CheckResult weyl_extend() {
    return guarded("extend_pair agrees with embed_s7 on all 12 elements; 6 3 -> 6 3 7 4 1 5 2", [&](Check& c) {
        for (const auto& [i, j] : fixed_points()) {
            auto w = WeylElt::from_pair(i, j);
            c.expect(extend_pair(i, j) == embed_s7(w), "pair " + std::to_string(i) + " " + std::to_string(j));
        }
        c.expect(extend_pair(6, 3).str() == "6 3 7 4 1 5 2", "6 3");
        c.expect(extend_pair(1, 2) == Perm7::identity(), "1 2");
        c.expect(extend_pair(7, 6).str() == "7 6 5 4 3 2 1", "7 6");
        bool threw = false;
        try {
            extend_pair(1, 7);
        } catch (const InvalidPair&) {
            threw = true;
        }
        c.expect(threw, "1 7 is not a fixed point");
    });
}

CheckResult weyl_bruhat() {
    return guarded("Bruhat order: u <= w iff l(u) < l(w) or u = w", [&](Check& c) {
        const auto& el = all_elements();
        for (const auto& u : el)
            for (const auto& w : el) {
                bool want = u.length() < w.length() || u == w;
                c.expect(bruhat_leq(u, w) == want, "bruhat(" + u.name() + ", " + w.name() + ")");
            }
        c.expect(rank_fn(WeylElt::id(), 1, 1) == 1 && rank_fn(WeylElt::w0(), 1, 6) == 0, "rank function");
    });
}

// ---------------------------------------------------------------- divided differences

CheckResult dd_basic() {
    return guarded("explicit operators on small inputs", [&](Check& c) {
        const MPoly x1 = X(Var::x1), x2 = X(Var::x2);
        c.expect(div_diff(OpKind::S, x1) == 1 && div_diff(OpKind::S, x2) == -1 && div_diff(OpKind::S, x1 * x2).is_zero(),
                 "d_s on x1, x2, x1 x2");
        c.expect(div_diff(OpKind::T, x1).is_zero() && div_diff(OpKind::T, x1 + x2) == 1, "d_t on x1, x1 + x2");
        MPoly pt = Rat(1, 2) * x1.pow(5) * x2;
        MPoly want = Rat(1, 2) * x1 * x2 * (x1.pow(3) + x1.pow(2) * x2 + x1 * x2.pow(2) + x2.pow(3));
        c.expect(div_diff(OpKind::S, pt) == want, "d_s(1/2 x1^5 x2)");
        c.expect(div_diff_word("ststst", MPoly(7)).is_zero(), "constant -> 0");
        bool threw = false;
        try {
            DividedDiffOp::from_word("ss");
        } catch (const NonReducedWord&) {
            threw = true;
        }
        c.expect(threw, "ss is not reduced");
    });
}

CheckResult dd_square(std::uint64_t seed) {
    return guarded("d_s d_s = 0 and d_t d_t = 0 on 50 random inputs", [&](Check& c) {
        Rng rng(seed + 10);
        for (int k = 0; k < 50; ++k) {
            MPoly f = random_poly(rng, kXY, 6, 8);
            c.expect(div_diff(OpKind::S, div_diff(OpKind::S, f)).is_zero(), "d_s^2 f != 0 for " + to_string(f));
            c.expect(div_diff(OpKind::T, div_diff(OpKind::T, f)).is_zero(), "d_t^2 f != 0 for " + to_string(f));
            MPoly g = div_diff(OpKind::S, f);
            c.expect(g.is_zero() || f.component(static_cast<unsigned>(f.degree())).is_zero() ||
                         g.degree() <= f.degree() - 1,
                     "degree does not drop");
        }
    });
}

CheckResult dd_braid(std::uint64_t seed) {
    return guarded("braid relation d_ststst = d_tststs on 50 random degree-6 inputs", [&](Check& c) {
        Rng rng(seed + 11);
        for (int k = 0; k < 50; ++k) {
            MPoly f = random_poly(rng, kXY, 6, 10) + random_binary_form(rng, 6);
            c.expect(div_diff_word("ststst", f) == div_diff_word("tststs", f), "braid fails on " + to_string(f));
        }
    });
}

CheckResult dd_generic(std::uint64_t seed) {
    return guarded("root-data operator matches the explicit d_s and d_t on 50 random inputs", [&](Check& c) {
        Rng rng(seed + 12);
        const auto& d = RootDict::g2();
        c.expect(d.root(0) == X(Var::x1) - X(Var::x2), "a1 = x1 - x2");
        c.expect(d.root(1) == 2 * X(Var::x2) - X(Var::x1), "a2 = -x1 + 2 x2");
        for (int k = 0; k < 50; ++k) {
            MPoly f = random_poly(rng, kXY, 6, 8);
            c.expect(generic_div_diff(d, 0, f) == div_diff(OpKind::S, f), "s mismatch on " + to_string(f));
            c.expect(generic_div_diff(d, 1, f) == div_diff(OpKind::T, f), "t mismatch on " + to_string(f));
        }
    });
}

CheckResult dd_twisted(std::uint64_t seed) {
    return guarded("twisted d_t at v = 0 equals d_t on 50 random inputs", [&](Check& c) {
        Rng rng(seed + 13);
        std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::v};
        for (int k = 0; k < 50; ++k) {
            MPoly f = random_poly(rng, vars, 6, 8);
            MPoly tw = substitute_some(div_diff(OpKind::TTwisted, f), {{Var::v, MPoly()}});
            MPoly plain = div_diff(OpKind::T, substitute_some(f, {{Var::v, MPoly()}}));
            c.expect(tw == plain, "mismatch on " + to_string(f));
            c.expect(div_diff(OpKind::TTwisted, div_diff(OpKind::TTwisted, f)).is_zero(), "twisted square");
        }
    });
}

CheckResult dd_divide(std::uint64_t seed) {
    return guarded("(f - s f) is divisible by x1 - x2 for 50 random f; exact_divide(f g, g) = f", [&](Check& c) {
        Rng rng(seed + 14);
        const MPoly a1 = X(Var::x1) - X(Var::x2);
        for (int k = 0; k < 50; ++k) {
            MPoly f = random_poly(rng, kXY, 6, 8);
            MPoly sf = substitute_some(f, {{Var::x1, X(Var::x2)}, {Var::x2, X(Var::x1)}});
            MPoly q = exact_divide(f - sf, a1);
            c.expect(q * a1 == f - sf, "quotient does not multiply back");
            MPoly g = random_poly(rng, kXY, 3, 4);
            if (!g.is_zero()) c.expect(exact_divide(f * g, g) == f, "exact_divide(f g, g)");
        }
        c.expect(exact_divide(MPoly(), a1).is_zero(), "0 / g");
    });
}

// ---------------------------------------------------------------- families

CheckResult fam_tables(FamilyKind k) {
    return guarded("family " + family_name(k) + ": operator action, degrees, both words of w0", [&](Check& c) {
        auto fam = generate_family(k);
        auto rep = check_family(fam);
        c.expect(rep.ok, "operator action");
        for (const auto& f : rep.failures) c.note(f);
        for (const auto& w : all_elements())
            c.expect(fam[w].is_homogeneous() && fam[w].degree() == w.length(), "deg P_" + w.name());
        if (k == FamilyKind::Chern || k == FamilyKind::Graham || k == FamilyKind::EquivariantChern ||
            k == FamilyKind::EquivariantGraham || k == FamilyKind::ChernTwisted)
            c.expect(fam[WeylElt::id()] == 1, "P_id = 1");
        auto alt = generate_family(k, true);
        c.expect(alt.table == fam.table, "tststs and ststst tables differ");
        c.expect(fam[WeylElt::w0()] == top_class(k), "P_w0 is the top class");
    });
}

CheckResult fam_examples() {
    return guarded("top classes: point = 1/2 x1^5 x2, Chern family at y = 0, Chern form", [&](Check& c) {
        MPoly x1 = X(Var::x1), x2 = X(Var::x2);
        c.expect(top_class(FamilyKind::Point) == Rat(1, 2) * x1.pow(5) * x2, "point");
        MPoly p0 = substitute_some(top_class(FamilyKind::Chern), {{Var::y1, MPoly()}, {Var::y2, MPoly()}});
        c.expect(p0 == Rat(1, 2) * x1.pow(5) * x2 - Rat(1, 2) * x1.pow(6), "Chern family at y = 0");
        FlBase base = FlBase::split(Var::y1, Var::y2);
        MPoly chern = top_class_from_chern(base.c1F3, base.c2F3, base.c3F3, base.c1F1, X(Var::y2));
        c.expect(chern == top_class(FamilyKind::Chern), "Chern form with split data");
        auto fam = generate_family(FamilyKind::Chern);
        c.expect(fam[WeylElt::s()].degree() == 1 && fam[WeylElt::t()].degree() == 1, "P_s, P_t degree 1");
        c.expect(div_diff_word("ststst", top_class(FamilyKind::Chern)) == 1, "d_w0 P_w0 = 1");
    });
}

CheckResult fam_word_independence(std::uint64_t seed) {
    return guarded("d_ststst f = d_tststs f on 20 random degree-6 f", [&](Check& c) {
        Rng rng(seed + 20);
        for (int k = 0; k < 20; ++k) {
            MPoly f = random_binary_form(rng, 6) + random_poly(rng, kXY, 6, 4);
            c.expect(div_diff_word("ststst", f) == div_diff_word("tststs", f), "words disagree");
        }
    });
}

CheckResult fam_twist(std::uint64_t seed) {
    return guarded("twisted top class equals its explicit expansion term by term", [&](Check& c) {
        MPoly tw = twist_substitution(top_class(FamilyKind::Chern));
        MPoly disp = twisted_top_display();
        c.expect(tw == disp, "difference: " + to_string(tw - disp));
        c.expect(parse_poly(twisted_top_display_text()) == disp, "text display parses to the same polynomial");
        c.expect(top_class(FamilyKind::ChernTwisted) == tw, "twisted family top class");
        std::size_t n = disp.size();
        c.note(std::to_string(n) + " monomials matched");
        Rng rng(seed + 21);
        std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::y2, Var::v};
        for (int k = 0; k < 20; ++k) {
            MPoly f = random_poly(rng, vars, 5, 6);
            c.expect(twist_substitution(twist_substitution(f), TwistDirection::Inverse) == f, "twist round trip");
            c.expect(substitute_some(twist_substitution(f), {{Var::v, MPoly()}}) ==
                         substitute_some(f, {{Var::v, MPoly()}}),
                     "v = 0 is the identity");
        }
    });
}

CheckResult fam_graham() {
    return guarded("Graham product form equals the top class; equivariant identity holds", [&](Check& c) {
        auto a = graham_product_form_check();
        c.expect(a.ok, "product form difference: " + to_string(a.difference));
        c.expect(a.lhs.degree() == 6 && a.rhs.degree() == 6, "degree 6");
        auto b = graham_integrality_identity();
        c.expect(b.ok, "integrality identity difference: " + to_string(b.difference));
        // t = 0: 1/2 xi1 xi2 xi3 = -1/9 P~_tst(x; 0).
        auto xi = graham_xi();
        auto fam = generate_family(FamilyKind::Graham);
        Assignment y0{{Var::y1, MPoly()}, {Var::y2, MPoly()}};
        MPoly lhs = Rat(1, 2) * xi[0] * xi[1] * xi[2];
        MPoly rhs = Rat(-1, 9) * substitute_some(fam[WeylElt::from_word("tst")], y0);
        c.expect(lhs == rhs, "t = 0 specialization");
    });
}

CheckResult fam_change(std::uint64_t seed) {
    return guarded("Graham change of variables round trips on 20 random polynomials", [&](Check& c) {
        Rng rng(seed + 22);
        for (int k = 0; k < 20; ++k) {
            MPoly f = random_poly(rng, kXY, 4, 6);
            MPoly g = substitute_some(substitute_some(f, graham_change()), graham_change_inverse());
            c.expect(g == f, "round trip fails on " + to_string(f));
        }
    });
}

// ---------------------------------------------------------------- rings

CheckResult ring_verify(const Presentation& p, std::size_t rank) {
    return guarded("presentation " + p.name + ": rank " + std::to_string(rank) + ", closure, associativity",
                   [&](Check& c) {
                       auto rep = verify_presentation(p);
                       c.expect(rep.ok, "verification failed");
                       c.expect(rep.rank == rank, "rank " + std::to_string(rep.rank));
                       for (const auto& l : rep.lines)
                           if (!rep.ok) c.note(l);
                   });
}

CheckResult ring_point_examples() {
    return guarded("point rings: x1^3 -> 2 alpha, x2^2 -> x1 x2 - x1^2, alpha^2 -> 0, x1^6 -> 0", [&](Check& c) {
        auto ip = fl_integral_point();
        MPoly x1 = X(Var::x1), x2 = X(Var::x2), al = X(Var::alpha);
        c.expect(reduce(ip, x1.pow(3)) == 2 * al, "x1^3");
        c.expect(reduce(ip, x2.pow(2)) == x1 * x2 - x1.pow(2), "x2^2");
        c.expect(reduce(ip, al.pow(2)).is_zero(), "alpha^2");
        auto hp = fl_half_point();
        c.expect(reduce(hp, x1.pow(6)).is_zero(), "x1^6");
        auto nf = normal_form(hp, Rat(1, 2) * x1.pow(5) * x2);
        c.expect(!nf.is_zero() && nf.coeffs.back() != 0, "point class is the top basis element");
        bool threw = false;
        try {
            normal_form(ip, Rat(1, 2) * x1);
        } catch (const NonIntegralReduction&) {
            threw = true;
        }
        c.expect(threw, "1/2 x1 is not integral");
    });
}

CheckResult ring_idempotent(std::uint64_t seed) {
    return guarded("normal form is idempotent and linear in every presentation", [&](Check& c) {
        Rng rng(seed + 30);
        for (const auto& name : presentation_names()) {
            Presentation p = presentation_by_name(name == "quadric-fiber:N" ? "quadric-fiber:3" : name);
            std::vector<Var> vars = p.ring_vars;
            vars.insert(vars.end(), p.base_vars.begin(), p.base_vars.end());
            for (int k = 0; k < 10; ++k) {
                MPoly f = random_poly(rng, vars, 7, 6), g = random_poly(rng, vars, 7, 6);
                MPoly rf = reduce(p, f), rg = reduce(p, g);
                c.expect(reduce(p, rf) == rf, p.name + ": not idempotent");
                c.expect(reduce(p, f + Rat(3, 2) * g) == rf + Rat(3, 2) * rg, p.name + ": not linear");
            }
        }
    });
}

CheckResult ring_specializations() {
    return guarded("bundle at the point is the point ring; S3 Chern classes; half relation identity", [&](Check& c) {
        auto sym = fl_integral_bundle(FlBase::symbolic());
        Assignment zero;
        for (auto v : FlBase::symbolic().vars) zero[v] = MPoly();
        auto pt = specialize(sym, zero, "fl-integral-point", {});
        c.expect(same_rules(pt, fl_integral_point()), "symbolic bundle at zero != point ring");
        c.expect(chern_s3_consistency(sym, FlBase::symbolic()), "S3 Chern classes (symbolic)");
        auto split = fl_integral_bundle(FlBase::split(Var::y1, Var::y2), "fl-integral-split");
        c.expect(chern_s3_consistency(split, FlBase::split(Var::y1, Var::y2)), "S3 Chern classes (split)");
        // The sextic equals r2 x1^4 - r4 x1^2 + r6 for the e_i-relations r_i.
        auto half = fl_half_bundle();
        MPoly x1 = X(Var::x1);
        const auto& r = half.generators;
        MPoly sextic;
        for (const auto& rule : half.rules)
            if (rule.lhs == Monomial::of(Var::x1) * Monomial::of(Var::x1) * Monomial::of(Var::x1) *
                                Monomial::of(Var::x1) * Monomial::of(Var::x1) * Monomial::of(Var::x1))
                sextic = x1.pow(6) - rule.rhs;
        c.expect(!sextic.is_zero() && sextic == r[0] * x1.pow(4) - r[1] * x1.pow(2) + r[2],
                 "sextic is not in the ideal of the e_i relations");
    });
}

CheckResult ring_quadric_fiber() {
    return guarded("quadric bundle: fiber at c = 0 is Z[h,f]/(h^3 - 2f, f^2); relation 2hf = c(V/F) terms", [&](Check& c) {
        auto q = quadric_bundle_split3();
        auto fiber = specialize(q, {{Var::y1, MPoly()}, {Var::y2, MPoly()}}, "fiber", {});
        auto want = quadric_fiber(3);
        c.expect(same_rules(fiber, want), "fiber specialization");
        MPoly h = X(Var::h), f = X(Var::f);
        c.expect(reduce(want, h.pow(3)) == 2 * f && reduce(want, f.pow(2)).is_zero(), "h^3 = 2f, f^2 = 0");
        c.expect(reduce(want, 2 * h * f - h.pow(4)).is_zero(), "2hf = h^4 in the fiber");
        MPoly res = quadric_eg_residue();
        c.expect(res.is_zero(), "residue " + to_string(res));
        for (int n : {1, 2, 4, 5}) {
            auto p = quadric_fiber(n);
            auto rep = verify_presentation(p);
            c.expect(rep.ok && rep.rank == static_cast<std::size_t>(2 * n), "fiber ring n = " + std::to_string(n));
            c.expect(reduce(p, f.pow(2)).is_zero(), "f^2 = 0 for n = " + std::to_string(n));
        }
    });
}

CheckResult ring_chern_graham() {
    return guarded("P_w - P~_w reduces to 0 in the half bundle ring for all 12 w", [&](Check& c) {
        auto half = fl_half_bundle();
        auto p = generate_family(FamilyKind::Chern), g = generate_family(FamilyKind::Graham);
        for (const auto& w : all_elements())
            c.expect(normal_form(half, p[w] - g[w]).is_zero(), "P_" + w.name() + " - P~_" + w.name());
    });
}

CheckResult ring_chern_point() {
    return guarded("Chern family at y = 0 reduces to the point family in the half point ring", [&](Check& c) {
        auto hp = fl_half_point();
        auto p = generate_family(FamilyKind::Chern), pt = generate_family(FamilyKind::Point);
        Assignment y0{{Var::y1, MPoly()}, {Var::y2, MPoly()}};
        for (const auto& w : all_elements())
            c.expect(normal_form(hp, substitute_some(p[w], y0)) == normal_form(hp, pt[w]), "w = " + w.name());
        auto g = generate_family(FamilyKind::Graham);
        for (const auto& w : all_elements())
            c.expect(normal_form(hp, substitute_some(g[w], y0)) == normal_form(hp, pt[w]), "Graham w = " + w.name());
    });
}

CheckResult ring_expand() {
    return guarded("Schubert expansion: P_w is an indicator, x1 = P_s, x1 + x2 = P_t", [&](Check& c) {
        auto hp = fl_half_point();
        auto pt = generate_family(FamilyKind::Point);
        const auto& el = all_elements();
        for (const auto& w : el) {
            auto co = schubert_expand(pt[w], pt, hp);
            for (const auto& u : el) c.expect(co[u.index()] == MPoly(u == w ? 1 : 0), "expand P_" + w.name());
        }
        auto co = schubert_expand(X(Var::x1), pt, hp);
        c.expect(co[WeylElt::s().index()] == 1, "x1 = P_s");
        co = schubert_expand(X(Var::x1) + X(Var::x2), pt, hp);
        c.expect(co[WeylElt::t().index()] == 1, "x1 + x2 = P_t");
        auto half = fl_half_bundle();
        auto pf = generate_family(FamilyKind::Chern);
        for (const auto& w : el) {
            auto cw = schubert_expand(pf[w], pf, half);
            for (const auto& u : el) c.expect(cw[u.index()] == MPoly(u == w ? 1 : 0), "bundle expand P_" + w.name());
        }
    });
}

CheckResult ring_duality() {
    return guarded("duality pairing on complementary lengths is u -> w0 u", [&](Check& c) {
        auto hp = fl_half_point();
        const auto& el = all_elements();
        for (auto k : {FamilyKind::Point, FamilyKind::Chern}) {
            auto fam = generate_family(k);
            if (k == FamilyKind::Chern) {
                Assignment y0{{Var::y1, MPoly()}, {Var::y2, MPoly()}};
                for (auto& p : fam.table) p = substitute_some(p, y0);
            }
            auto m = duality_pairing(fam, hp);
            for (const auto& u : el)
                for (const auto& v : el) {
                    if (u.length() + v.length() != 6) continue;
                    Rat want = v == mul(WeylElt::w0(), u) ? 1 : 0;
                    c.expect(m[u.index()][v.index()] == want, family_name(k) + " (" + u.name() + ", " + v.name() + ")");
                }
            c.expect(m[WeylElt::id().index()][WeylElt::w0().index()] == 1, "(id, w0)");
        }
    });
}

CheckResult ring_embedding(std::uint64_t seed) {
    return guarded("integral split ring embeds in the half ring on 50 random classes", [&](Check& c) {
        Rng rng(seed + 31);
        auto base = FlBase::split(Var::y1, Var::y2);
        auto integral = fl_integral_bundle(base, "fl-integral-split");
        auto half = fl_half_bundle();
        std::vector<Var> vars{Var::x1, Var::x2, Var::alpha, Var::y1, Var::y2};
        for (int k = 0; k < 50; ++k) {
            MPoly g = random_poly(rng, vars, 6, 5);
            // Integer coefficients keep the integral reduction defined.
            MPoly gi;
            for (const auto& [m, co] : g.terms()) gi.add_term(m, Rat(boost::multiprecision::numerator(co)));
            MPoly r = to_poly(integral, normal_form(integral, gi));
            c.expect(normal_form(half, alpha_to_half(r, base)) == normal_form(half, alpha_to_half(gi, base)),
                     "embedding fails on " + to_string(gi));
        }
    });
}

CheckResult eq_basis() {
    return guarded("equivariant family reduces to 12 independent normal forms over Q[t1,t2]", [&](Check& c) {
        auto eq = equivariant_half();
        auto fam = generate_family(FamilyKind::EquivariantChern);
        std::set<std::string> seen;
        for (const auto& w : all_elements()) seen.insert(to_string(eq, normal_form(eq, fam[w])));
        c.expect(seen.size() == 12, "normal forms are not distinct");
        // Every basis monomial expands, so the classes span.
        for (const auto& b : eq.basis) schubert_expand(MPoly::term(b, Rat(1)), fam, eq);
        auto g = generate_family(FamilyKind::EquivariantGraham);
        for (const auto& w : all_elements())
            c.expect(normal_form(eq, fam[w] - g[w]).is_zero(), "P_w - P~_w for w = " + w.name());
        auto ei = equivariant();
        auto sts = WeylElt::from_word("sts");
        c.expect(normal_form(ei, fam[sts]) == normal_form(ei, X(Var::alpha)), "alpha = P_sts in the integral ring");
    });
}

CheckResult imp_certificate() {
    return guarded("no degree-4 P extends the chain: certified inconsistent", [&](Check& c) {
        auto rep = impossibility_certificate();
        c.expect(rep.chain_ok, "forced chain");
        c.expect(rep.certificate_valid, "linear certificate");
        c.expect(rep.farkas_valid, "Farkas certificate");
        c.expect(rep.ok, "overall");
        // The quoted equations lie in the row space of the respective systems.
        auto in_span = [](const LinSystem& sys, std::vector<Rat> row, Rat rhs) {
            LinSystem t;
            t.num_vars = sys.a.size();
            row.push_back(rhs);
            for (std::size_t j = 0; j <= sys.num_vars; ++j) {
                std::vector<Rat> col;
                for (std::size_t i = 0; i < sys.a.size(); ++i) col.push_back(j < sys.num_vars ? sys.a[i][j] : sys.b[i]);
                t.a.push_back(col);
                t.b.push_back(row[j]);
            }
            return solve_linear(t).consistent;
        };
        c.expect(in_span(rep.dt, {0, 0, 0, 1, 2}, 0), "d = -2e");
        c.expect(in_span(rep.dt, {0, 1, 1, 1, 1}, 0), "b + c + d + e = 0");
        c.expect(in_span(rep.ds, {1, 0, 0, 0, -1}, 0), "a = e");
        c.expect(in_span(rep.ds, {0, 1, 0, -1, 0}, Rat(1, 2)), "b - d = 1/2");
        for (const auto& e : rep.dt_equations) c.note("d_t P = 0: " + e);
        for (const auto& e : rep.ds_equations) c.note("d_s P = P_tst: " + e);
        c.note("certificate value 0 = " + to_string(rep.certificate.value));
    });
}

CheckResult pos_rewrite() {
    return guarded("point family is positive in x1, x2, x3 = x1 - x2; x1 x2 - x1^2 is not", [&](Check& c) {
        auto pt = generate_family(FamilyKind::Point);
        for (const auto& w : all_elements()) {
            auto r = positive_rewrite(pt[w], w.length());
            c.expect(r.feasible && r.verified && expand_positive(r) == pt[w], "P_" + w.name());
        }
        MPoly x1 = X(Var::x1), x2 = X(Var::x2);
        auto bad = positive_rewrite(x1 * x2 - x1.pow(2), 2);
        c.expect(!bad.feasible && bad.verified, "x1 x2 - x1^2 should be certified infeasible");
        auto sq = positive_rewrite(x1.pow(2), 2);
        c.expect(sq.feasible && expand_positive(sq) == x1.pow(2), "x1^2");
    });
}

using Maker = std::function<std::vector<CheckResult>(std::uint64_t)>;

const std::vector<std::pair<std::string, Maker>>& suite_table() {
    static const std::vector<std::pair<std::string, Maker>> t = {
        {"octonion",
         [](std::uint64_t s) {
             return std::vector<CheckResult>{oct_table(s),     oct_minimal(s), oct_adjoint(s),  oct_zero_divisors(s),
                                             oct_basis_change(), oct_dagger(),   oct_bryant(),    oct_compat(),
                                             oct_kernels(),      oct_cross_lambda(), oct_torus(), oct_flags(),
                                             oct_big_cell()};
         }},
        {"weyl",
         [](std::uint64_t) {
             return std::vector<CheckResult>{weyl_elements(), weyl_group(), weyl_extend(), weyl_bruhat()};
         }},
        {"divdiff",
         [](std::uint64_t s) {
             return std::vector<CheckResult>{dd_basic(), dd_square(s), dd_braid(s), dd_generic(s), dd_twisted(s),
                                             dd_divide(s)};
         }},
        {"families",
         [](std::uint64_t s) {
             std::vector<CheckResult> out;
             for (auto k : all_families()) out.push_back(fam_tables(k));
             out.push_back(fam_examples());
             out.push_back(fam_word_independence(s));
             out.push_back(fam_twist(s));
             out.push_back(fam_graham());
             out.push_back(fam_change(s));
             return out;
         }},
        {"ring",
         [](std::uint64_t s) {
             return std::vector<CheckResult>{ring_verify(fl_integral_point(), 12),
                                             ring_verify(fl_half_point(), 12),
                                             ring_verify(fl_integral_bundle(FlBase::symbolic()), 12),
                                             ring_verify(fl_half_bundle(), 12),
                                             ring_verify(fl_half_bundle_twisted(), 12),
                                             ring_point_examples(),
                                             ring_idempotent(s),
                                             ring_specializations(),
                                             ring_chern_graham(),
                                             ring_chern_point(),
                                             ring_expand(),
                                             ring_duality(),
                                             ring_embedding(s)};
         }},
        {"equivariant",
         [](std::uint64_t) {
             return std::vector<CheckResult>{ring_verify(equivariant(), 12), ring_verify(equivariant_half(), 12),
                                             eq_basis(), fam_graham()};
         }},
        {"impossibility", [](std::uint64_t) { return std::vector<CheckResult>{imp_certificate()}; }},
        {"positivity", [](std::uint64_t) { return std::vector<CheckResult>{pos_rewrite()}; }},
        {"quadric",
         [](std::uint64_t) {
             return std::vector<CheckResult>{ring_verify(quadric_bundle_split3(), 6), ring_quadric_fiber()};
         }},
    };
    return t;
}

CheckResult all_of(const std::string& name, const std::vector<CheckResult>& parts) {
    CheckResult r;
    r.name = name;
    r.ok = true;
    for (const auto& p : parts) {
        if (p.ok) continue;
        r.ok = false;
        r.detail.push_back("failed: " + p.name);
        for (const auto& d : p.detail) r.detail.push_back("  " + d);
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, v] : suite_table()) n.push_back(k);
        return n;
    }();
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed) {
    std::vector<SuiteReport> out;
    for (const auto& [k, make] : suite_table()) {
        if (name != "all" && name != k) continue;
        out.push_back(SuiteReport{k, seed, make(seed)});
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

CheckResult acceptance_criterion(int k, std::uint64_t seed) {
    switch (k) {
        case 1: return all_of("octonion table and norm composition", {oct_table(seed)});
        case 2: return all_of("Bryant form equals beta", {oct_bryant()});
        case 3: return all_of("compatibility on the spanning sample, perturbed beta fails", {oct_compat()});
        case 4: return all_of("isotropic kernels, fixed points, extend_pair = embed_s7", {oct_kernels(), weyl_extend()});
        case 5: return all_of("big cell product vanishes symbolically", {oct_big_cell()});
        case 6:
            return all_of("divided differences: squares, braid, root data, twisted at v = 0",
                          {dd_square(seed), dd_braid(seed), dd_generic(seed), dd_twisted(seed)});
        case 7:
            return all_of("families: operator action, degrees, P_id, both words of w0",
                          {fam_tables(FamilyKind::Chern), fam_tables(FamilyKind::Graham), fam_tables(FamilyKind::Point)});
        case 8: return all_of("twisted top class matches its explicit expansion", {fam_twist(seed)});
        case 9: return all_of("Graham product form and equivariant identity", {fam_graham()});
        case 10:
            return all_of("presentations, quadric fiber, relation residue, family comparisons",
                          {ring_verify(fl_integral_point(), 12), ring_verify(fl_half_point(), 12),
                           ring_verify(fl_integral_bundle(FlBase::symbolic()), 12), ring_verify(fl_half_bundle(), 12),
                           ring_verify(quadric_bundle_split3(), 6), ring_quadric_fiber(), ring_chern_graham(),
                           ring_chern_point()});
        case 11: return all_of("duality pairing is u -> w0 u", {ring_duality()});
        case 12: return all_of("impossibility certificate and positivity", {imp_certificate(), pos_rewrite()});
        default: throw std::out_of_range("criterion " + std::to_string(k));
    }
}

}  // namespace g2sc
