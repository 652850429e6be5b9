#include "g2sc/schubert.hpp"

#include <algorithm>

namespace g2sc {

namespace {

MPoly mono_x(int i, int j) {
    Monomial m;
    m.e[idx(Var::x1)] = static_cast<std::uint16_t>(i);
    m.e[idx(Var::x2)] = static_cast<std::uint16_t>(j);
    return MPoly::term(m, Rat(1));
}

// Rows: coefficients of x1^(d-k) x2^k in each image, one column per unknown.
void coefficient_rows(const std::vector<MPoly>& images, const MPoly& rhs, int degree, LinSystem& sys) {
    sys.num_vars = images.size();
    for (int k = 0; k <= degree; ++k) {
        Monomial m;
        m.e[idx(Var::x1)] = static_cast<std::uint16_t>(degree - k);
        m.e[idx(Var::x2)] = static_cast<std::uint16_t>(k);
        std::vector<Rat> row;
        for (const auto& img : images) row.push_back(img.coeff(m));
        Rat b = rhs.coeff(m);
        if (std::all_of(row.begin(), row.end(), [](const Rat& r) { return r == 0; }) && b == 0) continue;
        sys.a.push_back(row);
        sys.b.push_back(b);
    }
}

// Drops rows proportional to an earlier row and normalizes the first coefficient sign.
void dedupe(LinSystem& sys) {
    LinSystem out;
    out.num_vars = sys.num_vars;
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        auto row = sys.a[i];
        Rat b = sys.b[i];
        auto lead = std::find_if(row.begin(), row.end(), [](const Rat& r) { return r != 0; });
        if (lead != row.end() && *lead < 0) {
            for (auto& r : row) r = -r;
            b = -b;
        }
        bool seen = false;
        for (std::size_t j = 0; j < out.a.size() && !seen; ++j) {
            Matrix<Rat> pair{out.a[j], row};
            pair[0].push_back(out.b[j]);
            pair[1].push_back(b);
            seen = rank(pair) < 2;
        }
        if (!seen) {
            out.a.push_back(row);
            out.b.push_back(b);
        }
    }
    sys = out;
}

}  // namespace

ImpossibilityReport impossibility_certificate() {
    ImpossibilityReport rep;
    const Rat h(1, 2);
    rep.chain = {
        {"id", MPoly(1)},
        {"s", mono_x(1, 0)},
        {"t", mono_x(1, 0) + mono_x(0, 1)},
        {"ts", mono_x(2, 0)},
        {"st", h * (mono_x(2, 0) + mono_x(1, 1) + mono_x(0, 2))},
        {"sts", h * mono_x(3, 0)},
        {"tst", h * (mono_x(2, 1) + mono_x(1, 2))},
        {"stst", h * mono_x(2, 2)},
    };

    // The listed chain must itself obey the operator rules wherever both ends are listed.
    rep.chain_ok = true;
    for (const auto& [word, p] : rep.chain) {
        WeylElt w = WeylElt::from_word(word);
        if (p.degree() != w.length()) rep.chain_ok = false;
        for (char c : {'s', 't'}) {
            WeylElt wc = mul(w, WeylElt::from_word(std::string(1, c)));
            MPoly got = div_diff(c == 's' ? OpKind::S : OpKind::T, p);
            if (wc.length() > w.length()) {
                if (!got.is_zero()) rep.chain_ok = false;
                continue;
            }
            auto it = std::find_if(rep.chain.begin(), rep.chain.end(),
                                   [&](const auto& e) { return WeylElt::from_word(e.first) == wc; });
            if (it == rep.chain.end() || got != it->second) rep.chain_ok = false;
        }
    }

    // P = a x1^4 + b x1^3 x2 + c x1^2 x2^2 + d x1 x2^3 + e x2^4, P = P_tsts.
    std::vector<MPoly> basis;
    for (int k = 0; k <= 4; ++k) basis.push_back(mono_x(4 - k, k));
    std::vector<MPoly> dt_img, ds_img;
    for (const auto& m : basis) {
        dt_img.push_back(div_diff(OpKind::T, m));
        ds_img.push_back(div_diff(OpKind::S, m));
    }
    const MPoly& p_tst = rep.chain[6].second;
    coefficient_rows(dt_img, MPoly(), 3, rep.dt);
    coefficient_rows(ds_img, p_tst, 3, rep.ds);
    dedupe(rep.dt);
    dedupe(rep.ds);
    for (std::size_t i = 0; i < rep.dt.a.size(); ++i)
        rep.dt_equations.push_back(format_equation(rep.dt.a[i], rep.dt.b[i], rep.names));
    for (std::size_t i = 0; i < rep.ds.a.size(); ++i)
        rep.ds_equations.push_back(format_equation(rep.ds.a[i], rep.ds.b[i], rep.names));

    // Eliminating a with the a = e row exposes b - d = 1/2.
    {
        LinSystem both = rep.ds;
        std::vector<Rat> target{Rat(0), Rat(1), Rat(0), Rat(-1), Rat(0)};
        // Solve y^T [A | b] = [target | 1/2] for the multipliers.
        LinSystem t;
        t.num_vars = both.a.size();
        for (std::size_t j = 0; j < both.num_vars; ++j) {
            std::vector<Rat> row;
            for (std::size_t i = 0; i < both.a.size(); ++i) row.push_back(both.a[i][j]);
            t.a.push_back(row);
            t.b.push_back(target[j]);
        }
        std::vector<Rat> row;
        for (std::size_t i = 0; i < both.a.size(); ++i) row.push_back(both.b[i]);
        t.a.push_back(row);
        t.b.push_back(Rat(1, 2));
        auto sol = solve_linear(t);
        if (sol.consistent) {
            rep.ds_combination = sol.solution;
            rep.ds_equations.push_back(format_equation(target, Rat(1, 2), rep.names));
        }
    }

    LinSystem all;
    all.num_vars = 5;
    for (const auto* part : {&rep.dt, &rep.ds})
        for (std::size_t i = 0; i < part->a.size(); ++i) {
            all.a.push_back(part->a[i]);
            all.b.push_back(part->b[i]);
        }
    rep.linear_alone_feasible = solve_linear(all).consistent;

    // Nonnegativity: a homogeneous row whose nonzero coefficients share one sign forces
    // each of its variables to vanish. Iterate, since zeros shrink other rows.
    std::vector<bool> zero(5, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < all.a.size(); ++i) {
            if (all.b[i] != 0) continue;
            bool pos = false, neg = false;
            for (int j = 0; j < 5; ++j) {
                if (zero[j]) continue;
                if (all.a[i][j] > 0) pos = true;
                if (all.a[i][j] < 0) neg = true;
            }
            if (pos != neg) {
                for (int j = 0; j < 5; ++j)
                    if (!zero[j] && all.a[i][j] != 0) {
                        zero[j] = true;
                        changed = true;
                    }
            }
        }
    }
    rep.combined = all;
    for (int j = 0; j < 5; ++j)
        if (zero[j]) {
            std::vector<Rat> row(5, Rat(0));
            row[j] = 1;
            rep.combined.a.push_back(row);
            rep.combined.b.push_back(Rat(0));
            rep.forced_zero.push_back(rep.names[j]);
        }
    rep.certificate = solve_linear(rep.combined);
    rep.certificate_valid = !rep.certificate.consistent && verify_inconsistency(rep.combined, rep.certificate.certificate);

    rep.nonneg.a = all.a;
    rep.nonneg.b = all.b;
    rep.nonneg.num_vars = 5;
    rep.farkas = lp_feasible(rep.nonneg);
    rep.farkas_valid = !rep.farkas.feasible && verify_farkas(rep.nonneg, rep.farkas.farkas);

    rep.ok = rep.chain_ok && rep.certificate_valid && rep.farkas_valid;
    return rep;
}

PositiveRewrite positive_rewrite(const MPoly& f, int degree) {
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != degree))
        throw std::invalid_argument("positive_rewrite expects a homogeneous polynomial of the given degree");
    const std::uint32_t allowed = (1u << idx(Var::x1)) | (1u << idx(Var::x2));
    if (f.support_mask() & ~allowed) throw std::invalid_argument("positive_rewrite expects a polynomial in x1, x2");

    PositiveRewrite r;
    const MPoly x3 = X(Var::x1) - X(Var::x2);
    std::vector<MPoly> images;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) {
            int c = degree - a - b;
            r.monomials.push_back({a, b, c});
            images.push_back(mono_x(a, b) * x3.pow(static_cast<unsigned>(c)));
        }
    // One equality per coefficient of x1^(d-k) x2^k.
    LpFeasibility lp;
    lp.num_vars = images.size();
    for (int k = 0; k <= degree; ++k) {
        Monomial m;
        m.e[idx(Var::x1)] = static_cast<std::uint16_t>(degree - k);
        m.e[idx(Var::x2)] = static_cast<std::uint16_t>(k);
        std::vector<Rat> row;
        for (const auto& img : images) row.push_back(img.coeff(m));
        lp.a.push_back(row);
        lp.b.push_back(f.coeff(m));
    }
    auto res = lp_feasible(lp);
    r.feasible = res.feasible;
    if (res.feasible) {
        r.coeffs = res.point;
        r.verified = verify_point(lp, res.point) && expand_positive(r) == f;
    } else {
        r.farkas = res.farkas;
        r.verified = verify_farkas(lp, res.farkas);
    }
    return r;
}

MPoly expand_positive(const PositiveRewrite& r) {
    const MPoly x3 = X(Var::x1) - X(Var::x2);
    MPoly out;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        const auto& m = r.monomials[i];
        out += r.coeffs[i] * mono_x(m[0], m[1]) * x3.pow(static_cast<unsigned>(m[2]));
    }
    return out;
}

}  // namespace g2sc
