#include "g2sc/presentation.hpp"

#include <algorithm>
#include <set>

namespace g2sc {

namespace {

Monomial mono(std::initializer_list<std::pair<Var, unsigned>> parts) {
    Monomial m;
    for (const auto& [x, k] : parts) m.e[idx(x)] = static_cast<std::uint16_t>(k);
    return m;
}

MPoly P(const Monomial& m) { return MPoly::term(m, Rat(1)); }

std::uint32_t mask_of(const std::vector<Var>& vars) {
    std::uint32_t m = 0;
    for (auto x : vars) m |= 1u << idx(x);
    return m;
}

// Splits a monomial into its ring-variable part and base part.
std::pair<Monomial, Monomial> split(const Presentation& p, const Monomial& m) {
    Monomial ring, base = m;
    for (auto x : p.ring_vars) {
        ring.e[idx(x)] = m.e[idx(x)];
        base.e[idx(x)] = 0;
    }
    return {ring, base};
}

}  // namespace

int Presentation::weight(const Monomial& m) const {
    int w = 0;
    for (const auto& [x, k] : weights) w += k * static_cast<int>(m[x]);
    return w;
}

int Presentation::basis_index(const Monomial& ring_part) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == ring_part) return static_cast<int>(i);
    return -1;
}

bool NormalForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const MPoly& c) { return c.is_zero(); });
}

MPoly reduce(const Presentation& p, const MPoly& f) {
    const std::uint32_t allowed = mask_of(p.ring_vars) | mask_of(p.base_vars);
    if (f.support_mask() & ~allowed)
        throw std::invalid_argument("polynomial uses variables outside presentation " + p.name + ": " + to_string(f));
    // Worklist: rewrite the leading reducible term until none is left.
    MPoly work = f, done;
    while (!work.is_zero()) {
        auto [m, c] = work.leading();
        Monomial lead = m;
        Rat coeff = c;
        work.add_term(lead, -coeff);
        auto rule = std::find_if(p.rules.begin(), p.rules.end(), [&](const Rule& r) { return r.lhs.divides(lead); });
        if (rule == p.rules.end()) done.add_term(lead, coeff);
        else work += MPoly::term(lead / rule->lhs, coeff) * rule->rhs;
    }
    return done;
}

NormalForm normal_form(const Presentation& p, const MPoly& f) {
    MPoly r = reduce(p, f);
    NormalForm nf;
    nf.coeffs.assign(p.basis.size(), MPoly());
    for (const auto& [m, c] : r.terms()) {
        auto [ring, base] = split(p, m);
        int i = p.basis_index(ring);
        if (i < 0) throw std::logic_error("irreducible monomial " + to_string(ring) + " is not in the basis of " + p.name);
        nf.coeffs[i].add_term(base, c);
    }
    if (p.integral()) {
        for (std::size_t i = 0; i < nf.coeffs.size(); ++i)
            for (const auto& [m, c] : nf.coeffs[i].terms())
                if (!is_integer(c))
                    throw NonIntegralReduction("coefficient " + to_string(c) + " on " + to_string(p.basis[i]) +
                                               " is not integral in " + p.name);
    }
    return nf;
}

MPoly to_poly(const Presentation& p, const NormalForm& nf) {
    MPoly out;
    for (std::size_t i = 0; i < p.basis.size(); ++i) out += nf.coeffs[i] * P(p.basis[i]);
    return out;
}

FlBase FlBase::symbolic() {
    return FlBase{X(Var::c1F), X(Var::c2F), X(Var::c3F), X(Var::c1Q), X(Var::c3Q), X(Var::y1),
                  {Var::y1, Var::c1F, Var::c2F, Var::c3F, Var::c1Q, Var::c3Q}};
}

FlBase FlBase::split(Var a, Var b) {
    const MPoly ya = X(a), yb = X(b);
    std::vector<MPoly> roots{ya, yb, ya - yb};
    auto cF = ChernVector::from_roots(roots);
    // c(V) from the weights +-r and 0, then divide out the three lines of F3.
    std::vector<MPoly> vroots;
    for (const auto& r : roots) {
        vroots.push_back(r);
        vroots.push_back(-r);
    }
    vroots.push_back(MPoly());
    ChernVector q = ChernVector::from_roots(vroots);
    for (const auto& r : roots) q = chern_quotient(q, r);
    return FlBase{cF[1], cF[2], cF[3], q[1], q[3], ya, {a, b}};
}

FlBase FlBase::point() { return FlBase{MPoly(), MPoly(), MPoly(), MPoly(), MPoly(), MPoly(), {}}; }

Presentation fl_integral_bundle(const FlBase& base, const std::string& name) {
    using enum Var;
    Presentation p;
    p.name = name;
    p.ring_vars = {x1, x2, alpha};
    p.base_vars = base.vars;
    p.weights = {{x1, 1}, {x2, 1}, {alpha, 3}};
    p.coeffs = CoeffRing::Integers;
    const MPoly X1 = X(x1), X2 = X(x2), A = X(alpha);
    p.rules = {
        {mono({{x2, 2}}), X1 * X2 - X1.pow(2) + 2 * base.c1F1.pow(2) - base.c2F3},
        {mono({{x1, 3}}), 2 * A + base.c1F3 * X1.pow(2) - base.c2F3 * X1 + base.c3F3},
        {mono({{alpha, 2}}), (base.c3Q + base.c1Q * X1.pow(2)) * A},
    };
    p.generators = {
        2 * A - (X1.pow(3) - base.c1F3 * X1.pow(2) + base.c2F3 * X1 - base.c3F3),
        A.pow(2) - (base.c3Q + base.c1Q * X1.pow(2)) * A,
        X1.pow(2) + X2.pow(2) - X1 * X2 - 2 * base.c1F1.pow(2) + base.c2F3,
    };
    p.basis = {mono({}),
               mono({{x1, 1}}),
               mono({{x1, 2}}),
               mono({{alpha, 1}}),
               mono({{x1, 1}, {alpha, 1}}),
               mono({{x1, 2}, {alpha, 1}}),
               mono({{x2, 1}}),
               mono({{x1, 1}, {x2, 1}}),
               mono({{x1, 2}, {x2, 1}}),
               mono({{x2, 1}, {alpha, 1}}),
               mono({{x1, 1}, {x2, 1}, {alpha, 1}}),
               mono({{x1, 2}, {x2, 1}, {alpha, 1}})};
    return p;
}

Presentation fl_integral_point() { return fl_integral_bundle(FlBase::point(), "fl-integral-point"); }

Presentation equivariant() { return fl_integral_bundle(FlBase::split(Var::t1, Var::t2), "equivariant"); }

namespace {

// e_k(X) - e_k(Y) for X = (x1^2, x2^2, (x1-x2)^2), Y = (a^2, b^2, (a-b)^2).
std::array<MPoly, 3> half_generators(const MPoly& a, const MPoly& b) {
    const MPoly x1 = X(Var::x1), x2 = X(Var::x2);
    auto ex = ChernVector::from_roots({x1.pow(2), x2.pow(2), (x1 - x2).pow(2)});
    auto ey = ChernVector::from_roots({a.pow(2), b.pow(2), (a - b).pow(2)});
    return {ex[1] - ey[1], ex[2] - ey[2], ex[3] - ey[3]};
}

Presentation fl_half_impl(const MPoly& a, const MPoly& b, const std::string& name, std::vector<Var> base_vars) {
    Presentation p;
    p.name = name;
    p.ring_vars = {Var::x1, Var::x2};
    p.base_vars = std::move(base_vars);
    p.weights = {{Var::x1, 1}, {Var::x2, 1}};
    p.coeffs = CoeffRing::HalfIntegers;
    const MPoly X1 = X(Var::x1);
    auto rel = half_generators(a, b);
    p.generators = {rel[0], rel[1], rel[2]};
    // r2/2 is monic in x2^2; the sextic is prod(x1^2 - y^2) = r2 x1^4 - r4 x1^2 + r6.
    MPoly sextic = (X1.pow(2) - a.pow(2)) * (X1.pow(2) - b.pow(2)) * (X1.pow(2) - (a - b).pow(2));
    p.rules = {
        {mono({{Var::x2, 2}}), P(mono({{Var::x2, 2}})) - Rat(1, 2) * rel[0]},
        {mono({{Var::x1, 6}}), X1.pow(6) - sextic},
    };
    for (unsigned j = 0; j <= 1; ++j)
        for (unsigned i = 0; i <= 5; ++i) p.basis.push_back(mono({{Var::x1, i}, {Var::x2, j}}));
    return p;
}

}  // namespace

Presentation fl_half_bundle(Var a, Var b, const std::string& name) { return fl_half_impl(X(a), X(b), name, {a, b}); }

Presentation fl_half_point() { return fl_half_impl(MPoly(), MPoly(), "fl-half-point", {}); }

Presentation equivariant_half() { return fl_half_bundle(Var::t1, Var::t2, "equivariant-half"); }

Presentation fl_half_bundle_twisted() {
    // The twist is a ring automorphism, so it carries rules to rules.
    Presentation base = fl_half_bundle();
    Presentation p = base;
    p.name = "fl-half-bundle-twisted";
    p.base_vars = {Var::y1, Var::y2, Var::v};
    for (auto& g : p.generators) g = twist_substitution(g);
    for (auto& r : p.rules) {
        MPoly lhs = P(r.lhs);
        r.rhs = lhs - twist_substitution(lhs - r.rhs);
    }
    return p;
}

Presentation quadric_bundle(int n, const ChernVector& cF, const ChernVector& cQ, const std::string& name) {
    using enum Var;
    if (n < 1) throw std::invalid_argument("quadric bundle needs n >= 1");
    Presentation p;
    p.name = name;
    p.ring_vars = {h, f};
    p.weights = {{h, 1}, {f, n}};
    p.coeffs = CoeffRing::Integers;
    std::set<Var> base;
    for (const auto& c : cF.c)
        for (int i = 0; i < kNumVars; ++i)
            if (c.support_mask() >> i & 1) base.insert(static_cast<Var>(i));
    for (const auto& c : cQ.c)
        for (int i = 0; i < kNumVars; ++i)
            if (c.support_mask() >> i & 1) base.insert(static_cast<Var>(i));
    p.base_vars.assign(base.begin(), base.end());

    const MPoly H = X(h), F = X(f);
    // rel1: 2f = sum_k (-1)^k c_k(F) h^(n-k).
    MPoly rel1_rhs;
    for (int k = 0; k <= n; ++k) rel1_rhs += ((k % 2) ? -1 : 1) * cF[k] * H.pow(static_cast<unsigned>(n - k));
    Rule hrule{mono({{h, static_cast<unsigned>(n)}}), 2 * F - (rel1_rhs - H.pow(static_cast<unsigned>(n)))};

    // rel2: f^2 = c_n(N) f with N = ((V/F)/O(1)) (x) O(1).
    MPoly cN = chern_tensor_line(chern_quotient(cQ, H), H);
    p.generators = {2 * F - rel1_rhs, F.pow(2) - cN * F};

    // For even n, c_n(N) contains h^n, and h^n f brings f^2 back; solve for f^2.
    Presentation tmp = p;
    tmp.rules = {hrule};
    tmp.base_vars = p.base_vars;
    MPoly r = reduce(tmp, cN * F);
    MPoly kappa = r.coeff_of(f, 2);
    if (!kappa.is_constant()) throw std::logic_error("unexpected f^2 coefficient in rel2");
    Rat k = kappa.constant_term();
    MPoly rest = r - kappa * F.pow(2);
    // f^2 (1 - k) = rest
    Rule frule{mono({{f, 2}}), rest * (Rat(1) / (1 - k))};
    p.rules = {hrule, frule};
    for (unsigned j = 0; j <= 1; ++j)
        for (unsigned i = 0; i < static_cast<unsigned>(n); ++i) p.basis.push_back(mono({{h, i}, {f, j}}));
    return p;
}

Presentation quadric_bundle_split3() {
    const MPoly y1 = X(Var::y1), y2 = X(Var::y2);
    std::vector<MPoly> roots{y1, y2, y1 - y2};
    auto cF = ChernVector::from_roots(roots);
    std::vector<MPoly> vroots;
    for (const auto& r : roots) {
        vroots.push_back(r);
        vroots.push_back(-r);
    }
    vroots.push_back(MPoly());
    ChernVector cQ = ChernVector::from_roots(vroots);
    for (const auto& r : roots) cQ = chern_quotient(cQ, r);
    return quadric_bundle(3, cF, cQ, "quadric-bundle");
}

Presentation quadric_fiber(int n) {
    return quadric_bundle(n, ChernVector::trivial(n), ChernVector::trivial(n + 1), "quadric-fiber:" + std::to_string(n));
}

const std::vector<std::string>& presentation_names() {
    static const std::vector<std::string> names = {
        "fl-integral-bundle", "fl-half-bundle",         "fl-integral-point", "fl-half-point", "equivariant",
        "equivariant-half",   "fl-half-bundle-twisted", "fl-integral-split", "quadric-bundle", "quadric-fiber:N",
    };
    return names;
}

Presentation presentation_by_name(const std::string& name) {
    if (name == "fl-integral-bundle") return fl_integral_bundle(FlBase::symbolic());
    if (name == "fl-integral-split") return fl_integral_bundle(FlBase::split(Var::y1, Var::y2), "fl-integral-split");
    if (name == "fl-half-bundle") return fl_half_bundle();
    if (name == "fl-integral-point") return fl_integral_point();
    if (name == "fl-half-point") return fl_half_point();
    if (name == "equivariant") return equivariant();
    if (name == "equivariant-half") return equivariant_half();
    if (name == "fl-half-bundle-twisted") return fl_half_bundle_twisted();
    if (name == "quadric-bundle" || name == "quadric-bundle:3") return quadric_bundle_split3();
    if (name.rfind("quadric-fiber", 0) == 0) {
        int n = 3;
        if (name.size() > 13) {
            if (name[13] != ':') throw std::invalid_argument("unknown presentation: " + name);
            n = std::stoi(name.substr(14));
        }
        return quadric_fiber(n);
    }
    throw std::invalid_argument("unknown presentation: " + name);
}

Presentation specialize(const Presentation& p, const Assignment& a, const std::string& name,
                        const std::vector<Var>& base_vars) {
    Presentation q = p;
    q.name = name;
    q.base_vars = base_vars;
    for (auto& r : q.rules) r.rhs = substitute_some(r.rhs, a);
    for (auto& g : q.generators) g = substitute_some(g, a);
    return q;
}

bool same_rules(const Presentation& a, const Presentation& b) {
    if (a.rules.size() != b.rules.size()) return false;
    auto key = [](const Rule& r) { return to_string(r.lhs); };
    for (const auto& ra : a.rules) {
        auto it = std::find_if(b.rules.begin(), b.rules.end(), [&](const Rule& rb) { return rb.lhs == ra.lhs; });
        if (it == b.rules.end() || it->rhs != ra.rhs) return false;
        (void)key;
    }
    return true;
}

PresentationReport verify_presentation(const Presentation& p) {
    PresentationReport rep;
    rep.rank = p.basis.size();
    auto line = [&](bool ok, const std::string& what) {
        rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) rep.ok = false;
    };

    // Irreducible monomials: every ring variable needs a pure-power rule for finiteness.
    std::vector<unsigned> bound;
    bool finite = true;
    for (auto x : p.ring_vars) {
        unsigned b = 0;
        for (const auto& r : p.rules)
            if (r.lhs.degree() == r.lhs[x] && r.lhs[x] > 0) b = b ? std::min(b, r.lhs[x]) : r.lhs[x];
        if (!b) finite = false;
        bound.push_back(b);
    }
    std::set<std::vector<std::uint16_t>> irreducible;
    if (finite) {
        std::vector<unsigned> e(p.ring_vars.size(), 0);
        while (true) {
            Monomial m;
            for (std::size_t i = 0; i < e.size(); ++i) m.e[idx(p.ring_vars[i])] = static_cast<std::uint16_t>(e[i]);
            bool red = std::any_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) { return r.lhs.divides(m); });
            if (!red) irreducible.insert(std::vector<std::uint16_t>(m.e.begin(), m.e.end()));
            std::size_t k = 0;
            while (k < e.size() && ++e[k] == bound[k]) e[k++] = 0;
            if (k == e.size()) break;
        }
    }
    std::set<std::vector<std::uint16_t>> basis_set;
    for (const auto& b : p.basis) basis_set.insert(std::vector<std::uint16_t>(b.e.begin(), b.e.end()));
    rep.basis_matches = finite && irreducible == basis_set && basis_set.size() == p.basis.size();
    line(rep.basis_matches, "irreducible monomials = listed basis (rank " + std::to_string(rep.rank) + ")");

    // Buchberger's first criterion settles coprime pairs; overlapping pairs are reduced.
    rep.confluent = true;
    int overlaps = 0;
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        for (std::size_t j = i + 1; j < p.rules.size(); ++j) {
            const auto& a = p.rules[i].lhs;
            const auto& b = p.rules[j].lhs;
            Monomial l;
            bool coprime = true;
            for (int k = 0; k < kNumVars; ++k) {
                l.e[k] = std::max(a.e[k], b.e[k]);
                if (a.e[k] && b.e[k]) coprime = false;
            }
            if (coprime) continue;
            ++overlaps;
            MPoly s = P(l / a) * p.rules[i].rhs - P(l / b) * p.rules[j].rhs;
            if (!reduce(p, s).is_zero()) rep.confluent = false;
        }
    line(rep.confluent, "critical pairs resolve (" + std::to_string(overlaps) + " overlapping)");

    // Closure and associativity of the induced multiplication.
    rep.closure = true;
    std::vector<std::vector<MPoly>> table(p.basis.size(), std::vector<MPoly>(p.basis.size()));
    try {
        for (std::size_t i = 0; i < p.basis.size(); ++i)
            for (std::size_t j = 0; j < p.basis.size(); ++j)
                table[i][j] = to_poly(p, normal_form(p, P(p.basis[i]) * P(p.basis[j])));
    } catch (const std::exception& ex) {
        rep.closure = false;
        rep.lines.push_back(std::string("     ") + ex.what());
    }
    line(rep.closure, "all basis products reduce into the span");

    // Associativity of the table itself: expand both triple products through the structure constants.
    rep.associative = rep.closure;
    if (rep.closure) {
        const std::size_t n = p.basis.size();
        std::vector<std::vector<NormalForm>> t(n, std::vector<NormalForm>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = normal_form(p, table[i][j]);
        for (std::size_t i = 0; i < n && rep.associative; ++i)
            for (std::size_t j = 0; j < n && rep.associative; ++j)
                for (std::size_t k = 0; k < n && rep.associative; ++k) {
                    std::vector<MPoly> left(n), right(n);
                    for (std::size_t l = 0; l < n; ++l) {
                        const MPoly& a = t[i][j].coeffs[l];
                        const MPoly& b = t[j][k].coeffs[l];
                        for (std::size_t m = 0; m < n; ++m) {
                            if (!a.is_zero() && !t[l][k].coeffs[m].is_zero()) left[m] += a * t[l][k].coeffs[m];
                            if (!b.is_zero() && !t[i][l].coeffs[m].is_zero()) right[m] += b * t[i][l].coeffs[m];
                        }
                    }
                    if (left != right) {
                        rep.associative = false;
                        rep.lines.push_back("     (" + to_string(p.basis[i]) + "*" + to_string(p.basis[j]) + ")*" +
                                            to_string(p.basis[k]) + " differs");
                    }
                }
    }
    line(rep.associative, "multiplication table is associative");

    rep.generators = std::all_of(p.generators.begin(), p.generators.end(),
                                 [&](const MPoly& g) { return normal_form(p, g).is_zero(); });
    line(rep.generators, "stated relations reduce to 0 (" + std::to_string(p.generators.size()) + ")");
    return rep;
}

bool chern_s3_consistency(const Presentation& p, const FlBase& base) {
    const MPoly x1 = X(Var::x1), x2 = X(Var::x2);
    // Roots of S3: -x1, -x2, and x2 - x1 from S3/S2 = S1 (x) (S2/S1)^*.
    auto c = ChernVector::from_roots({-x1, -x2, x2 - x1});
    bool c1 = normal_form(p, c[1]) == normal_form(p, -2 * x1);
    bool c2 = normal_form(p, c[2]) == normal_form(p, 2 * x1.pow(2) + base.c2F3 - 2 * base.c1F1.pow(2));
    return c1 && c2;
}

MPoly quadric_eg_residue() {
    Presentation p = quadric_bundle_split3();
    const MPoly y1 = X(Var::y1), y2 = X(Var::y2), h = X(Var::h), f = X(Var::f);
    std::vector<MPoly> roots{y1, y2, y1 - y2};
    std::vector<MPoly> vroots;
    for (const auto& r : roots) {
        vroots.push_back(r);
        vroots.push_back(-r);
    }
    vroots.push_back(MPoly());
    ChernVector cQ = ChernVector::from_roots(vroots);
    for (const auto& r : roots) cQ = chern_quotient(cQ, r);
    MPoly rhs;
    for (int k = 0; k <= 4; ++k) rhs += cQ[k] * h.pow(static_cast<unsigned>(4 - k));
    return to_poly(p, normal_form(p, 2 * h * f - rhs));
}

std::vector<MPoly> schubert_expand(const MPoly& f, const SchubertFamily& fam, const Presentation& p) {
    const auto& elems = all_elements();
    if (p.basis.size() != elems.size())
        throw NotInSpan("presentation " + p.name + " does not have rank 12");
    std::vector<NormalForm> nfs;
    for (const auto& w : elems) nfs.push_back(normal_form(p, fam[w]));

    NormalForm r = normal_form(p, f);
    std::vector<MPoly> coeffs(elems.size());
    for (int k = 6; k >= 0; --k) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t j = 0; j < p.basis.size(); ++j)
            if (p.weight(p.basis[j]) == k) rows.push_back(j);
        for (std::size_t w = 0; w < elems.size(); ++w)
            if (elems[w].length() == k) cols.push_back(w);
        if (rows.size() != cols.size()) throw NotInSpan("basis and Schubert classes disagree in degree " + std::to_string(k));
        Matrix<Rat> d = zero_matrix<Rat>(rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                const MPoly& e = nfs[cols[b]].coeffs[rows[a]];
                if (!e.is_constant()) throw NotInSpan("Schubert normal form is not graded");
                d[a][b] = e.constant_term();
            }
        auto dinv = inverse(d);
        if (!dinv) throw NotInSpan("Schubert classes are dependent in degree " + std::to_string(k));
        for (std::size_t b = 0; b < cols.size(); ++b) {
            MPoly c;
            for (std::size_t a = 0; a < rows.size(); ++a) c += (*dinv)[b][a] * r.coeffs[rows[a]];
            coeffs[cols[b]] = c;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < p.basis.size(); ++j) r.coeffs[j] -= c * nfs[cols[b]].coeffs[j];
        }
    }
    if (!r.is_zero()) throw NotInSpan("residual after Schubert expansion is nonzero");
    return coeffs;
}

Matrix<Rat> duality_pairing(const SchubertFamily& fam, const Presentation& p) {
    const auto& elems = all_elements();
    NormalForm pt = normal_form(p, top_class(FamilyKind::Point));
    int top = -1;
    for (std::size_t j = 0; j < pt.coeffs.size(); ++j)
        if (!pt.coeffs[j].is_zero()) {
            if (top >= 0) throw std::logic_error("point class is not a single basis element");
            top = static_cast<int>(j);
        }
    if (top < 0 || !pt.coeffs[top].is_constant()) throw std::logic_error("point class does not reduce to a constant");
    Rat unit = pt.coeffs[top].constant_term();
    auto m = zero_matrix<Rat>(elems.size(), elems.size());
    for (std::size_t u = 0; u < elems.size(); ++u)
        for (std::size_t v = 0; v < elems.size(); ++v) {
            NormalForm nf = normal_form(p, fam[elems[u]] * fam[elems[v]]);
            const MPoly& c = nf.coeffs[top];
            if (!c.is_constant()) throw std::logic_error("pairing is not a constant");
            m[u][v] = c.constant_term() / unit;
        }
    return m;
}

MPoly alpha_to_half(const MPoly& f, const FlBase& base) {
    const MPoly x1 = X(Var::x1);
    MPoly a = Rat(1, 2) * (x1.pow(3) - base.c1F3 * x1.pow(2) + base.c2F3 * x1 - base.c3F3);
    return substitute_some(f, {{Var::alpha, a}});
}

std::string to_string(const Presentation& p, const NormalForm& nf) {
    std::string out;
    for (std::size_t i = 0; i < p.basis.size(); ++i) {
        const MPoly& c = nf.coeffs[i];
        if (c.is_zero()) continue;
        std::string m = to_string(p.basis[i]);
        std::string term;
        bool neg = false;
        if (c.is_constant()) {
            Rat r = c.constant_term();
            neg = r < 0;
            Rat mag = neg ? Rat(-r) : r;
            if (m == "1") term = to_string(mag);
            else term = (mag == 1 ? std::string() : to_string(mag) + "*") + m;
        } else {
            term = "(" + to_string(c) + ")" + (m == "1" ? std::string() : "*" + m);
        }
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace g2sc
