#include "g2sc/octonion.hpp"

#include <algorithm>
#include <cctype>

namespace g2sc {

TriForm TriForm::from(std::initializer_list<std::pair<Triple, Rat>> list) {
    TriForm t;
    for (const auto& [tr, c] : list) {
        Triple s = tr;
        int sign = 1;
        // Bubble sort to track the permutation sign.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j + 1 < 3 - i; ++j)
                if (s[j] > s[j + 1]) {
                    std::swap(s[j], s[j + 1]);
                    sign = -sign;
                }
        if (s[0] == s[1] || s[1] == s[2]) continue;
        Rat& slot = t.coeffs[s];
        slot += sign * c;
        if (slot == 0) t.coeffs.erase(s);
    }
    return t;
}

Rat TriForm::value(int p, int q, int r) const {
    return eval(basis_vec<Rat>(p), basis_vec<Rat>(q), basis_vec<Rat>(r));
}

bool BilForm::is_symmetric() const {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

AlgebraCtx make_ctx(TriForm gamma, BilForm beta, BasisKind kind) {
    auto inv = inverse(beta.m);
    if (!inv) throw SingularForm("bilinear form is degenerate");
    return AlgebraCtx{std::move(gamma), std::move(beta), std::move(*inv), kind};
}

TriForm standard_gamma(BasisKind kind) {
    if (kind == BasisKind::FBasis) {
        // Signs agree with the push-forward of the e-basis form below.
        return TriForm::from({{{1, 4, 7}, Rat(1)},
                              {{2, 4, 6}, Rat(-1)},
                              {{3, 4, 5}, Rat(-1)},
                              {{2, 3, 7}, Rat(-1)},
                              {{1, 5, 6}, Rat(-1)}});
    }
    return TriForm::from({{{1, 2, 3}, Rat(2)},
                          {{2, 5, 7}, Rat(2)},
                          {{1, 6, 7}, Rat(-2)},
                          {{1, 4, 5}, Rat(-2)},
                          {{2, 4, 6}, Rat(-2)},
                          {{3, 4, 7}, Rat(-2)},
                          {{3, 5, 6}, Rat(-2)}});
}

BilForm standard_beta(BasisKind kind) {
    BilForm b;
    for (int p = 1; p <= 7; ++p) {
        if (kind == BasisKind::FBasis)
            b.m[p - 1][7 - p] = (p == 4) ? Rat(-2) : Rat(-1);
        else
            b.m[p - 1][p - 1] = Rat(2);
    }
    return b;
}

AlgebraCtx standard_forms(BasisKind kind) {
    return make_ctx(standard_gamma(kind), standard_beta(kind), kind);
}

std::vector<VecV<Rat>> spanning_sample() {
    std::vector<VecV<Rat>> s;
    for (int i = 1; i <= 7; ++i) s.push_back(basis_vec<Rat>(i));
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) s.push_back(basis_vec<Rat>(i) + basis_vec<Rat>(j));
    return s;
}

std::vector<std::pair<VecV<Rat>, VecV<Rat>>> spanning_pairs() {
    auto s = spanning_sample();
    std::vector<std::pair<VecV<Rat>, VecV<Rat>>> out;
    for (const auto& u : s)
        for (const auto& v : s) out.emplace_back(u, v);
    return out;
}

CompatReport check_compatible(const TriForm& gamma, const BilForm& beta,
                              const std::vector<std::pair<VecV<Rat>, VecV<Rat>>>& sample) {
    auto inv = inverse(beta.m);
    if (!inv) throw SingularForm("bilinear form is degenerate");
    AlgebraCtx ctx{gamma, beta, *inv, BasisKind::FBasis};
    CompatReport rep;
    for (const auto& [u, v] : sample) {
        ++rep.pairs_checked;
        Rat lhs = 2 * gamma.eval(u, v, dagger(ctx, gamma.functional(u, v)));
        Rat buv = beta.eval(u, v);
        Rat rhs = beta.eval(u, u) * beta.eval(v, v) - buv * buv;
        rep.lhs = lhs;
        rep.rhs = rhs;
        if (lhs != rhs) {
            rep.ok = false;
            rep.counterexample = std::make_pair(u, v);
            return rep;
        }
    }
    return rep;
}

namespace {

struct Shuffle {
    std::array<int, 7> order;  // 0-based indices: A = [0,2), B = [2,4), C = [4,7)
    int sign;
};

const std::vector<Shuffle>& shuffles_223() {
    static const std::vector<Shuffle> table = [] {
        std::vector<Shuffle> out;
        for (int mask_a = 0; mask_a < 128; ++mask_a) {
            if (__builtin_popcount(mask_a) != 2) continue;
            for (int mask_b = 0; mask_b < 128; ++mask_b) {
                if (__builtin_popcount(mask_b) != 2 || (mask_a & mask_b)) continue;
                Shuffle s{};
                int k = 0;
                for (int pass = 0; pass < 3; ++pass)
                    for (int i = 0; i < 7; ++i) {
                        bool in_a = mask_a >> i & 1, in_b = mask_b >> i & 1;
                        bool take = pass == 0 ? in_a : pass == 1 ? in_b : !(in_a || in_b);
                        if (take) s.order[k++] = i;
                    }
                int inversions = 0;
                for (int i = 0; i < 7; ++i)
                    for (int j = i + 1; j < 7; ++j)
                        if (s.order[i] > s.order[j]) ++inversions;
                s.sign = inversions % 2 ? -1 : 1;
                out.push_back(s);
            }
        }
        return out;
    }();
    return table;
}

}  // namespace

Rat wedge_coefficient(const TriForm& gamma, const VecV<Rat>& u, const VecV<Rat>& v) {
    // Evaluate the 2-forms gamma(u,.,.) and gamma(v,.,.) on basis pairs directly.
    Rat wu[7][7], wv[7][7];
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            wu[a][b] = gamma.eval(u, basis_vec<Rat>(a + 1), basis_vec<Rat>(b + 1));
            wv[a][b] = gamma.eval(v, basis_vec<Rat>(a + 1), basis_vec<Rat>(b + 1));
        }
    Rat total = 0;
    for (const auto& s : shuffles_223()) {
        const auto& o = s.order;
        const Rat& x = wu[o[0]][o[1]];
        if (x == 0) continue;
        const Rat& y = wv[o[2]][o[3]];
        if (y == 0) continue;
        Rat z = gamma.value(o[4] + 1, o[5] + 1, o[6] + 1);
        if (z == 0) continue;
        total += s.sign * x * y * z;
    }
    return total;
}

BryantReport bryant_form(const TriForm& gamma) {
    BryantReport rep;
    rep.wedge = zero_matrix<Rat>(7, 7);
    bool integral = std::all_of(gamma.coeffs.begin(), gamma.coeffs.end(),
                                [](const auto& kv) { return is_integer(kv.second); });
    for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
            Rat w = wedge_coefficient(gamma, basis_vec<Rat>(p), basis_vec<Rat>(q));
            rep.wedge[p - 1][q - 1] = w;
            if (integral && !is_integer(w / 3)) rep.divisible = false;
            rep.form.m[p - 1][q - 1] = -w / 3;
        }
    rep.nondegenerate = determinant(rep.form.m) != 0;
    return rep;
}

Rat norm_imag(const AlgebraCtx& ctx, const VecV<Rat>& u) { return Rat(1, 2) * ctx.beta.eval(u, u); }

std::vector<VecV<Rat>> isotropic_kernel(const AlgebraCtx& ctx, const VecV<Rat>& u) {
    if (norm_imag(ctx, u) != 0) throw NotIsotropic("N(u) = " + to_string(norm_imag(ctx, u)));
    // Column j holds gamma(u, f_j, .).
    auto m = zero_matrix<Rat>(7, 7);
    for (int j = 0; j < 7; ++j) {
        auto phi = ctx.gamma.functional(u, basis_vec<Rat>(j + 1));
        for (int k = 0; k < 7; ++k) m[k][j] = phi[k];
    }
    auto basis = nullspace(m, 7);
    std::vector<VecV<Rat>> out;
    for (const auto& b : basis) {
        VecV<Rat> v;
        std::copy(b.begin(), b.end(), v.begin());
        out.push_back(v);
    }
    return out;
}

Rat cross_lambda(const AlgebraCtx& ctx, const VecV<Rat>& u, const VecV<Rat>& v, const VecV<Rat>& w) {
    Oct<Rat> p = oct_mul(ctx, Oct<Rat>::imag(v), Oct<Rat>::imag(w));
    if (p.s != 0) throw NotProportional("product has a scalar part");
    int pivot = -1;
    for (int i = 0; i < 7; ++i)
        if (u[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw NotProportional("u is zero");
    Rat lambda = p.v[pivot] / u[pivot];
    for (int i = 0; i < 7; ++i)
        if (p.v[i] != lambda * u[i]) throw NotProportional("v w is not a multiple of u");
    return lambda;
}

std::array<std::array<int, 2>, 7> torus_weights() {
    return {{{1, 0}, {0, 1}, {1, -1}, {0, 0}, {-1, 1}, {0, -1}, {-1, 0}}};
}

TorusReport torus_invariance_check(const AlgebraCtx& ctx) {
    TorusReport rep;
    auto w = torus_weights();
    for (const auto& [t, c] : ctx.gamma.coeffs) {
        ++rep.triples;
        for (int k = 0; k < 2; ++k) {
            if (w[t[0] - 1][k] + w[t[1] - 1][k] + w[t[2] - 1][k] != 0) {
                rep.ok = false;
                rep.offending.push_back("triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                        std::to_string(t[2]) + ")");
                break;
            }
        }
    }
    for (int p = 1; p <= 7; ++p)
        for (int q = p; q <= 7; ++q) {
            if (ctx.beta.at(p, q) == 0) continue;
            ++rep.pairs;
            for (int k = 0; k < 2; ++k)
                if (w[p - 1][k] + w[q - 1][k] != 0) {
                    rep.ok = false;
                    rep.offending.push_back("pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
                    break;
                }
        }
    return rep;
}

std::vector<Triple> kernel_triples() {
    auto ctx = standard_forms(BasisKind::FBasis);
    std::vector<Triple> out;
    for (int i : {1, 2, 3, 5, 6, 7}) {
        auto ker = isotropic_kernel(ctx, basis_vec<Rat>(i));
        std::vector<int> others;
        for (const auto& v : ker) {
            int nonzero = 0, where = 0;
            for (int k = 0; k < 7; ++k)
                if (v[k] != 0) {
                    ++nonzero;
                    where = k + 1;
                }
            // The kernels of the T-fixed lines are coordinate subspaces.
            if (nonzero != 1) throw std::logic_error("kernel of a basis vector is not a coordinate subspace");
            if (where != i) others.push_back(where);
        }
        std::sort(others.begin(), others.end());
        if (ker.size() != 3 || others.size() != 2) throw std::logic_error("kernel is not three-dimensional");
        out.push_back({i, others[0], others[1]});
    }
    return out;
}

std::vector<std::pair<int, int>> fixed_points() {
    std::vector<std::pair<int, int>> out;
    for (const auto& t : kernel_triples()) {
        out.emplace_back(t[0], t[1]);
        out.emplace_back(t[0], t[2]);
    }
    return out;
}

Matrix<GaussRat> f_basis_in_e() {
    auto p = zero_matrix<GaussRat>(7, 7);
    const Rat h(1, 2);
    const GaussRat i = GaussRat::i();
    auto set = [&](int f, int e, GaussRat c) { p[e - 1][f - 1] = c; };
    set(1, 1, h);  set(1, 2, i * h);
    set(2, 5, h);  set(2, 6, i * h);
    set(3, 4, h);  set(3, 7, i * h);
    set(4, 3, i);
    set(5, 4, -h); set(5, 7, i * h);
    set(6, 5, -h); set(6, 6, i * h);
    set(7, 1, -h); set(7, 2, i * h);
    return p;
}

Matrix<GaussRat> e_basis_in_f() { return *inverse(f_basis_in_e()); }

namespace {

VecV<GaussRat> mat_vec(const Matrix<GaussRat>& m, const VecV<GaussRat>& x) {
    auto out = zero_vec<GaussRat>();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) out[i] += m[i][j] * x[j];
    return out;
}

VecV<GaussRat> column(const Matrix<GaussRat>& m, int j) {
    VecV<GaussRat> c;
    for (int i = 0; i < 7; ++i) c[i] = m[i][j];
    return c;
}

}  // namespace

VecV<GaussRat> f_to_e(const VecV<GaussRat>& x) { return mat_vec(f_basis_in_e(), x); }
VecV<GaussRat> e_to_f(const VecV<GaussRat>& x) { return mat_vec(e_basis_in_f(), x); }

std::map<Triple, GaussRat> transport_tri(const TriForm& gamma, const Matrix<GaussRat>& p) {
    std::map<Triple, GaussRat> out;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                GaussRat val = gamma.eval(column(p, a), column(p, b), column(p, c));
                if (!val.is_zero()) out[{a + 1, b + 1, c + 1}] = val;
            }
    return out;
}

Matrix<GaussRat> transport_bil(const BilForm& beta, const Matrix<GaussRat>& p) {
    auto out = zero_matrix<GaussRat>(7, 7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) out[a][b] = beta.eval(column(p, a), column(p, b));
    return out;
}

namespace {

template <class K, class F>
std::string render(const K& s, const VecV<K>& v, const char* basis, bool with_unit, F&& str) {
    std::string out;
    auto emit = [&](const K& c, const std::string& name) {
        if (c == K(0)) return;
        std::string cs = str(c);
        bool compound = cs.find_first_of("+ ") != std::string::npos || (cs.size() > 1 && cs.find('-', 1) != std::string::npos);
        if (compound) cs = "(" + cs + ")";
        bool neg = !compound && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        out += (cs == "1") ? name : cs + "*" + name;
    };
    if (with_unit) emit(s, "e");
    for (int i = 0; i < 7; ++i) emit(v[i], std::string(basis) + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const VecV<Rat>& v, const char* basis) {
    return render(Rat(0), v, basis, false, [](const Rat& r) { return to_string(r); });
}

std::string to_string(const Oct<Rat>& u, const char* basis) {
    return render(u.s, u.v, basis, true, [](const Rat& r) { return to_string(r); });
}

std::string to_string(const Oct<MPoly>& u, const char* basis) {
    return render(u.s, u.v, basis, true, [](const MPoly& p) { return to_string(p); });
}

Oct<Rat> parse_oct(std::string_view text, char basis) {
    std::string t;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            t += text[i];
            where.push_back(i);
        }
    auto at = [&](std::size_t k) { return k < where.size() ? where[k] : text.size(); };
    if (t.empty()) throw SyntaxError("empty octonion", 0);
    Oct<Rat> out;
    if (t.find(',') != std::string::npos) {
        std::vector<Rat> xs;
        std::size_t start = 0;
        while (true) {
            auto comma = t.find(',', start);
            std::string piece = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                xs.push_back(parse_rat(piece));
            } catch (const std::invalid_argument&) {
                throw SyntaxError("bad coordinate '" + piece + "'", at(start));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (xs.size() != 7 && xs.size() != 8)
            throw SyntaxError("expected 7 or 8 coordinates, got " + std::to_string(xs.size()), 0);
        std::size_t off = xs.size() == 8 ? 1 : 0;
        if (off) out.s = xs[0];
        for (int i = 0; i < 7; ++i) out.v[i] = xs[i + off];
        return out;
    }
    std::size_t k = 0;
    bool first = true;
    while (k < t.size()) {
        Rat sign = 1;
        if (t[k] == '+' || t[k] == '-') {
            sign = t[k] == '-' ? -1 : 1;
            ++k;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", at(k));
        }
        first = false;
        std::size_t start = k;
        while (k < t.size() && (std::isdigit(static_cast<unsigned char>(t[k])) || t[k] == '/')) ++k;
        Rat coeff = 1;
        if (k > start) {
            try {
                coeff = parse_rat(t.substr(start, k - start));
            } catch (const std::invalid_argument&) {
                throw SyntaxError("bad coefficient", at(start));
            }
        }
        if (k < t.size() && t[k] == '*') ++k;
        if (k < t.size() && t[k] == basis && k + 1 < t.size() && t[k + 1] >= '1' && t[k + 1] <= '7') {
            out.v[t[k + 1] - '1'] += sign * coeff;
            k += 2;
        } else if (k < t.size() && t[k] == 'e') {
            out.s += sign * coeff;
            ++k;
        } else if (k > start && (k == t.size() || t[k] == '+' || t[k] == '-')) {
            out.s += sign * coeff;
        } else {
            throw SyntaxError(std::string("expected e or ") + basis + "1.." + basis + "7", at(k));
        }
    }
    return out;
}

}  // namespace g2sc
