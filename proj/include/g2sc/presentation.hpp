#pragma once

#include "g2sc/chern.hpp"
#include "g2sc/errors.hpp"
#include "g2sc/mpoly.hpp"
#include "g2sc/schubert.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2sc {

/** Oriented relation lhs -> rhs; lhs is a monomial in the ring variables. */
struct Rule {
    Monomial lhs;
    MPoly rhs;
};

enum class CoeffRing { Integers, HalfIntegers, Rationals };

/**
 * Quotient of base[ring_vars] by the ideal of the rules. Base classes are the symbols
 * allowed in coefficients.
 */
struct Presentation {
    std::string name;
    std::vector<Var> ring_vars;
    std::vector<Var> base_vars;
    std::map<Var, int> weights;  // cohomological degree of each ring variable
    std::vector<Rule> rules;
    std::vector<Monomial> basis;
    std::vector<MPoly> generators;  // relations as originally stated
    CoeffRing coeffs = CoeffRing::Rationals;

    bool integral() const { return coeffs == CoeffRing::Integers; }
    int weight(const Monomial& m) const;
    int basis_index(const Monomial& ring_part) const;
    std::size_t rank() const { return basis.size(); }
};

/** Coefficients (polynomials in the base classes) on the basis. */
struct NormalForm {
    std::vector<MPoly> coeffs;

    bool is_zero() const;
    bool operator==(const NormalForm& o) const { return coeffs == o.coeffs; }
    bool operator!=(const NormalForm& o) const { return coeffs != o.coeffs; }
};

/** Throws NonIntegralReduction for integral presentations when the result leaves Z[base]. */
NormalForm normal_form(const Presentation& p, const MPoly& f);
MPoly to_poly(const Presentation& p, const NormalForm& nf);
/** The rewritten polynomial without the integrality check. */
MPoly reduce(const Presentation& p, const MPoly& f);

/** Base classes for the integral flag-bundle presentation. */
struct FlBase {
    MPoly c1F3, c2F3, c3F3;  // c(F3)
    MPoly c1Q, c3Q;          // c_1, c_3 of V/F3
    MPoly c1F1;              // c_1(F1)
    std::vector<Var> vars;

    static FlBase symbolic();
    static FlBase split(Var a, Var b);
    static FlBase point();
};

Presentation fl_integral_bundle(const FlBase& base, const std::string& name = "fl-integral-bundle");
Presentation fl_integral_point();
Presentation equivariant();
/** e_i(x1^2, x2^2, (x1-x2)^2) = e_i(a^2, b^2, (a-b)^2) for the chosen base symbols. */
Presentation fl_half_bundle(Var a = Var::y1, Var b = Var::y2, const std::string& name = "fl-half-bundle");
Presentation fl_half_point();
Presentation equivariant_half();
Presentation fl_half_bundle_twisted();
/** Chow ring of the quadric bundle from c(F) (rank n) and c(V/F) (rank n+1), tau = 0. */
Presentation quadric_bundle(int n, const ChernVector& cF, const ChernVector& cQ, const std::string& name);
/** n = 3 with c(F) = (1+y1)(1+y2)(1+y1-y2) and c(V/F) from chern_quotient. */
Presentation quadric_bundle_split3();
Presentation quadric_fiber(int n);

/** Resolves the CLI names listed in presentation_names(). */
Presentation presentation_by_name(const std::string& name);
const std::vector<std::string>& presentation_names();

/** Substitutes base classes in every rule and generator. */
Presentation specialize(const Presentation& p, const Assignment& a, const std::string& name,
                        const std::vector<Var>& base_vars);

struct PresentationReport {
    bool ok = true;
    std::size_t rank = 0;
    bool basis_matches = false, closure = false, associative = false, confluent = false, generators = false;
    std::vector<std::string> lines;
};

PresentationReport verify_presentation(const Presentation& p);

/** Rules agree after sorting by left side. */
bool same_rules(const Presentation& a, const Presentation& b);

/** -(x1 + x2 + (x1 - x2)) reduces to -2 x1, and c2(S3) to 2 x1^2 + c2(F3) - 2 c1(F1)^2. */
bool chern_s3_consistency(const Presentation& p, const FlBase& base);

/** 2hf - (h^4 + c1 h^3 + ... + c4) of V/F, reduced in quadric_bundle_split3(). */
MPoly quadric_eg_residue();

/** Coefficients c_w with f = sum c_w P_w in the ring. Throws NotInSpan. */
std::vector<MPoly> schubert_expand(const MPoly& f, const SchubertFamily& fam, const Presentation& p);

/** (u, v) entry: point-class coefficient of P_u P_v. */
Matrix<Rat> duality_pairing(const SchubertFamily& fam, const Presentation& p);

/** alpha -> 1/2 (x1^3 - c1 x1^2 + c2 x1 - c3), the map from the integral to the Z[1/2] ring. */
MPoly alpha_to_half(const MPoly& f, const FlBase& base);

std::string to_string(const Presentation& p, const NormalForm& nf);

}  // namespace g2sc
