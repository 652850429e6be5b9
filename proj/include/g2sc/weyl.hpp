#pragma once

#include "g2sc/errors.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace g2sc {

/** One-line notation: images[i] = w(i+1), values 1..7. */
struct Perm7 {
    std::array<int, 7> images{};

    static Perm7 identity();
    int operator()(int i) const { return images[i - 1]; }
    // (p * q)(i) = p(q(i)).
    Perm7 operator*(const Perm7& q) const;
    Perm7 inverse() const;
    bool operator==(const Perm7& o) const { return images == o.images; }
    bool operator!=(const Perm7& o) const { return images != o.images; }
    std::string str() const;
};

/** Handle to one of the 12 interned elements of W(G2). */
class WeylElt {
public:
    WeylElt() = default;

    static WeylElt id();
    static WeylElt s();
    static WeylElt t();
    static WeylElt w0();
    /** Any word over {s,t}; reduced using the Coxeter relations. "id" and "" name the identity. */
    static WeylElt from_word(std::string_view word);
    /** Pair (w(1), w(2)); throws InvalidPair. */
    static WeylElt from_pair(int i, int j);
    /** Accepts words, "id", or pairs written "5 2" or "52". */
    static WeylElt parse(std::string_view text);

    int index() const { return index_; }
    const std::string& word() const;
    // "id" for the identity.
    std::string name() const;
    std::pair<int, int> pair() const;
    const Perm7& perm() const;
    int length() const;

    bool operator==(const WeylElt& o) const { return index_ == o.index_; }
    bool operator!=(const WeylElt& o) const { return index_ != o.index_; }
    bool operator<(const WeylElt& o) const { return index_ < o.index_; }

private:
    explicit WeylElt(int i) : index_(i) {}
    int index_ = 0;
    friend struct WeylTable;
};

/** Canonical order: by length, then lexicographic word. */
const std::vector<WeylElt>& all_elements();

WeylElt mul(const WeylElt& u, const WeylElt& w);
WeylElt inv(const WeylElt& w);
inline int length(const WeylElt& w) { return w.length(); }

/** Word reduction by s^2 = t^2 = 1 and the braid relation only (no permutations). */
std::string reduce_word(std::string_view word);
/** True iff the word has length equal to the length of its element. */
bool is_reduced(std::string_view word);

/** The alternate reduced word of w0. */
inline const std::string& w0_alt_word() {
    static const std::string alt = "tststs";
    return alt;
}

Perm7 embed_s7(const WeylElt& w);
Perm7 generator_perm(char letter);

/** Full permutation from the first two values, via the isotropic kernels and w(i) + w(8-i) = 8. */
Perm7 extend_pair(int i, int j);

/** Subword criterion on the canonical reduced word of w. */
bool bruhat_leq(const WeylElt& u, const WeylElt& w);

/** r_w(q, p) = #{i <= q : w(i) <= p}. */
int rank_fn(const WeylElt& w, int q, int p);

}  // namespace g2sc
