#include "g2sc/weyl.hpp"

#include "g2sc/octonion.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace g2sc {

Perm7 Perm7::identity() {
    Perm7 p;
    for (int i = 0; i < 7; ++i) p.images[i] = i + 1;
    return p;
}

Perm7 Perm7::operator*(const Perm7& q) const {
    Perm7 r;
    for (int i = 0; i < 7; ++i) r.images[i] = images[q.images[i] - 1];
    return r;
}

Perm7 Perm7::inverse() const {
    Perm7 r;
    for (int i = 0; i < 7; ++i) r.images[images[i] - 1] = i + 1;
    return r;
}

std::string Perm7::str() const {
    std::string out;
    for (int i = 0; i < 7; ++i) {
        if (i) out += ' ';
        out += std::to_string(images[i]);
    }
    return out;
}

Perm7 generator_perm(char letter) {
    // s = t12 t35 t67, t = t23 t56.
    if (letter == 's') return Perm7{{2, 1, 5, 4, 3, 7, 6}};
    if (letter == 't') return Perm7{{1, 3, 2, 4, 6, 5, 7}};
    throw std::invalid_argument(std::string("not a generator: ") + letter);
}

std::string reduce_word(std::string_view input) {
    std::string w;
    for (char c : input) {
        if (c != 's' && c != 't') throw std::invalid_argument("word letters must be s or t: " + std::string(input));
        if (!w.empty() && w.back() == c) {
            w.pop_back();
            continue;
        }
        w.push_back(c);
        // Alternating words of length 7 shorten by (st)^6 = 1: swap the first six letters
        // for the other braid word, which then cancels against the seventh.
        if (w.size() == 7) {
            // c0..c5 equals the other braid word starting with c1; its last letter c0
            // then cancels c6 = c0, leaving the first five letters flipped.
            w.resize(5);
            for (auto& ch : w) ch = (ch == 's') ? 't' : 's';
        }
    }
    if (w == "tststs") w = "ststst";
    return w;
}

struct WeylTable {
    std::vector<std::string> words;
    std::vector<Perm7> perms;
    std::map<std::string, int> by_word;
    std::vector<WeylElt> sorted;

    static const WeylTable& get() {
        static const WeylTable table = build();
        return table;
    }

    static WeylTable build() {
        WeylTable t;
        // Reduced words in canonical order: length, then lexicographic.
        t.words = {"", "s", "t", "st", "ts", "sts", "tst", "stst", "tsts", "ststs", "tstst", "ststst"};
        for (std::size_t i = 0; i < t.words.size(); ++i) {
            Perm7 p = Perm7::identity();
            for (char c : t.words[i]) p = p * generator_perm(c);
            t.perms.push_back(p);
            t.by_word[t.words[i]] = static_cast<int>(i);
            t.sorted.push_back(WeylElt(static_cast<int>(i)));
        }
        return t;
    }
};

WeylElt WeylElt::id() { return WeylElt(0); }
WeylElt WeylElt::s() { return WeylElt(1); }
WeylElt WeylElt::t() { return WeylElt(2); }
WeylElt WeylElt::w0() { return WeylElt(11); }

WeylElt WeylElt::from_word(std::string_view word) {
    if (word == "id" || word == "e" || word == "1") return id();
    std::string r = reduce_word(word);
    const auto& tab = WeylTable::get();
    auto it = tab.by_word.find(r);
    if (it == tab.by_word.end()) throw std::logic_error("reduced word not in table: " + r);
    return WeylElt(it->second);
}

WeylElt WeylElt::from_pair(int i, int j) {
    const auto& tab = WeylTable::get();
    for (std::size_t k = 0; k < tab.perms.size(); ++k)
        if (tab.perms[k](1) == i && tab.perms[k](2) == j) return WeylElt(static_cast<int>(k));
    throw InvalidPair("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a fixed-point pair");
}

WeylElt WeylElt::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.size() == 2 && std::isdigit(static_cast<unsigned char>(compact[0])) &&
        std::isdigit(static_cast<unsigned char>(compact[1])))
        return from_pair(compact[0] - '0', compact[1] - '0');
    return from_word(compact);
}

const std::string& WeylElt::word() const { return WeylTable::get().words[index_]; }
std::string WeylElt::name() const { return index_ == 0 ? "id" : word(); }
std::pair<int, int> WeylElt::pair() const { return {perm()(1), perm()(2)}; }
const Perm7& WeylElt::perm() const { return WeylTable::get().perms[index_]; }
int WeylElt::length() const { return static_cast<int>(word().size()); }

const std::vector<WeylElt>& all_elements() { return WeylTable::get().sorted; }

WeylElt mul(const WeylElt& u, const WeylElt& w) { return WeylElt::from_word(u.word() + w.word()); }

WeylElt inv(const WeylElt& w) {
    std::string r(w.word().rbegin(), w.word().rend());
    return WeylElt::from_word(r);
}

bool is_reduced(std::string_view word) {
    if (word.empty()) return true;
    return reduce_word(word).size() == word.size();
}

Perm7 embed_s7(const WeylElt& w) { return w.perm(); }

Perm7 extend_pair(int i, int j) {
    static const std::vector<Triple> triples = kernel_triples();
    const Triple* hit = nullptr;
    for (const auto& t : triples)
        if (t[0] == i && (t[1] == j || t[2] == j)) hit = &t;
    if (!hit) throw InvalidPair("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a fixed-point pair");
    Perm7 p;
    p.images[0] = i;
    p.images[1] = j;
    p.images[2] = (*hit)[1] == j ? (*hit)[2] : (*hit)[1];
    p.images[3] = 4;
    for (int k = 5; k <= 7; ++k) p.images[k - 1] = 8 - p.images[8 - k - 1];
    return p;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
    const std::string& wd = w.word();
    const int n = static_cast<int>(wd.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != u.length()) continue;
        std::string sub;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1) sub.push_back(wd[k]);
        if (is_reduced(sub) && WeylElt::from_word(sub) == u) return true;
    }
    return false;
}

int rank_fn(const WeylElt& w, int q, int p) {
    if (q < 1 || q > 7 || p < 1 || p > 7) throw std::out_of_range("rank_fn arguments must lie in 1..7");
    int count = 0;
    for (int i = 1; i <= q; ++i)
        if (w.perm()(i) <= p) ++count;
    return count;
}

}  // namespace g2sc
