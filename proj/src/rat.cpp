#include "g2sc/rat.hpp"

#include <stdexcept>

namespace g2sc {

std::string to_string(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("bad rational: " + s);
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') throw std::invalid_argument("bad rational: " + s);
        return Int(t[0] == '+' ? t.substr(1) : t);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

GaussRat GaussRat::inverse() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return GaussRat(re / n, -im / n);
}

std::string to_string(const GaussRat& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : to_string(z.im) + "*i";
    if (z.re == 0) return im;
    if (z.im > 0) return to_string(z.re) + " + " + im;
    std::string pos = (z.im == -1) ? "i" : to_string(Rat(-z.im)) + "*i";
    return to_string(z.re) + " - " + pos;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace g2sc
