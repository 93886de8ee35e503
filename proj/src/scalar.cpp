#include "sympclif/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sympclif {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
    if (o.is_zero()) throw std::invalid_argument("GaussRat: division by zero");
    Rat d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    if (re == 0) {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        return rat_str(im) + "*i";
    }
    std::string s = "(" + rat_str(re);
    if (im > 0)
        s += " + " + (im == 1 ? std::string("i") : rat_str(im) + "*i");
    else
        s += " - " + (im == -1 ? std::string("i") : rat_str(-im) + "*i");
    return s + ")";
}

Scalar Scalar::tau() {
    Scalar s;
    s.terms_[{1, 0}] = GaussRat::of(1);
    return s;
}

Scalar Scalar::alpha() {
    Scalar s;
    s.terms_[{0, 1}] = GaussRat::of(1);
    return s;
}

Scalar Scalar::alpha_pow(std::uint32_t e, GaussRat c) {
    Scalar s;
    if (!c.is_zero()) s.terms_[{0, e}] = std::move(c);
    return s;
}

Scalar Scalar::of_gauss(const GaussRat& c) {
    Scalar s;
    if (!c.is_zero()) s.terms_[{0, 0}] = c;
    return s;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

GaussRat Scalar::constant() const {
    if (terms_.empty()) return {};
    if (!is_constant()) throw std::invalid_argument("Scalar::constant: has tau/alpha content");
    return terms_.begin()->second;
}

void Scalar::add_term(const Key& k, const GaussRat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

Scalar Scalar::conj() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
    return r;
}

Scalar Scalar::truncated_alpha(std::uint32_t max_deg) const {
    Scalar r;
    for (const auto& [k, c] : terms_)
        if (k.second <= max_deg) r.terms_[k] = c;
    return r;
}

std::complex<double> Scalar::to_float(std::complex<double> alpha_value) const {
    const double sqrt_pi = std::sqrt(M_PI);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
        std::complex<double> v = c.to_float();
        for (std::uint32_t e = 0; e < k.first; ++e) v *= sqrt_pi;
        for (std::uint32_t e = 0; e < k.second; ++e) v *= alpha_value;
        acc += v;
    }
    return acc;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.str();
        if (k.first) out += "*t^" + std::to_string(k.first);
        if (k.second) out += "*a^" + std::to_string(k.second);
    }
    return out;
}

namespace {

// Minimal recursive parser for the canonical scalar rendering, plus sums,
// signs and bare symbols ("t", "a", "i", "3/2", "(1 - 2*i)*t^2").
struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("Scalar::parse: " + what + " at offset " + std::to_string(pos));
    }

    Rat number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("expected number");
        std::string num = s.substr(start, pos - start);
        std::string den = "1";
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            den = s.substr(dstart, pos - dstart);
        }
        Rat r(num + "/" + den);
        r.canonicalize();
        return r;
    }

    // coefficient: number, i, number*i, or (re +/- im*i)
    GaussRat coefficient() {
        skip_ws();
        if (eat('(')) {
            GaussRat a = signed_atom();
            skip_ws();
            while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool neg = s[pos] == '-';
                ++pos;
                GaussRat b = signed_atom();
                a = neg ? a - b : a + b;
            }
            if (!eat(')')) fail("expected ')'");
            return a;
        }
        return signed_atom();
    }

    GaussRat signed_atom() {
        skip_ws();
        bool neg = false;
        while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            if (s[pos] == '-') neg = !neg;
            ++pos;
            skip_ws();
        }
        GaussRat v;
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            v = GaussRat::i_times(1);
        } else {
            Rat r = number();
            skip_ws();
            if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
                pos += 2;
                v = GaussRat{Rat(0), r};
            } else {
                v = GaussRat{r, Rat(0)};
            }
        }
        return neg ? -v : v;
    }

    Scalar term() {
        skip_ws();
        GaussRat c;
        std::uint32_t te = 0, ae = 0;
        bool have_coeff = false;
        // optional leading sign handled by caller
        if (pos < s.size() && (s[pos] == '(' || std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'i')) {
            c = coefficient();
            have_coeff = true;
        } else {
            c = GaussRat::of(1);
        }
        while (true) {
            skip_ws();
            size_t save = pos;
            if (have_coeff && !eat('*')) break;
            skip_ws();
            if (pos < s.size() && (s[pos] == 't' || s[pos] == 'a')) {
                char sym = s[pos];
                ++pos;
                std::uint32_t e = 1;
                if (eat('^')) {
                    Rat r = number();
                    e = static_cast<std::uint32_t>(r.get_num().get_ui());
                }
                if (sym == 't') te += e; else ae += e;
                have_coeff = true;
            } else {
                pos = save;
                break;
            }
        }
        Scalar out;
        Scalar sym = Scalar::of_gauss(c);
        Scalar t = Scalar::tau(), a = Scalar::alpha();
        for (std::uint32_t e = 0; e < te; ++e) sym = sym * t;
        for (std::uint32_t e = 0; e < ae; ++e) sym = sym * a;
        return sym;
    }

    Scalar parse() {
        skip_ws();
        bool neg = eat('-');
        Scalar acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return acc;
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    ScalarParser p(text);
    return p.parse();
}

Scalar operator*(const GaussRat& c, const Scalar& s) { return Scalar::of_gauss(c) * s; }

}  // namespace sympclif
