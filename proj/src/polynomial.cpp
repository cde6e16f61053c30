#include "polynomial.hpp"

#include <cctype>

#include "errors.hpp"

namespace arrdeform {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
    return monomial(std::move(c), 0);
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t power) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, mpz_class{0});
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

mpz_class IntPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : mpz_class{0};
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), mpz_class{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) r.coeffs_[k] += other.coeffs_[k];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), mpz_class{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) r.coeffs_[k] -= other.coeffs_[k];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, mpz_class{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    r.trim();
    return r;
}

IntPoly IntPoly::pow(std::size_t e) const {
    IntPoly r = constant(1);
    for (std::size_t k = 0; k < e; ++k) r = r * *this;
    return r;
}

mpz_class IntPoly::operator()(const mpz_class& t) const {
    mpz_class v{0};
    for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * t + coeffs_[k];
    return v;
}

std::vector<mpz_class> IntPoly::coeffs_descending() const {
    std::vector<mpz_class> out;
    if (coeffs_.empty()) return {mpz_class{0}};
    for (std::size_t k = coeffs_.size(); k-- > 0;) out.push_back(coeffs_[k]);
    return out;
}

std::vector<mpz_class> IntPoly::alternating_coeffs(std::size_t count) const {
    std::vector<mpz_class> out;
    const std::size_t d = degree();
    for (std::size_t k = 0; k < count; ++k) {
        mpz_class c = k <= d ? coeff(d - k) : mpz_class{0};
        out.push_back(k % 2 == 0 ? c : mpz_class{-c});
    }
    return out;
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        mpz_class mag = negative ? mpz_class{-c} : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (mag != 1 || k == 0) s += mag.get_str();
        if (k >= 1) {
            s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
    }
    return s;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool done() {
        skip_spaces();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
    std::string digits() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("malformed polynomial \"" + std::string(s) + "\"");
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    Cursor c{text};
    if (c.done()) throw InputError("empty polynomial");
    IntPoly result;
    bool negative = false;
    if (c.peek() == '-') {
        negative = true;
        ++c.pos;
    }
    while (true) {
        c.skip_spaces();
        mpz_class mag{1};
        bool saw_digits = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mag = mpz_class{c.digits()};
            saw_digits = true;
        }
        std::size_t power = 0;
        c.skip_spaces();
        if (!c.done() && c.peek() == 't') {
            ++c.pos;
            power = 1;
            if (c.pos < c.s.size() && c.peek() == '^') {
                ++c.pos;
                power = std::stoul(c.digits());
            }
        } else if (!saw_digits) {
            throw InputError("malformed polynomial \"" + std::string(text) + "\"");
        }
        result = result + monomial(negative ? mpz_class{-mag} : mag, power);
        if (c.done()) break;
        if (c.peek() == '+') {
            negative = false;
        } else if (c.peek() == '-') {
            negative = true;
        } else {
            throw InputError("malformed polynomial \"" + std::string(text) + "\"");
        }
        ++c.pos;
    }
    return result;
}

}  // namespace arrdeform
