#include "field.hpp"

#include <cctype>

#include "errors.hpp"

namespace arrdeform {

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p, p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw ContractError("scalar arithmetic across distinct fields");
}

bool looks_like_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Field Field::gf(std::uint64_t p) {
    if (p < 2) throw InputError("GF(p): p must be a prime >= 2");
    if (p > (std::uint64_t{1} << 31)) throw InputError("GF(p): prime exceeds 2^31");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InputError("GF(p): " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::uint64_t Field::prime() const {
    if (!is_gf()) throw ContractError("prime() called on the rationals");
    return p_;
}

Scalar Field::zero() const {
    return is_gf() ? Scalar{*this, std::uint64_t{0}} : Scalar{*this, mpq_class{0}};
}

Scalar Field::one() const {
    return is_gf() ? Scalar{*this, std::uint64_t{1}} : Scalar{*this, mpq_class{1}};
}

Scalar Field::from_int(long long v) const {
    if (is_rationals()) return Scalar{*this, mpq_class{static_cast<long>(v)}};
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Scalar{*this, static_cast<std::uint64_t>(r)};
}

Scalar Field::parse(std::string_view text) const {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (is_gf())
            throw InputError("fraction literal \"" + std::string(text) +
                             "\" is only valid over Q");
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!looks_like_integer(num) || !looks_like_integer(den))
            throw InputError("malformed scalar \"" + std::string(text) + "\"");
        mpz_class n{std::string(num)};
        mpz_class d{std::string(den)};
        if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
        mpq_class q{n, d};
        q.canonicalize();
        return Scalar{*this, std::move(q)};
    }
    if (!looks_like_integer(text))
        throw InputError("malformed scalar \"" + std::string(text) + "\"");
    if (is_rationals()) return Scalar{*this, mpq_class{std::string(text)}};
    mpz_class v{std::string(text)};
    mpz_class r = v % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return Scalar{*this, static_cast<std::uint64_t>(r.get_ui())};
}

std::string Field::name() const {
    return is_gf() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

bool Scalar::is_zero() const {
    return field_.is_gf() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_gf() ? res_ == 1 : rat_ == 1;
}

Scalar Scalar::operator-() const {
    if (field_.is_gf())
        return Scalar{field_, res_ == 0 ? std::uint64_t{0} : field_.prime() - res_};
    return Scalar{field_, mpq_class{-rat_}};
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ContractError("inverse of zero");
    if (field_.is_gf()) return Scalar{field_, mod_inv(res_, field_.prime())};
    return Scalar{field_, mpq_class{1 / rat_}};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_gf()) return Scalar{a.field_, mod_add(a.res_, b.res_, a.field_.prime())};
    return Scalar{a.field_, mpq_class{a.rat_ + b.rat_}};
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_gf()) return Scalar{a.field_, mod_sub(a.res_, b.res_, a.field_.prime())};
    return Scalar{a.field_, mpq_class{a.rat_ - b.rat_}};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_gf()) return Scalar{a.field_, mod_mul(a.res_, b.res_, a.field_.prime())};
    return Scalar{a.field_, mpq_class{a.rat_ * b.rat_}};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
    if (!(field_ == other.field_)) return false;
    return field_.is_gf() ? res_ == other.res_ : rat_ == other.rat_;
}

std::string Scalar::str() const {
    return field_.is_gf() ? std::to_string(res_) : rat_.get_str();
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw ContractError("rational() on a GF(p) scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_gf()) throw ContractError("residue() on a rational scalar");
    return res_;
}

}  // namespace arrdeform
