#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arrdeform {

class Scalar;

/// Coefficient field: the rationals, or a prime field GF(p).
/// Cheap value type; every Scalar and Matrix carries one.
class Field {
public:
    static Field rationals() { return Field{0}; }
    static Field gf(std::uint64_t p);  // InputError unless p is a prime >= 2

    bool is_rationals() const { return p_ == 0; }
    bool is_gf() const { return p_ != 0; }
    std::uint64_t prime() const;  // ContractError over the rationals

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    // Accepts "-12" over any field, "3/4" only over the rationals.
    Scalar parse(std::string_view text) const;

    std::string name() const;  // "Q" or "GF(p)"

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 encodes the rationals
};

/// Exact field element: a reduced rational or a residue in [0, p).
/// Immutable in use; all operators return fresh values.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // ContractError on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    std::string str() const;  // "3", "-1/2"; residues render as "2"

    const mpq_class& rational() const;  // ContractError unless over Q
    std::uint64_t residue() const;      // ContractError unless over GF(p)

private:
    friend class Field;
    Scalar(Field f, mpq_class q) : field_(f), rat_(std::move(q)), res_(0) {}
    Scalar(Field f, std::uint64_t r) : field_(f), rat_(0), res_(r) {}

    Field field_;
    mpq_class rat_;      // used when field_ is the rationals
    std::uint64_t res_;  // used when field_ is GF(p)
};

}  // namespace arrdeform
