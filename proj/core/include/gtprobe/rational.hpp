#pragma once

// Exact scalars and vectors. Everything geometric in gtprobe is built on these;
// there is no floating point outside the numeric sampling module.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gtprobe {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (GMP canonical form).
class Rational {
public:
    Rational() = default;
    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    /// Caller guarantees canonical form.
    explicit Rational(const mpq_class& canonical) : value_(canonical) {}

    /// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
    /// Throws std::invalid_argument on anything else (including decimals).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return value_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Integer vector of fixed dimension (probe directions, facet normals).
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : entries_(dim, Integer(0)) {}
    IntVector(std::initializer_list<long> values);
    explicit IntVector(std::vector<Integer> values) : entries_(std::move(values)) {}

    std::size_t size() const { return entries_.size(); }
    Integer& operator[](std::size_t i) { return entries_[i]; }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    IntVector operator-() const;

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const IntVector& a, const IntVector& b) { return a.entries_ < b.entries_; }

    std::string str() const;

private:
    std::vector<Integer> entries_;
};

/// Rational point of fixed dimension.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : entries_(dim) {}
    RationalVector(std::initializer_list<Rational> values) : entries_(values) {}
    explicit RationalVector(std::vector<Rational> values) : entries_(std::move(values)) {}
    explicit RationalVector(const IntVector& v);

    std::size_t size() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const RationalVector& a, const RationalVector& b) { return a.entries_ < b.entries_; }

    std::string str() const;

private:
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// Divides by the gcd of the entries; sign is preserved.
/// Throws std::invalid_argument("zero vector has no primitive form").
IntVector primitive(const IntVector& v);

Integer gcd_of(const IntVector& v);

Rational dot(const IntVector& a, const RationalVector& x);
Integer dot(const IntVector& a, const IntVector& b);

/// x + t * direction
RationalVector along(const RationalVector& x, const Rational& t, const IntVector& direction);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);

/// Parses "p/q,p/q,..." (comma separated).
RationalVector parse_rational_list(std::string_view text);

} // namespace gtprobe
