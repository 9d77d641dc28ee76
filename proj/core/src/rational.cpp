#include "gtprobe/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gtprobe {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const
{
    return value_.get_str(10);
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

IntVector::IntVector(std::initializer_list<long> values)
{
    entries_.reserve(values.size());
    for (long v : values) entries_.emplace_back(v);
}

bool IntVector::is_zero() const
{
    for (const auto& e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

IntVector IntVector::operator-() const
{
    IntVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -entries_[i];
    return r;
}

std::string IntVector::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

RationalVector::RationalVector(const IntVector& v)
{
    entries_.reserve(v.size());
    for (const auto& e : v) entries_.emplace_back(e);
}

std::string RationalVector::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const IntVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    return os << ')';
}

Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    return g;
}

IntVector primitive(const IntVector& v)
{
    const Integer g = gcd_of(v);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Rational dot(const IntVector& a, const RationalVector& x)
{
    if (a.size() != x.size()) throw std::invalid_argument("dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        acc += a[i] * x[i].raw();
    }
    return Rational(acc);
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RationalVector along(const RationalVector& x, const Rational& t, const IntVector& direction)
{
    if (x.size() != direction.size()) throw std::invalid_argument("dimension mismatch");
    RationalVector r = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (direction[i] != 0) r[i] += t * Rational(direction[i]);
    }
    return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v)
{
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

RationalVector parse_rational_list(std::string_view text)
{
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        values.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RationalVector(std::move(values));
}

} // namespace gtprobe
