#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spheromo {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

// Malformed input documents, bad rationals, out-of-range indices.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations detected by an operation (e.g. a polytope that is
// not full-dimensional in its lattice).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing data-table coverage (Luna (S) rows, socle keys).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const QVec& v);  // "(a, b, c)"

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
bool is_integral(const Rational& q);
bool is_integral(const QVec& v);

QVec zeros(std::size_t n);
QVec unit(std::size_t n, std::size_t i);
Rational dot(const QVec& a, const QVec& b);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& c, const QVec& a);
bool is_zero(const QVec& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer denominator_lcm(const QVec& v);

// Positive rational multiple of v that is an integral vector with coprime
// entries. v must be nonzero.
QVec primitive(const QVec& v);

// True if a = c*b for some rational c > 0 (both nonzero).
bool positively_proportional(const QVec& a, const QVec& b);
// True if a = c*b for some rational c != 0.
bool proportional(const QVec& a, const QVec& b);

}  // namespace spheromo
