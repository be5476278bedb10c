#include "spheromo/core.hpp"

#include <cctype>

namespace spheromo {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Integer(std::string(s.substr(i)));
  if (neg) out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Integer p, q(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, p)) throw InputError("malformed rational \"" + std::string(text) + "\"");
  } else {
    if (!parse_integer(trim(s.substr(0, slash)), p) ||
        !parse_integer(trim(s.substr(slash + 1)), q))
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

bool is_integral(const Rational& q) { return denominator_of(q) == 1; }
bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

QVec zeros(std::size_t n) { return QVec(n, Rational(0)); }
QVec unit(std::size_t n, std::size_t i) {
  QVec v = zeros(n);
  v[i] = 1;
  return v;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator-(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec operator*(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Integer denominator_lcm(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denominator_of(x));
  return l;
}

QVec primitive(const QVec& v) {
  if (is_zero(v)) throw DomainError("primitive() of zero vector");
  Integer l = denominator_lcm(v);
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, numerator_of(x * l));
  return Rational(l, g) * v;
}

bool proportional(const QVec& a, const QVec& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t k = 0;
  while (b[k] == 0) ++k;
  Rational c = a[k] / b[k];
  if (c == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return false;
  return true;
}

bool positively_proportional(const QVec& a, const QVec& b) {
  if (!proportional(a, b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) return (a[i] > 0) == (b[i] > 0);
  return false;
}

}  // namespace spheromo
