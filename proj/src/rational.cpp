#include "bcr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bcr {

bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
bool operator!=(const Point& a, const Point& b) { return !(a == b); }

bool operator<(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return a.y < b.y;
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

Rational rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Point pt(const Rational& x, const Rational& y) { return {x, y}; }

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(b - a, c - a));
}

int sign(const Rational& r) { return sgn(r); }

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

static bool all_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!all_digits(num, start) || !all_digits(den, 0))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace bcr
