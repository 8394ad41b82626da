#pragma once

#include <gmpxx.h>

#include <string>

namespace bcr {

using Rational = mpq_class;
using Integer = mpz_class;

struct Point {
  Rational x;
  Rational y;
};

bool operator==(const Point& a, const Point& b);
bool operator!=(const Point& a, const Point& b);
// lexicographic, x first
bool operator<(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);

Rational rat(long num, long den = 1);
Point pt(const Rational& x, const Rational& y);

Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
// sign of cross(b - a, c - a)
int orientation(const Point& a, const Point& b, const Point& c);

int sign(const Rational& r);

// "p/q" in lowest terms, q >= 1
std::string to_string(const Rational& r);
// accepts "p/q" or "p"; throws std::invalid_argument
Rational parse_rational(const std::string& s);

double to_double(const Rational& r);

}  // namespace bcr
