#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tvchow {

using Rational = mpq_class;
using Integer = mpz_class;

/// A point or direction in Q^n. The ambient rank is the length.
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& a);

bool is_zero(const Vector& v);
Vector concat(const Vector& a, const Vector& b);

/// Scales a nonzero vector to the primitive integral vector on the same ray.
Vector primitive(const Vector& v);
bool is_integral(const Vector& v);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

}  // namespace tvchow
