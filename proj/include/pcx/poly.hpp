#pragma once

// Univariate polynomials over a Field, coefficients lowest degree first.
// Only what the idempotent search needs: Euclid, modular powers and
// splitting into coprime factors.

#include "pcx/field.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace pcx::poly {

using Poly = std::vector<Scalar>;

Poly trim(Poly a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly monic(const Poly& a);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
/// (g, s, t) with s a + t b = g = gcd(a, b) monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
/// base^e mod m for a big exponent.
Poly powmod(const Poly& base, const BigInt& e, const Poly& m);
Poly x(const Field& f);
Poly constant(const Scalar& c);

/// A factorization f = g1 * g2 into coprime nonconstant factors, if one is found.
/// Complete over F_p (found iff f has two distinct irreducible factors);
/// over Q only splits off rational roots.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f, std::mt19937_64& rng);

}  // namespace pcx::poly
