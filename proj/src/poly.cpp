#include "pcx/poly.hpp"

#include "pcx/error.hpp"

namespace pcx::poly {

namespace {

Field field_of(const Poly& a) {
  if (a.empty()) throw Error(ErrorCode::ShapeMismatch, "polynomial: field of the zero polynomial is unknown");
  return a.front().field();
}

Poly one_like(const Poly& a) { return {field_of(a).one()}; }

// The part of f built from irreducible factors of g, and the cofactor.
std::pair<Poly, Poly> split_along(const Poly& f, const Poly& g) {
  Poly part = one_like(f), rest = f;
  while (true) {
    Poly c = gcd(rest, g);
    if (degree(c) <= 0) break;
    part = mul(part, c);
    rest = divmod(rest, c).first;
  }
  return {monic(part), monic(rest)};
}

Scalar evaluate(const Poly& a, const Scalar& t) {
  Scalar v = t.field().zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * t + *it;
  return v;
}

std::vector<BigInt> divisors(BigInt n) {
  std::vector<BigInt> out;
  if (n < 0) n = -n;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::optional<Scalar> rational_root(const Poly& s) {
  const Field F = field_of(s);
  if (s.front().is_zero()) return F.zero();
  BigInt den = 1;
  for (const auto& c : s) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c.rational()));
  const BigInt a0 = boost::multiprecision::numerator(Rational(s.front().rational() * den));
  const BigInt an = boost::multiprecision::numerator(Rational(s.back().rational() * den));
  const BigInt limit = 1000000;
  if (abs(a0) > limit || abs(an) > limit) return std::nullopt;
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an))
      for (int sign : {1, -1}) {
        const Scalar r = F.from_rational(Rational(p * sign, q));
        if (evaluate(s, r).is_zero()) return r;
      }
  return std::nullopt;
}

std::optional<Poly> equal_degree_factor(const Poly& g, int k, std::mt19937_64& rng) {
  const Field F = field_of(g);
  const std::uint32_t p = F.characteristic();
  const int n = degree(g);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a;
    for (int i = 0; i < n; ++i) a.push_back(F.from_int(static_cast<std::int64_t>(rng() % p)));
    a = trim(a);
    if (degree(a) <= 0) continue;
    Poly b;
    if (p == 2) {
      Poly term = a;
      b = a;
      for (int i = 1; i < k; ++i) {
        term = mod(mul(term, term), g);
        b = add(b, term);
      }
    } else {
      BigInt e = 1;
      for (int i = 0; i < k; ++i) e *= p;
      b = sub(powmod(a, (e - 1) / 2, g), one_like(g));
    }
    Poly u = gcd(g, b);
    if (degree(u) > 0 && degree(u) < n) return u;
  }
  return std::nullopt;
}

}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_zero()) return i;
  return -1;
}

Poly monic(const Poly& a) {
  Poly t = trim(a);
  if (t.empty()) return t;
  const Scalar inv = t.back().inverse();
  for (auto& c : t) c *= inv;
  return t;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  return trim(r);
}

Poly sub(const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& c : nb) c = -c;
  return add(a, nb);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const Poly d = trim(b);
  if (d.empty()) throw Error(ErrorCode::ShapeMismatch, "polynomial division by zero");
  Poly r = trim(a);
  if (degree(r) < degree(d)) return {{}, r};
  const Field F = d.front().field();
  Poly q(r.size() - d.size() + 1, F.zero());
  const Scalar inv = d.back().inverse();
  while (degree(r) >= degree(d)) {
    const std::size_t shift = r.size() - d.size();
    const Scalar c = r.back() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = trim(r);
  }
  return {trim(q), r};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = trim(a), y = trim(b);
  while (!y.empty()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field F = field_of(trim(a).empty() ? b : a);
  Poly r0 = trim(a), r1 = trim(b);
  Poly s0{F.one()}, s1{}, t0{}, t1{F.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = r0.back().inverse();
  for (Poly* p : {&r0, &s0, &t0})
    for (auto& c : *p) c *= inv;
  return {trim(r0), trim(s0), trim(t0)};
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  const Field F = a.front().field();
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * F.from_int(static_cast<std::int64_t>(i)));
  return trim(d);
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& m) {
  Poly result = one_like(m);
  Poly b = mod(base, m);
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result), m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mod(mul(result, b), m);
  }
  return result;
}

Poly x(const Field& f) { return {f.zero(), f.one()}; }

Poly constant(const Scalar& c) { return trim({c}); }

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& input, std::mt19937_64& rng) {
  const Poly f = monic(input);
  if (degree(f) < 2) return std::nullopt;
  const Field F = field_of(f);
  if (F.is_rational()) {
    const Poly s = divmod(f, gcd(f, derivative(f))).first;
    auto r = rational_root(monic(s));
    if (!r) return std::nullopt;
    auto [part, rest] = split_along(f, Poly{-*r, F.one()});
    if (degree(rest) <= 0) return std::nullopt;
    return std::make_pair(part, rest);
  }
  // Distinct-degree step: g collects the irreducible factors of the least degree k.
  const std::uint32_t p = F.characteristic();
  const Poly X = x(F);
  Poly h = X;
  for (int k = 1; k <= degree(f); ++k) {
    h = powmod(h, BigInt(p), f);
    const Poly g = gcd(f, sub(h, X));
    if (degree(g) <= 0) continue;
    auto [part, rest] = split_along(f, g);
    if (degree(rest) > 0) return std::make_pair(part, rest);
    if (degree(g) == k) return std::nullopt;  // f is a power of one irreducible
    auto u = equal_degree_factor(g, k, rng);
    if (!u) return std::nullopt;
    auto [p1, p2] = split_along(f, *u);
    return std::make_pair(p1, p2);
  }
  return std::nullopt;
}

}  // namespace pcx::poly
