#include "btq/poly.hpp"

#include <cctype>
#include <sstream>

namespace btq {

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = fq.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = fq.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly PolyRing::neg(const Poly& a) const {
  std::vector<std::int64_t> c = a.coeffs();
  for (auto& v : c) v = fq.neg(v);
  return Poly(std::move(c));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = fq.add(c[i + j], fq.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(std::move(c));
}

Poly PolyRing::mul_scalar(const Poly& a, std::int64_t s) const {
  s = fq.reduce(s);
  if (s == 0) return Poly::zero();
  std::vector<std::int64_t> c = a.coeffs();
  for (auto& v : c) v = fq.mul(v, s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.is_zero()) return {Poly::zero(), Poly::zero()};
  int db = b.deg_nonzero();
  std::int64_t ilead = fq.inv(b.lead());
  std::vector<std::int64_t> rem = a.coeffs();
  std::vector<std::int64_t> quo;
  int da = a.deg_nonzero();
  if (da >= db) quo.assign(static_cast<std::size_t>(da - db) + 1, 0);
  for (int i = da; i >= db; --i) {
    std::int64_t t = fq.mul(rem[static_cast<std::size_t>(i)], ilead);
    if (t == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      rem[idx] = fq.sub(rem[idx], fq.mul(t, b.coeff(j)));
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return mul_scalar(a, fq.inv(a.lead()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return monic(x);
}

std::tuple<Poly, Poly, Poly> PolyRing::xgcd(const Poly& a, const Poly& b) const {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1 = Poly::zero();
  Poly t0 = Poly::zero(), t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1; r1 = r;
    Poly s = sub(s0, mul(q, s1)); s0 = s1; s1 = s;
    Poly t = sub(t0, mul(q, t1)); t0 = t1; t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::int64_t il = fq.inv(r0.lead());
  return {mul_scalar(r0, il), mul_scalar(s0, il), mul_scalar(t0, il)};
}

Poly PolyRing::powmod(const Poly& a, std::int64_t e, const Poly& m) const {
  BTQ_CHECK(e >= 0, "negative exponent in powmod");
  Poly base = mod(a, m);
  Poly r = mod(Poly::constant(1), m);
  while (e > 0) {
    if (e & 1) r = mod(mul(r, base), m);
    base = mod(mul(base, base), m);
    e >>= 1;
  }
  return r;
}

std::int64_t PolyRing::eval(const Poly& a, std::int64_t x) const {
  std::int64_t r = 0;
  x = fq.reduce(x);
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    r = fq.add(fq.mul(r, x), a.coeffs()[i]);
  return r;
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.is_zero() || a.is_constant()) return Poly::zero();
  std::vector<std::int64_t> c(a.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = fq.mul(a.coeffs()[i], static_cast<std::int64_t>(i) % fq.q());
  return Poly(std::move(c));
}

Poly PolyRing::invmod(const Poly& a, const Poly& m) const {
  auto [g, u, v] = xgcd(mod(a, m), m);
  (void)v;
  if (g.is_zero() || !g.is_constant())
    throw InputError("invmod: arguments not coprime");
  return mod(u, m);
}

Poly PolyRing::from_index(std::uint64_t n) const {
  std::vector<std::int64_t> c;
  auto q = static_cast<std::uint64_t>(fq.q());
  while (n > 0) {
    c.push_back(static_cast<std::int64_t>(n % q));
    n /= q;
  }
  return Poly(std::move(c));
}

std::uint64_t PolyRing::to_index(const Poly& a) const {
  std::uint64_t n = 0;
  auto q = static_cast<std::uint64_t>(fq.q());
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    n = n * q + static_cast<std::uint64_t>(a.coeffs()[i]);
  return n;
}

std::string PolyRing::to_string(const Poly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg_nonzero(); i >= 0; --i) {
    std::int64_t c = a.coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const PolyRing& ring;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("polynomial parse error at position " +
                     std::to_string(pos) + ": " + why + " in \"" + s + "\"");
  }
  std::int64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::stoll(s.substr(start, pos - start));
  }

  // term := number ['*' Tpart] | Tpart ;  Tpart := 'T' ['^' number]
  Poly term() {
    skip_ws();
    if (pos >= s.size()) fail("expected term");
    std::int64_t coef = 1;
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = ring.fq.reduce(number());
      saw_coef = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      } else if (pos < s.size() && s[pos] == 'T') {
        // "3T" without '*' is accepted
      } else {
        return Poly::constant(coef);
      }
    }
    skip_ws();
    if (pos >= s.size() || s[pos] != 'T') {
      if (saw_coef) fail("expected T after coefficient");
      fail("expected term");
    }
    ++pos;
    int e = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = static_cast<int>(number());
      if (e < 0) fail("negative exponent");
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      fail("missing '^' between T and exponent");
    }
    return Poly::monomial(coef, e);
  }

  Poly parse() {
    Poly acc = Poly::zero();
    bool negate = eat('-');
    for (;;) {
      Poly t = term();
      if (negate) t = ring.neg(t);
      acc = ring.add(acc, t);
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else fail("expected '+' or '-'");
    }
    return acc;
  }
};

}  // namespace

Poly PolyRing::parse(const std::string& s) const {
  Parser p{s, 0, *this};
  p.skip_ws();
  if (p.pos >= s.size()) throw InputError("empty polynomial string");
  return p.parse();
}

}  // namespace btq
