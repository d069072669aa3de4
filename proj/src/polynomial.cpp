#include "gw/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gw {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned x = i < a.size() ? a[i] : 0;
    const unsigned y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return monomial(std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(Monomial exponents, const Rational& coeff) {
  Polynomial p;
  trim(exponents);
  if (sgn(coeff) != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    if (var < m.size()) d = std::max(d, m[var]);
  }
  return d;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) vars.insert(i);
    }
  }
  return {vars.begin(), vars.end()};
}

Rational Polynomial::coefficient(const Monomial& m) const {
  Monomial key = m;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial out = *this;
  const Rational lead = leading_coefficient();
  for (auto& [m, c] : out.terms_) c /= lead;
  return out;
}

bool Polynomial::proportional_to(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return monic() == other.monic();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out += Polynomial::monomial(multiply(ma, mb), ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (var >= m.size() || m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out += monomial(std::move(d), c * m[var]);
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.empty();
    if (constant || mag != 1) {
      os << to_string(mag);
      if (!constant) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (v < labels.size() ? labels[v] : "x" + std::to_string(v));
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

std::vector<Polynomial> canonical_constraints(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    Polynomial q = p.monic();
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare(a.terms().rbegin(), a.terms().rend(), b.terms().rbegin(), b.terms().rend(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return MonomialLess{}(y.first, x.first);
                                          return x.second < y.second;
                                        });
  });
  return out;
}

}  // namespace gw
