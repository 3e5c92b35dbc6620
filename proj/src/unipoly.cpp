#include "shamsuddin/unipoly.hpp"

namespace shamsuddin {

UniPoly::UniPoly(const Rational& constant) { add_term(0, constant); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  UniPoly p;
  p.add_term(k, c);
  return p;
}

UniPoly UniPoly::from_coefficients(const std::vector<Rational>& low_to_high) {
  UniPoly p;
  for (std::size_t k = 0; k < low_to_high.size(); ++k) p.add_term(k, low_to_high[k]);
  return p;
}

int UniPoly::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.rbegin()->first);
}

Rational UniPoly::coeff(std::size_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void UniPoly::add_term(std::size_t k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (const auto& [k, c] : terms_) {
    if (k > 0) d.add_term(k - 1, c * Rational(static_cast<long>(k)));
  }
  return d;
}

Rational UniPoly::evaluate(const Rational& at) const {
  // Horner over the sparse representation, walking degrees downwards.
  Rational acc;
  std::size_t current = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->first; --current) acc *= at;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= at;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  UniPoly out;
  for (const auto& [i, a] : lhs.terms_) {
    for (const auto& [j, b] : rhs.terms_) out.add_term(i + j, a * b);
  }
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

UniPoly poly_shift(const UniPoly& b, const Rational& c) {
  if (c.is_zero()) return b;
  std::vector<Rational> out(static_cast<std::size_t>(b.degree() + 1));
  for (const auto& [k, coef] : b.terms()) {
    // (x + c)^k = sum_i binom(k, i) c^(k - i) x^i
    Rational c_power = 1;
    for (std::size_t i = k + 1; i-- > 0;) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, i);
      out[i] += coef * Rational(binom, 1) * c_power;
      c_power *= c;
    }
  }
  return UniPoly::from_coefficients(out);
}

UniPoly poly_integrate(const UniPoly& b) {
  UniPoly out;
  for (const auto& [k, c] : b.terms()) {
    out += UniPoly::monomial(c / Rational(static_cast<long>(k + 1)), k + 1);
  }
  return out;
}

}  // namespace shamsuddin
