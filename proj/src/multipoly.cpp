#include "shamsuddin/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shamsuddin {

bool TermOrder::operator()(const Exponent& lhs, const Exponent& rhs) const {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t v = 1; v < n; ++v) {
    if (lhs[v] != rhs[v]) return lhs[v] > rhs[v];
  }
  if (n > 0 && lhs[0] != rhs[0]) return lhs[0] > rhs[0];
  return lhs.size() > rhs.size();
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  return term(arity, Exponent(arity + 1, 0), c);
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t var) {
  if (var > arity) throw std::invalid_argument("variable index " + std::to_string(var) + " exceeds arity");
  Exponent e(arity + 1, 0);
  e[var] = 1;
  return term(arity, std::move(e), 1);
}

MultiPoly MultiPoly::term(std::size_t arity, Exponent exponent, const Rational& c) {
  if (exponent.size() != arity + 1) throw std::invalid_argument("exponent length does not match arity");
  MultiPoly p(arity);
  p.add_term(exponent, c);
  return p;
}

MultiPoly MultiPoly::from_uni(std::size_t arity, const UniPoly& p) {
  MultiPoly out(arity);
  Exponent e(arity + 1, 0);
  for (const auto& [k, c] : p.terms()) {
    e[0] = static_cast<unsigned>(k);
    out.add_term(e, c);
  }
  return out;
}

Rational MultiPoly::coeff(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

int MultiPoly::y_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin() + 1, e.end(), 0u)));
  return best;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
  return best;
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first.at(var) != 0; });
}

std::optional<UniPoly> MultiPoly::as_univariate() const {
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin() + 1, e.end(), [](unsigned k) { return k != 0; })) return std::nullopt;
    out += UniPoly::monomial(c, e[0]);
  }
  return out;
}

MultiPoly MultiPoly::homogeneous_part(unsigned d) const {
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin() + 1, e.end(), 0u) == d) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::rename(std::size_t new_arity, const std::vector<std::size_t>& target) const {
  if (target.size() != arity_) throw std::invalid_argument("rename map does not cover every y-variable");
  MultiPoly out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponent ne(new_arity + 1, 0);
    ne[0] = e[0];
    for (std::size_t j = 1; j <= arity_; ++j) {
      if (e[j] == 0) continue;
      const std::size_t t = target[j - 1];
      if (t == 0 || t > new_arity) throw std::invalid_argument("rename target out of range");
      ne[t] += e[j];
    }
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

void MultiPoly::add_term(const Exponent& exponent, const Rational& c) {
  if (c.is_zero()) return;
  if (exponent.size() != arity_ + 1) throw std::invalid_argument("exponent length does not match arity");
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_) {
    throw std::invalid_argument("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_arity(rhs);
  MultiPoly out(lhs.arity_);
  Exponent e(lhs.arity_ + 1);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly poly_partial(const MultiPoly& f, std::size_t var) {
  if (var > f.arity()) throw std::invalid_argument("partial derivative variable exceeds arity");
  MultiPoly out(f.arity());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return out;
}

}  // namespace shamsuddin
