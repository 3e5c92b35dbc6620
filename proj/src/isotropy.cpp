#include "shamsuddin/isotropy.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "shamsuddin/ode.hpp"
#include "shamsuddin/simplicity.hpp"

namespace shamsuddin {

namespace {

AffineEndo local_witness(const Block& blk, const BlockSimplicity& verdict) {
  const std::size_t r = blk.bs.size();
  AffineEndo w = AffineEndo::identity(r);
  auto zero_b = std::find_if(blk.bs.begin(), blk.bs.end(), [](const UniPoly& b) { return b.is_zero(); });
  if (zero_b != blk.bs.end()) {
    const auto j = static_cast<std::size_t>(zero_b - blk.bs.begin());
    w.linear(j, j) = kWitnessScale;
    return w;
  }
  if (blk.a.is_zero()) {
    for (std::size_t t = 0; t < r; ++t) {
      w.linear(t, t) = kWitnessScale;
      w.offsets[t] = poly_integrate(blk.bs[t]) * Rational(1 - kWitnessScale);
    }
    return w;
  }
  const ParamSolution& s = verdict.witness.value();
  const auto p = static_cast<std::size_t>(
      std::find_if(s.k.begin(), s.k.end(), [](const Rational& c) { return !c.is_zero(); }) - s.k.begin());
  const Rational e = kWitnessScale;
  for (std::size_t j = 0; j < r; ++j) w.linear(p, j) = j == p ? Rational(1) - e : -e * s.k[j];
  w.offsets[p] = s.z * e;
  return w;
}

void require_in_block(const Derivation& d, std::size_t block) {
  if (block >= d.blocks().size()) throw std::invalid_argument("block id out of range");
}

}  // namespace

std::optional<BlockWitness> block_witness(const Derivation& d) {
  const SimplicityVerdict verdict = is_simple(d);
  if (verdict.simple) return std::nullopt;
  for (std::size_t i = 0; i < d.blocks().size(); ++i) {
    if (verdict.per_block[i].simple) continue;
    BlockWitness out{i, local_witness(d.blocks()[i], verdict.per_block[i])};
    if (!affine_is_automorphism(out.local) || !commutes(affine_to_endo(out.local), d.block_derivation(i))) {
      throw std::logic_error("constructed block witness does not commute with its block");
    }
    return out;
  }
  return std::nullopt;
}

PolyEndo embed_block_endo(const Derivation& d, std::size_t block, const PolyEndo& block_endo) {
  require_in_block(d, block);
  const Block& blk = d.blocks()[block];
  const std::size_t r = blk.vars.size();
  if (block_endo.arity() != r) throw std::invalid_argument("block endomorphism has the wrong arity");
  if (!(block_endo.x_image() == MultiPoly::variable(r, 0))) {
    throw std::invalid_argument("block endomorphism must fix x");
  }
  if (!commutes(block_endo, d.block_derivation(block))) {
    throw std::invalid_argument("block endomorphism does not commute with the block derivation");
  }
  PolyEndo id = PolyEndo::identity(d.arity());
  std::vector<MultiPoly> ys = id.y_images();
  for (std::size_t s = 0; s < r; ++s) ys[blk.vars[s] - 1] = block_endo.y_images()[s].rename(d.arity(), blk.vars);
  return PolyEndo(id.x_image(), std::move(ys));
}

AffineEndo embed_block_affine(const Derivation& d, std::size_t block, const AffineEndo& block_endo) {
  require_in_block(d, block);
  const Block& blk = d.blocks()[block];
  const std::size_t r = blk.vars.size();
  if (block_endo.linear.rows() != r || block_endo.offsets.size() != r) {
    throw std::invalid_argument("block endomorphism has the wrong arity");
  }
  if (!block_endo.shift.is_zero()) throw std::invalid_argument("block endomorphism must fix x");
  AffineEndo out = AffineEndo::identity(d.arity());
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t t = blk.vars[s] - 1;
    for (std::size_t u = 0; u < r; ++u) out.linear(t, blk.vars[u] - 1) = block_endo.linear(s, u);
    out.offsets[t] = block_endo.offsets[s];
  }
  return out;
}

std::optional<PolyEndo> isotropy_witness(const Derivation& d) {
  auto w = block_witness(d);
  if (!w) return std::nullopt;
  return embed_block_endo(d, w->block, affine_to_endo(w->local));
}

std::optional<AffineEndo> isotropy_witness_affine(const Derivation& d) {
  auto w = block_witness(d);
  if (!w) return std::nullopt;
  return embed_block_affine(d, w->block, w->local);
}

IsotropyDescription isotropy_describe_block(const UniPoly& a, std::span<const UniPoly> bs) {
  IsotropyDescription desc;
  desc.a = a;
  desc.bs.assign(bs.begin(), bs.end());
  if (a.is_zero()) {
    desc.kind = IsotropyCase::kAZero;
    desc.shift_free = true;
    for (const auto& b : bs) desc.antiderivatives.push_back(poly_integrate(b));
    return desc;
  }
  if (a.is_constant()) {
    desc.kind = IsotropyCase::kAConstant;
    desc.shift_free = true;
    return desc;
  }
  desc.kind = IsotropyCase::kADegreePositive;
  desc.shift_free = false;
  desc.g_degree_bound = degree_bound(a, bs);
  // Row t: g' - a g + sum_j c_tj b_j = b_t. The residual matrix holds -b_j in
  // the c columns, so solve for -c and flip the sign back.
  const QMatrix m = ode_residual_matrix(a, bs, desc.g_degree_bound);
  const std::size_t r = bs.size();
  for (std::size_t t = 0; t < r; ++t) {
    QVector rhs(m.rows());
    for (const auto& [p, c] : bs[t].terms()) rhs[p] = c;
    auto space = mat_solve_affine(m, rhs);
    if (!space) throw std::logic_error("identity row missing from isotropy row system");
    for (std::size_t j = 0; j < r; ++j) space->particular[j] = -space->particular[j];
    for (auto& v : space->basis) {
      for (std::size_t j = 0; j < r; ++j) v[j] = -v[j];
    }
    desc.rows.push_back(std::move(*space));
  }
  return desc;
}

std::vector<UniPoly> constant_case_offsets(const IsotropyDescription& desc, const Rational& shift,
                                           const QMatrix& linear) {
  if (desc.kind != IsotropyCase::kAConstant) throw std::invalid_argument("offsets are determined only when a is a nonzero constant");
  const std::size_t r = desc.r();
  if (linear.rows() != r || linear.cols() != r) throw std::invalid_argument("matrix shape does not match block");
  std::vector<UniPoly> out;
  for (std::size_t t = 0; t < r; ++t) {
    UniPoly rhs = poly_shift(desc.bs[t], shift);
    for (std::size_t j = 0; j < r; ++j) rhs -= desc.bs[j] * linear(t, j);
    OdeSolutions sol = solve_linear_ode(desc.a, rhs);
    if (!sol.particular) throw std::logic_error("g' = a g + f has no polynomial solution for constant a");
    out.push_back(*sol.particular);
  }
  return out;
}

PolyEndo zero_case_member(const IsotropyDescription& desc, const MultiPoly& p, const std::vector<MultiPoly>& q) {
  if (desc.kind != IsotropyCase::kAZero) throw std::invalid_argument("zero-case member requires a = 0");
  const std::size_t r = desc.r();
  if (p.arity() != r || q.size() != r) throw std::invalid_argument("p, q must have the block's arity");
  if (p.depends_on(0) || std::any_of(q.begin(), q.end(), [](const MultiPoly& g) { return g.depends_on(0); })) {
    throw std::invalid_argument("p and q are polynomials in Y = y - h(x) only");
  }
  // Y_j = y_j - h_j(x)
  std::vector<MultiPoly> shifted;
  for (std::size_t j = 1; j <= r; ++j) {
    shifted.push_back(MultiPoly::variable(r, j) - MultiPoly::from_uni(r, desc.antiderivatives[j - 1]));
  }
  const PolyEndo to_y(MultiPoly::variable(r, 0), shifted);
  const MultiPoly f = MultiPoly::variable(r, 0) + endo_apply(to_y, p);
  std::vector<MultiPoly> x_to_f_ys;
  for (std::size_t j = 1; j <= r; ++j) x_to_f_ys.push_back(MultiPoly::variable(r, j));
  const PolyEndo x_to_f(f, x_to_f_ys);
  std::vector<MultiPoly> ys;
  for (std::size_t t = 0; t < r; ++t) {
    ys.push_back(endo_apply(x_to_f, MultiPoly::from_uni(r, desc.antiderivatives[t])) + endo_apply(to_y, q[t]));
  }
  return PolyEndo(f, std::move(ys));
}

namespace {

constexpr int kSampleAttempts = 64;

class SmallInts {
 public:
  explicit SmallInts(std::uint64_t seed) : rng_(seed) {}
  long operator()(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  QMatrix matrix(std::size_t r, long lo, long hi) {
    QMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) m(i, j) = (*this)(lo, hi);
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::optional<IsotropySample> sample_isotropy_element(const IsotropyDescription& desc, std::uint64_t seed) {
  SmallInts draw(seed);
  const std::size_t r = desc.r();
  const Derivation block = single_block(desc.a, desc.bs);
  auto checked = [&](IsotropySample s) {
    if (!commutes(s.endo, block)) throw std::logic_error("sampled isotropy element does not commute");
    return s;
  };
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    switch (desc.kind) {
      case IsotropyCase::kADegreePositive: {
        AffineEndo rho = AffineEndo::identity(r);
        for (std::size_t t = 0; t < r; ++t) {
          QVector v = desc.rows[t].particular;
          for (const auto& dir : desc.rows[t].basis) {
            const Rational lambda = draw(-2, 2);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += lambda * dir[i];
          }
          for (std::size_t j = 0; j < r; ++j) rho.linear(t, j) = v[j];
          rho.offsets[t] = UniPoly::from_coefficients(QVector(v.begin() + static_cast<std::ptrdiff_t>(r), v.end()));
        }
        if (!affine_is_automorphism(rho)) continue;
        return checked({affine_to_endo(rho), rho});
      }
      case IsotropyCase::kAConstant: {
        AffineEndo rho{draw(-3, 3), draw.matrix(r, -3, 3), {}};
        if (!affine_is_automorphism(rho)) continue;
        rho.offsets = constant_case_offsets(desc, rho.shift, rho.linear);
        return checked({affine_to_endo(rho), rho});
      }
      case IsotropyCase::kAZero: {
        const QMatrix c = draw.matrix(r, -2, 2);
        if (determinant(c).is_zero()) continue;
        MultiPoly p = MultiPoly::constant(r, draw(-2, 2));
        for (std::size_t j = 1; j <= r; ++j) p += MultiPoly::variable(r, j) * Rational(draw(-1, 1));
        std::vector<MultiPoly> q;
        for (std::size_t t = 0; t < r; ++t) {
          MultiPoly g = MultiPoly::constant(r, draw(-2, 2));
          for (std::size_t j = 0; j < r; ++j) g += MultiPoly::variable(r, j + 1) * c(t, j);
          q.push_back(std::move(g));
        }
        IsotropySample s{zero_case_member(desc, p, q), std::nullopt};
        if (p.total_degree() <= 0) {
          // x -> x + p with p constant: the member is affine in y.
          const Rational shift = p.coeff(Exponent(r + 1, 0));
          AffineEndo rho{shift, c, std::vector<UniPoly>(r)};
          for (std::size_t t = 0; t < r; ++t) {
            rho.offsets[t] = poly_shift(desc.antiderivatives[t], shift) + UniPoly(q[t].coeff(Exponent(r + 1, 0)));
            for (std::size_t j = 0; j < r; ++j) rho.offsets[t] -= desc.antiderivatives[j] * c(t, j);
          }
          s.affine = rho;
        }
        return checked(std::move(s));
      }
    }
  }
  return std::nullopt;
}

}  // namespace shamsuddin
