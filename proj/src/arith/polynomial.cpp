#include "rootmaps/arith/polynomial.hpp"

namespace rootmaps {

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {UniPoly(p.var()), p};
  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - d.degree()) + 1);
  auto dc = d.coefficients();
  const Rational lead_inv = 1 / dc.back();
  const int dd = d.degree();
  for (int k = p.degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quo), p.var()), UniPoly(std::move(rem), p.var())};
}

UniPoly antiderivative(const UniPoly& p) {
  auto c = p.coefficients();
  std::vector<Rational> r(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) r[i + 1] = c[i] / Rational(static_cast<long>(i + 1));
  return UniPoly(std::move(r), p.var());
}

UniPoly to_rational(const FacePolynomial& p, Var v) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return UniPoly(std::move(c), v);
}

}  // namespace rootmaps
