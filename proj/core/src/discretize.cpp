#include "dcs/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "dcs/errors.hpp"

namespace dcs {

namespace {

using cd = std::complex<double>;

struct PoleGroup {
  cd p;       // continuous pole of ct(s)/s
  int mult;   // 1 or 2
  cd q;       // e^(pT)
};

// Greedy clustering of eigensolver output into multiplicity groups. A split
// double pole comes back as two roots ~1e-8 apart, a (rejected) triple as
// three ~1e-5 apart, so the tolerance must sit above the triple scatter;
// genuinely distinct poles closer than that are outside this function's
// remit.
std::vector<PoleGroup> cluster(const std::vector<cd>& roots) {
  std::vector<PoleGroup> groups;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double tol = 1e-4 * std::max(1.0, std::abs(roots[i]));
    cd sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < tol) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    if (count > 2)
      throw RepeatedPoleUnsupported(
          "zoh_discretize: pole of multiplicity > 2 in ct(s)/s");
    groups.push_back({sum / static_cast<double>(count), count, 0.0});
  }
  return groups;
}

// Product of (z - q_j)^mult_j with `drop_from_skip` factors withheld from
// group `skip` (pass skip out of range to keep everything), as ascending
// complex coefficients.
std::vector<cd> factor_product(const std::vector<PoleGroup>& groups,
                               std::size_t skip,
                               int drop_from_skip = 0) {
  std::vector<cd> acc{1.0};
  for (std::size_t j = 0; j < groups.size(); ++j) {
    int reps = (j == skip) ? groups[j].mult - drop_from_skip : groups[j].mult;
    for (int r = 0; r < reps; ++r) {
      std::vector<cd> next(acc.size() + 1, 0.0);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        next[k] -= groups[j].q * acc[k];
        next[k + 1] += acc[k];
      }
      acc = std::move(next);
    }
  }
  return acc;
}

Polynomial realify(const std::vector<cd>& c, const char* what) {
  double scale = 0.0;
  for (auto v : c) scale = std::max(scale, std::abs(v));
  std::vector<double> re(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(c[k].imag()) > 1e-9 * std::max(scale, 1e-300))
      throw Degenerate(std::string("zoh_discretize: residual imaginary part in ") +
                       what);
    re[k] = c[k].real();
  }
  return Polynomial(std::move(re));
}

}  // namespace

TransferFunction zoh_discretize(const TransferFunction& ct, double T) {
  if (ct.domain().kind() != Domain::Kind::S)
    throw DomainMismatch("zoh_discretize: input must be an S-domain plant");
  if (!(T > 0.0)) throw Degenerate("zoh_discretize: sample period must be positive");
  if (ct.num().degree() >= ct.den().degree() || ct.num().is_zero())
    throw ImproperPlant("zoh_discretize: plant must be strictly proper");

  const Polynomial& N = ct.num();

  // Denominator of H(s) = ct(s)/s, i.e. ct.den() shifted up one power.
  std::vector<double> dcoef(ct.den().coeffs().begin(), ct.den().coeffs().end());
  dcoef.insert(dcoef.begin(), 0.0);
  Polynomial D{std::vector<double>(dcoef)};

  // Origin poles are exact by construction: count exact-zero low coefficients.
  int origin_mult = 0;
  std::vector<double> rest = dcoef;
  while (rest.size() > 1 && rest.front() == 0.0) {
    ++origin_mult;
    rest.erase(rest.begin());
  }
  if (origin_mult > 2)
    throw RepeatedPoleUnsupported(
        "zoh_discretize: pole of multiplicity > 2 at s=0");

  Polynomial rem{std::vector<double>(rest)};
  std::vector<PoleGroup> groups;
  if (origin_mult > 0) groups.push_back({0.0, origin_mult, 1.0});
  if (rem.degree() >= 1) {
    for (auto& g : cluster(rem.roots())) {
      if (std::abs(g.p) < 1e-9)
        throw RepeatedPoleUnsupported(
            "zoh_discretize: near-origin pole conflicts with the origin group");
      groups.push_back(g);
    }
  }
  for (auto& g : groups) g.q = std::exp(g.p * T);

  const double lead = D.coeffs().back();
  const Polynomial Dp = D.derivative();
  const Polynomial Np = N.derivative();

  // Partial fractions of H(s): simple poles via N/D', double poles via the
  // deflated factor R(s) = D(s)/(s-p)^2 evaluated from the factorization.
  // Each term then maps to its known z-transform over the common denominator
  // Q(z) = prod (z - q_j)^mult_j:
  //   r/(s-p)        ->  r * z/(z - q)
  //   r2/(s-p)^2     ->  r2 * T q z/(z - q)^2
  // The leading z-coefficient of the stacked numerator is the residue sum,
  // which vanishes because H has relative degree >= 2; it is dropped after a
  // sanity check rather than left as eigensolver dust.
  std::size_t total_deg = 0;
  for (auto& g : groups) total_deg += static_cast<std::size_t>(g.mult);
  std::vector<cd> P(total_deg, 0.0);  // degree <= total_deg - 1

  auto add_scaled = [&P](const std::vector<cd>& poly, cd scale) {
    for (std::size_t k = 0; k < poly.size(); ++k) P[k] += scale * poly[k];
  };

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    if (g.mult == 1) {
      const cd r = N(g.p) / Dp(g.p);
      add_scaled(factor_product(groups, i, /*drop_from_skip=*/1), r);
    } else {
      cd R = lead;
      cd s1 = 0.0;
      for (std::size_t j = 0; j < groups.size(); ++j) {
        if (j == i) continue;
        for (int rpt = 0; rpt < groups[j].mult; ++rpt) R *= g.p - groups[j].p;
        s1 += static_cast<double>(groups[j].mult) / (g.p - groups[j].p);
      }
      const cd r2 = N(g.p) / R;
      const cd r1 = (Np(g.p) - N(g.p) * s1) / R;
      auto others = factor_product(groups, i, /*drop_from_skip=*/2);
      // r1 term carries one (z - q) factor back in.
      std::vector<cd> with_self(others.size() + 1, 0.0);
      for (std::size_t k = 0; k < others.size(); ++k) {
        with_self[k] -= g.q * others[k];
        with_self[k + 1] += others[k];
      }
      add_scaled(with_self, r1);
      add_scaled(others, r2 * T * g.q);
    }
  }

  // Residue-sum coefficient: mathematically zero, see above.
  if (!P.empty()) {
    double scale = 0.0;
    for (auto v : P) scale = std::max(scale, std::abs(v));
    if (std::abs(P.back()) > 1e-9 * std::max(scale, 1e-300))
      throw Degenerate("zoh_discretize: residue sum failed to cancel");
    P.pop_back();
  }

  // Hold factor (z-1)/z times z*P/Q: dividing by s above guarantees at least
  // one origin pole, so exactly one (z-1) factor cancels against the hold and
  // the remaining denominator is rebuilt from factors directly.
  std::vector<cd> den_c = factor_product(groups, 0, /*drop_from_skip=*/1);

  return TransferFunction(realify(P, "numerator"),
                          realify(den_c, "denominator"), Domain::z(T));
}

}  // namespace dcs
