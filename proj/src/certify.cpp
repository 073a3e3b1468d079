#include "syncert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "syncert/errors.hpp"

namespace syncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix shifted_jacobian(const Model& m, const Sample& s, double lambda, const Vec& d) {
  Matrix j = jacobian_at(m, s.x, s.t);
  for (int i = 0; i < j.rows(); ++i) j(i, i) -= lambda * d[i];
  return j;
}

bool line_product(const GraphTopology& g) {
  if (g.kind() == GraphKind::Line || g.kind() == GraphKind::Grid) return true;
  if (g.kind() != GraphKind::Cartesian) return false;
  return std::all_of(g.factors().begin(), g.factors().end(),
                     [](const GraphTopology& f) { return f.kind() == GraphKind::Line; });
}

}  // namespace

Certificate sup_measure(const Model& m, const NormSpec& norm, double lambda, const Vec& d,
                        const std::vector<Sample>& samples) {
  if (norm.dim() != m.dim) throw std::invalid_argument("sup_measure: norm dimension mismatch");
  if (static_cast<int>(d.size()) != m.dim)
    throw std::invalid_argument("sup_measure: diffusion dimension mismatch");
  if (lambda < 0.0) throw std::invalid_argument("sup_measure: lambda must be nonnegative");
  if (samples.empty()) throw std::invalid_argument("sup_measure: empty sample set");

  Certificate cert(norm);
  cert.lambda = lambda;
  cert.diffusion = d;
  cert.sample_count = static_cast<int>(samples.size());
  cert.c = -std::numeric_limits<double>::infinity();
  for (const Sample& s : samples) {
    const double mu = matrix_measure(shifted_jacobian(m, s, lambda, d), norm);
    if (mu > cert.c) {
      cert.c = mu;
      cert.argmax_state = s.x;
      cert.argmax_time = s.t;
    }
  }
  cert.verdict = cert.c < 0.0 ? Verdict::Contractive : Verdict::Inconclusive;
  return cert;
}

Certificate check_sync_condition(const Model& m, const GraphTopology& g, const Vec& d,
                                 const NormSpec& norm, const std::vector<Sample>& samples) {
  const bool p2 = norm.p == PNorm::Two;
  const bool small_or_symmetric =
      g.kind() == GraphKind::Complete || g.kind() == GraphKind::Star || g.nodes() == 2;
  if (!p2 && !small_or_symmetric && !line_product(g))
    throw UnsupportedError(
        "check_sync_condition: p=1/inf certificates exist only for complete, star, two-node, "
        "line, and Cartesian-of-line graphs; arbitrary topologies need the weighted-L2 (p=2) "
        "condition");

  double lambda2;
  if (g.kind() == GraphKind::Custom)
    lambda2 = numeric_spectrum(laplacian(g))[1];
  else
    lambda2 = lambda2_closed_form(g);

  return sup_measure(m, norm, lambda2, d, samples);
}

WeightSearchResult search_weight(const Model& m, PNorm p, double lambda, const Vec& d,
                                 const std::vector<Sample>& samples, int budget,
                                 std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("search_weight: budget must be >= 1");
  const int n = m.dim;
  int evals = 0;

  auto evaluate = [&](const Vec& logw) -> Certificate {
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = std::exp(logw[i]);
    ++evals;
    return sup_measure(m, NormSpec(p, w), lambda, d, samples);
  };

  Vec best_logw(n, 0.0);
  Certificate best = evaluate(best_logw);

  // Coordinate descent over log weights, entry 0 pinned at 1. c(Q) is a max
  // of column/eigen surfaces whose arguments are weight ratios, so two move
  // families are used: single entries, and suffix blocks q_i..q_n scaled
  // together (a step in one adjacent ratio). The suffix moves let the
  // descent cross ridges where the binding column depends only on a ratio
  // that single-entry steps cannot change without raising another column.
  auto descend = [&](Vec logw, Certificate cert) {
    static constexpr double kFactors[] = {2.0, 1.5, 1.25, 1.1, 1.05, 1.02, 1.01};
    const double cap = 3.0 * std::log(10.0);  // keep every weight within 1e+-3
    if (cert.c < best.c) {
      best = cert;
      best_logw = logw;
    }
    for (double factor : kFactors) {
      const double step = std::log(factor);
      bool improved = true;
      while (improved && evals < budget) {
        improved = false;
        for (int i = 1; i < n && evals < budget; ++i) {
          for (bool suffix : {false, true}) {
            if (suffix && i == n - 1) continue;  // a length-1 suffix repeats the single move
            for (double dir : {+1.0, -1.0}) {
              if (evals >= budget) break;
              Vec cand = logw;
              for (int j = i; j < (suffix ? n : i + 1); ++j) cand[j] += dir * step;
              bool in_range = true;
              for (int j = 1; j < n; ++j)
                if (std::abs(cand[j]) > cap) in_range = false;
              if (!in_range) continue;
              Certificate c = evaluate(cand);
              if (c.c < cert.c) {
                cert = c;
                logw = cand;
                improved = true;
                if (c.c < best.c) {
                  best = c;
                  best_logw = logw;
                }
              }
            }
          }
        }
      }
      if (evals >= budget) break;
    }
  };

  descend(Vec(n, 0.0), best);

  // Spend any remaining budget on seeded random restarts.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(-std::log(100.0), std::log(100.0));
  while (evals < budget) {
    Vec logw(n, 0.0);
    for (int i = 1; i < n; ++i) logw[i] = logu(rng);
    Certificate cert = evaluate(logw);
    if (evals < budget) descend(logw, cert);
  }

  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = std::exp(best_logw[i]);
  return {w, best};
}

ArcakGoodwinReport arcak_goodwin_inequality(const GoodwinParams& p, double lambda, double d1,
                                            double d2, double d3) {
  if (d3 == 0.0) return {ConditionStatus::NotApplicable, std::numeric_limits<double>::quiet_NaN()};
  const double lhs = p.alpha * p.gamma * p.a /
                     (p.k * (p.b + lambda * d1) * (p.beta + lambda * d2) * lambda * d3);
  return {lhs < 4.0 ? ConditionStatus::Holds : ConditionStatus::Fails, lhs};
}

OthmerReport othmer_condition(const Model& m, const std::vector<Sample>& samples, double length,
                              const Vec& d, PNorm p) {
  if (!(length > 0.0)) throw std::invalid_argument("othmer_condition: length must be positive");
  if (static_cast<int>(d.size()) != m.dim)
    throw std::invalid_argument("othmer_condition: diffusion dimension mismatch");
  const double dmin = *std::min_element(d.begin(), d.end());
  const double threshold = kPi * kPi / (length * length) * dmin;
  if (!(dmin > 0.0))
    return {ConditionStatus::Fails, std::numeric_limits<double>::quiet_NaN(), threshold};

  const NormSpec norm = NormSpec::unweighted(p, m.dim);
  double sup = 0.0;
  for (const Sample& s : samples)
    sup = std::max(sup, induced_matrix_norm(jacobian_at(m, s.x, s.t), norm));
  return {sup < threshold ? ConditionStatus::Holds : ConditionStatus::Fails, sup, threshold};
}

M2Witness m2_nonnegativity_witness(double q, double lambda, const Vec& d,
                                   const BiochemicalParams& p) {
  if (!(q > 0.0)) throw std::invalid_argument("m2_nonnegativity_witness: q must be positive");
  if (!(lambda > 0.0))
    throw std::invalid_argument("m2_nonnegativity_witness: lambda must be positive");
  if (d.size() != 2)
    throw std::invalid_argument("m2_nonnegativity_witness: need a 2-entry diffusion vector");

  const Model model = biochemical_model(p);
  const NormSpec norm(PNorm::Two, {1.0, q});

  // Walk y = S_Y (so the lower-left Jacobian entry vanishes) and push
  // b = k1 + k2*x up geometrically until the symmetric part goes indefinite.
  double x = 0.0;
  for (int iter = 0; iter < 64; ++iter) {
    Matrix j = model.jacobian({x, p.s_y}, 0.0);
    j(0, 0) -= lambda * d[0];
    j(1, 1) -= lambda * d[1];
    const double mu = matrix_measure(j, norm);
    if (mu > 0.0) return {x, p.s_y, mu};
    x = x == 0.0 ? 1.0 : 2.0 * x;
  }
  throw std::runtime_error(
      "m2_nonnegativity_witness: no positive-measure state found within the search cap");
}

}  // namespace syncert
