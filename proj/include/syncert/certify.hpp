#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syncert/graphs.hpp"
#include "syncert/matrix.hpp"
#include "syncert/measures.hpp"
#include "syncert/models.hpp"

namespace syncert {

enum class Verdict { Contractive, Inconclusive };

// Result of a sampled supremum of M_{p,Q}[J_F(x,t) - lambda*D]. The reported
// c is a maximum over finitely many samples, hence a lower bound on the true
// supremum; the caveat flag records that.
struct Certificate {
  explicit Certificate(NormSpec n) : norm(std::move(n)) {}

  double c = 0.0;
  NormSpec norm;
  double lambda = 0.0;
  Vec diffusion;  // diagonal of D
  int sample_count = 0;
  Vec argmax_state;
  double argmax_time = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool sampled_sup_caveat = true;
};

// c = max over samples of M_{p,Q}[J_F(x,t) - lambda*diag(d)], lambda >= 0.
Certificate sup_measure(const Model& m, const NormSpec& norm, double lambda, const Vec& d,
                        const std::vector<Sample>& samples);

// Synchronization certificate for a G-compartment system. Uses the graph's
// algebraic connectivity as the diffusion shift. The (graph, p) pair must be
// one the theory covers: p=2 works for every topology; p=1/inf only for
// complete, star, two-node, line, and Cartesian products of lines.
Certificate check_sync_condition(const Model& m, const GraphTopology& g, const Vec& d,
                                 const NormSpec& norm, const std::vector<Sample>& samples);

struct WeightSearchResult {
  Vec weights;  // best diagonal Q found, first entry pinned to 1
  Certificate certificate;
};

// Coordinate descent over log-space diagonal weights minimizing the sampled
// c. Multiplicative steps shrink from 2 to 1.01; the first weight stays at 1
// since measures are invariant under scaling of Q. Never returns a Q worse
// than the identity. `budget` caps certificate evaluations.
WeightSearchResult search_weight(const Model& m, PNorm p, double lambda, const Vec& d,
                                 const std::vector<Sample>& samples, int budget,
                                 std::uint64_t seed);

enum class ConditionStatus { Holds, Fails, NotApplicable };

struct ArcakGoodwinReport {
  ConditionStatus status;
  double lhs;  // alpha*gamma*a / (k (b + lambda d1)(beta + lambda d2) lambda d3)
};

// The classical quartic sufficient condition for the Goodwin system:
// lhs < 4 with shift lambda (pi^2 on the unit interval). Not applicable
// when d3 = 0.
ArcakGoodwinReport arcak_goodwin_inequality(const GoodwinParams& p, double lambda, double d1,
                                            double d2, double d3);

struct OthmerReport {
  ConditionStatus status;
  double sup_jacobian_norm;  // NaN when not evaluated (min d = 0 fails outright)
  double threshold;          // (pi/L)^2 * min_i d_i
};

// Large-diffusion condition sup_w ||J_F(w)|| < (pi/L)^2 min_i d_i.
OthmerReport othmer_condition(const Model& m, const std::vector<Sample>& samples, double length,
                              const Vec& d, PNorm p);

struct M2Witness {
  double x;
  double y;
  double measure;  // M_{2,Q}[J - lambda*D] at the witness, > 0
};

// For the biochemical model, any positive diagonal Q = diag(1, q) and any
// lambda > 0 admit a state where M_{2,Q}[J - lambda*D] is positive. Searches
// y = S_Y and geometrically increasing x; throws if the cap is reached
// (which would falsify the claim).
M2Witness m2_nonnegativity_witness(double q, double lambda, const Vec& d,
                                   const BiochemicalParams& p = {});

}  // namespace syncert
