#include <doctest.h>

#include <cmath>

#include "syncert/certify.hpp"
#include "syncert/errors.hpp"
#include "test_util.hpp"

using namespace syncert;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Sample> goodwin_box_samples(int points) {
  Box box;
  box.axes = {{0.0, 800.0}, {0.0, 800.0}, {0.0, 50.0}};
  return sample_domain(goodwin_model(), GridStrategy{points}, box, {0.0});
}

std::vector<Sample> biochemical_box_samples(int points) {
  Box box;
  box.axes = {{0.0, 20.0}, {0.0, 0.1}};
  return sample_domain(biochemical_model(), GridStrategy{points}, box, {0.0});
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("Goodwin weighted-L1 certificate on the boxed domain") {
  const Model m = goodwin_model();
  const NormSpec norm(PNorm::One, {1.0, 12.0, 11.0});
  const Vec d = {0.3, 0.0, 0.0};
  const Certificate cert = sup_measure(m, norm, kPi * kPi, d, goodwin_box_samples(4));

  // Column-formula oracle: the z column dominates at the z = 50 corner,
  // evaluating to (-15 + 150/11)/51^2.
  const double expected = (-15.0 + 150.0 / 11.0) / (51.0 * 51.0);
  CHECK(cert.c == doctest::Approx(expected).epsilon(1e-9));
  CHECK(cert.verdict == Verdict::Contractive);
  CHECK(cert.argmax_state[2] == doctest::Approx(50.0));
  CHECK(cert.sampled_sup_caveat);
}

TEST_CASE("biochemical weighted-L1 certificates") {
  const Model m = biochemical_model();
  const NormSpec norm(PNorm::One, {1.0, 2.0});
  const auto samples = biochemical_box_samples(5);

  const Certificate at_zero = sup_measure(m, norm, 0.0, {0.0, 0.0}, samples);
  CHECK(at_zero.c == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(at_zero.verdict == Verdict::Contractive);

  const Certificate shifted = sup_measure(m, norm, kPi * kPi, {0.001, 0.1}, samples);
  CHECK(shifted.c == doctest::Approx(-0.25 - kPi * kPi * 0.1).epsilon(1e-6));
  CHECK(std::abs(shifted.c - (-1.23696)) <= 1e-4);
}

TEST_CASE("constant diagonal Jacobian certificate") {
  const Model m = linear_model(Matrix::diagonal({-1.0, -1.0}));
  Box box;
  box.axes = {{-1.0, 1.0}, {-1.0, 1.0}};
  const auto samples = sample_domain(m, GridStrategy{2}, box, {0.0});
  for (PNorm p : testutil::kAllP) {
    const Certificate cert =
        sup_measure(m, NormSpec::unweighted(p, 2), 0.0, {0.0, 0.0}, samples);
    CHECK(cert.c == doctest::Approx(-1.0));
  }
}

TEST_CASE("certificate properties: shift bound, sample monotonicity, scale invariance") {
  const Model m = biochemical_model();
  const auto samples = biochemical_box_samples(4);
  auto gen = testutil::rng(444);
  std::uniform_real_distribution<double> lam_dist(0.1, 5.0);

  for (PNorm p : testutil::kAllP) {
    const NormSpec norm(p, {1.0, 2.0});
    const Vec d = {0.4, 0.7};  // all positive
    const double lam = lam_dist(gen);
    const Certificate c0 = sup_measure(m, norm, 0.0, d, samples);
    const Certificate cl = sup_measure(m, norm, lam, d, samples);
    CHECK(cl.c <= c0.c - lam * 0.4 + 1e-10);  // subadditive bound with min d

    // Adding samples never decreases c.
    auto more = samples;
    const auto extra = biochemical_box_samples(7);
    more.insert(more.end(), extra.begin(), extra.end());
    const Certificate cm = sup_measure(m, norm, lam, d, more);
    CHECK(cm.c >= cl.c - 1e-15);

    // Scaling Q leaves c unchanged.
    const NormSpec scaled(p, {3.0, 6.0});
    const Certificate cs = sup_measure(m, scaled, lam, d, samples);
    CHECK(std::abs(cs.c - cl.c) <= 1e-12 * (1.0 + std::abs(cl.c)));
  }
}

TEST_CASE("sync condition certificates for Goodwin networks") {
  const Model m = goodwin_model();
  const NormSpec norm(PNorm::One, {1.0, 12.0, 11.0});
  const Vec d = {0.4, 0.0, 0.0};
  const auto samples = goodwin_box_samples(3);

  const Certificate complete = check_sync_condition(m, GraphTopology::complete(6), d, norm, samples);
  CHECK(complete.lambda == doctest::Approx(6.0));
  CHECK(complete.verdict == Verdict::Contractive);
  CHECK(complete.c < 0.0);
  CHECK(complete.c == doctest::Approx((-15.0 + 150.0 / 11.0) / (51.0 * 51.0)).epsilon(1e-6));

  const Certificate line = check_sync_condition(m, GraphTopology::line(6), d, norm, samples);
  const double lam_line = 4.0 * std::sin(kPi / 12.0) * std::sin(kPi / 12.0);
  CHECK(line.lambda == doctest::Approx(lam_line));
  CHECK(line.verdict == Verdict::Inconclusive);
  // Column 1 of the shifted Jacobian: -b - lambda2*d1 + alpha*12.
  CHECK(line.c == doctest::Approx(-0.2 - lam_line * 0.4 + 2.4).epsilon(1e-9));

  const GraphTopology ring = GraphTopology::custom(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_THROWS_AS(check_sync_condition(m, ring, d, norm, samples), UnsupportedError);

  // Arbitrary graphs are fine at p=2 with the numeric lambda_2.
  const Certificate ring2 =
      check_sync_condition(m, ring, d, NormSpec::unweighted(PNorm::Two, 3), samples);
  CHECK(ring2.lambda == doctest::Approx(numeric_spectrum(laplacian(ring))[1]));
}

TEST_CASE("weight search beats the identity for the biochemical model") {
  const Model m = biochemical_model();
  const auto samples = biochemical_box_samples(5);

  const Certificate identity =
      sup_measure(m, NormSpec::unweighted(PNorm::One, 2), 0.0, {0.0, 0.0}, samples);
  CHECK(identity.c == doctest::Approx(0.0).epsilon(1e-12));  // not contractive at Q = I

  const WeightSearchResult res =
      search_weight(m, PNorm::One, 0.0, {0.0, 0.0}, samples, 200, 1);
  CHECK(res.certificate.c < 0.0);
  CHECK(res.certificate.c <= identity.c);
  CHECK(res.certificate.c <= -0.25 + 1e-9);  // at least as good as Q = diag(1, 2)
  CHECK(res.weights[0] == 1.0);
}

TEST_CASE("weight search certifies the shifted Goodwin system") {
  const Model m = goodwin_model();
  const auto samples = goodwin_box_samples(3);
  const WeightSearchResult res =
      search_weight(m, PNorm::One, kPi * kPi, {0.3, 0.0, 0.0}, samples, 600, 3);
  CHECK(res.certificate.c < 0.0);
  CHECK(res.weights[0] == 1.0);
  // The certified region sits near diag(1, 12, 11): q3 > 10 and q2 > q3.
  CHECK(res.weights[2] > 10.0);
  CHECK(res.weights[1] > res.weights[2]);
}

TEST_CASE("quartic Goodwin inequality") {
  const GoodwinParams p;
  const double lam = kPi * kPi;

  const ArcakGoodwinReport holds = arcak_goodwin_inequality(p, lam, 1.0, 1.0, 1.0);
  CHECK(holds.status == ConditionStatus::Holds);
  CHECK(holds.lhs == doctest::Approx(6.0 / ((0.2 + lam) * (0.2 + lam) * lam)).epsilon(1e-12));
  CHECK(holds.lhs == doctest::Approx(0.005995).epsilon(1e-3));

  CHECK(arcak_goodwin_inequality(p, lam, 0.3, 0.0, 0.0).status ==
        ConditionStatus::NotApplicable);

  const ArcakGoodwinReport fails = arcak_goodwin_inequality(p, lam, 0.001, 0.001, 0.001);
  CHECK(fails.status == ConditionStatus::Fails);
  CHECK(fails.lhs == doctest::Approx(1.38e4).epsilon(1e-2));
}

TEST_CASE("large-diffusion condition") {
  const Model goodwin = goodwin_model();
  const auto gsamples = goodwin_box_samples(3);
  const OthmerReport g = othmer_condition(goodwin, gsamples, 1.0, {0.3, 0.0, 0.0}, PNorm::Two);
  CHECK(g.status == ConditionStatus::Fails);  // min d_i = 0

  const Model lin = linear_model(Matrix::diagonal({-1.0, -1.0}));
  Box box;
  box.axes = {{-1.0, 1.0}, {-1.0, 1.0}};
  const auto lsamples = sample_domain(lin, GridStrategy{2}, box, {0.0});
  const OthmerReport l = othmer_condition(lin, lsamples, 1.0, {1.0, 1.0}, PNorm::Two);
  CHECK(l.status == ConditionStatus::Holds);
  CHECK(l.sup_jacobian_norm == doctest::Approx(1.0));

  const Model biochem = biochemical_model();
  const auto bsamples = biochemical_box_samples(3);
  const OthmerReport b = othmer_condition(biochem, bsamples, 1.0, {0.001, 0.1}, PNorm::Two);
  CHECK(b.status == ConditionStatus::Fails);
  CHECK(b.sup_jacobian_norm >= 20.0);
}

TEST_CASE("L2 nonnegativity witness") {
  const BiochemicalParams p;

  const M2Witness w = m2_nonnegativity_witness(1.0, 1.0, {0.001, 0.1}, p);
  CHECK(w.measure > 0.0);
  CHECK(w.y == doctest::Approx(p.s_y));

  // Frozen arithmetic at b = 81 (x = 16.1): the symmetrized shifted matrix
  // [[-20.001, 40.5], [40.5, -81.1]] is indefinite.
  CHECK(20.001 * 81.1 < 40.5 * 40.5);
  const Model m = biochemical_model(p);
  Matrix j = m.jacobian({16.1, p.s_y}, 0.0);
  j(0, 0) -= 1.0 * 0.001;
  j(1, 1) -= 1.0 * 0.1;
  CHECK(j(0, 0) == doctest::Approx(-20.001));
  CHECK(j(0, 1) == doctest::Approx(81.0));
  CHECK(matrix_measure(j, NormSpec::unweighted(PNorm::Two, 2)) > 0.0);

  // Witness measure is recomputable through the measures module.
  const Model model = biochemical_model(p);
  Matrix jw = model.jacobian({w.x, w.y}, 0.0);
  jw(0, 0) -= 1.0 * 0.001;
  jw(1, 1) -= 1.0 * 0.1;
  CHECK(matrix_measure(jw, NormSpec(PNorm::Two, {1.0, 1.0})) ==
        doctest::Approx(w.measure).epsilon(1e-9));

  const M2Witness w2 = m2_nonnegativity_witness(10.0, 0.1, {0.001, 0.1}, p);
  CHECK(w2.measure > 0.0);
}

TEST_SUITE_END();
