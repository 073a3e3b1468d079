#include "syncert/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace syncert {

std::string format_double(double v) {
  if (std::isnan(v)) return "n/a";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  out += "]";
  return out;
}

std::string norm_label(const NormSpec& norm) {
  switch (norm.p) {
    case PNorm::One:
      return "1";
    case PNorm::Two:
      return "2";
    case PNorm::Inf:
      return "inf";
  }
  return "?";
}

std::string render_certificate(const Certificate& cert, const std::string& heading) {
  std::ostringstream os;
  os << heading << "\n";
  os << "verdict: "
     << (cert.verdict == Verdict::Contractive ? "CONTRACTIVE" : "INCONCLUSIVE")
     << " (c = " << format_double(cert.c) << ")\n";
  os << "p: " << norm_label(cert.norm) << "\n";
  os << "Q: " << format_vec(cert.norm.weights) << "\n";
  os << "lambda: " << format_double(cert.lambda) << "\n";
  os << "D: " << format_vec(cert.diffusion) << "\n";
  os << "samples: " << cert.sample_count << "\n";
  os << "argmax_state: " << format_vec(cert.argmax_state) << "\n";
  os << "argmax_time: " << format_double(cert.argmax_time) << "\n";
  if (cert.sampled_sup_caveat)
    os << "caveat: sampled supremum; c is a lower bound of the true sup\n";
  return os.str();
}

std::string render_bound_report(const BoundForm& bound, const BoundReport& report,
                                const std::string& heading) {
  std::ostringstream os;
  os << heading << "\n";
  const char* kind = bound.kind == BoundForm::Kind::Exponential ? "exponential"
                     : bound.kind == BoundForm::Kind::StarAffine ? "star-affine"
                                                                 : "grid-affine";
  os << "bound: " << kind << "\n";
  os << "c: " << format_double(bound.c) << "\n";
  if (bound.kind == BoundForm::Kind::StarAffine)
    os << "alpha: " << format_double(bound.alpha) << "\n";
  if (bound.kind == BoundForm::Kind::GridAffine) {
    os << "alpha: " << format_double(bound.alpha) << "\n";
    os << "beta: " << format_double(bound.beta) << "\n";
  }
  os << "pass: " << (report.pass ? "yes" : "no") << "\n";
  os << "max_ratio: " << format_double(report.max_ratio) << "\n";
  os << "argmax_t: " << format_double(report.argmax_t) << "\n";
  return os.str();
}

std::string render_weight_search(const WeightSearchResult& result) {
  std::ostringstream os;
  os << "weights: " << format_vec(result.weights) << "\n";
  os << render_certificate(result.certificate, "certificate (best Q found)");
  return os.str();
}

}  // namespace syncert
