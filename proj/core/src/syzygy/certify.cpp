#include "mcurve/syzygy/certify.hpp"

#include "mcurve/error.hpp"

namespace mcurve {

MCurveCertificate m_curve_certify(const Arrangement& arr, JacobianSyzygies& analysis, const SingularPointOptions& opts) {
  MCurveCertificate cert;
  cert.total_degree = arr.total_degree();
  cert.target_tau = m_curve_target(cert.total_degree);
  if (analysis.degree() != cert.total_degree) {
    throw Error(ErrorKind::InvalidArgument, "analysis does not belong to this arrangement");
  }
  cert.points = singular_points(arr, opts);
  cert.combinatorics = weak_combinatorics(arr, cert.points);
  cert.quadruple_points = cert.combinatorics.n(4);
  cert.actual_tau = analysis.tau();
  const long from_points = tau_from_counts(cert.combinatorics);
  if (cert.actual_tau != from_points) {
    throw Error(ErrorKind::InternalInconsistency, "Milnor algebra gives tau = " + std::to_string(cert.actual_tau) +
                                                      " but the singular points give " + std::to_string(from_points));
  }
  const bool hits_target = cert.actual_tau == cert.target_tau;
  cert.is_m_arrangement = hits_target && cert.quadruple_points >= 1;
  if (!hits_target) {
    cert.details = "tau = " + std::to_string(cert.actual_tau) + " misses the target " + std::to_string(cert.target_tau);
  } else if (cert.quadruple_points == 0) {
    cert.details = "tau hits the target but there is no ordinary quadruple point";
  } else {
    cert.details = "tau hits the target and there are " + std::to_string(cert.quadruple_points) +
                   " ordinary quadruple points";
  }
  return cert;
}

MCurveCertificate m_curve_certify(const Arrangement& arr, RankEngine& engine, const SingularPointOptions& opts) {
  m_curve_target(arr.total_degree());
  JacobianSyzygies analysis(defining_form(arr), engine);
  return m_curve_certify(arr, analysis, opts);
}

}  // namespace mcurve
