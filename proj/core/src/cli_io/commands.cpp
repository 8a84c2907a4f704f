#include "mcurve/cli_io/commands.hpp"

#include <algorithm>
#include <sstream>

#include "mcurve/mtheory/mtheory.hpp"
#include "mcurve/syzygy/certify.hpp"
#include "mcurve/syzygy/syzygy.hpp"

namespace mcurve {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json header(const std::string& command, const RunOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["arguments"] = Json::object();
  if (!opts.input_name.empty()) j["arguments"]["input"] = opts.input_name;
  return j;
}

Json to_json(const WeakCombinatorics& wc) {
  Json n = Json::array();
  for (int r = 2; r <= wc.t(); ++r) n.push_back(wc.n(r));
  return {{"text", wc.to_string()}, {"d", wc.d}, {"k", wc.k}, {"n", n}};
}

Json to_json(const ConstraintVerdict& v) {
  return {{"rule", v.rule},         {"satisfied", v.satisfied}, {"lhs", v.lhs},
          {"rhs", v.rhs},           {"detail", v.detail},       {"advisories", v.advisories}};
}

Json to_json(const PoincarePolynomial& p) {
  Json j{{"text", p.to_string()}, {"coefficients", {p.c0, p.c1, p.c2}}};
  const auto split = splits_rationally(p);
  j["splitting"] = split ? Json{split->first, split->second} : Json(nullptr);
  return j;
}

Json to_json(const SyzygyReport& s) {
  Json j;
  j["degree"] = s.degree;
  j["hilbert"] = s.hilbert;
  j["tau"] = s.tau;
  j["mdr"] = s.mdr;
  j["mdr_e"] = optional_json(s.mdr_e);
  j["dpw_bound"] = s.dpw_bound;
  j["is_free"] = s.is_free;
  j["exponents"] = s.exponents ? Json{s.exponents->first, s.exponents->second} : Json(nullptr);
  j["ct"] = optional_json(s.ct);
  j["st"] = s.st;
  j["reg_M"] = optional_json(s.reg_M);
  j["reg_AR"] = optional_json(s.reg_AR);
  j["tau_meets_m_target"] = s.is_m_curve;
  if (s.generator_degrees) {
    j["generator_degrees"] = *s.generator_degrees;
    j["generators_checked_to"] = s.generators_checked_to;
  }
  return j;
}

Json backend_json(const RankBackend& b, const RunOptions& opts) {
  Json primes = Json::array();
  for (auto p : b.primes_used) primes.push_back(std::to_string(p));
  return {{"rank_mode", to_string(b.mode)},
          {"seed", opts.seed},
          {"shear_seed", opts.seed},
          {"primes", primes},
          {"exact_fallback_triggered", b.exact_fallback_triggered},
          {"certified_ranks", b.exact_verifications},
          {"modular_ranks", b.modular_ranks},
          {"max_certificate_primes", b.max_certificate_primes}};
}

Json components_json(const ArrangementDocument& doc) {
  Json out = Json::array();
  const Arrangement& arr = doc.arrangement;
  for (int g = 0; g < arr.component_count(); ++g) {
    const HForm& f = arr.component(g);
    Json coeffs = Json::array();
    for (const auto& c : file_coefficients(f)) coeffs.push_back(c.get_str());
    Json item{{"id", arr.id_of(g).to_string()},
              {"kind", f.degree() == 1 ? "line" : "conic"},
              {"coefficients", coeffs},
              {"expanded", f.to_string()}};
    if (g < static_cast<int>(doc.spans.size())) item["line"] = doc.spans[g].line;
    out.push_back(std::move(item));
  }
  return out;
}

Json input_json(const ArrangementDocument& doc) {
  return {{"digest", "fnv1a64:" + digest(doc.source)}, {"components", components_json(doc)}};
}

Json points_json(const Arrangement& arr, const std::vector<SingularPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    Json inc = Json::array();
    for (int g : p.incidence) inc.push_back(arr.id_of(g).to_string());
    Json coords = Json::array();
    for (const auto& c : p.coordinates) coords.push_back(c.to_string('a'));
    out.push_back({{"incidence", inc},
                   {"multiplicity", p.multiplicity},
                   {"field_degree", p.field_degree},
                   {"count", p.local_count},
                   {"minimal_polynomial", p.minimal_polynomial.to_string('a')},
                   {"coordinates", coords}});
  }
  return out;
}

SingularPointOptions point_options(const RunOptions& opts) {
  SingularPointOptions p;
  p.shear_seed = opts.seed;
  return p;
}

Json traces_json(const Arrangement& arr, const std::vector<SingularPoint>& points) {
  Json out = Json::object();
  for (int i = 0; i < arr.k(); ++i) {
    const ComponentId id{ComponentKind::Conic, i};
    out[id.to_string()] = conic_trace(arr, id, points);
  }
  return out;
}

// Verdicts that apply to the counts alone.
std::vector<ConstraintVerdict> combinatorial_verdicts(const WeakCombinatorics& wc, std::vector<std::string>& notes) {
  std::vector<ConstraintVerdict> out{bezout_check(wc)};
  if (wc.k >= 1 && wc.d >= 3) {
    if (wc.t() >= 5) {
      notes.push_back("char rule skipped: it covers multiplicities up to 4");
    } else {
      out.push_back(char_check(wc));
      if (wc.k == 1) {
        const auto [first, second] = one_conic_check(wc);
        out.push_back(first);
        out.push_back(second);
      }
    }
  }
  return out;
}

Json verdicts_json(const std::vector<ConstraintVerdict>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json run_options_json(const RunOptions& opts) { return {{"rank_mode", to_string(opts.mode)}, {"seed", opts.seed}}; }

bool combinatorial_m_arrangement(const WeakCombinatorics& wc) {
  const int e = wc.total_degree();
  return e >= 5 && tau_from_counts(wc) == m_curve_target(e) && wc.n(4) >= 1;
}

}  // namespace

CommandOutcome cmd_certify(const ArrangementDocument& doc, const RunOptions& opts) {
  CommandOutcome out;
  Json& j = out.report = header("certify", opts);
  j["arguments"].update(run_options_json(opts));
  j["input"] = input_json(doc);

  const Arrangement arr = validate(doc.arrangement);
  RankEngine engine(opts.mode, opts.seed);
  JacobianSyzygies analysis(defining_form(arr), engine);
  const MCurveCertificate cert = m_curve_certify(arr, analysis, point_options(opts));
  const WeakCombinatorics& wc = cert.combinatorics;

  j["combinatorics"] = to_json(wc);
  j["singular_points"] = points_json(arr, cert.points);
  j["conic_traces"] = traces_json(arr, cert.points);
  const SyzygyReport syz = analysis.report();
  j["syzygy"] = to_json(syz);

  std::vector<std::string> notes;
  auto verdicts = combinatorial_verdicts(wc, notes);
  if (wc.k == 1 && wc.d >= 3) {
    verdicts.push_back(mvp_allowed(wc.d, conic_trace(arr, ComponentId{ComponentKind::Conic, 0}, cert.points)));
  }
  j["constraints"] = verdicts_json(verdicts);
  j["notes"] = notes;
  j["poincare"] = {{"arrangement", to_json(poincare_cl(wc))}, {"curve", to_json(poincare_curve(syz.degree, syz.tau))}};
  j["certificate"] = {{"is_m_arrangement", cert.is_m_arrangement},
                      {"target_tau", cert.target_tau},
                      {"tau", cert.actual_tau},
                      {"tau_from_counts", tau_from_counts(wc)},
                      {"quadruple_points", cert.quadruple_points},
                      {"details", cert.details}};
  j["backend"] = backend_json(engine.backend(), opts);
  out.exit_code = cert.is_m_arrangement ? kExitVerdictTrue : kExitVerdictFalse;
  j["exit_code"] = out.exit_code;
  return out;
}

CommandOutcome cmd_combinatorics(const ArrangementDocument& doc, const RunOptions& opts) {
  CommandOutcome out;
  Json& j = out.report = header("combinatorics", opts);
  j["arguments"]["seed"] = opts.seed;
  j["input"] = input_json(doc);
  const Arrangement arr = validate(doc.arrangement);
  const auto points = singular_points(arr, point_options(opts));
  j["combinatorics"] = to_json(weak_combinatorics(arr, points));
  j["singular_points"] = points_json(arr, points);
  j["conic_traces"] = traces_json(arr, points);
  j["exit_code"] = out.exit_code;
  return out;
}

CommandOutcome cmd_delete_conic(const ArrangementDocument& doc, int conic, const RunOptions& opts) {
  CommandOutcome out;
  Json& j = out.report = header("delete-conic", opts);
  j["arguments"]["conic"] = conic;
  j["arguments"].update(run_options_json(opts));
  j["input"] = input_json(doc);

  const Arrangement arr = validate(doc.arrangement);
  if (conic < 1 || conic > arr.k()) {
    throw Error(ErrorKind::UnknownComponent, "no conic C" + std::to_string(conic) + " in an arrangement with " +
                                                 std::to_string(arr.k()) + " conics");
  }
  const ComponentId id{ComponentKind::Conic, conic - 1};
  const auto popts = point_options(opts);
  const auto points = singular_points(arr, popts);
  const WeakCombinatorics wc = weak_combinatorics(arr, points);
  const int r = conic_trace(arr, id, points);
  const Arrangement deleted = delete_component(arr, id);
  const auto deleted_points = singular_points(deleted, popts);
  const WeakCombinatorics deleted_wc = weak_combinatorics(deleted, deleted_points);

  const PoincarePolynomial p_cl = poincare_cl(wc);
  const PoincarePolynomial recomputed = poincare_cl(deleted_wc);
  PoincarePolynomial predicted{1, p_cl.c1 - 2, p_cl.c2 - r};
  std::string route = "deletion-identity";
  if (arr.k() == 1 && arr.d() >= 3 && combinatorial_m_arrangement(wc)) {
    predicted = poincare_of_deletion(arr.d(), r);
    route = "m-arrangement-deletion-formula";
  }
  if (!(predicted == recomputed)) {
    throw Error(ErrorKind::InternalInconsistency, "predicted deletion polynomial " + predicted.to_string() +
                                                      " differs from recomputed " + recomputed.to_string());
  }

  j["conic"] = id.to_string();
  j["trace"] = r;
  j["combinatorics"] = to_json(wc);
  j["deleted_combinatorics"] = to_json(deleted_wc);
  j["poincare"] = {{"arrangement", to_json(p_cl)},
                   {"predicted", to_json(predicted)},
                   {"predicted_by", route},
                   {"recomputed", to_json(recomputed)},
                   {"agree", true}};
  j["deletion_identity"] = to_json(deletion_identity_check(p_cl, recomputed, r));
  if (arr.k() == 1 && arr.d() >= 3) j["conic_trace_rule"] = to_json(mvp_allowed(arr.d(), r));

  RankEngine engine(opts.mode, opts.seed);
  JacobianSyzygies analysis(defining_form(deleted), engine);
  const bool free = analysis.dpw_verdict().is_free;
  const SyzygyReport syz = analysis.report(free ? std::nullopt : std::optional<int>(deleted.total_degree() - 1));
  j["deleted_syzygy"] = to_json(syz);
  std::string kind = "free";
  if (!free) {
    const auto& g = *syz.generator_degrees;
    const bool plus_one = g.size() == 3 && g[0] + g[1] == syz.degree;
    kind = plus_one ? "plus-one-generated" : "not-free";
  }
  j["deleted_syzygy"]["classification"] = kind;
  if (deleted.k() == 0) {
    const int bound = mdr_lower_bound_lines(deleted.d());
    j["mdr_lower_bound"] = {{"bound", bound},
                            {"advisory", mdr_lower_bound_is_advisory(deleted.d())},
                            {"observed_mdr", syz.mdr},
                            {"consistent", syz.mdr >= bound}};
  }
  j["backend"] = backend_json(engine.backend(), opts);
  j["exit_code"] = out.exit_code;
  return out;
}

CommandOutcome cmd_check(std::string_view wc_text, const RunOptions& opts) {
  CommandOutcome out;
  Json& j = out.report = header("check", opts);
  j["arguments"]["wc"] = std::string(wc_text);
  const WeakCombinatorics wc = parse_wc(wc_text);
  j["combinatorics"] = to_json(wc);
  std::vector<std::string> notes;
  const auto verdicts = combinatorial_verdicts(wc, notes);
  j["constraints"] = verdicts_json(verdicts);
  j["notes"] = notes;
  j["tau_from_counts"] = tau_from_counts(wc);
  j["m_target"] = wc.total_degree() >= 5 ? Json(m_curve_target(wc.total_degree())) : Json(nullptr);
  j["poincare"] = to_json(poincare_cl(wc));
  bool ok = true;
  for (const auto& v : verdicts) ok = ok && v.satisfied;
  out.exit_code = ok ? kExitVerdictTrue : kExitVerdictFalse;
  j["all_satisfied"] = ok;
  j["exit_code"] = out.exit_code;
  return out;
}

CommandOutcome cmd_enumerate(int d, const RunOptions& opts) {
  CommandOutcome out;
  Json& j = out.report = header("enumerate", opts);
  j["arguments"]["lines"] = d;
  j["arguments"]["one_conic"] = true;
  if (d < 3) throw Error(ErrorKind::OutOfRange, "enumeration needs at least three lines");
  Json rows = Json::array();
  for (const auto& [n2, n3, n4] : enumerate_one_conic(d)) {
    WeakCombinatorics wc;
    wc.d = d;
    wc.k = 1;
    wc.counts = {{2, n2}, {3, n3}, {4, n4}};
    Json traces = Json::array();
    for (int r = 1; r <= 2 * d; ++r) {
      const auto v = mvp_allowed(d, r);
      if (v.satisfied) traces.push_back({{"r", r}, {"advisories", v.advisories}});
    }
    rows.push_back({{"n", {n2, n3, n4}},
                    {"combinatorics", wc.to_string()},
                    {"char", to_json(char_check(wc))},
                    {"admissible_traces", traces},
                    {"poincare", to_json(poincare_cl(wc))}});
  }
  j["count"] = rows.size();
  j["rows"] = rows;
  j["exit_code"] = out.exit_code;
  return out;
}

Json error_report(const std::string& command, const Error& e) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* pf = dynamic_cast<const ParseFailure*>(&e)) {
    err["line"] = pf->line();
    err["column"] = pf->column();
  }
  j["error"] = err;
  j["exit_code"] = exit_code(e.kind());
  return j;
}

namespace {

void render(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const bool scalar_array =
      v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() || (x.is_array() && x.size() <= 3); });
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(os, k, x, indent + 1);
  } else if (v.is_array() && !scalar_array) {
    os << pad << key << ": (" << v.size() << ")\n";
    for (std::size_t i = 0; i < v.size(); ++i) render(os, "[" + std::to_string(i + 1) + "]", v[i], indent + 1);
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) render(os, k, v, 0);
  return os.str();
}

}  // namespace mcurve
