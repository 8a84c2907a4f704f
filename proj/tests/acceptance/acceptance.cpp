// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mcurve/arrangement/arrangement.hpp"
#include "mcurve/cli_io/commands.hpp"
#include "mcurve/cli_io/document.hpp"
#include "mcurve/mtheory/mtheory.hpp"
#include "mcurve/syzygy/certify.hpp"
#include "mcurve/syzygy/syzygy.hpp"
#include "random_arrangements.hpp"
#include "random_documents.hpp"

using namespace mcurve;

namespace {

// Collects failed expectations of one criterion.
class Checker {
 public:
  template <typename A, typename B>
  void eq(const std::string& what, const A& actual, const B& expected) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << show(actual) << ", expected " << show(expected);
      failures_.push_back(os.str());
    }
  }
  void ok(const std::string& what, bool cond) {
    if (!cond) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream os;
    if constexpr (requires { os << v; }) {
      os << v;
    } else if constexpr (requires { v.to_string(); }) {
      os << v.to_string();
    } else if constexpr (requires { v.first; v.second; }) {
      os << "(" << v.first << ", " << v.second << ")";
    } else {
      os << "[";
      for (const auto& x : v) os << x << " ";
      os << "]";
    }
    return os.str();
  }
  std::vector<std::string> failures_;
};

Arrangement load(const std::string& name) {
  std::ifstream in(std::string(MCURVE_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate(parse_arrangement(ss.str()).arrangement);
}

const ComponentId kConic{ComponentKind::Conic, 0};

// First index from which the Hilbert sequence stays at its final value.
int st_from_sequence(const std::vector<long>& h) {
  int i = static_cast<int>(h.size()) - 1;
  while (i > 0 && h[i - 1] == h.back()) --i;
  return i;
}

long dpw_free_tau(int d, int d1) { return static_cast<long>(d - 1) * (d - d1 - 1) + static_cast<long>(d1) * d1; }

struct FixtureFacts {
  WeakCombinatorics wc;
  SyzygyReport syz;
  int trace = 0;
  WeakCombinatorics deleted_wc;
  SyzygyReport deleted_syz;
};

FixtureFacts analyze(const Arrangement& arr, std::optional<int> deleted_generators_to = std::nullopt) {
  FixtureFacts f;
  const auto points = singular_points(arr);
  f.wc = weak_combinatorics(arr, points);
  RankEngine engine;
  f.syz = JacobianSyzygies(defining_form(arr), engine).report();
  if (arr.k() >= 1) {
    f.trace = conic_trace(arr, kConic, points);
    const Arrangement del = delete_component(arr, kConic);
    f.deleted_wc = weak_combinatorics(del);
    RankEngine e2;
    f.deleted_syz = JacobianSyzygies(defining_form(del), e2).report(deleted_generators_to);
  }
  return f;
}

void criterion1(Checker& c) {
  const Arrangement arr = load("cl1.txt");
  const auto f = analyze(arr);
  c.eq("weak combinatorics", f.wc.to_string(), std::string("6,1;3,0,4"));
  c.eq("tau", f.syz.tau, 39L);
  c.ok("free", f.syz.is_free);
  c.eq("exponents", f.syz.exponents.value_or(std::pair{-1, -1}), std::pair{2, 5});
  c.eq("conic trace", f.trace, 4);
  const auto p = poincare_cl(f.deleted_wc);
  c.eq("deletion Poincare", p.to_string(), std::string("6t^2 + 5t + 1"));
  c.eq("deletion splitting", splits_rationally(p).value_or(std::pair{-1L, -1L}), std::pair{2L, 3L});
  c.ok("deletion free", f.deleted_syz.is_free);
  c.eq("deletion exponents", f.deleted_syz.exponents.value_or(std::pair{-1, -1}), std::pair{2, 3});
}

void criterion2(Checker& c) {
  const auto f = analyze(load("cl2.txt"));
  c.eq("weak combinatorics", f.wc.to_string(), std::string("7,1;5,2,4"));
  c.eq("tau", f.syz.tau, 49L);
  c.eq("exponents", f.syz.exponents.value_or(std::pair{-1, -1}), std::pair{3, 5});
  c.eq("conic trace", f.trace, 6);
  const auto p = poincare_cl(f.deleted_wc);
  c.eq("deletion Poincare", p, PoincarePolynomial{1, 6, 9});
  c.eq("deletion splitting", splits_rationally(p).value_or(std::pair{-1L, -1L}), std::pair{3L, 3L});
  c.ok("deletion free", f.deleted_syz.is_free);
}

void criterion3(Checker& c) {
  const Arrangement arr = load("cl3.txt");
  const auto f = analyze(arr, 8);
  c.eq("weak combinatorics", f.wc.to_string(), std::string("9,1;6,4,6"));
  c.eq("tau", f.syz.tau, 76L);
  RankEngine engine;
  c.ok("M-arrangement", m_curve_certify(arr, engine).is_m_arrangement);
  c.eq("exponents", f.syz.exponents.value_or(std::pair{-1, -1}), std::pair{4, 6});
  c.eq("deletion n2", f.deleted_wc.n(2), 6L);
  c.eq("deletion n3", f.deleted_wc.n(3), 10L);
  const auto p = poincare_cl(f.deleted_wc);
  c.eq("deletion Poincare", p.to_string(), std::string("18t^2 + 8t + 1"));
  c.ok("no rational splitting", !splits_rationally(p).has_value());
  c.ok("deletion not free", !f.deleted_syz.is_free);
  c.eq("deletion generator degrees", f.deleted_syz.generator_degrees.value_or(std::vector<int>{}),
       std::vector<int>{4, 5, 6});
}

void criterion4(Checker& c) {
  const Arrangement arr = load("st.txt");
  const auto f = analyze(arr);
  c.eq("weak combinatorics", f.wc.to_string(), std::string("3,2;1,0,3"));
  c.ok("free", f.syz.is_free);
  c.eq("exponents", f.syz.exponents.value_or(std::pair{-1, -1}), std::pair{2, 4});
  c.eq("tau", f.syz.tau, 28L);
  RankEngine engine;
  c.ok("M-arrangement", m_curve_certify(arr, engine).is_m_arrangement);
  const auto v = char_check(f.wc);
  c.ok("char identity holds", v.satisfied);
  c.eq("char lhs", v.lhs, 10L);
  c.eq("char rhs", v.rhs, 10L);
}

void criterion5(Checker& c) {
  const auto out = cmd_check("7,1;5,4,3", RunOptions{});
  c.eq("exit code", out.exit_code, 1);
  bool found = false;
  for (const auto& v : out.report["constraints"]) {
    if (v["rule"].get<std::string>().rfind("char-", 0) != 0) continue;
    found = true;
    c.ok("char fails", !v["satisfied"].get<bool>());
    c.eq("char lhs", v["lhs"].get<long>(), 22L);
    c.eq("char rhs", v["rhs"].get<long>(), 21L);
  }
  c.ok("char verdict reported", found);
}

// Direct search over 0 <= n_i <= 200 using the two one-conic equations.
std::set<std::tuple<long, long, long>> brute_force_one_conic(int d) {
  const long l = d / 2;
  const long s1 = d % 2 == 0 ? 3 * l - 6 : 3 * l - 2;
  const long s2 = d % 2 == 0 ? l * l + 3 : l * l + l + 2;
  std::set<std::tuple<long, long, long>> out;
  for (long n2 = 0; n2 <= 200; ++n2)
    for (long n3 = 0; n3 <= 200; ++n3)
      for (long n4 = 0; n4 <= 200; ++n4)
        if (n2 + n3 == s1 && n3 + 3 * n4 == s2) out.insert({n2, n3, n4});
  return out;
}

void criterion6(Checker& c) {
  using Set = std::set<std::tuple<long, long, long>>;
  const std::vector<std::pair<int, Set>> expected{
      {6, {{3, 0, 4}, {0, 3, 3}}}, {4, {}}, {7, {{5, 2, 4}, {2, 5, 3}}}};
  for (const auto& [d, want] : expected) {
    const auto rows = enumerate_one_conic(d);
    const Set got(rows.begin(), rows.end());
    c.eq("rows for d=" + std::to_string(d), got.size(), rows.size());
    c.ok("enumeration for d=" + std::to_string(d), got == want);
    c.ok("brute force for d=" + std::to_string(d), brute_force_one_conic(d) == want);
  }
}

void criterion7(Checker& c) {
  struct Case {
    const char* file;
    int reg_m, reg_ar;
  };
  for (const Case& k : {Case{"cl1.txt", 10, 5}, Case{"cl2.txt", 11, 5}, Case{"cl3.txt", 14, 6}}) {
    const Arrangement arr = load(k.file);
    RankEngine engine;
    const auto syz = JacobianSyzygies(defining_form(arr), engine).report();
    const std::string tag = std::string(k.file) + " ";
    const auto expected = m_reg_values(arr.total_degree());
    c.eq(tag + "reg_M formula", expected.reg_M, k.reg_m);
    c.eq(tag + "reg_AR formula", expected.reg_AR, k.reg_ar);
    c.eq(tag + "reg_M computed", syz.reg_M.value_or(-1), k.reg_m);
    c.eq(tag + "reg_AR computed", syz.reg_AR.value_or(-1), k.reg_ar);
    c.eq(tag + "st from Hilbert sequence", st_from_sequence(syz.hilbert), k.reg_m);
    c.eq(tag + "reported st", syz.st, k.reg_m);
  }
}

void criterion8(Checker& c) {
  // Deletion identity: exponents of the M-arrangement minus 2t + r t^2.
  for (int d = 3; d <= 50; ++d) {
    const int total = d + 2;
    const int m = total / 2;
    const long d1 = total % 2 == 0 ? m - 2 : m - 1;
    const long d2 = m + 1;
    for (int r = 1; r <= 2 * d; ++r) {
      if (!mvp_allowed(d, r).satisfied) continue;
      const PoincarePolynomial from_exponents{1, d1 + d2 - 2, d1 * d2 - r};
      c.eq("deletion identity d=" + std::to_string(d) + " r=" + std::to_string(r), poincare_of_deletion(d, r),
           from_exponents);
    }
  }

  // Fixtures, their deletions and a random set.
  std::vector<std::pair<std::string, Arrangement>> curves;
  for (const char* name : {"cl1.txt", "cl2.txt", "cl3.txt", "st.txt"}) {
    const Arrangement a = load(name);
    curves.emplace_back(name, a);
    curves.emplace_back(std::string(name) + " minus C1", delete_component(a, kConic));
  }
  const std::size_t fixture_count = curves.size();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const int k = i % 3;
    const int d = std::max(1 + i % 7, 3 - 2 * k);
    curves.emplace_back("random " + std::to_string(i), testkit::random_ordinary_arrangement(rng, d, k));
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& [name, arr] = curves[i];
    const bool fixture = i < fixture_count;
    RankEngine engine;
    const auto syz = JacobianSyzygies(defining_form(arr), engine).report();
    const int e = syz.degree;
    if (syz.is_free) {
      const int d1 = syz.exponents->first, d2 = syz.exponents->second;
      c.eq(name + " free tau formula", syz.tau, dpw_free_tau(e, d1));
      if (fixture) {
        c.eq(name + " ct + st", syz.ct.value_or(-1) + syz.st, 3 * (e - 2));
        c.eq(name + " st", syz.st, e - 3 + d2);
      }
    }
    long bound = static_cast<long>(e - 1) * (e - syz.mdr - 1) + static_cast<long>(syz.mdr) * syz.mdr;
    if (2 * syz.mdr >= e) bound -= static_cast<long>(2 * syz.mdr - e + 2) * (2 * syz.mdr - e + 1) / 2;
    c.ok(name + " tau <= tau_max", syz.tau <= bound);
    if (!fixture) {
      const auto wc = weak_combinatorics(arr);
      long points = 0;
      for (const auto& [r, n] : wc.counts) points += static_cast<long>(r) * (r - 1) / 2 * n;
      const long dd = arr.d(), kk = arr.k();
      const long pairs = 4 * (kk * (kk - 1) / 2) + 2 * kk * dd + dd * (dd - 1) / 2;
      c.eq(name + " Bezout", points, pairs);
    } else {
      RankEngine exact(RankMode::Exact);
      const auto ref = JacobianSyzygies(defining_form(arr), exact).report();
      c.eq(name + " backends agree on hilbert", syz.hilbert, ref.hilbert);
      c.eq(name + " backends agree on mdr", syz.mdr, ref.mdr);
      c.eq(name + " backends agree on mdr_e", syz.mdr_e.value_or(-1), ref.mdr_e.value_or(-1));
      c.eq(name + " backends agree on st", syz.st, ref.st);
    }
  }
}

void criterion9(Checker& c) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::string text = testkit::random_document(rng);
    const std::string once = serialize_arrangement(parse_arrangement(text).arrangement);
    const std::string twice = serialize_arrangement(parse_arrangement(once).arrangement);
    c.ok("document " + std::to_string(i) + " round trip", once == twice);
    c.ok("document " + std::to_string(i) + " arrangement preserved",
         parse_arrangement(once).arrangement == parse_arrangement(text).arrangement);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"first conic-line fixture: combinatorics, tau, exponents, deletion", criterion1},
      {"second conic-line fixture: combinatorics, tau, exponents, deletion", criterion2},
      {"third conic-line fixture: M-arrangement, plus-one generated deletion", criterion3},
      {"two-conic fixture: free, M-arrangement, char identity", criterion4},
      {"rejection of 7,1;5,4,3 by the char rule", criterion5},
      {"one-conic enumeration for d = 6, 4, 7 against brute force", criterion6},
      {"regularity values against the Hilbert sequence", criterion7},
      {"property suite: deletion identity, freeness, thresholds, Bezout, bound, backends", criterion8},
      {"parser round trip on 100 random documents", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok(std::string("unexpected exception: ") + e.what(), false);
    }
    const bool pass = c.failures().empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].first.c_str());
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
