// End-to-end gate: one line per criterion, exit 0 only if every line passes.
// Thresholds are fixed here on purpose; loosening them is a code change.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apseries/finite_sums.hpp"
#include "apseries/hypergeometric.hpp"
#include "apseries/mixed_values.hpp"
#include "apseries/registry.hpp"
#include "apseries/series.hpp"
#include "apseries/special_functions.hpp"
#include "apseries/truncated_series.hpp"
#include "oracles.hpp"

using namespace apseries;
using SClock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok) {
  std::printf("[%2d/10] %-66s %s\n", idx, what, ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

template <class F>
void criterion(int idx, const char* what, F body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d raised: %s\n", idx, e.what());
  }
  report(idx, what, ok);
}

Real num(const std::string& s) { return Real(s, 128); }

double ms_since(SClock::time_point t0) {
  return std::chrono::duration<double, std::milli>(SClock::now() - t0).count();
}

std::vector<VerificationReport> run_id(const char* id) {
  const IdentityCase* c = find_case(id);
  if (!c) throw std::runtime_error(std::string("missing case ") + id);
  return c->run({}, 256);
}

bool all_pass(const std::vector<VerificationReport>& reps) {
  if (reps.empty()) return false;
  for (const auto& r : reps)
    if (r.status != "pass") return false;
  return true;
}

bool diffs_below(const std::vector<VerificationReport>& reps, const char* bound) {
  const Real b = num(bound);
  for (const auto& r : reps)
    if (!(num(r.abs_diff) <= b)) return false;
  return true;
}

std::string without_wall_times(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("wall_time_ms") == std::string::npos) out << line << '\n';
  return out.str();
}

}  // namespace

int main() {
  criterion(1, "zeta(3) shortcut: 1e-30 within 60 terms, under a second", [] {
    auto t0 = SClock::now();
    auto reps = run_id("I01");
    const double ms = ms_since(t0);
    return reps.size() == 1 && all_pass(reps) && num(reps[0].abs_diff) <= num("1e-30") &&
           reps[0].terms_used <= 60 && ms < 1000.0;
  });

  criterion(2, "central-binomial star series r=0..4: 1e-10, <=2e4 terms, <60s", [] {
    auto t0 = SClock::now();
    auto reps = run_id("I02");
    const double ms = ms_since(t0);
    if (reps.size() != 5 || !all_pass(reps) || !diffs_below(reps, "1e-10")) return false;
    bool saw_r0 = false;
    for (const auto& r : reps) {
      if (r.terms_used > 20000) return false;
      if (r.params == "r=0") saw_r0 = true;
    }
    return saw_r0 && ms < 60000.0;
  });

  criterion(3, "chain generating functions exact up to n=25, order 40, <30s", [] {
    auto t0 = SClock::now();
    for (long n = 0; n <= 25; ++n)
      for (int star = 0; star <= 1; ++star)
        if (!check_gf(n, 40, star != 0)) return false;
    return ms_since(t0) < 30000.0;
  });

  criterion(4, "3F2 closed forms / partial fractions: 1e-10, b=1 rows 1e-20", [] {
    int tight_rows = 0;
    for (const char* id : {"I04", "I16", "I17", "I18"}) {
      auto reps = run_id(id);
      if (!all_pass(reps) || !diffs_below(reps, "1e-10")) return false;
      for (const auto& r : reps)
        if (r.params.rfind("b=1 ", 0) == 0 || r.params.rfind("a=1 b=1 ", 0) == 0) {
          ++tight_rows;
          if (!(num(r.abs_diff) <= num("1e-20"))) return false;
        }
    }
    return tight_rows == 9;
  });

  criterion(5, "functional equation and damped polylog forms at 1e-25", [] {
    auto r8 = run_id("I08");
    if (!all_pass(r8) || !diffs_below(r8, "1e-25")) return false;
    auto r9 = run_id("I09");
    if (!all_pass(r9)) return false;
    int interior = 0;
    for (const auto& r : r9) {
      const bool inside = r.params.find("z=1/4") != std::string::npos ||
                          r.params.find("z=1/2") != std::string::npos ||
                          r.params.find("z=3/4") != std::string::npos;
      if (!inside) continue;
      ++interior;
      if (!(num(r.abs_diff) <= num("1e-25"))) return false;
    }
    if (interior != 15) return false;
    // depth-zero damping closes to 2 log(2/(1+sqrt z)) at the same rate
    PrecisionCtx ctx = PrecisionCtx::make(256, "1e-27");
    const long w = 320;
    for (const Rat& z : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
      SumResult s = apery_series_z(0, Real(z, w), ctx);
      const Real rv = log(Real(2L, w) / (Real(1L, w) + sqrt(Real(z, w)))) * 2L;
      if (!(abs(s.value - rv) <= num("1e-25"))) return false;
    }
    return true;
  });

  criterion(6, "alternating-harmonic chains at 1e-6; r=1 is -(3/4) zeta(3)", [] {
    auto reps = run_id("I10");
    if (!all_pass(reps)) return false;
    PrecisionCtx ctx = PrecisionCtx::make(256, "1e-8");
    SumResult s = alt_harmonic_series(1, ctx);
    const Real anchor = Real(oracles::kZeta3, 320) * Real(Rat(-3, 4), 320);
    return abs(s.value - anchor) <= num("1e-6");
  });

  criterion(7, "integral vs series routes at 1e-8; r=1 anchor value holds", [] {
    auto reps = run_id("I13");
    if (!all_pass(reps)) return false;
    PrecisionCtx ctx = PrecisionCtx::make(256, "1e-10");
    const long w = 320;
    const Real pi = const_pi(w);
    const Real anchor =
        pi * pi / 3L * Real(oracles::kLog2, w) - Real(oracles::kZeta3, w) * Real(Rat(3, 2), w);
    SumResult qa = li_integral(1, ctx);
    SumResult sb = integral_series_lhs(1, ctx);
    return abs(qa.value - anchor) <= num("1e-8") && abs(sb.value - anchor) <= num("1e-8");
  });

  criterion(8, "parametric family at 1e-6; a=1/2 weightless rows track 1e-10", [] {
    for (const char* id : {"I21", "I22", "I23"}) {
      auto reps = run_id(id);
      if (!all_pass(reps) || !diffs_below(reps, "1e-6")) return false;
    }
    PrecisionCtx ctx = PrecisionCtx::make(256, "1e-11");
    for (int r = 0; r <= 2; ++r) {
      SumResult a = param_apery_lhs(Rat(1, 2), r, ctx);
      SumResult b = apery_series(r, ctx);
      if (!(abs(a.value - b.value) <= num("1e-10"))) return false;
    }
    return true;
  });

  criterion(9, "property sweeps: tables, digamma, polylog, splits, derivatives", [] {
    SumTable2r tab(20, 5);
    for (long n = 0; n <= 20; ++n)
      for (int r = 0; r <= 5; ++r) {
        std::vector<int> twos(static_cast<size_t>(r), 2);
        if (tab.plain(n, r) != oracles::brute_mhs(n, twos)) return false;
        if (tab.star(n, r) != oracles::brute_mhss(n, twos)) return false;
      }

    PrecisionCtx dctx = PrecisionCtx::make(320, "1e-35");
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> dist(0.03125, 24.0);
    const Real tight = num("1e-30");
    const Real half(Rat(1, 2), 320);
    for (int i = 0; i < 100; ++i) {
      const Real x = Real::from_double(dist(rng), 320);
      const Real rec = digamma(x + Real(1L, 320), dctx) - digamma(x, dctx) - 1L / x;
      if (!(abs(rec) <= tight)) return false;
      const Real dup = digamma(x * 2L, dctx) -
                       (digamma(x, dctx) + digamma(x + half, dctx)) / 2L - const_log2(320);
      if (!(abs(dup) <= tight)) return false;
    }

    PrecisionCtx pctx = PrecisionCtx::make(256, "1e-27");
    for (int r = 1; r <= 3; ++r) {
      const Real li = polylog(2 * r + 1, Real(-1L, 256), pctx);
      const Real eta = (Real(1L, 256) - Real::pow2(-2 * r, 256)) * zeta_int(2 * r + 1, pctx);
      if (!(abs(li + eta) <= num("1e-25"))) return false;
    }

    for (long n = 1; n <= 50; ++n)
      if (alt_harmonic(n) != (harmonic(n) - odd_harmonic(n)) / Rat(2)) return false;

    PrecisionCtx fctx = PrecisionCtx::make(256, "1e-14");
    for (const auto& s : {std::pair<Rat, long>{Rat(1, 3), 12}, {Rat(2, 3), 25}})
      for (int k = 1; k <= 2; ++k)
        for (auto kind : {PochDerivKind::rising, PochDerivKind::reciprocal}) {
          auto pr = pochhammer_derivative_check(s.first, s.second, k, kind, fctx);
          if (!(abs(pr.first - pr.second) <= num("1e-12"))) return false;
        }
    return true;
  });

  criterion(10, "CLI suite: identical JSON for --jobs 1 and --jobs 4, exit 0", [] {
    const std::string base = std::string(APSERIES_CLI_PATH) + " suite --format json";
    const int s1 = std::system((base + " --jobs 1 --out acceptance_j1.json").c_str());
    const int s4 = std::system((base + " --jobs 4 --out acceptance_j4.json").c_str());
    if (!WIFEXITED(s1) || WEXITSTATUS(s1) != 0) return false;
    if (!WIFEXITED(s4) || WEXITSTATUS(s4) != 0) return false;
    const std::string a = without_wall_times("acceptance_j1.json");
    const std::string b = without_wall_times("acceptance_j4.json");
    return !a.empty() && a == b;
  });

  if (failures == 0) {
    std::printf("all 10 criteria satisfied\n");
    return 0;
  }
  std::printf("%d criteria failing\n", failures);
  return 1;
}
