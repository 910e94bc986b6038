// Acceptance harness: every criterion is exercised at its stated sweep size
// with exact comparisons over Q(r); one pass/fail line per criterion, nonzero
// exit when any of them fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <semisym/verify.hpp>

using namespace semisym;

namespace {

int failures = 0;
std::string cli_path, golden_path;

using Clock = std::chrono::steady_clock;

void report(int index, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s (%.1fs)%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              seconds, detail.empty() ? "" : ("  -- " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct SuiteOutcome {
  size_t total = 0, failed = 0;
  std::string first_witness;
};

SuiteOutcome tally(const std::vector<Verdict>& vs) {
  SuiteOutcome out;
  for (const auto& v : vs) {
    ++out.total;
    if (!v.pass) {
      ++out.failed;
      if (out.first_witness.empty()) out.first_witness = v.id + ": " + v.witness;
    }
  }
  return out;
}

SuiteOutcome tally_filtered(const std::vector<Verdict>& vs,
                            const std::vector<std::string>& id_prefixes) {
  SuiteOutcome out;
  for (const auto& v : vs) {
    bool keep = false;
    for (const auto& p : id_prefixes)
      if (v.id.rfind(p, 0) == 0) keep = true;
    if (!keep) continue;
    ++out.total;
    if (!v.pass) {
      ++out.failed;
      if (out.first_witness.empty()) out.first_witness = v.id + ": " + v.witness;
    }
  }
  return out;
}

void run_criterion(int index, const std::string& name,
                   const std::function<SuiteOutcome()>& body) {
  auto t0 = Clock::now();
  SuiteOutcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.total = 1;
    out.failed = 1;
    out.first_witness = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::string detail = std::to_string(out.total - out.failed) + "/" +
                       std::to_string(out.total) + " cases";
  if (out.failed) detail += "; first failure: " + out.first_witness;
  report(index, name, out.failed == 0, secs, detail);
}

SweepOptions base_options() {
  SweepOptions opt;
  opt.jobs = 2;
  return opt;
}

// the displayed three-variable expansions, as exact coefficient identities
SuiteOutcome displayed_pieri_checks() {
  SuiteOutcome out;
  const RatFunc r = RatFunc::r();
  const int n = 3;
  for (const auto& mu : partitions_odd_bounded(n, 3)) {
    ++out.total;
    RatFunc d13 = RatFunc(mu[0] - mu[2]), d23 = RatFunc(mu[1] - mu[2]),
            d12 = RatFunc(mu[0] - mu[1]);
    RatFunc denom = (d13 + RatFunc(2) * r) * (d13 - RatFunc(1) + RatFunc(2) * r);
    RatFunc c3 = d23 * (d23 - RatFunc(1) + RatFunc(2) * r) / denom;
    RatFunc c23 = d12 * (d12 - RatFunc(1) + RatFunc(2) * r) / denom;
    IntVec e1{mu[0] + 1, mu[1], mu[2]}, e3{mu[0], mu[1], mu[2] + 1};
    IntVec e12{mu[0] + 1, mu[1] + 1, mu[2]}, e23{mu[0], mu[1] + 1, mu[2] + 1};
    auto expect = [&](const RExpansion& ex, const IntVec& lam, const RatFunc& want) {
      RatFunc got = is_partition(lam) ? ex.coeff(lam) : RatFunc();
      return got == (is_partition(lam) ? want : RatFunc());
    };
    bool ok = true;
    RExpansion po = pieri_elementary(mu, 1, Parity::Odd, n);
    ok = ok && po.coeff(mu) == RatFunc(mu[0] + mu[2]) + RatFunc(2) * r;
    ok = ok && expect(po, e1, RatFunc(1)) && expect(po, e3, c3);
    ok = ok && expect(po, e12, RatFunc(1)) && expect(po, e23, c23);
    RExpansion pe = pieri_elementary(mu, 1, Parity::Even, n);
    ok = ok && pe.coeff(mu) == RatFunc(mu[1]) + r;
    ok = ok && expect(pe, e12, RatFunc(1)) && expect(pe, e23, c23);
    RExpansion f2 = pieri_shifted(mu, 1, n);
    ok = ok && f2.coeff(mu) == RatFunc(bracket1(mu));
    ok = ok && expect(f2, e1, RatFunc(1)) && expect(f2, e3, c3) && f2.coeffs.size() <= 3;
    if (!ok) {
      ++out.failed;
      if (out.first_witness.empty())
        out.first_witness = "displayed expansion at mu=" + partition_str(mu);
    }
  }
  return out;
}

SuiteOutcome merge(SuiteOutcome a, const SuiteOutcome& b) {
  a.total += b.total;
  a.failed += b.failed;
  if (a.first_witness.empty()) a.first_witness = b.first_witness;
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

SuiteOutcome determinism_check() {
  SuiteOutcome out;
  out.total = 1;
  if (cli_path.empty()) {
    out.failed = 1;
    out.first_witness = "no CLI path supplied";
    return out;
  }
  std::string out1 = "/tmp/semisym_verify_j1.json", out2 = "/tmp/semisym_verify_j4.json";
  std::string base = "\"" + cli_path + "\" verify all --report json --golden \"" +
                     golden_path + "\"";
  int rc1 = std::system((base + " --jobs 1 --out " + out1).c_str());
  int rc2 = std::system((base + " --jobs 4 --out " + out2).c_str());
  if (rc1 != 0 || rc2 != 0) {
    out.failed = 1;
    out.first_witness = "verify all exited nonzero";
    return out;
  }
  std::string a = read_file(out1), b = read_file(out2);
  if (a.empty() || a != b) {
    out.failed = 1;
    out.first_witness = "reports differ across parallelism settings";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  cli_path = argc > 1 ? argv[1] : "";
  golden_path = argc > 2 ? argv[2] : "data/degree3_table.json";

  run_criterion(1, "defining properties and leading-term normalization", [] {
    return tally(run_suite("defining", base_options()));
  });

  run_criterion(2, "eigenvalue products of both operator families", [] {
    return tally(run_suite("eigen", base_options()));
  });

  run_criterion(3, "cut-off and commutativity", [] {
    auto a = tally(run_suite("cutoff", base_options()));
    return merge(a, tally(run_suite("commute", base_options())));
  });

  run_criterion(4, "triangularity, bigrading and product support", [] {
    return tally(run_suite("triangularity", base_options()));
  });

  run_criterion(5, "extra vanishing beyond the defining nodes", [] {
    return tally(run_suite("extra-vanishing", base_options()));
  });

  run_criterion(6, "duality layer: binomial, symmetry, involution, transform", [] {
    SweepOptions opt = base_options();
    opt.alphas = {Rational(1), make_rational(5, 2)};
    auto a = tally(run_suite("duality", opt));
    return merge(a, tally(run_suite("interpol", opt)));
  });

  run_criterion(7, "evaluation formula and one-point values", [] {
    return tally(run_suite("evaluation", base_options()));
  });

  run_criterion(8, "pieri rules against direct expansion, plus displayed forms", [] {
    auto a = tally(run_suite("pieri", base_options()));
    return merge(a, displayed_pieri_checks());
  });

  {
    SweepOptions opt = base_options();
    opt.golden_table_path = golden_path;
    auto t0 = Clock::now();
    std::vector<Verdict> closed = run_suite("closed-forms", opt);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    auto nine = tally_filtered(closed, {"hook", "two-row", "three-variable", "table"});
    std::string d9 = std::to_string(nine.total - nine.failed) + "/" +
                     std::to_string(nine.total) + " cases";
    if (nine.failed) d9 += "; first failure: " + nine.first_witness;
    report(9, "hook, two-row, three-variable and table closed forms", nine.failed == 0,
           secs, d9);
    auto ten = tally_filtered(closed, {"even-pair", "odd-sum", "columns"});
    std::string d10 = std::to_string(ten.total - ten.failed) + "/" +
                      std::to_string(ten.total) + " cases";
    if (ten.failed) d10 += "; first failure: " + ten.first_witness;
    report(10, "comparisons with the fully symmetric family", ten.failed == 0, 0.0, d10);
  }

  run_criterion(11, "integral form probe (reported conjecture)", [] {
    return tally(run_suite("integrality", base_options()));
  });

  run_criterion(12, "byte-identical reports across parallelism settings",
                [] { return determinism_check(); });

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
