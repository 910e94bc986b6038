// Command line surface: compute interpolation polynomials and expansions, run
// verification sweeps, reproduce the degree-three relation table, and expose
// the order/monoid predicates. All output is canonical JSON or plain text.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <semisym/verify.hpp>

using namespace semisym;

namespace {

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

// The parameter stays symbolic unless a rational value is requested; negative
// rational values (in particular every -p/(2q)) are outside the domain of the
// theory and are rejected.
std::optional<Rational> parse_r_mode(const std::string& mode) {
  if (mode == "sym") return std::nullopt;
  Rational rv = parse_rational(mode);
  if (rv < 0)
    throw std::domain_error("r=" + rational_str(rv) +
                            " rejected: negative rational values (the set -p/(2q) in "
                            "particular) are outside the parameter domain");
  return rv;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

std::string poly_text(const MultiPoly& f) { return f.str() + "\n"; }

std::string poly_output(const MultiPoly& f, const std::optional<Rational>& rv,
                        const std::string& format) {
  MultiPoly g = rv ? specialize(f, *rv) : f;
  if (format == "text") return poly_text(g);
  return to_json(g) + "\n";
}

int run_compute(const std::string& what, int n, const IntVec& lam, const IntVec& mu, int m,
                bool shifted, const std::string& basis, const std::string& rmode,
                const std::string& format, const std::string& out_path) {
  auto rv = parse_r_mode(rmode);
  if (what == "R") {
    if (n <= 0 || lam.empty()) throw CLI::ValidationError("compute R needs --n and --lambda");
    if (!is_partition(lam))
      throw std::domain_error("--lambda is not weakly decreasing nonnegative");
    MultiPoly R = build_R(lam, n);
    if (!mu.empty()) {
      if (!is_partition(mu)) throw std::domain_error("--mu is not weakly decreasing");
      IntVec mu_full = mu;
      mu_full.resize(n, 0);
      RatFunc v = R.eval(node_point(n, mu_full));
      std::string s;
      if (rv) s = rational_str(v.eval(*rv)) + "\n";
      else if (format == "text") s = v.str() + "\n";
      else {
        s = "{";
        jsonio::append_coeff_fields(s, v);
        s += "}\n";
      }
      emit(out_path, s);
      return 0;
    }
    if (basis == "elementary") {
      RExpansion ex = to_elementary_basis(R);
      if (rv) {
        for (auto& [mu, c] : ex.coeffs) c = RatFunc(c.eval(*rv));
      }
      emit(out_path, to_json(ex) + "\n");
    } else {
      emit(out_path, poly_output(R, rv, basis == "json" ? "json" : format));
    }
    return 0;
  }
  if (what == "e") {
    if (n <= 0 || m <= 0) throw CLI::ValidationError("compute e needs --n and --m");
    emit(out_path, poly_output(elementary_semisym(m, n, shifted), rv, format));
    return 0;
  }
  throw CLI::ValidationError("compute expects R or e");
}

int run_apply(OpKind kind, int n, const IntVec& lam, const Rational& t,
              const std::string& rmode, const std::string& format,
              const std::string& out_path) {
  auto rv = parse_r_mode(rmode);
  if (!is_partition(lam)) throw std::domain_error("--lambda is not weakly decreasing");
  MultiPoly R = build_R(lam, n);
  MultiPoly image = apply(determinant_expand(kind, n, t), R);
  bool eigen = image == R * eigenvalue(kind, lam, t, n);
  std::string s = std::string("{\"eigencheck\":") + (eigen ? "true" : "false") +
                  ",\"eigenvalue\":\"" + eigenvalue(kind, lam, t, n).str() +
                  "\",\"image\":" + (rv ? to_json(specialize(image, *rv)) : to_json(image)) +
                  "}\n";
  if (format == "text")
    s = std::string(eigen ? "eigencheck: pass" : "eigencheck: FAIL") + "\n" +
        poly_text(rv ? specialize(image, *rv) : image);
  emit(out_path, s);
  return eigen ? 0 : 1;
}

int run_order(const std::string& rel, const IntVec& a, const IntVec& b,
              const std::string& out_path) {
  bool result = false;
  if (rel == "psi0")
    result = monoid_test(a, Monoid::Psi0);
  else if (rel == "psi1")
    result = monoid_test(a, Monoid::Psi1);
  else if (rel == "phiplus")
    result = monoid_test(a, Monoid::PhiPlus);
  else {
    if (b.empty()) throw CLI::ValidationError("order relation needs --b");
    Rel r;
    if (rel == "subseteq")
      r = Rel::Subseteq;
    else if (rel == "sqsubseteq")
      r = Rel::Sqsubseteq;
    else if (rel == "dominance")
      r = Rel::Dominance;
    else if (rel == "dominance-hom")
      r = Rel::DominanceHom;
    else if (rel == "prec")
      r = Rel::Prec;
    else if (rel == "prec-hom")
      r = Rel::PrecHom;
    else
      throw CLI::ValidationError("unknown relation '" + rel + "'");
    result = order_test(a, b, r);
  }
  emit(out_path, std::string(result ? "true" : "false") + "\n");
  return 0;
}

int run_table(int deg, const std::string& golden, const std::string& nlist,
              const std::string& out_path) {
  if (deg != 3) throw CLI::ValidationError("only --deg 3 is tabulated");
  std::string json = verify_detail::table_json();
  bool ok = true;
  std::string report;
  for (int n : parse_int_list(nlist)) {
    for (const auto& rel : verify_detail::degree3_relations()) {
      std::string w = verify_detail::check_table_relation(rel, n);
      if (!w.empty()) {
        ok = false;
        report += "FAIL " + w + "\n";
      }
    }
  }
  if (!golden.empty()) {
    std::ifstream f(golden, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    if (!f || buf.str() != json) {
      ok = false;
      report += "FAIL golden file " + golden + " differs\n";
    }
  }
  emit(out_path, json + report);
  return ok ? 0 : 1;
}

int run_verify(const std::string& suite, const SweepOptions& opt, const std::string& report,
               const std::string& out_path) {
  std::vector<Verdict> vs = run_suite(suite, opt);
  size_t failed = 0;
  for (const auto& v : vs)
    if (!v.pass) ++failed;
  std::string text;
  if (report == "json") {
    text = verdicts_json(vs);
  } else {
    for (const auto& v : vs) {
      text += v.pass ? "[PASS] " : "[FAIL] ";
      text += v.suite + ": " + v.id;
      if (!v.pass) text += "  (" + v.witness + ")";
      text += "\n";
    }
    text += std::to_string(vs.size() - failed) + "/" + std::to_string(vs.size()) +
            " cases passed\n";
  }
  emit(out_path, text);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shifted semisymmetric interpolation polynomials"};
  app.require_subcommand(1);

  std::string lambda_str, mu_str, basis = "monomial", rmode = "sym", format = "json";
  std::string out_path, report = "text", rel, a_str, b_str, golden, nlist = "3,4,5,6";
  std::string t_str = "0", alpha_str;
  int n = 0, m = 0, deg = 3, jobs = 1, dmax = -1, nmax = -1;
  bool shifted = false;

  auto* compute = app.add_subcommand("compute", "construct polynomials");
  compute->require_subcommand(1);
  auto* compute_R = compute->add_subcommand("R", "interpolation polynomial");
  auto* compute_e = compute->add_subcommand("e", "elementary invariant");
  for (auto* c : {compute_R, compute_e}) {
    c->add_option("--n", n, "variable count")->required();
    c->add_option("--r", rmode, "parameter mode: sym or p/q");
    c->add_option("--format", format, "json or text");
    c->add_option("--out", out_path, "output file");
  }
  compute_R->add_option("--lambda", lambda_str, "partition, comma separated")->required();
  compute_R->add_option("--mu", mu_str, "evaluate at the node of this partition");
  compute_R->add_option("--basis", basis, "monomial, elementary or json");
  compute_e->add_option("--m", m, "degree index")->required();
  compute_e->add_flag("--shifted", shifted, "shifted column polynomial");

  auto* apply_cmd = app.add_subcommand("apply", "act by a difference operator");
  std::string op_str = "X";
  apply_cmd->add_option("--op", op_str, "X or Y")->required();
  apply_cmd->add_option("--t", t_str, "spectral parameter, rational");
  apply_cmd->add_option("--n", n, "variable count")->required();
  apply_cmd->add_option("--lambda", lambda_str, "partition")->required();
  apply_cmd->add_option("--r", rmode, "parameter mode: sym or p/q");
  apply_cmd->add_option("--format", format, "json or text");
  apply_cmd->add_option("--out", out_path, "output file");

  auto* order_cmd = app.add_subcommand("order", "order and monoid predicates");
  order_cmd->add_option("--rel", rel,
                        "subseteq|sqsubseteq|dominance|dominance-hom|prec|prec-hom|"
                        "psi0|psi1|phiplus")
      ->required();
  order_cmd->add_option("--a", a_str, "first vector")->required();
  order_cmd->add_option("--b", b_str, "second vector");
  order_cmd->add_option("--out", out_path, "output file");

  auto* table_cmd = app.add_subcommand("table", "degree-three relation table");
  table_cmd->add_option("--deg", deg, "table degree (3)");
  table_cmd->add_option("--golden", golden, "golden file to diff against");
  table_cmd->add_option("--n-list", nlist, "variable counts to check");
  table_cmd->add_option("--out", out_path, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  std::string suite;
  verify_cmd->add_option("suite", suite, "suite name or all")->required();
  verify_cmd->add_option("--n", nmax, "largest variable count");
  verify_cmd->add_option("--dmax", dmax, "largest degree");
  verify_cmd->add_option("--alpha", alpha_str, "alpha samples, comma separated");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--report", report, "text or json");
  verify_cmd->add_option("--golden", golden, "golden table file");
  verify_cmd->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute_R->parsed())
      return run_compute("R", n, parse_int_list(lambda_str),
                         mu_str.empty() ? IntVec{} : parse_int_list(mu_str), m, shifted, basis,
                         rmode, format, out_path);
    if (compute_e->parsed())
      return run_compute("e", n, {}, {}, m, shifted, basis, rmode, format, out_path);
    if (apply_cmd->parsed()) {
      if (op_str != "X" && op_str != "Y") throw CLI::ValidationError("--op expects X or Y");
      return run_apply(op_str == "X" ? OpKind::X : OpKind::Y, n, parse_int_list(lambda_str),
                       parse_rational(t_str), rmode, format, out_path);
    }
    if (order_cmd->parsed())
      return run_order(rel, parse_int_list(a_str),
                       b_str.empty() ? IntVec{} : parse_int_list(b_str), out_path);
    if (table_cmd->parsed()) {
      if (golden.empty() && std::ifstream("data/degree3_table.json").good())
        golden = "data/degree3_table.json";
      return run_table(deg, golden, nlist, out_path);
    }
    if (verify_cmd->parsed()) {
      SweepOptions opt;
      opt.n_override = nmax;
      opt.d_override = dmax;
      opt.jobs = jobs;
      if (!alpha_str.empty()) opt.alphas = parse_rational_list(alpha_str);
      if (!golden.empty())
        opt.golden_table_path = golden;
      else if (std::ifstream("data/degree3_table.json").good())
        opt.golden_table_path = "data/degree3_table.json";
      return run_verify(suite, opt, report, out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
