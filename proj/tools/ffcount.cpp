// ffcount: exact point counts and zeta data over F_q(T).

#include "ffcount/counting.hpp"
#include "ffcount/forms.hpp"
#include "ffcount/table.hpp"
#include "ffcount/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ffc;

namespace {

struct Common {
  std::string format = "csv";
  std::string output;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;

  EnumerationOptions opt() const { return {budget, workers}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "Write to this file instead of stdout");
  cmd->add_option("--workers", c.workers, "Worker threads (results do not depend on it)")->check(CLI::Range(1U, 256U));
  cmd->add_option("--budget", c.budget, "Maximum candidate tuples for brute-force enumeration");
}

void emit(const Table& t, const Common& c) {
  if (c.output.empty()) {
    t.write(std::cout, c.format);
    return;
  }
  std::ofstream os(c.output);
  if (!os) throw std::runtime_error("cannot open " + c.output);
  t.write(os, c.format);
}

std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fixed(const HighPrecision& v) {
  std::ostringstream os;
  os << std::setprecision(20) << v;
  return os.str();
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

CurveDescriptor load_descriptor(const std::string& path, std::int64_t q, int g, const std::string& L) {
  if (!path.empty()) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read descriptor file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_descriptor(ss.str());
  }
  if (L.empty()) {
    if (g != 0) throw std::invalid_argument("--L is required when --g > 0");
    return CurveDescriptor::rational(q);
  }
  std::vector<BigInt> coeffs;
  std::stringstream ss(L);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.emplace_back(tok);
  return CurveDescriptor::make(q, g, std::move(coeffs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact point counting over rational function fields F_q(T)"};
  app.require_subcommand(1);

  // zeta
  Common zc;
  std::int64_t zq = 2;
  int zg = 0, lmax = 10, euler = -1;
  std::string zL, zdesc;
  std::vector<std::int64_t> zs;
  std::int64_t zn = 2;
  bool schanuel = false, hw = false;
  auto* zeta = app.add_subcommand("zeta", "a/b sequences, zeta values, Schanuel constants");
  zeta->add_option("--q", zq, "Constant field size");
  zeta->add_option("--g", zg, "Genus");
  zeta->add_option("--L", zL, "L-polynomial coefficients, comma separated (c_0..c_2g)");
  zeta->add_option("--descriptor", zdesc, "Descriptor file (overrides --q/--g/--L)");
  zeta->add_option("--s", zs, "Evaluate zeta(s) at these integers >= 2");
  zeta->add_flag("--schanuel", schanuel, "Print the Schanuel constant S(n)");
  zeta->add_option("--n", zn, "n for --schanuel");
  zeta->add_option("--lmax", lmax, "Print a(l), b(l) for l <= lmax");
  zeta->add_option("--euler", euler, "Euler product over places of degree <= D (rational field, needs --s)");
  zeta->add_flag("--hasse-weil", hw, "Run the Hasse-Weil interval check");
  add_common(zeta, zc);

  // count
  Common cc;
  std::int64_t cq = 2;
  int cn = 2;
  std::string crange = "0", engine = "both", cdesc, cL;
  int cg = 0;
  auto* count = app.add_subcommand("count", "N_k(n,1,m) by brute force and/or Moebius inversion");
  count->add_option("--q", cq)->required();
  count->add_option("--n", cn)->required();
  count->add_option("--m", crange, "m or a range a:b")->required();
  count->add_option("--engine", engine)->check(CLI::IsMember({"brute", "moebius", "both"}));
  count->add_option("--g", cg, "Genus of the curve (Moebius engine only)");
  count->add_option("--L", cL, "L-polynomial of the curve (Moebius engine only)");
  count->add_option("--descriptor", cdesc, "Descriptor file (Moebius engine only)");
  add_common(count, cc);

  // countd
  Common dc;
  std::int64_t dq = 3;
  int dd = 2;
  std::string drange = "0";
  auto* countd = app.add_subcommand("countd", "N_k(2,d,m) by minimal-polynomial enumeration");
  countd->add_option("--q", dq)->required();
  countd->add_option("--d", dd)->required();
  countd->add_option("--m", drange, "m or a range a:b")->required();
  add_common(countd, dc);

  // assemble
  Common ac;
  std::int64_t aq = 3;
  int an = 2;
  std::string arange = "1";
  int a_sum_deg = 0;
  bool arows = false;
  auto* assemble = app.add_subcommand("assemble", "N_k(n,2,m) assembled over quadratic fields");
  assemble->add_option("--q", aq)->required();
  assemble->add_option("--n", an)->required();
  assemble->add_option("--m", arange, "m or a range a:b")->required();
  assemble->add_option("--main-term-degD", a_sum_deg, "Also report S partial sum over deg D <= this, times q^{nm}");
  assemble->add_flag("--fields", arows, "One row per contributing field");
  add_common(assemble, ac);

  // fields
  Common fc;
  std::int64_t fq = 3;
  int fdeg = 2;
  std::string emit_dir;
  auto* fields = app.add_subcommand("fields", "Quadratic fields k(sqrt(uD)) with deg D <= degD-max");
  fields->add_option("--q", fq)->required();
  fields->add_option("--degD-max", fdeg)->required();
  fields->add_option("--emit-descriptors", emit_dir, "Write one descriptor file per field into this directory");
  add_common(fields, fc);

  // forms
  Common oc;
  std::int64_t oq = 3;
  int on = 2, od = 2;
  std::string orange = "0";
  bool obrute = false;
  auto* forms = app.add_subcommand("forms", "Decomposable-form counts from point counts");
  forms->add_option("--q", oq)->required();
  forms->add_option("--n", on);
  forms->add_option("--d", od);
  forms->add_option("--m", orange, "m or a range a:b")->required();
  forms->add_flag("--brute", obrute, "Also run the binary quadratic form oracle (n = d = 2)");
  add_common(forms, oc);

  // sum
  Common sc;
  std::int64_t sq = 3;
  int sn = 6, sdeg = 4;
  auto* sum = app.add_subcommand("sum", "Partial sums of S_k(n,2) over quadratic fields");
  sum->add_option("--q", sq)->required();
  sum->add_option("--n", sn)->required();
  sum->add_option("--degD-max", sdeg)->required();
  add_common(sum, sc);

  // report
  Common rc;
  std::int64_t rq = 3;
  int rm = 4;
  auto* report = app.add_subcommand("report", "Report-only ratios against the asymptotic main terms");
  report->add_option("--q", rq)->required();
  report->add_option("--m-max", rm);
  add_common(report, rc);

  // verify
  Common vc;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run an invariant battery; exit 0 iff every check passes");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  add_common(verify, vc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*zeta) {
      const CurveDescriptor desc = load_descriptor(zdesc, zq, zg, zL);
      Table t{{"quantity", "value"}, {}};
      t.add({"q", std::to_string(desc.q())});
      t.add({"g", std::to_string(desc.genus())});
      t.add({"J", desc.J().str()});
      if (zs.empty() && !schanuel && euler < 0 && !hw) {
        const auto a = a_seq(desc, lmax);
        const auto b = b_seq(desc, lmax);
        for (int l = 0; l <= lmax; ++l) t.add({"a(" + std::to_string(l) + ")", a[l].str()});
        for (int l = 0; l <= lmax; ++l) t.add({"b(" + std::to_string(l) + ")", b[l].str()});
      }
      for (auto s : zs) t.add({"zeta(" + std::to_string(s) + ")", to_string(zeta_value(desc, s))});
      if (schanuel) t.add({"schanuel(" + std::to_string(zn) + ")", to_string(schanuel_constant(desc, zn))});
      if (euler >= 0) {
        if (zs.empty()) throw std::invalid_argument("--euler needs --s");
        for (auto s : zs) {
          const auto e = euler_product_truncation(desc.q(), s, euler);
          const std::string tag = "(s=" + std::to_string(s) + ",D=" + std::to_string(euler) + ")";
          if (e.exact) t.add({"euler_exact" + tag, to_string(*e.exact)});
          t.add({"euler_decimal" + tag, fixed(e.value)});
          t.add({"closed_form_minus_product_decimal" + tag, fixed(e.difference)});
          t.add({"tail_certificate" + tag, to_string(e.tail_bound)});
          t.add({"tail_certificate_decimal" + tag, fixed(HighPrecision(e.tail_bound))});
          t.add({"within_certificate" + tag, e.within_certificate ? "true" : "false"});
        }
      }
      if (hw) {
        const auto rep = hasse_weil_check(desc);
        t.add({"hasse_weil", rep.passed() ? "pass" : "fail"});
        for (const auto& f : rep.failures) t.add({"hasse_weil_failure", f});
      }
      emit(t, zc);
      return 0;
    }

    if (*count) {
      const auto [m0, m1] = parse_range(crange);
      const bool custom = !cdesc.empty() || !cL.empty() || cg != 0;
      if (custom && engine != "moebius") throw std::invalid_argument("curves other than F_q(T) need --engine moebius");
      const CurveDescriptor desc = load_descriptor(cdesc, cq, cg, cL);
      const ClassModel model = ClassModel::from_descriptor(desc);
      Table t{{"q", "g", "J", "n", "d", "m", "N", "N_brute", "match", "main_term_num", "main_term_den", "err_b_sum",
               "err_zeta_tail", "err_window"},
              {}};
      bool all_match = true;
      for (int m = m0; m <= m1; ++m) {
        std::string N, Nb, match = "", mnum, mden, e1, e2, e3;
        if (engine != "brute") {
          const auto r = moebius_count(model, cn, m);
          N = r.N.str();
          mnum = numerator_of(r.main_term).str();
          mden = denominator_of(r.main_term).str();
          const auto parts = r.error_parts();
          e1 = to_string(parts[0]);
          e2 = to_string(parts[1]);
          e3 = to_string(parts[2]);
        }
        if (engine != "moebius") {
          Nb = brute_count_rational(desc.q(), cn, m, cc.opt()).str();
          if (engine == "brute") N = Nb;
        }
        if (engine == "both") {
          match = N == Nb ? "true" : "false";
          all_match = all_match && N == Nb;
        }
        t.add({std::to_string(desc.q()), std::to_string(desc.genus()), desc.J().str(), std::to_string(cn), "1",
               std::to_string(m), N, Nb, match, mnum, mden, e1, e2, e3});
      }
      emit(t, cc);
      return all_match ? 0 : 3;
    }

    if (*countd) {
      const auto [m0, m1] = parse_range(drange);
      Table t{{"q", "n", "d", "m", "N"}, {}};
      for (int m = m0; m <= m1; ++m)
        t.add({std::to_string(dq), "2", std::to_string(dd), std::to_string(m),
               count_degree_d_P1(dq, dd, m, dc.opt()).str()});
      emit(t, dc);
      return 0;
    }

    if (*assemble) {
      const auto [m0, m1] = parse_range(arange);
      if (arows) {
        Table t{{"q", "n", "m", "D", "twist", "genus", "J", "N_K", "correction", "contribution"}, {}};
        for (int m = m0; m <= m1; ++m) {
          const auto res = assemble_N_quadratic(aq, an, m, ac.workers);
          for (const auto& r : res.rows)
            t.add({std::to_string(aq), std::to_string(an), std::to_string(m), r.D, r.twisted ? "eps" : "1",
                   std::to_string(r.genus), r.J.str(), r.N_K.str(), r.correction.str(), r.contribution.str()});
        }
        emit(t, ac);
        return 0;
      }
      Table t{{"q", "n", "d", "m", "N", "fields", "main_term_partial", "main_term_degD", "ratio_decimal"}, {}};
      std::optional<SchanuelSumReport> S;
      if (a_sum_deg > 0) S = schanuel_sum_partial(aq, an, a_sum_deg, ac.workers);
      for (int m = m0; m <= m1; ++m) {
        const auto res = assemble_N_quadratic(aq, an, m, ac.workers);
        std::string mt, ratio, deg;
        if (S) {
          const Rational main = S->partial_sum * Rational(ipow(aq, static_cast<std::int64_t>(an) * m));
          mt = to_string(main);
          deg = std::to_string(a_sum_deg);
          ratio = fixed(HighPrecision(Rational(res.N) / main));
        }
        t.add({std::to_string(aq), std::to_string(an), "2", std::to_string(m), res.N.str(),
               std::to_string(res.rows.size()), mt, deg, ratio});
      }
      emit(t, ac);
      return 0;
    }

    if (*fields) {
      const PolyRing R(FiniteField::make(static_cast<unsigned>(fq)));
      const auto list = enumerate_quadratic_fields(R, fdeg, fc.workers);
      Table t{{"D", "u", "deg_D", "genus", "N_1", "L_coeffs", "J", "delta2_upper", "hasse_weil"}, {}};
      std::size_t idx = 0;
      if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
      for (const auto& K : list) {
        std::string L;
        for (std::size_t i = 0; i < K.descriptor.L().size(); ++i) L += (i ? " " : "") + K.descriptor.L()[i].str();
        t.add({R.format(K.D), R.field().format(K.u), std::to_string(K.D.degree()), std::to_string(K.genus),
               K.point_counts.at(0).str(), L, K.descriptor.J().str(), to_string(K.delta2_upper),
               hasse_weil_check(K.descriptor).passed() ? "pass" : "fail"});
        if (!emit_dir.empty()) {
          std::ofstream os(std::filesystem::path(emit_dir) / ("field_" + std::to_string(idx) + ".desc"));
          os << "# D = " << R.format(K.D) << ", u = " << R.field().format(K.u) << "\n" << format_descriptor(K.descriptor);
        }
        ++idx;
      }
      emit(t, fc);
      return 0;
    }

    if (*forms) {
      const auto [m0, m1] = parse_range(orange);
      const unsigned p = prime_power_decomposition(static_cast<unsigned>(oq)).first;
      if (od > 3) throw Refusal("point counts for d > 3 are not implemented");
      if (on != 2) throw Refusal("degree-d point counts are implemented for n = 2 only");
      Table t{{"q", "n", "d", "m", "N_components", "NF", "NF_integral", "NF_sep", "identity", "NF_brute", "match"}, {}};
      bool ok = true;
      for (int m = m0; m <= m1; ++m) {
        FormCountInput in{p, on, od, m, {}};
        std::string comps;
        for (int dp = od;; dp /= static_cast<int>(p)) {
          in.N[dp] = count_degree_d_P1(oq, dp, m, oc.opt());
          comps += (comps.empty() ? "" : " ") + ("N(" + std::to_string(dp) + ")=" + in.N[dp].str());
          if (dp % static_cast<int>(p) != 0) break;
        }
        const Rational nf = nf_from_n_rational(in);
        std::string brute, match;
        if (obrute) {
          if (od != 2) throw Refusal("the form oracle covers d = 2 only");
          const BigInt b = brute_force_forms(oq, m, oc.opt());
          brute = b.str();
          match = Rational(b) == nf ? "true" : "false";
          ok = ok && Rational(b) == nf;
        }
        ok = ok && is_integral(nf);
        t.add({std::to_string(oq), std::to_string(on), std::to_string(od), std::to_string(m), comps, to_string(nf),
               is_integral(nf) ? "true" : "false", to_string(Rational(nsep_from_n(in), BigInt(od))),
               nfsep_identity_check(in) ? "true" : "false", brute, match});
      }
      emit(t, oc);
      return ok ? 0 : 3;
    }

    if (*sum) {
      const auto rep = schanuel_sum_partial(sq, sn, sdeg, sc.workers);
      Table t{{"q", "n", "degD", "fields", "increment", "increment_decimal", "partial_sum", "ratio_to_previous_decimal"},
              {}};
      Rational running = 0;
      for (int k = 1; k <= sdeg; ++k) {
        const auto& inc = rep.increments[k - 1];
        running += inc;
        t.add({std::to_string(sq), std::to_string(sn), std::to_string(k), std::to_string(rep.field_counts[k - 1]),
               to_string(inc), fixed(HighPrecision(inc)), to_string(running),
               k >= 2 ? fixed(rep.increment_ratios[k - 2]) : ""});
      }
      emit(t, sc);
      return 0;
    }

    if (*report) {
      Table t{{"section", "key", "value"}, {}};
      for (const auto& line : corollary_bounds_report(rq, rm, rc.workers)) t.add({line.section, line.key, line.value});
      emit(t, rc);
      return 0;
    }

    if (*verify) {
      const auto checks = run_verify_suite(suite, vc.workers);
      Table t{{"suite", "check", "result", "detail"}, {}};
      bool ok = true;
      for (const auto& c : checks) {
        t.add({c.suite, c.name, c.passed ? "PASS" : "FAIL", c.detail});
        ok = ok && c.passed;
      }
      emit(t, vc);
      return ok ? 0 : 1;
    }
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const DescriptorParseError& e) {
    std::cerr << "descriptor error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
