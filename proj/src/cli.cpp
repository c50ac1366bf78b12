#include "kmat/cli.hpp"

#include <algorithm>
#include <ctime>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kmat/emit.hpp"
#include "kmat/errors.hpp"

namespace kmat {

std::vector<ComplexTheta> default_theta_samples() {
  std::vector<ComplexTheta> out;
  for (int k = 1; k <= 10; ++k) out.push_back(ComplexTheta::real(rat(k, 10)));
  return out;
}

namespace {

ComplexTheta parse_theta(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return ComplexTheta::real(parse_rat(s));
  return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

// (theta, phi) samples for the coproduct / coideal checks.
std::vector<std::pair<ComplexTheta, ComplexTheta>> coideal_samples() {
  auto t = [](long n, long d) { return ComplexTheta::real(rat(n, d)); };
  return {{t(0, 1), t(0, 1)},
          {t(7, 10), t(-1, 5)},
          {t(1, 2), t(13, 10)},
          {t(1, 1), t(2, 1)},
          {t(3, 10), t(3, 10)}};
}

std::vector<ComplexTheta> serre_samples() {
  auto t = [](long n, long d) { return ComplexTheta::real(rat(n, d)); };
  return {t(0, 1), t(37, 100), t(7, 10), t(-1, 2), t(6, 5)};
}

void header(std::ostream& out, const std::string& verb, bool no_header,
            const std::string& format) {
  if (no_header || format != "text") return;
  std::time_t t = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  out << "# kmat " << verb << " " << buf << "\n";
}

int run_pairs(int max_rank, const std::string& format, bool no_header,
              std::ostream& out) {
  auto cat = catalog(max_rank);
  if (format == "json") {
    Json j = Json::array();
    for (const auto& p : cat) j.push_back(pair_json(p));
    out << Json{{"max_rank", max_rank}, {"pairs", j}}.dump(2) << "\n";
    return 0;
  }
  header(out, "pairs", no_header, format);
  out << std::left << std::setw(22) << "name" << std::setw(8) << "g"
      << std::setw(18) << "h" << std::setw(7) << "dim_k" << std::setw(8)
      << "c_A" << "c_i\n";
  for (const auto& p : cat) {
    std::ostringstream h;
    for (size_t i = 0; i < p.h_factors.size(); ++i)
      h << (i ? "+" : "") << p.h_factors[i].name();
    if (p.has_abelian) h << (p.h_factors.empty() ? "u1" : "+u1");
    std::ostringstream cs;
    auto c = scaling_factors(p);
    for (size_t i = 0; i < c.size(); ++i)
      cs << (i ? "," : "") << rat_pretty(c[i]);
    out << std::left << std::setw(22) << p.name << std::setw(8)
        << p.g_classical.str() << std::setw(18) << h.str() << std::setw(7)
        << p.dim_k << std::setw(8) << rat_pretty(p.c_adjoint()) << cs.str()
        << "\n";
  }
  return 0;
}

int run_kmatrix(const std::string& pair_s, const std::string& rep_s,
                const std::string& format, bool no_header, std::ostream& out) {
  SymmetricPair pair = parse_pair(pair_s);
  Irrep rep = rep_by_name(pair, rep_s);
  SpectralDecomposition spectral = k_matrix_spectral(pair, rep);
  if (format == "json") {
    out << spectral_json(spectral).dump(2) << "\n";
    return 0;
  }
  if (format == "dot") {
    out << spectral_dot(spectral);
    return 0;
  }
  header(out, "kmatrix", no_header, format);
  const auto& g = spectral.graph;
  out << "pair " << pair.name << ", rep " << labels_str(rep.highest_weight)
      << " (dim " << rep.dim.get_str() << "), c_A = " << rat_pretty(g.c_adj)
      << "\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    out << "  node " << i << ": (";
    for (size_t f = 0; f < n.factors.size(); ++f)
      out << (f ? "," : "") << labels_str(n.factors[f].highest_weight);
    out << ")";
    if (n.charge != 0 || g.pair.has_abelian)
      out << " q=" << rat_pretty(n.charge);
    out << "  dim " << n.dim() << "  C(W)=" << rat_pretty(n.casimir)
        << "  tau=" << spectral.tau[i].str();
    if (static_cast<int>(i) == g.base_node) out << "  [base]";
    out << "\n";
  }
  for (const auto& e : g.edges)
    out << "  edge " << e.src << " -> " << e.dst
        << "  delta=" << rat_pretty(e.delta) << "\n";
  out << "overall scalar factor undetermined (ratios relative to base)\n";
  return 0;
}

int run_spectrum(const std::string& series_s, long N, long M, long a,
                 const std::string& limit_s, const std::string& format,
                 bool no_header, std::ostream& out) {
  Series series;
  if (series_s == "SU") series = Series::SU;
  else if (series_s == "SO") series = Series::SO;
  else if (series_s == "Sp" || series_s == "SP") series = Series::SP;
  else throw invalid_input("unknown series (SU, SO, Sp): " + series_s);

  if (!limit_s.empty()) {
    std::vector<long> Ns;
    std::istringstream is(limit_s);
    std::string tok;
    while (std::getline(is, tok, ',')) Ns.push_back(std::stol(tok));
    auto rows = casimir_limit_check(series, M, a, Ns);
    Rat lim = casimir_ratio_limit(series, M, a);
    if (format == "json") {
      Json jr = Json::array();
      for (const auto& r : rows)
        jr.push_back(Json{{"N", r.N},
                          {"mass_ratio", r.mass_ratio},
                          {"deviation", r.deviation}});
      out << Json{{"series", series_s},
                  {"M", M},
                  {"a", a},
                  {"casimir_ratio", rat_str(lim)},
                  {"samples", jr}}
                 .dump(2)
          << "\n";
      return 0;
    }
    header(out, "spectrum", no_header, format);
    out << "limit ratio a(p-a)/(p-1) = " << rat_pretty(lim) << "\n";
    out << std::left << std::setw(10) << "N" << std::setw(22) << "m_a/m_1"
        << "deviation\n";
    out.precision(12);
    for (const auto& r : rows)
      out << std::left << std::setw(10) << r.N << std::setw(22) << r.mass_ratio
          << r.deviation << "\n";
    return 0;
  }

  auto fam = GrassmannianFamily::make(series, N, M);
  MassTable table = mass_spectrum(fam);
  if (format == "json") {
    out << mass_table_json(fam, table).dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    out << mass_table_csv(table);
    return 0;
  }
  header(out, "spectrum", no_header, format);
  out << fam.str() << ": p=" << table.p << " h=" << table.h << "\n";
  if (!table.note.empty()) out << table.note << "\n";
  out.precision(12);
  for (const auto& m : table.masses)
    out << "  m_" << m.a << "/m = sin(" << m.a << "pi/" << m.h << ")sin("
        << (m.p - m.a) << "pi/" << m.h << ") = " << m.ratio << "\n";
  return 0;
}

int run_oracle(const std::string& pair_s,
               const std::vector<std::string>& theta_s,
               const std::string& format, bool no_header, std::ostream& out) {
  SymmetricPair pair = parse_pair(pair_s);
  std::vector<ComplexTheta> thetas;
  for (const auto& s : theta_s) thetas.push_back(parse_theta(s));
  if (thetas.empty()) thetas = default_theta_samples();
  OracleComparison cmp = compare_intertwiner_with_symbolic(pair, thetas);
  if (format == "json") {
    Json residuals{{"max_rel_err", cmp.max_rel_err}};
    if (!cmp.message.empty()) residuals["detail"] = cmp.message;
    out << oracle_report_json("intertwiner-vs-symbolic", pair.name, thetas,
                              residuals, cmp.pass)
               .dump(2)
        << "\n";
  } else {
    header(out, "oracle", no_header, format);
    out << "pair " << pair.name << ": intertwiner eigenvalue ratios vs "
        << "symbolic brackets at " << thetas.size() << " rapidities\n";
    out << "max relative error " << cmp.max_rel_err << " -> "
        << (cmp.pass ? "PASS" : "FAIL") << "\n";
    if (!cmp.message.empty()) out << cmp.message << "\n";
  }
  return cmp.pass ? 0 : 1;
}

struct CheckOutcome {
  bool pass = true;
  std::ostringstream text;
};

void sweep_catalog_reps(
    int max_rank,
    const std::function<void(const SymmetricPair&, const Irrep&)>& fn) {
  for (const auto& pair : catalog(max_rank)) {
    for (int i = 1; i <= pair.g.rank; ++i) {
      Labels w(static_cast<size_t>(pair.g.rank), 0);
      w[i - 1] = 1;
      fn(pair, Irrep::make(pair.g, w));
    }
  }
}

int run_check(const std::string& what, const std::string& pair_s,
              const std::string& rep_s, const std::string& algebra_s,
              const std::string& control_s, bool all, int max_rank,
              const std::string& format, bool no_header, std::ostream& out,
              std::ostream& err) {
  CheckOutcome res;
  Json jlines = Json::array();

  auto emit_line = [&](const std::string& subject, bool ok,
                       const std::string& detail) {
    if (!ok) res.pass = false;
    res.text << std::left << std::setw(34) << subject
             << (ok ? "pass" : "FAIL") << (detail.empty() ? "" : "  " + detail)
             << "\n";
    jlines.push_back(Json{{"subject", subject}, {"pass", ok}, {"detail", detail}});
  };

  if (what == "sst") {
    if (!control_s.empty()) {
      for (const auto& ctrl : negative_controls())
        if (ctrl.name == "control:" + control_s || ctrl.name == control_s) {
          Rat s = sst_check(ctrl);
          emit_line(ctrl.name, s == rat(1, 2),
                    "sum = " + rat_pretty(s) + " (claimed as symmetric)");
        }
      if (jlines.empty()) throw invalid_input("unknown control: " + control_s);
    } else if (all) {
      for (const auto& pair : catalog(max_rank)) {
        Rat s = sst_check(pair);
        emit_line(pair.name, s == rat(1, 2), "sum = " + rat_pretty(s));
      }
    } else {
      SymmetricPair pair = parse_pair(pair_s);
      Rat s = sst_check(pair);
      emit_line(pair.name, s == rat(1, 2), "sum = " + rat_pretty(s));
    }
  } else if (what == "sparsity") {
    auto check_one = [&](const MatrixRealization& r) {
      auto rep = check_structure_sparsity(r);
      std::ostringstream d;
      d << "max violating |f| = " << rep.max_violation;
      emit_line(r.label, rep.pass, d.str());
    };
    if (!control_s.empty()) {
      check_one(non_symmetric_control());
    } else if (all) {
      for (const auto& pair : catalog(std::min(max_rank, 4)))
        if (pair.g_classical.n <= 9) check_one(build_realization(pair));
    } else {
      check_one(build_realization(parse_pair(pair_s)));
    }
  } else if (what == "serre") {
    std::vector<ClassicalName> algebras;
    if (!algebra_s.empty()) algebras.push_back(ClassicalName::parse(algebra_s));
    else algebras = {{Series::SU, 3}, {Series::SO, 5}};
    for (const auto& g : algebras) {
      MatrixRealization r = build_algebra_realization(g);
      double worst = 0;
      for (const auto& th : serre_samples()) {
        auto rep = check_serre(r, th.value());
        worst = std::max(worst, std::max(rep.lhs_norm, rep.rhs_norm));
      }
      std::ostringstream d;
      d << "max |lhs|,|rhs| = " << worst;
      emit_line(g.str(), worst < 1e-10, d.str());
    }
  } else if (what == "coproduct") {
    MatrixRealization r =
        algebra_s.empty() ? build_realization(parse_pair(pair_s))
                          : build_algebra_realization(ClassicalName::parse(algebra_s));
    double worst = 0;
    for (const auto& [th, ph] : coideal_samples())
      worst = std::max(worst, check_coproduct_hom(r, th.value(), ph.value()));
    std::ostringstream d;
    d << "max residual = " << worst;
    emit_line(r.label, worst < 1e-10, d.str());
  } else if (what == "coideal") {
    MatrixRealization r = !control_s.empty() ? non_symmetric_control()
                                             : build_realization(parse_pair(pair_s));
    double worst_id = 0, worst_sub = 0;
    for (const auto& [th, ph] : coideal_samples()) {
      auto rep = check_coideal(r, th.value(), ph.value());
      worst_id = std::max(worst_id, rep.identity_residual);
      worst_sub = std::max(worst_sub, rep.subspace_residual);
    }
    std::ostringstream d;
    bool ok;
    if (!control_s.empty()) {
      ok = worst_sub > 1e-3;
      d << "coideal violated as expected (subspace residual " << worst_sub
        << ")";
    } else {
      ok = worst_id < 1e-10 && worst_sub < 1e-10;
      d << "identity = " << worst_id << ", subspace = " << worst_sub;
    }
    emit_line(r.label, ok, d.str());
  } else if (what == "crossing") {
    auto check_one = [&](const SymmetricPair& pair, const Irrep& rep) {
      try {
        CrossingReport cr = crossing_unitarity_check(pair, rep);
        if (!cr.applicable) return;
        emit_line(pair.name + " " + labels_str(rep.highest_weight), cr.pass,
                  cr.message);
      } catch (const multiplicity_error&) {
      } catch (const conjugating_k_error&) {
      }
    };
    if (all) {
      sweep_catalog_reps(std::min(max_rank, 4), check_one);
    } else {
      SymmetricPair pair = parse_pair(pair_s);
      Irrep rep = rep_by_name(pair, rep_s);
      CrossingReport cr = crossing_unitarity_check(pair, rep);
      if (!cr.applicable) {
        out << crossing_json(pair, rep, cr).dump(2) << "\n";
        return 0;
      }
      emit_line(pair.name, cr.pass, cr.message);
    }
  } else if (what == "unitarity") {
    int skipped = 0;
    sweep_catalog_reps(std::min(max_rank, 4),
                       [&](const SymmetricPair& pair, const Irrep& rep) {
                         try {
                           auto spectral = k_matrix_spectral(pair, rep);
                           for (const auto& t : spectral.tau) {
                             Bracket prod = t * t.at_minus_theta();
                             if (!prod.is_one())
                               emit_line(pair.name + " " +
                                             labels_str(rep.highest_weight),
                                         false, "tau(theta)*tau(-theta) != 1");
                           }
                         } catch (const multiplicity_error&) {
                           ++skipped;
                         } catch (const conjugating_k_error&) {
                           ++skipped;
                         }
                       });
    std::ostringstream d;
    d << skipped << " rejected cases skipped";
    emit_line("unitarity sweep (rank <= " + std::to_string(std::min(max_rank, 4)) + ")",
              true, d.str());
  } else {
    throw invalid_input(
        "unknown check (sst, sparsity, serre, coproduct, coideal, crossing, "
        "unitarity): " + what);
  }

  if (format == "json") {
    out << Json{{"check", what}, {"pass", res.pass}, {"results", jlines}}.dump(2)
        << "\n";
  } else {
    header(out, "check " + what, no_header, format);
    out << res.text.str();
    out << (res.pass ? "all pass" : "CHECK FAILED") << "\n";
  }
  (void)err;
  return res.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"spectral decomposition of boundary reflection matrices for "
               "classical symmetric pairs"};
  app.name("kmat");
  app.footer(
      "Pair grammar: CLASS:group[|hspec]\n"
      "  AI:su<n>            su(n)/so(n), n >= 3\n"
      "  AII:su<2N>          su(2N)/sp(2N), N >= 2\n"
      "  AIII:su<n>|m<m>     su(n)/s(u(m) x u(n-m)), 1 <= m <= n/2\n"
      "  BDI:so<n>|so<m>xso<n-m>  (or |m<m>), n >= 5, 1 <= m <= n/2\n"
      "  DIII:so<2N>         so(2N)/u(N), N >= 3\n"
      "  CI:sp<2N>           sp(2N)/u(N), N >= 2\n"
      "  CII:sp<2N>|m<m>     sp(2N)/sp(2m) x sp(2N-2m), 1 <= m <= N/2\n"
      "Representations: vector|spinor|spinor+|spinor-|defining|adjoint|"
      "fund<i>|[a,b,...]\n"
      "Rationals print as p/q; rapidities are re[,im_pi] with theta = re + "
      "i*pi*im_pi.\n"
      "Exit codes: 0 pass, 1 check failure, 2 usage/unsupported input.");

  std::string format = "text", pair_s, rep_s = "vector", algebra_s, control_s,
              series_s, what, limit_s;
  std::vector<std::string> theta_s;
  bool no_header = false, all = false;
  int max_rank = 8;
  long N = 0, M = 0, a = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text|json|dot|csv");
    cmd->add_flag("--no-header", no_header, "suppress the text header line");
  };

  auto* pairs_cmd = app.add_subcommand("pairs", "list the symmetric-pair catalog");
  pairs_cmd->add_option("--max-rank", max_rank, "catalog rank bound (<= 8)");
  add_common(pairs_cmd);

  auto* kmatrix_cmd =
      app.add_subcommand("kmatrix", "boundary graph and eigenvalue ratios");
  kmatrix_cmd->add_option("--pair", pair_s, "pair name, e.g. BDI:so5|so1xso4")
      ->required();
  kmatrix_cmd->add_option("--rep", rep_s,
                          "vector|defining|spinor|adjoint|fund<i>|[labels]");
  add_common(kmatrix_cmd);

  auto* check_cmd = app.add_subcommand("check", "run a verification");
  check_cmd->add_option("what", what,
                        "sst|sparsity|serre|coproduct|coideal|crossing|unitarity")
      ->required();
  check_cmd->add_option("--pair", pair_s, "pair name");
  check_cmd->add_option("--rep", rep_s, "representation name");
  check_cmd->add_option("--algebra", algebra_s, "bare algebra, e.g. su3");
  check_cmd->add_option("--control", control_s,
                        "negative control (so7-g2, so8-su3adj, su3-su2block)");
  check_cmd->add_flag("--all", all, "sweep the catalog");
  check_cmd->add_option("--max-rank", max_rank, "sweep rank bound");
  add_common(check_cmd);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "numeric intertwiner vs symbolic ratios on the defining rep");
  oracle_cmd->add_option("--pair", pair_s, "pair name")->required();
  oracle_cmd->add_option("--theta", theta_s,
                         "rapidity sample 're[,im_pi]' (repeatable)");
  add_common(oracle_cmd);

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "Grassmannian boundary mass spectra");
  spectrum_cmd->add_option("--series", series_s, "SU|SO|Sp")->required();
  spectrum_cmd->add_option("--N", N, "rank parameter N");
  spectrum_cmd->add_option("--M", M, "rank parameter M")->required();
  spectrum_cmd->add_option("--a", a, "mass label for --limit");
  spectrum_cmd->add_option("--limit", limit_s,
                           "comma list of N values for the large-N check");
  add_common(spectrum_cmd);

  std::vector<std::string> argv_s = args;
  std::vector<char*> argv;
  std::string prog = "kmat";
  argv.push_back(prog.data());
  for (auto& s : argv_s) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pairs_cmd) return run_pairs(max_rank, format, no_header, out);
    if (*kmatrix_cmd)
      return run_kmatrix(pair_s, rep_s, format, no_header, out);
    if (*check_cmd)
      return run_check(what, pair_s, rep_s, algebra_s, control_s, all,
                       max_rank, format, no_header, out, err);
    if (*oracle_cmd)
      return run_oracle(pair_s, theta_s, format, no_header, out);
    if (*spectrum_cmd)
      return run_spectrum(series_s, N, M, a, limit_s, format, no_header, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const multiplicity_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const conjugating_k_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const formula_inapplicable& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const inconsistent_cycle& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const disconnected_graph& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const degenerate_solution& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kmat
