#include "kmat/emit.hpp"

#include <sstream>

namespace kmat {

std::string rat_pretty(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

Json node_json(const HIrrepNode& node) {
  Json factors = Json::array();
  for (const auto& f : node.factors) {
    Json lab = Json::array();
    for (long x : f.highest_weight) lab.push_back(x);
    factors.push_back(lab);
  }
  return Json{{"factors", factors},
              {"charge", rat_str(node.charge)},
              {"dim", node.dim()},
              {"casimir", rat_str(node.casimir)}};
}

Json bracket_json(const Bracket& b) {
  Json factors = Json::array();
  for (const auto& [a, e] : b.factors())
    factors.push_back(Json{{"A", rat_str(a)}, {"exp", e}});
  return Json{{"factors", factors}, {"sign", b.sign()}};
}

std::string node_label(const HIrrepNode& node) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < node.factors.size(); ++i) {
    if (i) os << ",";
    os << labels_str(node.factors[i].highest_weight);
  }
  os << ")";
  if (node.charge != 0) os << " q=" << rat_pretty(node.charge);
  return os.str();
}

}  // namespace

Json irrep_json(const Irrep& rep) {
  Json labels = Json::array();
  for (long x : rep.highest_weight) labels.push_back(x);
  return Json{{"family", std::string(1, static_cast<char>(rep.algebra.family))},
              {"rank", rep.algebra.rank},
              {"labels", labels}};
}

Json pair_json(const SymmetricPair& pair) {
  Json h = Json::array();
  for (const auto& f : pair.h_factors) h.push_back(f.name());
  Json c = Json::array();
  for (const auto& ci : scaling_factors(pair)) c.push_back(rat_str(ci));
  Json kf = Json::array();
  for (const auto& f : pair.k_rep.factors) kf.push_back(irrep_json(f));
  Json k{{"factors", kf},
         {"charge", rat_str(pair.k_rep.charge)},
         {"conjugate_pair", pair.k_rep.conjugate_pair}};
  return Json{{"name", pair.name},
              {"class", pair_class_name(pair.cls)},
              {"g", pair.g_classical.str()},
              {"g_canonical", pair.g.name()},
              {"h_factors", h},
              {"has_abelian", pair.has_abelian},
              {"dim_g", group_dim(pair.g_classical)},
              {"dim_h", pair.dim_h()},
              {"dim_k", pair.dim_k},
              {"K", k},
              {"c_A", rat_str(pair.c_adjoint())},
              {"c", c},
              {"sst", rat_str(sst_check(pair))}};
}

Json spectral_json(const SpectralDecomposition& spec) {
  const BoundaryGraph& g = spec.graph;
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(node_json(n));
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(
        Json{{"src", e.src}, {"dst", e.dst}, {"delta", rat_str(e.delta)}});
  Json tau = Json::array();
  for (size_t i = 0; i < spec.tau.size(); ++i) {
    Json t = bracket_json(spec.tau[i]);
    t["node"] = i;
    Json ordered{{"node", i},
                 {"factors", t["factors"]},
                 {"sign", t["sign"]}};
    tau.push_back(ordered);
  }
  return Json{{"pair", g.pair.name},
              {"rep", irrep_json(g.rep)},
              {"c_A", rat_str(g.c_adj)},
              {"nodes", nodes},
              {"edges", edges},
              {"tau", tau},
              {"base_node", g.base_node},
              {"normalization", "ratios relative to base_node"}};
}

Json crossing_json(const SymmetricPair& pair, const Irrep& rep,
                   const CrossingReport& report) {
  Json j{{"check", "crossing-unitarity"},
         {"pair", pair.name},
         {"rep", labels_str(rep.highest_weight)},
         {"applicable", report.applicable}};
  if (report.applicable) {
    j["pass"] = report.pass;
    j["scalar_node"] = report.scalar_node;
    j["k_neighbors"] = report.k_neighbors;
    j["delta"] = rat_str(report.delta);
    j["pole_im_pi"] = rat_str(report.pole_im_pi);
  }
  j["message"] = report.message;
  return j;
}

Json theta_json(const ComplexTheta& theta) {
  return Json{{"re", rat_str(theta.re)}, {"im_pi", rat_str(theta.im_pi)}};
}

Json mass_table_json(const GrassmannianFamily& fam, const MassTable& table) {
  Json masses = Json::array();
  for (const auto& m : table.masses) {
    std::ostringstream exact;
    exact << "sin(" << m.a << "*pi/" << m.h << ")*sin(" << (m.p - m.a)
          << "*pi/" << m.h << ")";
    masses.push_back(Json{{"a", m.a},
                          {"p", m.p},
                          {"h", m.h},
                          {"ratio_exact", exact.str()},
                          {"ratio_float", m.ratio}});
  }
  Json j{{"series",
          fam.series == Series::SU ? "SU" : fam.series == Series::SO ? "SO" : "Sp"},
         {"N", fam.N},
         {"M", fam.M},
         {"coset", fam.str()},
         {"p", table.p},
         {"h", table.h},
         {"label_range", "a = 1 .. p-1 (all masses positive)"},
         {"masses", masses}};
  if (!table.note.empty()) j["note"] = table.note;
  return j;
}

Json oracle_report_json(const std::string& check, const std::string& subject,
                        const std::vector<ComplexTheta>& thetas,
                        const Json& residuals, bool pass) {
  Json th = Json::array();
  for (const auto& t : thetas) th.push_back(theta_json(t));
  return Json{{"check", check},
              {"pair", subject},
              {"theta", th},
              {"residuals", residuals},
              {"pass", pass}};
}

std::string spectral_dot(const SpectralDecomposition& spec) {
  const BoundaryGraph& g = spec.graph;
  std::ostringstream os;
  os << "digraph boundary {\n";
  os << "  label=\"" << g.pair.name << " / "
     << labels_str(g.rep.highest_weight) << " / c_A="
     << rat_pretty(g.c_adj) << "\";\n";
  os << "  node [shape=box];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << node_label(g.nodes[i]) << " / "
       << g.nodes[i].dim() << " / C=" << rat_pretty(g.nodes[i].casimir);
    if (static_cast<int>(i) == g.base_node) os << " (base)";
    os << "\\ntau=" << spec.tau[i].str() << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.src << " -> n" << e.dst << " [label=\""
       << rat_pretty(e.delta) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string mass_table_csv(const MassTable& table) {
  std::ostringstream os;
  os << "a,p,h,ratio_exact,ratio_float\n";
  os.precision(17);
  for (const auto& m : table.masses)
    os << m.a << "," << m.p << "," << m.h << ",sin(" << m.a << "*pi/" << m.h
       << ")*sin(" << (m.p - m.a) << "*pi/" << m.h << ")," << m.ratio << "\n";
  return os.str();
}

}  // namespace kmat
