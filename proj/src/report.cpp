#include "qws/report.hpp"

#include <cmath>
#include <fstream>

#include "qws/errors.hpp"

namespace qws {

namespace {

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

json matrix_rows(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fraction(long long num, long long den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

json reduced_report(const RegularGraph& g, const TypePartition& part,
                    const ReducedBasis& basis, const ReducedOperator& u0,
                    const ReducedOperator& u) {
  json j;
  j["family"] = family_name(g.family);
  j["n_vertices"] = g.n_vertices;
  j["degree"] = g.degree;
  j["n_types"] = part.n_types;
  j["single_neighbor_type"] = single_neighbor_type(part);
  json types = json::array();
  for (int x = 0; x < part.n_types; ++x) {
    json t;
    t["label"] = type_label(x);
    t["count"] = part.count(x);
    t["marked"] = part.is_marked_type(x);
    types.push_back(std::move(t));
  }
  j["types"] = std::move(types);
  json pairs = json::array();
  for (int i = 0; i < basis.dimension(); ++i) {
    const auto [x, y] = basis.pairs[i];
    json p;
    p["label"] = basis.labels[i];
    p["source_count"] = part.count(x);   // |x|
    p["port_count"] = part.ports(x, y);  // |x->y|
    pairs.push_back(std::move(p));
  }
  j["basis"] = std::move(pairs);
  j["dimension"] = basis.dimension();
  j["walk_matrix"] = matrix_rows(u0.matrix);
  j["search_matrix"] = matrix_rows(u.matrix);
  return j;
}

json spectral_report_json(const SpectralReport& rep) {
  json j;
  j["eigenphases"] = rep.eigenphases;
  j["eigenvectors"] = matrix_rows(rep.eigenvectors);
  if (rep.closed_form) {
    const ClosedFormSpectrum& cf = *rep.closed_form;
    json c;
    c["cos_theta"] = cf.cos_theta;
    c["sin_theta"] = cf.sin_theta;
    c["cos_phi"] = cf.cos_phi;
    c["sin_phi"] = cf.sin_phi;
    c["phi"] = cf.phi;
    c["max_residual"] = cf.max_residual;
    j["closed_form"] = std::move(c);
  }
  return j;
}

json doubling_report_json(const DoublingReport& rep) {
  json j;
  json entries = json::array();
  for (const DoublingEntry& e : rep.entries) {
    json row;
    row["n_vertices"] = e.n_vertices;
    row["degree"] = e.degree;
    row["c"] = fraction(e.num, e.den);
    row["ratio"] = e.ratio;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["verdict"] = verdict_name(rep.verdict);
  j["single_neighbor_type"] = rep.single_neighbor_type;
  j["low_confidence"] = rep.low_confidence;
  return j;
}

json perturbation_json(const PerturbationResult& res) {
  json j;
  j["sigma"] = res.sigma;
  j["e_plus"] = complex_pair(res.e_plus);
  j["e_minus"] = complex_pair(res.e_minus);
  j["block_vectors"] = matrix_rows(res.block_vectors);
  j["predicted_runtime"] = res.predicted_runtime;
  j["rounded_runtime"] = static_cast<int>(std::lround(res.predicted_runtime));
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file: " + path);
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace qws
