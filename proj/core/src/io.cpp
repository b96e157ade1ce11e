#include "qk/io.hpp"

#include <cstdio>
#include <ostream>

#include "qk/random.hpp"
#include "qk/solutions.hpp"

namespace qk {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("graph json: expected an object");
  const int n = j.at("n").get<int>();
  if (j.contains("circulant")) {
    CirculantSpec spec;
    spec.n = n;
    spec.bands = j.at("circulant").get<std::vector<double>>();
    return circulant(spec);
  }
  if (j.contains("edges")) {
    RMat w = RMat::Zero(n, n);
    for (const auto& e : j.at("edges")) {
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      const double g = e.at(2).get<double>();
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw DomainError("graph json: edge index out of range");
      w(a, b) = g;
      w(b, a) = g;
    }
    return WeightedGraph(n, std::move(w));
  }
  throw DomainError("graph json: need 'circulant' or 'edges'");
}

json graph_to_json(const WeightedGraph& graph) {
  json edges = json::array();
  for (int i = 0; i < graph.size(); ++i)
    for (int j2 = i + 1; j2 < graph.size(); ++j2)
      if (graph.weight(i, j2) != 0.0) edges.push_back({i, j2, graph.weight(i, j2)});
  return json{{"n", graph.size()}, {"edges", edges}};
}

Configuration configuration_from_json(const json& j) {
  if (j.contains("twist")) {
    const auto& t = j.at("twist");
    TwistSpec spec;
    spec.n = t.at("n").get<int>();
    spec.d = t.at("d").get<int>();
    spec.winding = t.at("l").get<std::vector<int>>();
    return twist_configuration(spec);
  }
  const std::string group = j.value("group", "so");
  if (group == "u1") {
    std::vector<GroupElement> elems;
    for (double th : j.at("angles").get<std::vector<double>>())
      elems.push_back(GroupElement::u1(th));
    return Configuration(std::move(elems));
  }
  if (group != "so" && group != "generic")
    throw DomainError("configuration json: unknown group tag");
  const GroupTag tag = group == "so" ? GroupTag::SOd : GroupTag::Generic;
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const auto& mats = j.at("matrices");
  if (static_cast<int>(mats.size()) != n)
    throw DimensionError("configuration json: matrix count != n");
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (const auto& m : mats) {
    RMat X(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) X(r, c) = m.at(r).at(c).get<double>();
    elems.emplace_back(X.cast<std::complex<double>>(), tag);
  }
  return Configuration(std::move(elems));
}

json configuration_to_json(const Configuration& X) {
  json j;
  j["n"] = X.size();
  j["d"] = X.dim();
  if (X.tag() == GroupTag::U1) {
    j["group"] = "u1";
    std::vector<double> angles;
    for (const auto& e : X.elements()) angles.push_back(std::arg(e.entries()(0, 0)));
    j["angles"] = angles;
    return j;
  }
  j["group"] = "so";
  json mats = json::array();
  for (const auto& e : X.elements()) {
    const RMat m = e.real_entries();
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

ForcingVector forcing_from_json(const json& j, int n, int d, GroupTag tag, std::uint64_t seed) {
  if (j.is_string() && j.get<std::string>() == "zero") return ForcingVector::zero(n, d, tag);
  if (j.is_object() && j.contains("random_zero_sum")) {
    Rng rng(seed);
    return random_zero_sum_forcing(n, d, tag, j.at("random_zero_sum").get<double>(), rng);
  }
  if (j.is_object() && j.contains("u1")) {
    std::vector<AlgebraElement> elems;
    for (double w : j.at("u1").get<std::vector<double>>())
      elems.push_back(AlgebraElement::u1(w));
    return ForcingVector(std::move(elems));
  }
  if (j.is_object() && j.contains("matrices")) {
    const auto& mats = j.at("matrices");
    if (static_cast<int>(mats.size()) != n)
      throw DimensionError("forcing json: matrix count != n");
    std::vector<AlgebraElement> elems;
    for (const auto& m : mats) {
      RMat Q(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) Q(r, c) = m.at(r).at(c).get<double>();
      elems.push_back(AlgebraElement::so(Q));
    }
    return ForcingVector(std::move(elems));
  }
  throw DomainError("forcing json: unrecognized spec");
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::uint64_t seed) {
  os << "# seed=" << seed << "\n";
  os << "t,i,row,col,value\n";
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    const auto& X = traj.states[s];
    const std::string t = format_double(traj.times[s]);
    for (int i = 0; i < X.size(); ++i) {
      const Mat& m = X[i].entries();
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
          // U(1) states are complex; store the real part of so(d) entries as-is
          const double v = X.tag() == GroupTag::U1 ? std::arg(m(r, c)) : m(r, c).real();
          os << t << ',' << i << ',' << r << ',' << c << ',' << format_double(v) << "\n";
        }
    }
  }
}

namespace {

void write_eig_rows(std::ostream& os, const Eigen::VectorXcd& ev, const char* source) {
  for (int k = 0; k < ev.size(); ++k) {
    os << "-,-1,-1,-1," << format_double(ev[k].real()) << ',' << format_double(ev[k].imag())
       << ",1," << source << "\n";
  }
}

}  // namespace

void write_spectrum_csv(std::ostream& os, std::uint64_t seed,
                        const std::optional<TwistSpectrum>& closed,
                        const Eigen::VectorXcd* numeric, const Eigen::VectorXcd* fd_oracle) {
  os << "# seed=" << seed << "\n";
  os << "family,l1,l2,m,re,im,multiplicity,source\n";
  if (closed) {
    for (const auto& e : closed->entries) {
      if (e.multiplicity == 0) continue;
      os << family_name(e.family) << ',' << e.l1 << ',' << e.l2 << ',' << e.m << ','
         << format_double(e.value) << ",0," << e.multiplicity << ",closed_form\n";
    }
  }
  if (numeric) write_eig_rows(os, *numeric, "numeric");
  if (fd_oracle) write_eig_rows(os, *fd_oracle, "fd_oracle");
}

json bounds_report_to_json(const AdmissibilityReport& rep) {
  json margins = json::object();
  for (std::size_t k = 0; k < rep.p_grid.size(); ++k) {
    const double p = rep.p_grid[k];
    const std::string key = std::isinf(p) ? "inf" : format_double(p);
    margins[key] = rep.margins[k];
  }
  return json{{"verdict", rep.verdict()},
              {"margins", margins},
              {"binding_p", std::isinf(rep.binding_p) ? json("inf") : json(rep.binding_p)}};
}

}  // namespace qk
