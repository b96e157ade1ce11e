#include "run_config.hpp"

#include <fstream>

#include "qk/random.hpp"
#include "qk/solutions.hpp"

namespace qk::cli {

namespace {

GroupTag tag_from_string(const std::string& s) {
  if (s == "so") return GroupTag::SOd;
  if (s == "u1") return GroupTag::U1;
  if (s == "generic") return GroupTag::Generic;
  throw DomainError("config: unknown group tag '" + s + "'");
}

GroupElement element_from_json(const json& j, int d, GroupTag tag) {
  if (tag == GroupTag::U1) return GroupElement::u1(j.at("theta").get<double>());
  if (j.contains("twist_angles")) {
    const auto a = j.at("twist_angles").get<std::vector<double>>();
    RVec angles(static_cast<int>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) angles[static_cast<int>(k)] = a[k];
    return canonical_twist(angles, d);
  }
  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    Mat X(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) X(r, c) = m.at(r).at(c).get<double>();
    return GroupElement(X, tag);
  }
  throw DomainError("config: element spec needs 'twist_angles', 'matrix' or 'theta'");
}

}  // namespace

ForcingVector RunConfig::forcing(int n) const {
  if (forcing_spec.is_null()) return ForcingVector::zero(n, d, tag);
  if (forcing_spec.is_object() && forcing_spec.contains("matrices") && tag != GroupTag::SOd) {
    // io's matrix path is so(d)-specific; generic matrices are built here
    std::vector<AlgebraElement> elems;
    for (const auto& m : forcing_spec.at("matrices")) {
      Mat Q(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) Q(r, c) = m.at(r).at(c).get<double>();
      elems.emplace_back(Q, tag);
    }
    return ForcingVector(std::move(elems));
  }
  return forcing_from_json(forcing_spec, n, d, tag, seed);
}

std::optional<TwistSpec> RunConfig::initial_twist() const {
  if (initial_spec.is_object() && initial_spec.contains("twist")) {
    const auto& t = initial_spec.at("twist");
    TwistSpec spec;
    spec.n = t.at("n").get<int>();
    spec.d = t.at("d").get<int>();
    spec.winding = t.at("l").get<std::vector<int>>();
    return spec;
  }
  return std::nullopt;
}

Configuration RunConfig::initial() const {
  if (!graph) throw DomainError("config: missing graph");
  const int n = graph->size();
  Configuration X0 = [&]() -> Configuration {
    if (initial_spec.is_null() || (initial_spec.is_string() && initial_spec == "sync"))
      return sync_configuration(n, GroupElement::identity(d, tag));
    if (initial_spec.is_object() && initial_spec.contains("sync"))
      return sync_configuration(n, element_from_json(initial_spec.at("sync"), d, tag));
    if (initial_spec.is_object() && initial_spec.contains("twist_flip")) {
      const auto& t = initial_spec.at("twist_flip");
      TwistFlipSpec spec;
      spec.n = n;
      spec.d = d;
      for (const auto& ax : t.at("axes")) {
        TwistFlipAxis axis;
        axis.winding = ax.at("winding").get<int>();
        if (ax.contains("flips")) axis.flip_edges = ax.at("flips").get<std::vector<int>>();
        spec.axes.push_back(std::move(axis));
      }
      return twist_flip_configuration(spec);
    }
    if (initial_spec.is_object() && initial_spec.contains("near_sync")) {
      const double eps = initial_spec.at("near_sync").at("eps").get<double>();
      return near_sync(*graph, forcing(n), eps, f);
    }
    if (initial_spec.is_object() && initial_spec.contains("random")) {
      Rng rng(seed);
      if (tag != GroupTag::SOd)
        throw DomainError("config: random initial state requires the so tag");
      return random_so_configuration(n, d, initial_spec.at("random").get<double>(), rng);
    }
    return configuration_from_json(initial_spec);
  }();
  if (X0.size() != n) throw DimensionError("config: initial state size != graph size");

  if (perturbation != 0.0) {
    Rng rng(seed + 0x9e3779b97f4a7c15ull);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (tag == GroupTag::U1) {
        out.push_back(GroupElement::u1(std::arg(X0[i].entries()(0, 0)) +
                                       rng.normal(perturbation)));
      } else if (tag == GroupTag::SOd) {
        const AlgebraElement Q = random_so_algebra(d, perturbation, rng);
        out.emplace_back(Mat(X0[i].entries() * exp_map(Q.entries())), tag);
      } else {
        out.push_back(X0[i]);
      }
    }
    return Configuration(std::move(out));
  }
  return X0;
}

RunConfig load_run_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: invalid json: ") + e.what());
  }

  RunConfig cfg;
  cfg.raw = j;
  cfg.seed = j.value("seed", 0ull);
  if (seed_override) cfg.seed = *seed_override;

  if (j.contains("group")) {
    cfg.tag = tag_from_string(j.at("group").value("tag", "so"));
    cfg.d = j.at("group").value("d", cfg.tag == GroupTag::U1 ? 1 : 3);
  }
  if (j.contains("graph")) {
    cfg.graph = graph_from_json(j.at("graph"));
    if (j.at("graph").contains("circulant"))
      cfg.circulant_bands = j.at("graph").at("circulant").get<std::vector<double>>();
  }
  if (j.contains("coupling")) cfg.f = CouplingSeries(j.at("coupling").get<std::vector<double>>());
  if (j.contains("forcing")) cfg.forcing_spec = j.at("forcing");
  if (j.contains("initial")) cfg.initial_spec = j.at("initial");
  cfg.perturbation = j.value("perturbation", 0.0);

  if (j.contains("frustration")) {
    const auto& fr = j.at("frustration");
    if (fr.contains("alpha") && cfg.tag == GroupTag::U1) {
      const double alpha = fr.at("alpha").get<double>();
      cfg.frustration = FrustrationPair{GroupElement::u1(alpha / 2.0),
                                        GroupElement::u1(-alpha / 2.0)};
    } else {
      cfg.frustration = FrustrationPair{element_from_json(fr.at("A"), cfg.d, cfg.tag),
                                        element_from_json(fr.at("B"), cfg.d, cfg.tag)};
    }
  }

  if (j.contains("integrate")) {
    const auto& it = j.at("integrate");
    cfg.t_end = it.value("t_end", 10.0);
    cfg.integrate_opts.step = it.value("h", 1e-2);
    cfg.integrate_opts.store_every = it.value("store_every", 1);
    const std::string scheme = it.value("scheme", "midpoint");
    if (scheme == "midpoint") cfg.integrate_opts.scheme = Scheme::ExpMidpoint;
    else if (scheme == "euler") cfg.integrate_opts.scheme = Scheme::LieEuler;
    else throw DomainError("config: unknown scheme '" + scheme + "'");
  }

  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "seed" && key != "group" && key != "graph" && key != "coupling" &&
        key != "forcing" && key != "initial" && key != "perturbation" && key != "frustration" &&
        key != "integrate" && key != "scan" && key != "eps" && key != "p_grid")
      throw DomainError("config: unknown key '" + key + "'");
  }
  return cfg;
}

}  // namespace qk::cli
