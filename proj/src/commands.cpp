#include "flatband/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include "flatband/bands.hpp"
#include "flatband/flatband.hpp"
#include "flatband/floquet.hpp"
#include "flatband/polytope.hpp"
#include "flatband/random_graph.hpp"

namespace flatband::cli {

using Json = nlohmann::ordered_json;

namespace {

Json points_json(const Support& s) {
  Json arr = Json::array();
  for (const auto& p : s) arr.push_back(p);
  return arr;
}

Json points_json(const std::vector<Exponent>& s) {
  Json arr = Json::array();
  for (const auto& p : s) arr.push_back(p);
  return arr;
}

Json flat_band_json(const FlatBandReport& r) {
  Json j;
  j["flatband_poly"] = r.flatband_poly.to_string();
  j["flat_band_count"] = r.count();
  Json roots = Json::array();
  for (const auto& b : r.rational_bands) {
    Json x;
    x["energy"] = to_string(b.energy);
    x["multiplicity"] = b.multiplicity;
    x["verified"] = b.verified;
    roots.push_back(std::move(x));
  }
  j["rational_flat_bands"] = std::move(roots);
  Json factors = Json::array();
  for (const auto& f : r.irrational_factors) {
    Json x;
    Json coeffs = Json::array();
    for (const auto& c : f.factor.coefficients()) coeffs.push_back(to_string(c));
    x["coefficients"] = std::move(coeffs);
    x["degree"] = f.factor.degree();
    x["multiplicity"] = f.multiplicity;
    factors.push_back(std::move(x));
  }
  j["irrational_factors"] = std::move(factors);
  return j;
}

Json labeling_json(const GraphSpec& spec, const Labeling& lab) {
  Json j;
  Json pots;
  for (std::size_t i = 0; i < lab.potentials.size(); ++i) pots[id_text(spec.orbit_ids[i])] = to_string(lab.potentials[i]);
  j["potentials"] = std::move(pots);
  Json w = Json::array();
  for (std::size_t k = 0; k < lab.weights.size(); ++k) {
    const EdgeClass& e = spec.graph.edge_classes()[k];
    Json x;
    x["from"] = id_text(spec.orbit_ids[e.i]);
    x["to"] = id_text(spec.orbit_ids[e.j]);
    x["offset"] = e.offset;
    x["weight"] = to_string(lab.weights[k]);
    w.push_back(std::move(x));
  }
  j["weights"] = std::move(w);
  return j;
}

Json support0_json(const PeriodicGraph& g) {
  Json j;
  const auto comp = find_support0_component(g);
  j["support0_component_exists"] = comp.has_value();
  if (comp) {
    Json orbits = Json::array();
    Json shifts;
    for (Orbit u : comp->orbits) {
      orbits.push_back(u + 1);
      shifts[std::to_string(u + 1)] = comp->shifts.at(u);
    }
    j["component"] = std::move(orbits);
    j["shifts"] = std::move(shifts);
  }
  j["support0_fundamental_domain"] = has_support0_fundamental_domain(g);
  return j;
}

void emit(const Json& report, const OutputOptions& fmt, std::ostream& out) {
  if (fmt.json) {
    out << report.dump(2) << '\n';
  } else {
    render_text(out, report);
  }
}

Json header(const char* command, const std::string& file) {
  Json j;
  j["command"] = command;
  if (!file.empty()) j["input"] = file;
  return j;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& x) { return is_flat(x); });
  return true;
}

void render(std::ostream& os, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_array() && x.empty()) {
        os << pad << k << ": []\n";
      } else if (!x.is_structured()) {
        os << pad << k << ": " << scalar_text(x) << '\n';
      } else if (is_flat(x)) {
        os << pad << k << ": " << x.dump() << '\n';
      } else {
        os << pad << k << ":\n";
        render(os, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (is_flat(x)) {
        os << pad << "- " << (x.is_structured() ? x.dump() : scalar_text(x)) << '\n';
      } else {
        os << pad << "-\n";
        render(os, x, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(v) << '\n';
  }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

Json face_json(const FaceDescriptor& f) {
  Json j;
  j["w"] = f.w.values;
  j["m"] = f.m;
  j["members"] = points_json(f.members);
  return j;
}

}  // namespace

void render_text(std::ostream& os, const Json& report) { render(os, report, 0); }

int run_analyze(const AnalyzeOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GraphSpec spec = load_graph_spec(opts.file);
    const Labeling lab = resolve_labeling(spec, opts.labels, opts.seed);
    const FloquetMatrix f(spec.graph, lab);

    Json report = header("analyze", opts.file);
    report["seed"] = opts.seed;
    report["dimension"] = spec.graph.dimension();
    report["orbits"] = spec.graph.num_orbits();
    report["labeling"] = labeling_json(spec, lab);
    Json entries;
    for (int i = 0; i < f.matrix().size(); ++i) {
      for (int j = 0; j < f.matrix().size(); ++j) {
        entries["L[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"] = f.matrix().at(i, j).to_string();
      }
    }
    report["floquet_matrix"] = std::move(entries);
    report["dispersion"] = f.dispersion().to_string();
    const FlatBandReport bands = flat_bands(f.dispersion());
    report["flat_bands"] = flat_band_json(bands);
    const int code = bands.has_flat_band() ? kExitFlatBand : kExitOk;
    report["exit_code"] = code;
    emit(report, fmt, out);
    return code;
  });
}

int run_generic(const GenericOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.trials < 1) throw InputError("--trials must be at least 1");
    const GraphSpec spec = load_graph_spec(opts.file);
    const GenericDecision dec = generic_flat_band_decision(spec.graph, opts.trials, opts.seed);

    Json report = header("generic", opts.file);
    report["seed"] = opts.seed;
    report["trials"] = opts.trials;
    int with = 0;
    Json trials = Json::array();
    for (std::size_t t = 0; t < dec.reports.size(); ++t) {
      Json x;
      x["trial"] = t;
      x["flatband_poly"] = dec.reports[t].flatband_poly.to_string();
      x["flat_band_count"] = dec.reports[t].count();
      with += dec.reports[t].has_flat_band();
      trials.push_back(std::move(x));
    }
    report["per_trial"] = std::move(trials);
    report["trials_with_flat_band"] = with;
    report["verdict"] = to_string(dec.verdict);
    report["combinatorial"] = support0_json(spec.graph);
    int code = kExitOk;
    if (dec.verdict == GenericVerdict::kFlatBand) code = kExitFlatBand;
    if (dec.verdict == GenericVerdict::kInconsistent) {
      code = kExitInconsistent;
      report["notice"] = "trials disagree; a labeling was not generic, rerun with another --seed";
    }
    report["exit_code"] = code;
    emit(report, fmt, out);
    return code;
  });
}

int run_polytope(const PolytopeOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.trials < 1) throw InputError("--trials must be at least 1");
    const GraphSpec spec = load_graph_spec(opts.file);
    const PeriodicGraph& g = spec.graph;
    const GenericSupportEstimate est = generic_support(g, opts.trials, opts.seed);

    Json report = header("polytope", opts.file);
    report["seed"] = opts.seed;
    report["trials"] = opts.trials;
    report["generic_support"] = points_json(est.points);
    const NewtonPolytopeData poly = newton_polytope(est.points, g.dimension());
    report["hull_vertices"] = points_json(poly.hull_vertices);
    const bool segment = is_vertical_segment(est.points);
    report["vertical_segment"] = segment;
    report["support0_fundamental_domain"] = has_support0_fundamental_domain(g);

    if (g.dimension() > 2) {
      report["faces"] = "skipped: face enumeration supports d <= 2, input has d = " + std::to_string(g.dimension());
    } else if (segment) {
      report["vertical_faces"] = Json::array();
    } else {
      RationalSampler first(opts.seed, 0);
      const FloquetMatrix sample(g, random_labeling(g, first));
      Json faces = Json::array();
      int k = 0;
      for (const auto& face : vertical_faces(est.points, g.dimension())) {
        Json x = face_json(face);
        x["facial_polynomial"] = terms_at_level(sample.dispersion(), face.w, face.m).to_string();
        RationalSampler sampler(opts.seed, 1000 + static_cast<std::uint64_t>(k++));
        const auto witness = facial_independence_witness(g, est.points, face.w, sampler);
        if (witness) {
          x["independent_of_potential"] = id_text(spec.orbit_ids[*witness]);
        } else {
          x["independent_of_potential"] = nullptr;
          x["warning"] = "facial polynomial depends on every potential";
        }
        faces.push_back(std::move(x));
      }
      report["vertical_faces"] = std::move(faces);
    }
    report["exit_code"] = kExitOk;
    emit(report, fmt, out);
    return kExitOk;
  });
}

namespace {

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

bool is_exact_segment(const Support& s, int d, int n) {
  if (static_cast<int>(s.size()) != n + 1) return false;
  for (int b = 0; b <= n; ++b) {
    Exponent p(d + 1, 0);
    p.back() = b;
    if (!s.contains(p)) return false;
  }
  return true;
}

}  // namespace

int run_verify_theorem(const VerifyOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.dims.empty()) throw InputError("--dims must list at least one dimension");
    for (int d : opts.dims) {
      if (d < 1 || d > 2) throw InputError("--dims entries must be 1 or 2");
    }
    if (opts.max_orbits < 1 || opts.max_orbits > 4) throw InputError("--max-orbits must be in 1..4");
    if (opts.max_edges < 0 || opts.max_edges > 6) throw InputError("--max-edges must be in 0..6");
    if (opts.count < 1) throw InputError("--count must be positive");
    if (opts.trials < 1) throw InputError("--trials must be at least 1");

    const RandomGraphOptions gen{opts.dims, opts.max_orbits, opts.max_edges};
    const auto start = std::chrono::steady_clock::now();

    int both_flat = 0, both_none = 0, comb_only = 0, alg_only = 0, inconsistent = 0;
    int segment_agree = 0, segment_shape_fail = 0;
    int sigma_ok = 0;
    int faces_checked = 0, faces_failed = 0, lemma_failed = 0;
    Json disagreements = Json::array();

    for (int t = 0; t < opts.count; ++t) {
      std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(t)));
      const PeriodicGraph g = random_periodic_graph(gen, rng);
      const std::uint64_t trial_seed = derive_seed(derive_seed(opts.seed, static_cast<std::uint64_t>(t)), 1);

      const bool comb = find_support0_component(g).has_value();
      const GenericDecision dec = generic_flat_band_decision(g, opts.trials, trial_seed);
      const GenericSupportEstimate est = generic_support(g, opts.trials, trial_seed);
      const bool segment = is_vertical_segment(est.points);
      const bool fd0 = has_support0_fundamental_domain(g);

      std::vector<std::string> problems;
      if (dec.verdict == GenericVerdict::kInconsistent) {
        ++inconsistent;
        problems.push_back("algebraic trials inconsistent");
      } else {
        const bool alg = dec.verdict == GenericVerdict::kFlatBand;
        if (alg && comb) ++both_flat;
        if (!alg && !comb) ++both_none;
        if (comb && !alg) {
          ++comb_only;
          problems.push_back("support-0 component but no generic flat band");
        }
        if (alg && !comb) {
          ++alg_only;
          problems.push_back("generic flat band but no support-0 component");
        }
      }
      if (segment == fd0) {
        ++segment_agree;
      } else {
        problems.push_back("vertical-segment verdict disagrees with support-0 fundamental domain");
      }
      if (segment && !is_exact_segment(est.points, g.dimension(), g.num_orbits())) {
        ++segment_shape_fail;
        problems.push_back("vertical segment is not {(0,b) : 0 <= b <= n}");
      }

      const FloquetMatrix sample(g, dec.labelings.front());
      const auto sigma = random_permutation(g.num_orbits(), rng);
      if (sigma_support_check(sample, sigma, est.points)) {
        ++sigma_ok;
      } else {
        problems.push_back("support of a permutation product escapes the generic support");
      }

      if (!fd0 && g.dimension() <= 2) {
        int k = 0;
        for (const auto& face : vertical_faces(est.points, g.dimension())) {
          ++faces_checked;
          const Exponent origin(g.dimension() + 1, 0);
          if (face.m >= 0 || std::find(face.members.begin(), face.members.end(), origin) != face.members.end()) {
            ++lemma_failed;
            problems.push_back("vertical face contains the origin or has m >= 0");
          }
          RationalSampler sampler(trial_seed, 100 + static_cast<std::uint64_t>(k++));
          if (!facial_independence_witness(g, est.points, face.w, sampler)) {
            ++faces_failed;
            problems.push_back("facial polynomial depends on every potential");
          }
        }
      }

      if (!problems.empty()) {
        Json x;
        x["index"] = t;
        x["graph"] = graph_to_json(g);
        x["combinatorial_support0_component"] = comb;
        x["algebraic_verdict"] = to_string(dec.verdict);
        x["vertical_segment"] = segment;
        x["support0_fundamental_domain"] = fd0;
        x["problems"] = problems;
        disagreements.push_back(std::move(x));
      }
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int agree = both_flat + both_none;
    const bool all_ok = agree == opts.count && segment_agree == opts.count && segment_shape_fail == 0 &&
                        sigma_ok == opts.count && faces_failed == 0 && lemma_failed == 0;

    Json report = header("verify-theorem", "");
    report["seed"] = opts.seed;
    report["count"] = opts.count;
    report["dims"] = opts.dims;
    report["max_orbits"] = opts.max_orbits;
    report["max_edges"] = opts.max_edges;
    report["trials"] = opts.trials;
    Json matrix;
    matrix["flat_band_and_support0"] = both_flat;
    matrix["no_flat_band_and_no_support0"] = both_none;
    matrix["support0_only"] = comb_only;
    matrix["flat_band_only"] = alg_only;
    matrix["inconsistent_trials"] = inconsistent;
    report["agreement_matrix"] = std::move(matrix);
    report["main_equivalence_agreement"] = std::to_string(agree) + "/" + std::to_string(opts.count);
    report["vertical_segment_agreement"] = std::to_string(segment_agree) + "/" + std::to_string(opts.count);
    report["vertical_segment_shape_failures"] = segment_shape_fail;
    report["permutation_support_containment"] = std::to_string(sigma_ok) + "/" + std::to_string(opts.count);
    report["vertical_faces_checked"] = faces_checked;
    report["facial_independence_failures"] = faces_failed;
    report["vertical_face_lemma_failures"] = lemma_failed;
    report["disagreements"] = std::move(disagreements);
    const int code = all_ok ? kExitOk : kExitInconsistent;
    report["exit_code"] = code;
    emit(report, fmt, out);
    err << "verify-theorem: " << opts.count << " graphs in " << seconds << " s\n";
    return code;
  });
}

int run_bands(const BandsOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.resolution < 2) throw InputError("--resolution must be at least 2");
    if (!(opts.tol > 0)) throw InputError("--tol must be positive");
    const GraphSpec spec = load_graph_spec(opts.file);
    const Labeling lab = resolve_labeling(spec, opts.labels, opts.seed);
    const FloquetMatrix f(spec.graph, lab);
    const BandSample sample = sample_bands(f, opts.resolution);

    if (!opts.out.empty()) {
      std::ofstream csv(opts.out);
      if (!csv) throw InputError("cannot write " + opts.out);
      write_band_csv(csv, sample);
    }

    Json report = header("bands", opts.file);
    report["seed"] = opts.seed;
    report["resolution"] = opts.resolution;
    report["grid_points"] = sample.grid.size();
    report["max_hermiticity_defect"] = sample.max_hermiticity_defect;
    Json table = Json::array();
    for (std::size_t j = 0; j < sample.flatness.size(); ++j) {
      Json x;
      x["band"] = j + 1;
      x["flatness"] = sample.flatness[j];
      table.push_back(std::move(x));
    }
    report["flatness"] = std::move(table);
    const std::vector<int> flags = numeric_flat_flags(sample, opts.tol);
    Json flagged = Json::array();
    for (int j : flags) flagged.push_back(j + 1);
    report["tolerance"] = opts.tol;
    report["numerically_flat_bands"] = std::move(flagged);
    Json near = Json::array();
    for (int j : numeric_flat_flags(sample, opts.refute_tol)) near.push_back(j + 1);
    report["bands_below_refute_tolerance"] = std::move(near);

    const FlatBandReport exact = flat_bands(f.dispersion());
    bool consistent = static_cast<int>(flags.size()) == exact.count();
    Json matches = Json::array();
    for (const auto& band : exact.rational_bands) {
      const double e = to_double(band.energy);
      int matched = 0;
      for (int j : flags) {
        double worst = 0;
        for (const auto& row : sample.bands) worst = std::max(worst, std::abs(row[j] - e));
        if (worst < opts.tol) ++matched;
      }
      Json x;
      x["energy"] = to_string(band.energy);
      x["matching_numeric_bands"] = matched;
      matches.push_back(std::move(x));
      consistent = consistent && matched >= band.multiplicity;
    }
    report["exact_flat_band_count"] = exact.count();
    report["exact_rational_bands"] = std::move(matches);
    report["consistent_with_exact"] = consistent;
    if (!opts.out.empty()) report["csv"] = opts.out;
    const int code = consistent ? kExitOk : kExitInconsistent;
    report["exit_code"] = code;
    emit(report, fmt, out);
    return code;
  });
}

}  // namespace flatband::cli
