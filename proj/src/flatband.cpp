#include "flatband/flatband.hpp"

#include <algorithm>
#include <map>

#include "flatband/floquet.hpp"

namespace flatband {

namespace {

std::map<Exponent, UPoly> lambda_slices(const LaurentPoly& f) {
  std::map<Exponent, std::vector<Rational>> dense;
  for (const auto& [e, c] : f.terms()) {
    auto& v = dense[Exponent(e.begin(), e.end() - 1)];
    if (static_cast<std::int64_t>(v.size()) <= e.back()) v.resize(e.back() + 1);
    v[e.back()] = c;
  }
  std::map<Exponent, UPoly> out;
  for (auto& [a, v] : dense) out.emplace(a, UPoly(std::move(v)));
  return out;
}

}  // namespace

FlatBandReport flat_bands(const LaurentPoly& dispersion) {
  const std::int64_t n = dispersion.lambda_degree();
  if (n < 0) throw PreconditionError("flat bands of the zero polynomial");
  const LaurentPoly top = coefficient_in_lambda(dispersion, n);
  if (!top.is_z_free() || top.num_terms() != 1 || abs(top.terms().begin()->second) != 1) {
    throw PreconditionError("leading λ-coefficient must be ±1");
  }

  FlatBandReport report;
  for (const auto& [a, p] : lambda_slices(dispersion)) {
    report.flatband_poly = gcd(report.flatband_poly, p);
    if (report.flatband_poly.degree() == 0) break;
  }

  UPoly rest = report.flatband_poly;
  for (const auto& root : rational_roots(report.flatband_poly)) {
    FlatBand band{root.value, root.multiplicity, false};
    try {
      LaurentPoly q = divide_by_linear(dispersion, root.value);
      band.verified = (q * (LaurentPoly::lambda(dispersion.dimension()) -
                            LaurentPoly::constant(dispersion.dimension(), root.value))) == dispersion;
    } catch (const AlgebraError&) {
      band.verified = false;
    }
    report.rational_bands.push_back(band);
    for (int k = 0; k < root.multiplicity; ++k) rest = divmod(rest, UPoly::linear(root.value)).first;
  }
  for (auto& [factor, mult] : square_free_decomposition(rest)) report.irrational_factors.push_back({factor, mult});
  return report;
}

const char* to_string(GenericVerdict v) {
  switch (v) {
    case GenericVerdict::kNoFlatBand: return "no-flat-band";
    case GenericVerdict::kFlatBand: return "flat-band";
    case GenericVerdict::kInconsistent: return "inconsistent";
  }
  return "?";
}

GenericDecision generic_flat_band_decision(const PeriodicGraph& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic decision needs at least one trial");
  GenericDecision out;
  int with = 0;
  for (int t = 0; t < trials; ++t) {
    RationalSampler sampler(seed, static_cast<std::uint64_t>(t));
    Labeling lab = random_labeling(g, sampler);
    FloquetMatrix f(g, lab);
    out.reports.push_back(flat_bands(f.dispersion()));
    out.labelings.push_back(std::move(lab));
    with += out.reports.back().has_flat_band();
  }
  if (with == trials) {
    out.verdict = GenericVerdict::kFlatBand;
  } else if (with == 0) {
    out.verdict = GenericVerdict::kNoFlatBand;
  } else {
    out.verdict = GenericVerdict::kInconsistent;
  }
  return out;
}

InheritanceResult inheritance_check(const PeriodicGraph& g, const Labeling& lab, Orbit i) {
  if (g.num_orbits() < 2) throw PreconditionError("orbit deletion needs at least two orbits");
  if (i < 0 || i >= g.num_orbits()) throw PreconditionError("orbit " + std::to_string(i + 1) + " out of range");
  std::vector<Orbit> rest;
  for (Orbit u = 0; u < g.num_orbits(); ++u) {
    if (u != i) rest.push_back(u);
  }
  const FloquetMatrix full(g, lab, true);
  const FlatBandReport whole = flat_bands(full.dispersion());
  const FlatBandReport reduced = flat_bands(induced_dispersion(g, lab, rest));

  InheritanceResult out;
  out.shared_poly = gcd(whole.flatband_poly, reduced.flatband_poly);
  for (const auto& r : rational_roots(out.shared_poly)) out.shared_roots.push_back(r.value);
  return out;
}

std::optional<VerticalSegmentWitness> vertical_segment_face_witness(const PeriodicGraph& g, const Labeling& lab) {
  if (g.dimension() > 2) throw UnsupportedDimension("face search supports d <= 2");
  if (has_support0_fundamental_domain(g)) throw PreconditionError("graph has a support-0 fundamental domain");
  const FloquetMatrix f(g, lab, true);
  const LaurentPoly& d = f.dispersion();
  const FlatBandReport report = flat_bands(d);
  if (!report.has_flat_band()) throw PreconditionError("operator has no flat band");

  // square-free part of g: every flat band must be a root of p
  const UPoly& fb = report.flatband_poly;
  const UPoly radical = divmod(fb, gcd(fb, fb.derivative())).first;

  for (const auto& face : projected_faces(support(d), g.dimension())) {
    if (!face.proper) continue;
    const Exponent a(face.members.front().begin(), face.members.front().end() - 1);
    const bool single_z = std::all_of(face.members.begin(), face.members.end(), [&](const Exponent& p) {
      return std::equal(a.begin(), a.end(), p.begin());
    });
    if (!single_z || std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;

    LaurentPoly facial = terms_at_level(d, face.w, face.m);
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : facial.terms()) {
      if (static_cast<std::int64_t>(coeffs.size()) <= e.back()) coeffs.resize(e.back() + 1);
      coeffs[e.back()] = c;
    }
    UPoly p(std::move(coeffs));
    if (!divmod(p, radical).second.is_zero()) continue;
    return VerticalSegmentWitness{face.w, std::move(facial), a, std::move(p)};
  }
  return std::nullopt;
}

}  // namespace flatband
