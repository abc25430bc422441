#include "ergolab/fourier_oracle.hpp"

#include <numeric>

namespace ergolab {

ShiftRelations detect_relations(const std::vector<double>& shifts) {
  ShiftRelations rel;
  rel.entries.resize(shifts.size());
  rel.certain = true;

  struct Group {
    double value = 0.0;                        // representative shift
    std::vector<std::pair<size_t, std::pair<long, long>>> members;  // idx, p/q
  };
  std::vector<Group> groups;

  for (size_t i = 0; i < shifts.size(); ++i) {
    double a = shifts[i];
    long p = 0, q = 1;
    if (is_rational(a, 1000000, &p, &q)) {
      rel.entries[i].rational = true;
      rel.entries[i].num = a < 0 ? -p : p;
      rel.entries[i].den = q;
      continue;
    }
    rel.certain = false;  // irrational generators: independence is heuristic
    bool placed = false;
    for (auto& g : groups) {
      double ratio = a / g.value;
      long rp = 0, rq = 1;
      if (is_rational(ratio, 1000, &rp, &rq)) {
        g.members.push_back({i, {ratio < 0 ? -rp : rp, rq}});
        placed = true;
        break;
      }
    }
    if (!placed) {
      Group g;
      g.value = a;
      g.members.push_back({i, {1, 1}});
      groups.push_back(std::move(g));
    }
  }
  if (groups.size() > 16)
    throw Error("bad-argument", "too many independent shift generators");
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    long long L = 1;
    for (const auto& m : groups[gi].members)
      L = std::lcm(L, static_cast<long long>(m.second.second));
    for (const auto& m : groups[gi].members) {
      auto& e = rel.entries[m.first];
      e.generator = static_cast<int>(gi);
      e.multiplier = m.second.first * (L / m.second.second);
    }
  }
  return rel;
}

namespace {

bool resonant(const ShiftRelations& rel, const std::vector<int>& k) {
  // irrational generators: per-group integer combination must vanish
  long long gsum[16] = {0};
  long long rnum = 0, rden = 1;
  for (size_t i = 0; i < k.size(); ++i) {
    const auto& e = rel.entries[i];
    if (e.rational) {
      long long d = std::lcm(rden, e.den);
      rnum = rnum * (d / rden) + static_cast<long long>(k[i]) * e.num *
                                     (d / e.den);
      rden = d;
    } else {
      gsum[e.generator] += static_cast<long long>(k[i]) * e.multiplier;
    }
  }
  for (int g = 0; g < 16; ++g)
    if (gsum[g] != 0) return false;
  return rnum % rden == 0;
}

}  // namespace

LimitFunction rotation_multi_limit(const ShiftRelations& rel,
                                   const std::vector<FourierPoly>& fs) {
  if (rel.entries.size() != fs.size())
    throw Error("arity-mismatch", "one shift per observable required");
  for (const auto& f : fs)
    if (f.dim != 1)
      throw Error("dimension-mismatch",
                  "rotation limits are defined on the 1-torus");
  const size_t l = fs.size();
  LimitFunction lim;
  lim.poly.dim = 1;
  // enumerate the finite product of frequency supports
  std::vector<size_t> idx(l, 0);
  bool done = false;
  while (!done) {
    std::vector<int> k(l);
    std::complex<double> c{1.0, 0.0};
    bool empty = false;
    for (size_t i = 0; i < l; ++i) {
      if (fs[i].terms.empty()) {
        empty = true;
        break;
      }
      k[i] = fs[i].terms[idx[i]].freq[0];
      c *= fs[i].terms[idx[i]].coeff;
    }
    if (empty) break;
    if (resonant(rel, k)) {
      int total = 0;
      for (int v : k) total += v;
      lim.poly.add_term({total}, c);
    }
    size_t i = 0;
    for (; i < l; ++i) {
      if (++idx[i] < fs[i].terms.size()) break;
      idx[i] = 0;
    }
    if (i == l) done = true;
  }
  lim.poly.canonicalize();
  lim.conditional = !rel.certain;
  std::string prov = "resonance over multipliers";
  for (const auto& e : rel.entries) {
    prov += ' ';
    prov += e.rational ? std::to_string(e.num) + "/" + std::to_string(e.den)
                       : "g" + std::to_string(e.generator) + "x" +
                             std::to_string(e.multiplier);
  }
  lim.provenance = prov;
  return lim;
}

LimitFunction rotation_multi_limit(const std::vector<double>& shifts,
                                   const std::vector<FourierPoly>& fs) {
  return rotation_multi_limit(detect_relations(shifts), fs);
}

Snapshot poly_snapshot(const FourierPoly& p, const SpacePtr& space,
                       const SamplerSpec& sampler) {
  auto pts = std::make_shared<std::vector<Point>>(
      sample_points(sampler, space));
  Snapshot s;
  s.points = pts;
  s.values.reserve(pts->size());
  for (const auto& x : *pts) s.values.push_back(p.eval(x.coords));
  return s;
}

IdentityGap progression_identity_gap(double alpha, double beta,
                                     const std::vector<FourierPoly>& fs, int l,
                                     long N) {
  if (static_cast<int>(fs.size()) != l)
    throw Error("arity-mismatch", "need l observables");
  auto space = Space::torus(1);
  SamplerSpec sampler = SamplerSpec::grid({1024});
  auto make_system = [&](double a) {
    SystemSpec sys;
    sys.space = space;
    sys.sampler = sampler;
    for (int i = 1; i <= l; ++i)
      sys.maps.push_back(Transformation::rotation(space, Coords{i * a}));
    return sys;
  };
  std::vector<Observable> obs;
  obs.reserve(l);
  for (const auto& f : fs) obs.push_back(Observable::from_poly(f, false));

  Snapshot sa = multi_average_function(make_system(alpha), obs, N, sampler);
  Snapshot sb = multi_average_function(make_system(beta), obs, N, sampler);

  // progression resonance never references the rotation angle
  ShiftRelations rel;
  rel.entries.resize(l);
  for (int i = 0; i < l; ++i) {
    rel.entries[i].generator = 0;
    rel.entries[i].multiplier = i + 1;
  }
  rel.certain = false;
  IdentityGap r;
  r.oracle = rotation_multi_limit(rel, fs);
  Snapshot so = poly_snapshot(r.oracle.poly, space, sampler);
  // snapshots share the sampler definition but not the point vector object
  so.points = sa.points;
  sb.points = sa.points;
  r.gap_between = l2_diff(sa, sb);
  r.gap_alpha = l2_diff(sa, so);
  r.gap_beta = l2_diff(sb, so);
  return r;
}

double product_counterexample_limit(const FourierPoly& f) {
  double s = 0.0;
  for (const auto& t : f.terms) s += std::norm(t.coeff);
  return s;
}

}  // namespace ergolab
