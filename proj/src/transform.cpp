#include "ergolab/transform.hpp"

namespace ergolab {

Transformation Transformation::identity(SpacePtr s) {
  Transformation t;
  t.kind = MapKind::Identity;
  t.space = std::move(s);
  return t;
}

Transformation Transformation::rotation(SpacePtr s, Coords shift) {
  if (static_cast<int>(shift.size()) != s->dim)
    throw Error("dimension-mismatch", "shift length != space dimension");
  if (s->kind == SpaceKind::Heisenberg)
    throw Error("space-mismatch", "use nilrotation on the Heisenberg space");
  Transformation t;
  t.kind = MapKind::Rotation;
  t.space = std::move(s);
  t.shift = std::move(shift);
  return t;
}

Transformation Transformation::nilrotation(double alpha, double beta,
                                           double gamma) {
  Transformation t;
  t.kind = MapKind::NilRotation;
  t.space = Space::heisenberg();
  t.element = {alpha, beta, gamma};
  return t;
}

Transformation Transformation::product(std::vector<Transformation> parts) {
  std::vector<SpacePtr> spaces;
  spaces.reserve(parts.size());
  for (const auto& p : parts) spaces.push_back(p.space);
  Transformation t;
  t.kind = MapKind::Product;
  t.space = Space::product(std::move(spaces));
  t.parts = std::move(parts);
  return t;
}

Transformation Transformation::skew_lift(Transformation base_map,
                                         std::vector<Observable> rho) {
  if (rho.empty()) throw Error("bad-cocycle", "empty fiber shift");
  Transformation t;
  t.kind = MapKind::SkewLift;
  t.fiber_dim = static_cast<int>(rho.size());
  t.space = Space::product({base_map.space, Space::torus(t.fiber_dim)});
  t.base = std::make_shared<Transformation>(std::move(base_map));
  t.fiber_shift = std::move(rho);
  return t;
}

void apply_in_place(const Transformation& t, Coords& c, int offset) {
  switch (t.kind) {
    case MapKind::Identity:
      break;
    case MapKind::Rotation:
      for (int i = 0; i < t.space->dim; ++i)
        c[offset + i] = wrap_unit(c[offset + i] + t.shift[i]);
      break;
    case MapKind::NilRotation: {
      // a.x = (alpha+x, beta+y, gamma+z+alpha*y), then reduce
      double x = c[offset], y = c[offset + 1], z = c[offset + 2];
      c[offset] = t.element[0] + x;
      c[offset + 1] = t.element[1] + y;
      c[offset + 2] = t.element[2] + z + t.element[0] * y;
      reduce_in_place(c, *t.space, offset);
      break;
    }
    case MapKind::Product: {
      int off = offset;
      for (const auto& p : t.parts) {
        apply_in_place(p, c, off);
        off += p.space->dim;
      }
      break;
    }
    case MapKind::SkewLift: {
      int bd = t.base->space->dim;
      // rho is evaluated at the pre-image base point
      Point y{Coords(c.begin() + offset, c.begin() + offset + bd),
              t.base->space};
      apply_in_place(*t.base, c, offset);
      for (int i = 0; i < t.fiber_dim; ++i) {
        double r = t.fiber_shift[i].eval(y).real();
        c[offset + bd + i] = wrap_unit(c[offset + bd + i] + r);
      }
      break;
    }
  }
}

Point apply(const Transformation& t, const Point& x) {
  if (!same_space(*t.space, *x.space))
    throw Error("space-mismatch", "transformation and point spaces differ");
  Point r = x;
  apply_in_place(t, r.coords, 0);
  return r;
}

namespace {

void iterate_in_place(const Transformation& t, long long n, Coords& c,
                      int offset) {
  switch (t.kind) {
    case MapKind::Identity:
      break;
    case MapKind::Rotation: {
      double nd = static_cast<double>(n);
      for (int i = 0; i < t.space->dim; ++i)
        c[offset + i] = wrap_unit(mod1_scaled(nd, t.shift[i]) + c[offset + i]);
      break;
    }
    case MapKind::NilRotation: {
      // a^n = (n a1, n a2, n a3 + C(n,2) a1 a2); result is reduce(a^n . x).
      // All large terms are folded mod 1 before combining.
      double a1 = t.element[0], a2 = t.element[1], a3 = t.element[2];
      double nd = static_cast<double>(n);
      double tri = 0.5 * nd * (nd - 1.0);
      double x0 = c[offset], y0 = c[offset + 1], z0 = c[offset + 2];
      double xr = wrap_unit(mod1_scaled(nd, a1) + x0);
      double yr = wrap_unit(mod1_scaled(nd, a2) + y0);
      double zfull = wrap_unit(wrap_unit(mod1_scaled(nd, a3) +
                                         mod1_prod(tri, a1, a2)) +
                               wrap_unit(z0 + mod1_prod(nd, a1, y0)));
      // subtract xr * m_y with m_y = (n a2 + y0) - yr, folded piecewise
      double corr = wrap_unit(mod1_prod(nd, a2, xr) + (y0 - yr) * xr);
      c[offset] = xr;
      c[offset + 1] = yr;
      c[offset + 2] = wrap_unit(zfull - corr);
      break;
    }
    case MapKind::Product: {
      int off = offset;
      for (const auto& p : t.parts) {
        iterate_in_place(p, n, c, off);
        off += p.space->dim;
      }
      break;
    }
    case MapKind::SkewLift:
      // no closed form; repeated application
      for (long long j = 0; j < n; ++j) apply_in_place(t, c, offset);
      break;
  }
}

}  // namespace

Point iterate(const Transformation& t, long long n, const Point& x) {
  if (n < 0) throw Error("bad-argument", "iterate requires n >= 0");
  if (!same_space(*t.space, *x.space))
    throw Error("space-mismatch", "transformation and point spaces differ");
  Point r = x;
  iterate_in_place(t, n, r.coords, 0);
  return r;
}

Transformation inverse(const Transformation& t) {
  switch (t.kind) {
    case MapKind::Identity:
      return t;
    case MapKind::Rotation: {
      Transformation r = t;
      for (auto& s : r.shift) s = -s;
      return r;
    }
    case MapKind::NilRotation: {
      auto inv = heis_inv(t.element);
      return Transformation::nilrotation(inv[0], inv[1], inv[2]);
    }
    case MapKind::Product: {
      std::vector<Transformation> parts;
      parts.reserve(t.parts.size());
      for (const auto& p : t.parts) parts.push_back(inverse(p));
      return Transformation::product(std::move(parts));
    }
    case MapKind::SkewLift: {
      // S^{-1}(y,v) = (B^{-1} y, v - rho(B^{-1} y))
      auto binv = std::make_shared<Transformation>(inverse(*t.base));
      std::vector<Observable> rho_inv;
      rho_inv.reserve(t.fiber_shift.size());
      for (const auto& r : t.fiber_shift) {
        rho_inv.push_back(Observable::from_fn(
            [binv, r](const Point& y) {
              Point py = apply(*binv, y);
              return std::complex<double>{-r.eval(py).real(), 0.0};
            },
            r.sup_bound, true));
      }
      Transformation s;
      s.kind = MapKind::SkewLift;
      s.space = t.space;
      s.base = binv;
      s.fiber_shift = std::move(rho_inv);
      s.fiber_dim = t.fiber_dim;
      return s;
    }
  }
  throw Error("bad-argument", "unknown transformation kind");
}

std::optional<Coords> as_rotation_shift(const Transformation& t) {
  switch (t.kind) {
    case MapKind::Identity:
      return Coords(static_cast<size_t>(t.space->dim), 0.0);
    case MapKind::Rotation:
      return t.shift;
    case MapKind::Product: {
      Coords all;
      for (const auto& p : t.parts) {
        auto s = as_rotation_shift(p);
        if (!s) return std::nullopt;
        all.insert(all.end(), s->begin(), s->end());
      }
      return all;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace ergolab
