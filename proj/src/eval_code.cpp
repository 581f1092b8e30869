#include "ghwlab/eval_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ghwlab/errors.hpp"

namespace ghwlab {

namespace {

// proportional iff u = c v for some nonzero scalar c
bool proportional(const FieldSpec& f, const std::vector<std::uint16_t>& u,
                  const std::vector<std::uint16_t>& v) {
  std::uint16_t c = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return false;
    if (u[i] != 0) {
      std::uint16_t ratio = f.mul(u[i], f.inv(v[i]));
      if (c == 0)
        c = ratio;
      else if (c != ratio)
        return false;
    }
  }
  return true;
}

}  // namespace

PointSet::PointSet(FieldSpec f, int s, std::vector<std::vector<std::uint16_t>> points)
    : f_(f), s_(s), points_(std::move(points)) {
  if (s < 1) throw std::invalid_argument("arity must be positive");
  for (const auto& pt : points_) {
    if (static_cast<int>(pt.size()) != s) throw std::invalid_argument("point arity mismatch");
    bool nonzero = false;
    for (std::uint16_t v : pt) {
      if (v >= f.p()) throw std::invalid_argument("point entry not a canonical residue");
      nonzero |= v != 0;
    }
    if (!nonzero) throw std::invalid_argument("zero point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (proportional(f, points_[i], points_[j]))
        throw std::invalid_argument("proportional points at " + std::to_string(i) + " and " +
                                    std::to_string(j));
}

PointSet points_from_graph(const Graph& g, const FieldSpec& f) {
  if (!g.is_connected()) throw DisconnectedError("graph is not connected");
  std::vector<std::vector<std::uint16_t>> pts;
  pts.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    std::vector<std::uint16_t> pt(g.vertex_count(), 0);
    pt[e.u] = 1;
    pt[e.v] = 1;
    pts.push_back(std::move(pt));
  }
  return PointSet(f, g.vertex_count(), std::move(pts));
}

std::vector<Monomial> monomial_basis(int s, int d) {
  if (s < 1 || d < 0) throw std::invalid_argument("bad monomial basis parameters");
  std::vector<Monomial> out;
  Monomial cur(s, 0);
  // lexicographically descending: assign to the leftmost variable first
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == s - 1) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

LinearCode evaluation_code(const PointSet& x, int d) {
  const FieldSpec& f = x.field();
  auto basis = monomial_basis(x.arity(), d);
  FMatrix gen(f, basis.size(), x.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int j = 0; j < x.size(); ++j) {
      std::uint16_t v = 1;
      for (int var = 0; var < x.arity(); ++var)
        v = f.mul(v, f.pow(x.point(j)[var], static_cast<std::uint32_t>(basis[i][var])));
      gen.set(i, j, v);
    }
  }
  return LinearCode::from_generator(gen);
}

int delta_X(const PointSet& x, int d, int r, DeltaMethod method, const GhwOptions& opts) {
  LinearCode c = evaluation_code(x, d);
  if (r < 1 || r > c.dimension())
    throw std::invalid_argument("delta_X needs 1 <= r <= dim, got r = " + std::to_string(r));
  switch (method) {
    case DeltaMethod::bruteforce:
      return ghw(c, r, opts).delta;
    case DeltaMethod::duality: {
      LinearCode dual = c.dual();
      WeightHierarchy dh = hierarchy_bruteforce(dual, dual.dimension(), opts);
      return wei_complete(c.length(), c.dimension(), {}, dh).deltas[r - 1];
    }
    case DeltaMethod::automatic:
      return hierarchy_auto(c, r, opts).deltas[r - 1];
  }
  throw std::logic_error("unhandled method");
}

int hyp_X(const PointSet& x, int d, int r, DeltaMethod method, const GhwOptions& opts) {
  return x.size() - delta_X(x, d, r, method, opts);
}

FMatrix vanishing_linear_forms(const PointSet& x) {
  // forms c with c . P = 0 for every point P: the left kernel of the s x m
  // matrix whose columns are the points
  FMatrix m(x.field(), x.size(), x.arity());
  for (int j = 0; j < x.size(); ++j)
    for (int var = 0; var < x.arity(); ++var) m.set(j, var, x.point(j)[var]);
  return nullspace(m);
}

int biparticity_via_forms(const PointSet& x, CoeffDomain domain) {
  const FieldSpec& f = x.field();
  if (f.p() == 2)
    throw std::invalid_argument("coefficient domains +-1 need odd characteristic");
  int s = x.arity();
  if (s > 20) throw BudgetExceededError("form enumeration over arity " + std::to_string(s),
                                        std::to_string(s));
  const std::uint16_t minus = f.neg(1);
  auto missed = [&](const std::vector<std::uint16_t>& coeff) {
    int count = 0;
    for (int j = 0; j < x.size(); ++j) {
      std::uint32_t acc = 0;
      for (int var = 0; var < s; ++var)
        acc += static_cast<std::uint32_t>(f.mul(coeff[var], x.point(j)[var]));
      if (acc % f.p() != 0) ++count;
    }
    return count;
  };

  int best = x.size() + 1;
  std::vector<std::uint16_t> coeff(s, 0);
  if (domain == CoeffDomain::pm_one) {
    // first coefficient pinned to +1 factors out global scaling
    coeff.assign(s, 1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (s - 1)); ++mask) {
      for (int i = 1; i < s; ++i)
        coeff[i] = ((mask >> (i - 1)) & 1) ? minus : 1;
      best = std::min(best, missed(coeff));
    }
    return best;
  }
  // zero_pm_one: ternary odometer over {0, +1, -1}^s minus the zero vector.
  // Forms vanishing on all of x evaluate to the zero codeword (a bipartition
  // form does, on a bipartite graph) and do not bound the minimum distance.
  const std::uint16_t vals[3] = {0, 1, minus};
  std::vector<int> digit(s, 0);
  std::uint64_t count = 1;
  for (int i = 0; i < s; ++i) count *= 3;
  for (std::uint64_t it = 1; it < count; ++it) {
    for (int i = s; i-- > 0;) {
      if (++digit[i] < 3) break;
      digit[i] = 0;
    }
    for (int i = 0; i < s; ++i) coeff[i] = vals[digit[i]];
    int hit = missed(coeff);
    if (hit > 0) best = std::min(best, hit);
  }
  return best;
}

}  // namespace ghwlab
