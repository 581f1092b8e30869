#pragma once

#include <vector>

#include "ghwlab/graph.hpp"
#include "ghwlab/linear_code.hpp"

namespace ghwlab {

// Finite set of nonzero, pairwise non-proportional points of F_p^s; the
// evaluation domain. Incidence vectors of a connected graph qualify whenever
// the graph is simple.
class PointSet {
 public:
  PointSet(FieldSpec f, int s, std::vector<std::vector<std::uint16_t>> points);

  const FieldSpec& field() const { return f_; }
  int arity() const { return s_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::uint16_t>& point(int j) const { return points_[j]; }

 private:
  FieldSpec f_;
  int s_;
  std::vector<std::vector<std::uint16_t>> points_;
};

// columns of the incidence matrix as points of F_p^s
PointSet points_from_graph(const Graph& g, const FieldSpec& f);

// exponent vector of length s summing to d
using Monomial = std::vector<int>;

// all degree-d monomials in s variables, lexicographically descending on the
// exponent vector; size C(s+d-1, d)
std::vector<Monomial> monomial_basis(int s, int d);

// code spanned by the evaluations of the degree-d monomials at the points
LinearCode evaluation_code(const PointSet& x, int d);

enum class DeltaMethod { automatic, bruteforce, duality };

// r-th generalized Hamming weight of evaluation_code(x, d). `automatic`
// enumerates primal subspaces while the count fits the budget and otherwise
// completes through the dual hierarchy.
int delta_X(const PointSet& x, int d, int r, DeltaMethod method = DeltaMethod::automatic,
            const GhwOptions& opts = {});

// |x| - delta_X: the largest number of points a codimension-r system of
// degree-d hypersurfaces can cut out of x
int hyp_X(const PointSet& x, int d, int r, DeltaMethod method = DeltaMethod::automatic,
          const GhwOptions& opts = {});

// linear forms vanishing on every point, as canonical RREF coefficient rows
FMatrix vanishing_linear_forms(const PointSet& x);

enum class CoeffDomain { pm_one, zero_pm_one };

// Minimum number of points missed by a nontrivial form with restricted
// coefficients; odd characteristic only. pm_one pins the first coefficient to
// +1; zero_pm_one excludes the zero vector. Over graph point sets pm_one
// computes the edge biparticity and zero_pm_one the minimum distance of the
// degree-1 code.
int biparticity_via_forms(const PointSet& x, CoeffDomain domain);

}  // namespace ghwlab
