#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghwlab/fmatrix.hpp"

namespace ghwlab {

using BigInt = boost::multiprecision::cpp_int;

// number of r-dimensional subspaces of F_q^k
BigInt gaussian_binomial(int k, int r, std::uint32_t q);

// Linear code represented by its canonical RREF generator matrix, so two
// codes are equal iff their representations are.
class LinearCode {
 public:
  // rows span the code; rank deficiency is fine, the RREF keeps a basis
  static LinearCode from_generator(const FMatrix& gen);

  const FieldSpec& field() const { return gen_.field(); }
  int length() const { return static_cast<int>(gen_.cols()); }
  int dimension() const { return static_cast<int>(gen_.rows()); }
  const FMatrix& generator() const { return gen_; }

  LinearCode dual() const;
  bool contains(std::span<const std::uint16_t> word) const;

  bool operator==(const LinearCode&) const = default;

 private:
  explicit LinearCode(FMatrix gen) : gen_(std::move(gen)) {}
  FMatrix gen_;
};

// size of the union of supports of the rows; rows must lie in c
int support_weight(const LinearCode& c, const FMatrix& basis);

std::uint64_t default_budget();  // enumeration visit budget

struct GhwOptions {
  std::uint64_t budget = default_budget();
  int threads = 1;
};

enum class Method { bruteforce, duality, graph };

struct GhwResult {
  int delta;
  FMatrix witness;  // r x n basis of a minimizing subspace, first in enumeration order
};

// r-th generalized Hamming weight by exhaustive enumeration of the canonical
// RREF coefficient matrices of r-dimensional subspaces of the message space.
// Deterministic for any thread count: ties are broken by global enumeration
// rank. Throws BudgetExceededError when the subspace count exceeds the budget.
GhwResult ghw(const LinearCode& c, int r, const GhwOptions& opts = {});

struct WeightHierarchy {
  std::vector<int> deltas;      // deltas[i] is the (i+1)-th weight
  std::vector<Method> methods;  // how each entry was obtained
};

WeightHierarchy hierarchy_bruteforce(const LinearCode& c, int r_max, const GhwOptions& opts = {});

// Completes a partial primal hierarchy from the full dual hierarchy via the
// duality complement: the primal weights are {1..n} minus {n+1-d : d dual}.
// Throws std::invalid_argument on malformed inputs and std::logic_error if the
// complement contradicts supplied primal entries.
WeightHierarchy wei_complete(int n, int k, const WeightHierarchy& primal_partial,
                             const WeightHierarchy& dual_full);

// Per-r bruteforce while the subspace count fits the budget; once it does not,
// the remaining entries come from the full dual hierarchy via wei_complete.
WeightHierarchy hierarchy_auto(const LinearCode& c, int r_max, const GhwOptions& opts = {});

// minimum weight over all q^k - 1 nonzero codewords; independent of ghw
int min_distance_by_codeword_enumeration(const LinearCode& c);

namespace detail {

// Streams the canonical RREF coefficient matrices of all r-dimensional
// subspaces of F_q^k: pivot column sets in lexicographic order, free entries
// as a base-q odometer with the last free cell fastest. total() matches
// gaussian_binomial(k, r, q); seek() allows range partitioning.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int k, int r, std::uint32_t q);

  std::uint64_t total() const { return total_; }
  void seek(std::uint64_t rank);

  const std::vector<int>& pivots() const { return pivots_; }
  // free cells in odometer order: (row, col) pairs, row-major
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }
  const std::vector<std::uint16_t>& digits() const { return digits_; }

  // Advances to the next subspace. Returns false at the end. `on_digit` is
  // called as on_digit(row, col, old_value, new_value) for every free cell
  // that changes; `on_block` is called with no arguments when the pivot set
  // changed (all digits reset to zero, state must be rebuilt).
  template <class OnDigit, class OnBlock>
  bool advance(OnDigit on_digit, OnBlock on_block) {
    for (std::size_t i = cells_.size(); i-- > 0;) {
      std::uint16_t old = digits_[i];
      if (old + 1u < q_) {
        digits_[i] = static_cast<std::uint16_t>(old + 1);
        on_digit(cells_[i].first, cells_[i].second, old, digits_[i]);
        return true;
      }
      digits_[i] = 0;
      on_digit(cells_[i].first, cells_[i].second, old, std::uint16_t{0});
    }
    if (!next_pivot_set()) return false;
    on_block();
    return true;
  }

 private:
  bool next_pivot_set();     // lex successor; false when exhausted
  void rebuild_cells();      // recompute free cells for current pivots
  std::uint64_t block_size() const;

  int k_, r_;
  std::uint32_t q_;
  std::uint64_t total_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::uint16_t> digits_;
};

}  // namespace detail

}  // namespace ghwlab
