#include "ghwlab/linear_code.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <thread>

#include "ghwlab/errors.hpp"
#include "ghwlab/kernels.hpp"

namespace ghwlab {

BigInt gaussian_binomial(int k, int r, std::uint32_t q) {
  if (r < 0 || r > k) return 0;
  if (r == 0) return 1;
  BigInt num = 1, den = 1;
  BigInt qb = q;
  for (int i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(qb, static_cast<unsigned>(k - i)) - 1;
    den *= boost::multiprecision::pow(qb, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;  // exact
}

LinearCode LinearCode::from_generator(const FMatrix& gen) {
  RrefResult r = rref(gen);
  FMatrix basis(gen.field(), r.rank, gen.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < gen.cols(); ++j) basis.set(i, j, r.matrix.at(i, j));
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::dual() const { return LinearCode::from_generator(nullspace(gen_)); }

bool LinearCode::contains(std::span<const std::uint16_t> word) const {
  if (word.size() != gen_.cols()) throw std::invalid_argument("word length mismatch");
  const FieldSpec& f = field();
  std::vector<std::uint16_t> w(word.begin(), word.end());
  // reduce against the RREF basis; pivot of row i is the first nonzero column
  for (int i = 0; i < dimension(); ++i) {
    std::size_t piv = 0;
    while (piv < gen_.cols() && gen_.at(i, piv) == 0) ++piv;
    if (piv == gen_.cols()) break;
    if (w[piv] == 0) continue;
    kernels::axpy_mod_u16(w.data(), gen_.row(i).data(), f.neg(w[piv]), f.p(), w.size());
  }
  return std::all_of(w.begin(), w.end(), [](std::uint16_t v) { return v == 0; });
}

int support_weight(const LinearCode& c, const FMatrix& basis) {
  if (basis.cols() != static_cast<std::size_t>(c.length()))
    throw std::invalid_argument("basis length mismatch");
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!c.contains(basis.row(i))) throw std::invalid_argument("basis row outside the code");
  int w = 0;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (basis.at(i, j) != 0) {
        ++w;
        break;
      }
    }
  }
  return w;
}

std::uint64_t default_budget() { return 100'000'000; }

namespace detail {

SubspaceEnumerator::SubspaceEnumerator(int k, int r, std::uint32_t q) : k_(k), r_(r), q_(q) {
  if (r < 1 || r > k) throw std::invalid_argument("subspace dimension out of range");
  BigInt t = gaussian_binomial(k, r, q);
  if (t > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("subspace count exceeds 64 bits");
  total_ = t.convert_to<std::uint64_t>();
  pivots_.resize(r);
  for (int i = 0; i < r; ++i) pivots_[i] = i;
  rebuild_cells();
}

void SubspaceEnumerator::rebuild_cells() {
  cells_.clear();
  std::vector<char> is_pivot(k_, 0);
  for (int c : pivots_) is_pivot[c] = 1;
  for (int i = 0; i < r_; ++i)
    for (int j = pivots_[i] + 1; j < k_; ++j)
      if (!is_pivot[j]) cells_.push_back({i, j});
  digits_.assign(cells_.size(), 0);
}

bool SubspaceEnumerator::next_pivot_set() {
  for (int i = r_ - 1; i >= 0; --i) {
    if (pivots_[i] < k_ - (r_ - i)) {
      ++pivots_[i];
      for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[i] + (j - i);
      rebuild_cells();
      return true;
    }
  }
  return false;
}

std::uint64_t SubspaceEnumerator::block_size() const {
  std::uint64_t b = 1;
  for (std::size_t i = 0; i < cells_.size(); ++i) b *= q_;
  return b;
}

void SubspaceEnumerator::seek(std::uint64_t rank) {
  pivots_.resize(r_);
  for (int i = 0; i < r_; ++i) pivots_[i] = i;
  rebuild_cells();
  for (;;) {
    std::uint64_t b = block_size();
    if (rank < b) break;
    rank -= b;
    if (!next_pivot_set())
      throw std::out_of_range("seek past the last subspace");
  }
  // last cell is the fastest digit
  for (std::size_t i = cells_.size(); i-- > 0;) {
    digits_[i] = static_cast<std::uint16_t>(rank % q_);
    rank /= q_;
  }
  if (rank != 0) throw std::out_of_range("seek past the last subspace");
}

}  // namespace detail

namespace {

using detail::SubspaceEnumerator;

// Mapped-subspace state for q = 2 with rows packed in single words (n <= 64).
struct PackedState1 {
  const FMatrix& gen;
  const SubspaceEnumerator& en;
  std::vector<std::uint64_t> gen_rows;  // one word per generator row
  std::vector<std::uint64_t> rows;      // r mapped rows

  PackedState1(const FMatrix& g, const SubspaceEnumerator& e) : gen(g), en(e) {
    gen_rows.resize(g.rows(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (g.at(i, j)) gen_rows[i] |= std::uint64_t{1} << j;
    rows.resize(en.pivots().size());
    rebuild();
  }

  void rebuild() {
    const auto& piv = en.pivots();
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = gen_rows[piv[i]];
    const auto& cells = en.cells();
    const auto& digits = en.digits();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (digits[i]) rows[cells[i].first] ^= gen_rows[cells[i].second];
  }

  void on_digit(int row, int col, std::uint16_t, std::uint16_t) {
    rows[row] ^= gen_rows[col];  // any digit change over GF(2) is a flip
  }

  int support() const {
    std::uint64_t acc = 0;
    for (std::uint64_t w : rows) acc |= w;
    return std::popcount(acc);
  }

  FMatrix snapshot() const {
    FMatrix m(gen.field(), rows.size(), gen.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < gen.cols(); ++j)
        if ((rows[i] >> j) & 1) m.set(i, j, 1);
    return m;
  }
};

// q = 2, arbitrary length; rows are word arrays handled by the kernel layer.
struct PackedStateW {
  const FMatrix& gen;
  const SubspaceEnumerator& en;
  std::size_t words;
  std::vector<std::uint64_t> gen_rows;  // k x words
  std::vector<std::uint64_t> rows;      // r x words
  std::vector<std::uint64_t> acc;

  PackedStateW(const FMatrix& g, const SubspaceEnumerator& e)
      : gen(g), en(e), words((g.cols() + 63) / 64) {
    gen_rows.assign(g.rows() * words, 0);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (g.at(i, j)) gen_rows[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    rows.assign(en.pivots().size() * words, 0);
    acc.resize(words);
    rebuild();
  }

  void rebuild() {
    std::fill(rows.begin(), rows.end(), 0);
    const auto& piv = en.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i)
      kernels::xor_words(&rows[i * words], &gen_rows[piv[i] * words], words);
    const auto& cells = en.cells();
    const auto& digits = en.digits();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (digits[i])
        kernels::xor_words(&rows[cells[i].first * words], &gen_rows[cells[i].second * words],
                           words);
  }

  void on_digit(int row, int col, std::uint16_t, std::uint16_t) {
    kernels::xor_words(&rows[row * words], &gen_rows[col * words], words);
  }

  int support() {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i * words < rows.size(); ++i)
      kernels::or_words(acc.data(), &rows[i * words], words);
    return static_cast<int>(kernels::popcount_words(acc.data(), words));
  }

  FMatrix snapshot() const {
    FMatrix m(gen.field(), rows.size() / words, gen.cols());
    for (std::size_t i = 0; i * words < rows.size(); ++i)
      for (std::size_t j = 0; j < gen.cols(); ++j)
        if ((rows[i * words + (j >> 6)] >> (j & 63)) & 1) m.set(i, j, 1);
    return m;
  }
};

// odd characteristic: residue rows plus per-row nonzero masks
struct DenseState {
  const FMatrix& gen;
  const SubspaceEnumerator& en;
  FieldSpec f;
  std::size_t n, mask_words, r;
  std::vector<std::uint16_t> rows;    // r x n
  std::vector<std::uint64_t> masks;   // r x mask_words
  std::vector<char> dirty;
  std::vector<std::uint64_t> acc;

  DenseState(const FMatrix& g, const SubspaceEnumerator& e)
      : gen(g), en(e), f(g.field()), n(g.cols()), mask_words((g.cols() + 63) / 64),
        r(en.pivots().size()) {
    rows.assign(r * n, 0);
    masks.assign(r * mask_words, 0);
    dirty.assign(r, 1);
    acc.resize(mask_words);
    rebuild();
  }

  void rebuild() {
    std::fill(rows.begin(), rows.end(), 0);
    const auto& piv = en.pivots();
    for (std::size_t i = 0; i < r; ++i)
      kernels::axpy_mod_u16(&rows[i * n], gen.row(piv[i]).data(), 1, f.p(), n);
    const auto& cells = en.cells();
    const auto& digits = en.digits();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (digits[i])
        kernels::axpy_mod_u16(&rows[cells[i].first * n], gen.row(cells[i].second).data(),
                              digits[i], f.p(), n);
    std::fill(dirty.begin(), dirty.end(), 1);
  }

  void on_digit(int row, int col, std::uint16_t old, std::uint16_t nv) {
    std::uint16_t delta = f.sub(nv, old);
    kernels::axpy_mod_u16(&rows[row * n], gen.row(col).data(), delta, f.p(), n);
    dirty[row] = 1;
  }

  int support() {
    for (std::size_t i = 0; i < r; ++i) {
      if (dirty[i]) {
        kernels::nonzero_mask_u16(&masks[i * mask_words], &rows[i * n], n);
        dirty[i] = 0;
      }
    }
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < r; ++i)
      kernels::or_words(acc.data(), &masks[i * mask_words], mask_words);
    return static_cast<int>(kernels::popcount_words(acc.data(), mask_words));
  }

  FMatrix snapshot() const {
    FMatrix m(f, r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i * n + j]);
    return m;
  }
};

struct BestHit {
  int weight = INT_MAX;
  std::uint64_t rank = std::numeric_limits<std::uint64_t>::max();
};

template <class State>
BestHit scan_range(const FMatrix& gen, int k, int r, std::uint32_t q, std::uint64_t lo,
                   std::uint64_t hi) {
  BestHit best;
  if (lo >= hi) return best;
  SubspaceEnumerator en(k, r, q);
  en.seek(lo);
  State st(gen, en);
  for (std::uint64_t idx = lo;;) {
    int w = st.support();
    if (w < best.weight) best = {w, idx};
    if (++idx >= hi) break;
    en.advance([&](int row, int col, std::uint16_t o, std::uint16_t nv)
                   { st.on_digit(row, col, o, nv); },
               [&] { st.rebuild(); });
  }
  return best;
}

template <class State>
GhwResult ghw_with(const LinearCode& c, int r, std::uint64_t total, int threads) {
  const FMatrix& gen = c.generator();
  int k = c.dimension();
  std::uint32_t q = c.field().p();

  int t = std::clamp<int>(threads, 1, 64);
  if (static_cast<std::uint64_t>(t) > total) t = static_cast<int>(total);

  std::vector<BestHit> hits(t);
  if (t == 1) {
    hits[0] = scan_range<State>(gen, k, r, q, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) {
      std::uint64_t lo = total / t * i + std::min<std::uint64_t>(i, total % t);
      std::uint64_t hi = lo + total / t + (static_cast<std::uint64_t>(i) < total % t ? 1 : 0);
      pool.emplace_back(
          [&, i, lo, hi] { hits[i] = scan_range<State>(gen, k, r, q, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  // ties break on global enumeration rank, so results match for any thread count
  BestHit best;
  for (const BestHit& h : hits)
    if (h.weight < best.weight || (h.weight == best.weight && h.rank < best.rank)) best = h;

  SubspaceEnumerator en(k, r, q);
  en.seek(best.rank);
  State st(gen, en);
  return {best.weight, st.snapshot()};
}

}  // namespace

GhwResult ghw(const LinearCode& c, int r, const GhwOptions& opts) {
  if (r < 1 || r > c.dimension())
    throw std::invalid_argument("ghw needs 1 <= r <= dim, got r = " + std::to_string(r));
  BigInt total = gaussian_binomial(c.dimension(), r, c.field().p());
  if (total > opts.budget)
    throw BudgetExceededError("ghw(r=" + std::to_string(r) + ") needs " + total.str() +
                                  " subspace visits, budget is " + std::to_string(opts.budget),
                              total.str());
  std::uint64_t n64 = total.convert_to<std::uint64_t>();
  if (c.field().p() == 2) {
    if (c.length() <= 64) return ghw_with<PackedState1>(c, r, n64, opts.threads);
    return ghw_with<PackedStateW>(c, r, n64, opts.threads);
  }
  return ghw_with<DenseState>(c, r, n64, opts.threads);
}

WeightHierarchy hierarchy_bruteforce(const LinearCode& c, int r_max, const GhwOptions& opts) {
  if (r_max < 0 || r_max > c.dimension())
    throw std::invalid_argument("r_max out of range");
  WeightHierarchy h;
  for (int r = 1; r <= r_max; ++r) {
    h.deltas.push_back(ghw(c, r, opts).delta);
    h.methods.push_back(Method::bruteforce);
    if (r > 1 && h.deltas[r - 1] <= h.deltas[r - 2])
      throw std::logic_error("weight hierarchy not strictly increasing");
  }
  return h;
}

WeightHierarchy wei_complete(int n, int k, const WeightHierarchy& primal_partial,
                             const WeightHierarchy& dual_full) {
  if (k < 0 || k > n) throw std::invalid_argument("bad dimensions");
  std::vector<char> excluded(n + 1, 0);
  int prev = 0;
  for (int d : dual_full.deltas) {
    if (d <= prev) throw std::invalid_argument("dual hierarchy not strictly increasing");
    if (d < 1 || d > n) throw std::invalid_argument("dual weight out of range");
    excluded[n + 1 - d] = 1;
    prev = d;
  }
  WeightHierarchy out;
  for (int w = 1; w <= n; ++w)
    if (!excluded[w]) out.deltas.push_back(w);
  if (static_cast<int>(out.deltas.size()) != k)
    throw std::invalid_argument("duality complement has " + std::to_string(out.deltas.size()) +
                                " weights, expected " + std::to_string(k));
  if (primal_partial.deltas.size() > out.deltas.size())
    throw std::invalid_argument("more primal entries than the dimension allows");
  out.methods.assign(out.deltas.size(), Method::duality);
  for (std::size_t i = 0; i < primal_partial.deltas.size(); ++i) {
    if (primal_partial.deltas[i] != out.deltas[i])
      throw std::logic_error("supplied primal weight " + std::to_string(primal_partial.deltas[i]) +
                             " contradicts duality complement " + std::to_string(out.deltas[i]));
    if (i < primal_partial.methods.size()) out.methods[i] = primal_partial.methods[i];
  }
  return out;
}

WeightHierarchy hierarchy_auto(const LinearCode& c, int r_max, const GhwOptions& opts) {
  if (r_max < 0 || r_max > c.dimension())
    throw std::invalid_argument("r_max out of range");
  WeightHierarchy h;
  std::uint32_t q = c.field().p();
  for (int r = 1; r <= r_max; ++r) {
    if (gaussian_binomial(c.dimension(), r, q) <= opts.budget) {
      h.deltas.push_back(ghw(c, r, opts).delta);
      h.methods.push_back(Method::bruteforce);
      continue;
    }
    // finish through the dual; throws BudgetExceededError if that is also too big
    LinearCode d = c.dual();
    WeightHierarchy dh = hierarchy_bruteforce(d, d.dimension(), opts);
    WeightHierarchy full = wei_complete(c.length(), c.dimension(), h, dh);
    full.deltas.resize(r_max);
    full.methods.resize(r_max, Method::duality);
    return full;
  }
  return h;
}

int min_distance_by_codeword_enumeration(const LinearCode& c) {
  int k = c.dimension();
  if (k == 0) throw std::invalid_argument("zero code has no nonzero codeword");
  std::uint32_t q = c.field().p();
  BigInt space = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  if (space > (BigInt(1) << 26))
    throw BudgetExceededError("codeword enumeration needs " + space.str() + " visits",
                              space.str());
  const FMatrix& gen = c.generator();
  std::size_t n = gen.cols();
  const FieldSpec& f = c.field();
  std::vector<std::uint16_t> digits(k, 0), word(n, 0);
  std::uint64_t steps = space.convert_to<std::uint64_t>() - 1;
  int best = INT_MAX;
  for (std::uint64_t s = 0; s < steps; ++s) {
    // odometer increment; every changed digit adds its row once mod q
    for (int i = k; i-- > 0;) {
      kernels::axpy_mod_u16(word.data(), gen.row(i).data(), 1, f.p(), n);
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    int w = 0;
    for (std::uint16_t v : word)
      if (v) ++w;
    best = std::min(best, w);
  }
  return best;
}

}  // namespace ghwlab
