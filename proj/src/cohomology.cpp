#include "hcaa/cohomology.hpp"

#include <algorithm>
#include <map>

namespace hcaa {

Index binomial(Index n, Index k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<Index>> exterior_basis(Index dim, Index k) {
  std::vector<std::vector<Index>> out;
  if (k < 0 || k > dim) return out;
  std::vector<Index> cur(static_cast<size_t>(k));
  for (Index i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    Index i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == dim - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (Index j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

Index exterior_index(Index dim, const std::vector<Index>& multi) {
  const Index k = static_cast<Index>(multi.size());
  Index rank = 0, prev = -1;
  for (Index i = 0; i < k; ++i) {
    const Index c = multi[static_cast<size_t>(i)];
    for (Index v = prev + 1; v < c; ++v) rank += binomial(dim - 1 - v, k - 1 - i);
    prev = c;
  }
  return rank;
}

SparseRatMat ce_differential(const LieAlgebra& l, Index k) {
  const Index n = l.dim();
  require(k >= 0 && k <= n, ErrorKind::InvalidInput, "ce_differential: degree out of range");
  const auto rows = exterior_basis(n, k + 1);
  std::vector<Eigen::Triplet<Rat>> trip;
  std::vector<Index> rest, multi;
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& j = rows[r];
    for (Index a = 0; a <= k; ++a)
      for (Index b = a + 1; b <= k; ++b) {
        const Index x = j[static_cast<size_t>(a)], y = j[static_cast<size_t>(b)];
        rest.clear();
        for (Index t = 0; t <= k; ++t)
          if (t != a && t != b) rest.push_back(j[static_cast<size_t>(t)]);
        const RatMat& adx = l.ad(x);
        for (Index m = 0; m < n; ++m) {
          const Rat& c = adx(m, y);
          if (c == 0) continue;
          const auto pos = std::lower_bound(rest.begin(), rest.end(), m);
          if (pos != rest.end() && *pos == m) continue;
          const Index p = pos - rest.begin();
          multi = rest;
          multi.insert(multi.begin() + p, m);
          const bool negative = ((a + b + p) % 2) != 0;
          trip.emplace_back(static_cast<Index>(r), exterior_index(n, multi), negative ? Rat(-c) : c);
        }
      }
  }
  SparseRatMat d(static_cast<Index>(rows.size()), binomial(n, k));
  d.setFromTriplets(trip.begin(), trip.end());
  d.prune([](Index, Index, const Rat& v) { return v != 0; });
  return d;
}

Index sparse_rank(const SparseRatMat& m) {
  using Row = std::vector<std::pair<Index, Rat>>;
  std::vector<Row> rows(static_cast<size_t>(m.rows()));
  for (Index c = 0; c < m.outerSize(); ++c)
    for (SparseRatMat::InnerIterator it(m, c); it; ++it)
      if (it.value() != 0) rows[static_cast<size_t>(it.row())].emplace_back(it.col(), it.value());
  // Shorter rows first keeps fill-in low.
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  std::map<Index, Row> pivots;  // leading column -> row with leading entry 1
  Row scratch;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Rat f = row.front().second;
      const Row& p = it->second;
      scratch.clear();
      size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || p[j].first < row[i].first) {
          scratch.emplace_back(p[j].first, -f * p[j].second);
          ++j;
        } else {
          Rat v = row[i].second - f * p[j].second;
          if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    const Rat inv = Rat(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    pivots.emplace(row.front().first, std::move(row));
  }
  return static_cast<Index>(pivots.size());
}

BettiVector betti(const LieAlgebra& l) {
  const Index n = l.dim();
  std::vector<Index> ranks(static_cast<size_t>(n + 1), 0);  // rank of d_k
  for (Index k = 0; k < n; ++k) ranks[static_cast<size_t>(k)] = sparse_rank(ce_differential(l, k));
  BettiVector b;
  for (Index k = 0; k <= n; ++k) {
    const Index prev = k > 0 ? ranks[static_cast<size_t>(k - 1)] : 0;
    b.push_back(Int(binomial(n, k) - ranks[static_cast<size_t>(k)] - prev));
  }
  return b;
}

BettiVector betti_closed_form(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "betti_closed_form: n must be positive");
  const Index p = 4 * n;
  auto c2 = [p](Index q) {
    const Int c = binomial(p, q);
    return Int(c * c);
  };
  const Index top = 8 * n + 4;
  BettiVector b(static_cast<size_t>(top + 1));
  for (Index k = 0; 2 * k <= top; ++k) b[static_cast<size_t>(2 * k)] = c2(k) + 6 * c2(k - 1) + c2(k - 2);
  for (Index k = 0; 2 * k + 1 <= top; ++k) b[static_cast<size_t>(2 * k + 1)] = 4 * (c2(k) + c2(k - 1));
  return b;
}

bool salamon_check(const BettiVector& b, int p) {
  require(p >= 1 && static_cast<int>(b.size()) >= 2 * p + 1, ErrorKind::InvalidInput,
          "salamon_check: Betti vector too short");
  Int rhs = 0;
  for (int j = 1; j <= 2 * p; ++j) {
    const Int term = Int(3 * j * j - p) * b[static_cast<size_t>(2 * p - j)];
    rhs += (j % 2 == 0) ? term : Int(-term);
  }
  return Int(p) * b[static_cast<size_t>(2 * p)] == 2 * rhs;
}

bool wakakuwa_check(const BettiVector& b) {
  for (size_t k = 1; k < b.size(); k += 2)
    if (b[k] % 4 != 0) return false;
  return true;
}

bool poincare_dual(const BettiVector& b) {
  for (size_t k = 0; k < b.size(); ++k)
    if (b[k] != b[b.size() - 1 - k]) return false;
  return true;
}

bool ThreeForm::is_alternating() const {
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      for (Index k = 0; k < dim_; ++k) {
        const Rat& v = (*this)(i, j, k);
        if (v != -(*this)(j, i, k) || v != -(*this)(i, k, j)) return false;
      }
  return true;
}

bool ThreeForm::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& v) { return v == 0; });
}

RatVec ThreeForm::to_exterior() const {
  const auto basis = exterior_basis(dim_, 3);
  RatVec v(static_cast<Index>(basis.size()));
  for (size_t r = 0; r < basis.size(); ++r) v(static_cast<Index>(r)) = (*this)(basis[r][0], basis[r][1], basis[r][2]);
  return v;
}

ThreeForm ThreeForm::from_exterior(Index dim, const RatVec& v) {
  const auto basis = exterior_basis(dim, 3);
  require(v.size() == static_cast<Index>(basis.size()), ErrorKind::InvalidInput, "three-form has the wrong size");
  ThreeForm f(dim);
  for (size_t r = 0; r < basis.size(); ++r) {
    const Rat& x = v(static_cast<Index>(r));
    const Index i = basis[r][0], j = basis[r][1], k = basis[r][2];
    f(i, j, k) = f(j, k, i) = f(k, i, j) = x;
    f(j, i, k) = f(i, k, j) = f(k, j, i) = -x;
  }
  return f;
}

RatVec two_form_to_exterior(const RatMat& m) {
  const Index n = m.rows();
  RatVec v(binomial(n, 2));
  Index r = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) v(r++) = m(a, b);
  return v;
}

RatVec exterior_derivative(const LieAlgebra& l, Index k, const RatVec& form) {
  const SparseRatMat d = ce_differential(l, k);
  require(form.size() == d.cols(), ErrorKind::InvalidInput, "exterior_derivative: wrong form size");
  return d * form;
}

}  // namespace hcaa
