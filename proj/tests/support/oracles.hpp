#pragma once

// Test-only oracles. Deliberately naive and independent of the library's
// elimination code: determinants by cofactor expansion, ranks from minors,
// solutions by Cramer's rule.

#include <cstddef>
#include <vector>

#include "pfrac/affine_form.hpp"
#include "pfrac/arrangement.hpp"
#include "pfrac/rational.hpp"

namespace pfrac::oracle {

using Grid = std::vector<std::vector<Rational>>;

inline Rational det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational sum;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    if (c % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

// Calls fn(rows) for every k-subset of [0, count) in lexicographic order.
template <typename Fn>
void subsets(std::size_t count, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < count; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  const std::size_t limit = std::min(rows.size(), cols);
  for (std::size_t k = limit; k > 0; --k) {
    bool found = false;
    subsets(rows.size(), k, [&](const std::vector<std::size_t>& rs) {
      if (found) return;
      subsets(cols, k, [&](const std::vector<std::size_t>& cs) {
        if (found) return;
        Grid g;
        for (auto r : rs) {
          std::vector<Rational> row;
          for (auto c : cs) row.push_back(rows[r][c]);
          g.push_back(row);
        }
        if (!det(g).is_zero()) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Cramer's rule for the common zero of n forms; empty when singular.
inline std::vector<Rational> cramer_point(const std::vector<AffineForm>& forms) {
  const std::size_t n = forms.size();
  Grid a;
  for (const auto& f : forms) a.push_back(f.a);
  const Rational d = det(a);
  if (d.is_zero()) return {};
  std::vector<Rational> x;
  for (std::size_t c = 0; c < n; ++c) {
    Grid ac = a;
    for (std::size_t r = 0; r < n; ++r) ac[r][c] = -forms[r].mu;
    x.push_back(det(ac) / d);
  }
  return x;
}

/// Brute-force L(X_p): every subset of xp (by bitmask) whose minors reach rank n.
inline std::vector<IndexSet> spanning_subsets(const ArrangementInput& in, const IndexSet& xp) {
  std::vector<IndexSet> out;
  const std::size_t k = xp.size();
  for (std::size_t size = in.dimension(); size <= k; ++size) {
    subsets(k, size, [&](const std::vector<std::size_t>& pick) {
      IndexSet s;
      std::vector<std::vector<Rational>> rows;
      for (auto j : pick) {
        s.push_back(xp[j]);
        rows.push_back(in.form(xp[j]).a);
      }
      if (rank(rows, in.dimension()) == in.dimension()) out.push_back(s);
    });
  }
  return out;
}

}  // namespace pfrac::oracle
