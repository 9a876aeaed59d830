#ifndef FLAGCHAR_COMBINAT_HPP
#define FLAGCHAR_COMBINAT_HPP

// Root-set and tableau combinatorics for pattern subgroups of the lower
// unitriangular group: closed subsets of off-diagonal positions, row-standard
// tableaux with their compartment root sets, hooks, main condition sets and
// the stabilizer patterns attached to a verge.
//
// Positions are 1-based pairs (i, j), i != j; (i, j) with i > j is a
// "negative" (strictly lower triangular) position.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagchar/error.hpp"

namespace flagchar {

inline constexpr int kMaxN = 12;

struct Pos {
  int i = 0;
  int j = 0;
  friend bool operator==(Pos a, Pos b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(Pos a, Pos b) { return !(a == b); }
  // Row-major order; this is the canonical position order everywhere.
  friend bool operator<(Pos a, Pos b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

class RootSet {
 public:
  explicit RootSet(int n) : n_(n) {
    require(1 <= n && n <= kMaxN, Errc::unsupported_size,
            "n must be between 1 and " + std::to_string(kMaxN));
  }

  static RootSet phi_minus(int n) {
    RootSet s(n);
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) s.insert(i, j);
    return s;
  }

  int n() const { return n_; }
  int size() const { return int(b_.count()); }
  bool empty() const { return b_.none(); }

  bool contains(int i, int j) const { return in_range(i, j) && b_[idx(i, j)]; }
  bool contains(Pos p) const { return contains(p.i, p.j); }

  void insert(int i, int j) {
    require(in_range(i, j), Errc::invalid_argument,
            "position (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    b_.set(idx(i, j));
  }
  void insert(Pos p) { insert(p.i, p.j); }
  void erase(int i, int j) {
    if (in_range(i, j)) b_.reset(idx(i, j));
  }

  bool is_lower() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j)
        if (i != j && contains(i, j)) return false;
    return true;
  }

  std::vector<Pos> positions() const {
    std::vector<Pos> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j && b_[idx(i, j)]) out.push_back({i, j});
    return out;
  }

  friend RootSet operator|(RootSet a, const RootSet& b) {
    a.match(b);
    a.b_ |= b.b_;
    return a;
  }
  friend RootSet operator&(RootSet a, const RootSet& b) {
    a.match(b);
    a.b_ &= b.b_;
    return a;
  }
  // Set difference.
  friend RootSet operator-(RootSet a, const RootSet& b) {
    a.match(b);
    a.b_ &= ~b.b_;
    return a;
  }
  friend bool operator==(const RootSet& a, const RootSet& b) {
    a.match(b);
    return a.b_ == b.b_;
  }
  friend bool operator!=(const RootSet& a, const RootSet& b) { return !(a == b); }
  bool subset_of(const RootSet& o) const {
    match(o);
    return (b_ & ~o.b_).none();
  }
  bool disjoint_from(const RootSet& o) const {
    match(o);
    return (b_ & o.b_).none();
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (Pos p : positions()) {
      if (!first) s += ",";
      first = false;
      s += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    }
    return s + "}";
  }

 private:
  static size_t idx(int i, int j) { return size_t(i - 1) * kMaxN + size_t(j - 1); }
  bool in_range(int i, int j) const { return 1 <= i && i <= n_ && 1 <= j && j <= n_ && i != j; }
  void match(const RootSet& o) const {
    require(n_ == o.n_, Errc::dimension_mismatch, "root sets over different n");
  }

  int n_;
  std::bitset<kMaxN * kMaxN> b_;
};

// S is closed when (i,j),(j,k) in S and i != k force (i,k) in S.
inline bool is_closed(const RootSet& s) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !s.contains(i, j)) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == j || k == i || !s.contains(j, k)) continue;
        if (!s.contains(i, k)) return false;
      }
    }
  return true;
}

// Whether U_J is normal in U_I for closed J subset of I: mixed products must
// land back in J.
inline bool normality_check(const RootSet& j, const RootSet& i) {
  require(j.subset_of(i), Errc::not_nested, "J must be a subset of I");
  require(is_closed(j) && is_closed(i), Errc::not_closed, "both sets must be closed");
  const int n = i.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        bool mixed = (i.contains(a, b) && j.contains(b, c)) ||
                     (j.contains(a, b) && i.contains(b, c));
        if (mixed && !j.contains(a, c)) return false;
      }
    }
  return true;
}

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int num_parts() const { return int(parts.size()); }
  // Sum of the first r parts.
  int prefix(int r) const {
    int s = 0;
    for (int k = 0; k < r; ++k) s += parts[size_t(k)];
    return s;
  }
  // Compartment (row index of the initial tableau) containing entry i.
  int compartment_of(int i) const {
    for (int r = 1; r <= num_parts(); ++r)
      if (i <= prefix(r)) return r;
    fail(Errc::invalid_argument, "entry beyond shape");
  }
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }

 private:
  void validate() const {
    require(!parts.empty(), Errc::invalid_argument, "composition needs at least one part");
    for (int p : parts) require(p >= 0, Errc::invalid_argument, "parts must be nonnegative");
    require(n() <= kMaxN, Errc::too_large, "n exceeds " + std::to_string(kMaxN));
    require(n() >= 1, Errc::invalid_argument, "empty composition");
  }
};

// All compositions of n with positive parts, in lexicographic order of the
// part vector.
inline std::vector<Composition> compositions(int n) {
  require(1 <= n && n <= kMaxN, Errc::too_large, "n out of range");
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// Two-row compositions (n-m, m), m = 1..n-1.
inline std::vector<Composition> two_part_compositions(int n) {
  std::vector<Composition> out;
  for (int m = 1; m < n; ++m) out.push_back(Composition{n - m, m});
  return out;
}

class Tableau {
 public:
  Tableau(Composition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    const int n = shape_.n();
    require(int(rows_.size()) == shape_.num_parts(), Errc::invalid_argument,
            "row count does not match shape");
    std::vector<bool> seen(size_t(n) + 1, false);
    for (int r = 0; r < shape_.num_parts(); ++r) {
      require(int(rows_[size_t(r)].size()) == shape_.parts[size_t(r)], Errc::invalid_argument,
              "row length does not match shape");
      for (size_t c = 0; c < rows_[size_t(r)].size(); ++c) {
        int v = rows_[size_t(r)][c];
        require(1 <= v && v <= n && !seen[size_t(v)], Errc::invalid_argument,
                "entries must be a permutation of 1..n");
        seen[size_t(v)] = true;
        require(c == 0 || rows_[size_t(r)][c - 1] < v, Errc::not_row_standard,
                "rows must increase strictly");
      }
    }
    row_of_.assign(size_t(n) + 1, 0);
    for (int r = 0; r < shape_.num_parts(); ++r)
      for (int v : rows_[size_t(r)]) row_of_[size_t(v)] = r + 1;
  }

  static Tableau initial(const Composition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts) {
      std::vector<int> row;
      for (int k = 0; k < p; ++k) row.push_back(next++);
      rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));
  }

  const Composition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_of(int entry) const { return row_of_[size_t(entry)]; }

  bool is_initial() const { return *this == initial(shape_); }
  // Standard: strictly increasing down columns as well.
  bool is_standard() const {
    for (size_t r = 1; r < rows_.size(); ++r)
      for (size_t c = 0; c < rows_[r].size(); ++c) {
        if (c >= rows_[r - 1].size()) return false;
        if (rows_[r - 1][c] >= rows_[r][c]) return false;
      }
    return true;
  }

  // The permutation d with (initial tableau) * d = this tableau,
  // positionwise; d[v] is the image of v.
  std::vector<int> d_perm() const {
    std::vector<int> d(size_t(n()) + 1, 0);
    int v0 = 1;
    for (const auto& row : rows_)
      for (int v : row) d[size_t(v0++)] = v;
    return d;
  }

  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows_)
      for (int v : row) w.push_back(v);
    return w;
  }

  // Entries of every row past the first; for two-row shapes this is the
  // defining subset of the tableau.
  std::vector<int> sbar() const {
    std::vector<int> out;
    for (size_t r = 1; r < rows_.size(); ++r)
      for (int v : rows_[r]) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }

  std::string str() const {
    std::string s;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += "|";
      for (size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) s += ",";
        s += std::to_string(rows_[r][c]);
      }
    }
    return s;
  }

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

// All row-standard tableaux of the given shape in lexicographic order of the
// row-reading word. The initial tableau comes first.
inline std::vector<Tableau> enumerate_rstd(const Composition& shape) {
  const int n = shape.n();
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(size_t(shape.num_parts()));
  std::vector<bool> used(size_t(n) + 1, false);

  // Choosing each row as an increasing sequence of unused entries, smallest
  // candidates first, yields reading-word lex order.
  auto rec = [&](auto&& self, int r) -> void {
    if (r == shape.num_parts()) {
      out.push_back(Tableau(shape, rows));
      return;
    }
    int len = shape.parts[size_t(r)];
    std::vector<int>& row = rows[size_t(r)];
    auto pick = [&](auto&& pickself, int k, int from) -> void {
      if (k == len) {
        self(self, r + 1);
        return;
      }
      for (int v = from; v <= n; ++v) {
        if (used[size_t(v)]) continue;
        used[size_t(v)] = true;
        row.push_back(v);
        pickself(pickself, k + 1, v + 1);
        row.pop_back();
        used[size_t(v)] = false;
      }
    };
    pick(pick, 0, 1);
  };
  rec(rec, 0);
  return out;
}

// The five compartment root sets of a row-standard tableau; all are closed
// subsets of the strictly lower positions.
struct TableauRootSets {
  RootSet P, L, I, K, J;
  RootSet L1, L2;  // split of L for two-row shapes (and meaningful generally)
};

inline TableauRootSets root_sets(const Tableau& s) {
  const int n = s.n();
  TableauRootSets r{RootSet(n), RootSet(n), RootSet(n), RootSet(n), RootSet(n),
                    RootSet(n), RootSet(n)};
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      int ri = s.row_of(i), rj = s.row_of(j);
      if (ri <= rj) r.P.insert(i, j);
      if (ri == rj) r.L.insert(i, j);
      if (ri < rj) r.I.insert(i, j);
      if (ri >= rj) r.K.insert(i, j);
      if (ri > rj) r.J.insert(i, j);
      // For two-row shapes: L1 = both entries in row 1, L2 = both in the
      // last row. In general we split L by "first row" vs "same later row".
      if (ri == rj) {
        if (ri == 1)
          r.L1.insert(i, j);
        else
          r.L2.insert(i, j);
      }
    }
  return r;
}

struct Hook {
  Pos centre;
  std::vector<Pos> arm;  // (i,k), j < k < i
  std::vector<Pos> leg;  // (l,j), j < l < i
  std::vector<Pos> full() const {
    std::vector<Pos> out = leg;
    out.push_back(centre);
    out.insert(out.end(), arm.begin(), arm.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline Hook hook(int i, int j, int n) {
  require(1 <= j && j < i && i <= n, Errc::not_negative_root,
          "hook centre must be strictly lower triangular");
  Hook h;
  h.centre = {i, j};
  for (int k = j + 1; k < i; ++k) h.arm.push_back({i, k});
  for (int l = j + 1; l < i; ++l) h.leg.push_back({l, j});
  return h;
}

// A condition set: strictly lower positions, kept sorted row-major.
class ConditionSet {
 public:
  ConditionSet() = default;
  ConditionSet(int n, std::vector<Pos> ps) : n_(n), ps_(std::move(ps)) {
    for (Pos p : ps_)
      require(1 <= p.j && p.j < p.i && p.i <= n, Errc::not_negative_root,
              "conditions must be strictly lower triangular");
    std::sort(ps_.begin(), ps_.end());
    for (size_t k = 1; k < ps_.size(); ++k)
      require(ps_[k] != ps_[k - 1], Errc::invalid_argument, "duplicate condition");
  }

  int n() const { return n_; }
  int size() const { return int(ps_.size()); }
  const std::vector<Pos>& positions() const { return ps_; }
  bool contains(int i, int j) const {
    for (Pos p : ps_)
      if (p.i == i && p.j == j) return true;
    return false;
  }

  std::vector<int> row_indices() const {  // p_i, sorted
    std::vector<int> v;
    for (Pos p : ps_) v.push_back(p.i);
    std::sort(v.begin(), v.end());
    return v;
  }
  std::vector<int> col_indices() const {  // p_j, sorted
    std::vector<int> v;
    for (Pos p : ps_) v.push_back(p.j);
    std::sort(v.begin(), v.end());
    return v;
  }

  // At most one condition per row and per column.
  bool is_main() const {
    auto ri = row_indices();
    auto ci = col_indices();
    return std::adjacent_find(ri.begin(), ri.end()) == ri.end() &&
           std::adjacent_find(ci.begin(), ci.end()) == ci.end();
  }

  // Main, and no index is a row index of one condition and a column index of
  // another: the 2|p| indices are pairwise distinct.
  bool is_completely_hook_disconnected() const {
    if (!is_main()) return false;
    auto ri = row_indices();
    auto ci = col_indices();
    std::vector<int> inter;
    std::set_intersection(ri.begin(), ri.end(), ci.begin(), ci.end(), std::back_inserter(inter));
    return inter.empty();
  }

  friend bool operator==(const ConditionSet& a, const ConditionSet& b) {
    return a.n_ == b.n_ && a.ps_ == b.ps_;
  }

  std::string str() const {
    std::string s = "{";
    for (size_t k = 0; k < ps_.size(); ++k) {
      if (k) s += ",";
      s += "(" + std::to_string(ps_[k].i) + "," + std::to_string(ps_[k].j) + ")";
    }
    return s + "}";
  }

 private:
  int n_ = 0;
  std::vector<Pos> ps_;
};

// Whether p fits the tableau s (two-row shapes): every condition row index
// lies in sbar(s) and no condition column index does.
inline bool fits(const ConditionSet& p, const Tableau& s) {
  require(s.shape().num_parts() <= 2, Errc::not_two_part, "fits is defined for two-row shapes");
  std::vector<int> sb = s.sbar();
  auto in_sbar = [&](int v) { return std::binary_search(sb.begin(), sb.end(), v); };
  for (Pos c : p.positions())
    if (!in_sbar(c.i) || in_sbar(c.j)) return false;
  return true;
}

// The minimal fitting tableau of a completely hook disconnected main p:
// shape (n-k, k), second row the sorted condition row indices.
inline Tableau canonical_fitting_tableau(const ConditionSet& p, int n) {
  require(p.is_completely_hook_disconnected(), Errc::not_main,
          "canonical context needs a completely hook disconnected main set");
  const int k = p.size();
  require(2 * k <= n, Errc::invalid_argument, "2|p| must not exceed n");
  if (k == 0) return Tableau::initial(Composition{n});
  std::vector<int> second = p.row_indices();
  std::vector<int> first;
  std::vector<bool> used(size_t(n) + 1, false);
  for (int v : second) used[size_t(v)] = true;
  for (int v = 1; v <= n; ++v)
    if (!used[size_t(v)]) first.push_back(v);
  return Tableau(Composition{n - k, k}, {first, second});
}

// Stabilizer patterns attached to a verge with main condition set p.
//
// R:        right projective stabilizer pattern of [A] in the full group;
//           all positions in zero columns of A plus everything on or below a
//           condition in its column.
// R_o:      R minus p (plain stabilizer pattern).
// R_hat:    R plus the hook-leg positions whose column operators move only
//           main hook intersections.
// R_hat_m:  R_hat minus p.
struct StabilizerData {
  RootSet R, R_o, R_hat, R_hat_m;
};

inline StabilizerData stabilizer_sets(const ConditionSet& p, int n) {
  require(p.is_main(), Errc::not_main, "stabilizer sets need a main condition set");
  RootSet R(n);
  auto cols = p.col_indices();
  auto in_cols = [&](int c) { return std::binary_search(cols.begin(), cols.end(), c); };
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (!in_cols(j)) R.insert(i, j);
  for (Pos c : p.positions())
    for (int r = c.i; r <= n; ++r)
      if (r > c.j) R.insert(r, c.j);

  RootSet Rhat = R;
  // (b,j) on the leg of a condition (i,j), moving the single column-j entry
  // to (i,b); that lands on a main hook intersection exactly when some
  // condition (s,b) sits below it in column b, i.e. j < b < i < s.
  for (Pos c : p.positions())
    for (int b = c.j + 1; b < c.i; ++b)
      for (Pos c2 : p.positions())
        if (c2.j == b && c2.i > c.i) Rhat.insert(b, c.j);

  RootSet pset(n);
  for (Pos c : p.positions()) pset.insert(c);
  return StabilizerData{R, R - pset, Rhat, Rhat - pset};
}

// Context-dependent split of a fitting two-row tableau's root sets relative
// to p: the parts of L1, L2, J that stabilize (or scale) the averaged verge.
struct ContextSets {
  RootSet L1_0, L2_0, L1_1, J_0;
};

inline ContextSets context_sets(const ConditionSet& p, const Tableau& s) {
  require(p.is_main(), Errc::not_main, "context sets need a main condition set");
  require(fits(p, s), Errc::does_not_fit, "p does not fit s");
  const int n = s.n();
  auto rs = root_sets(s);
  auto rows = p.row_indices();
  auto cols = p.col_indices();
  auto in_rows = [&](int v) { return std::binary_search(rows.begin(), rows.end(), v); };
  auto in_cols = [&](int v) { return std::binary_search(cols.begin(), cols.end(), v); };

  ContextSets cs{RootSet(n), RootSet(n), RootSet(n), RootSet(n)};
  for (Pos ij : rs.L1.positions()) {
    bool zero_col = !in_cols(ij.j);
    bool cond_above = false;
    for (Pos c : p.positions())
      if (c.j == ij.j && c.i < ij.i) cond_above = true;
    if (zero_col || cond_above) cs.L1_0.insert(ij);
    if (in_cols(ij.i) && in_cols(ij.j)) {
      // two conditions (s, i), (t, j) with s > t > i > j
      bool found = false;
      for (Pos a : p.positions())
        for (Pos b : p.positions())
          if (a.j == ij.i && b.j == ij.j && a.i > b.i && b.i > ij.i) found = true;
      if (found) cs.L1_1.insert(ij);
    }
  }
  for (Pos ij : rs.L2.positions()) {
    bool zero_row = !in_rows(ij.i);
    bool cond_right = false;
    for (Pos c : p.positions())
      if (c.i == ij.i && c.j > ij.j) cond_right = true;
    if (zero_row || cond_right) cs.L2_0.insert(ij);
  }
  for (Pos aj : rs.J.positions()) {
    bool zero_col = !in_cols(aj.j);
    bool cond_on_or_above = false;
    for (Pos c : p.positions())
      if (c.j == aj.j && c.i <= aj.i) cond_on_or_above = true;
    if (zero_col || cond_on_or_above) cs.J_0.insert(aj);
  }
  return cs;
}

}  // namespace flagchar

#endif
