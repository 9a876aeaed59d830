#ifndef FLAGCHAR_MONOMIAL_HPP
#define FLAGCHAR_MONOMIAL_HPP

// The monomial action of U_K on the lidempotent basis of C(V_J, +): single
// truncated row/column operations with their scalars, orbit enumeration with
// transversals and verges, orbit characters as exact cyclotomic class
// functions, and two-sided orbits in the full context.
//
// Labels A in V_J are encoded as base-q digit codes over the row-major
// position order of J; the scalar attached to a step is kept as the exponent
// of the fixed additive character, an element of Z/p.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagchar/cyclotomic.hpp"
#include "flagchar/error.hpp"
#include "flagchar/pattern.hpp"

namespace flagchar {

// A basis label: a matrix with support inside the context's J.
struct Label {
  Mat a;
};

inline Label make_label(Mat a, const Split& sp) {
  require(a.n() == sp.n(), Errc::dimension_mismatch, "label dimension mismatch");
  require(a.field().get() == sp.F.get(), Errc::field_mismatch, "label over wrong field");
  require(a.supp_off_diagonal().subset_of(sp.J), Errc::invalid_argument,
          "label support must lie in J");
  for (int i = 1; i <= a.n(); ++i)
    require(a.at(i, i) == 0, Errc::invalid_argument, "labels have zero diagonal");
  return Label{std::move(a)};
}

struct MonomialStep {
  int scalar_exp = 0;  // exponent of the additive character, in Z/p
  Label result;
};

// At most one nonzero entry in every row and every column.
inline bool is_verge_matrix(const Mat& a) {
  for (int i = 1; i <= a.n(); ++i) {
    int cnt = 0;
    for (int j = 1; j <= a.n(); ++j)
      if (i != j && a.at(i, j) != 0) ++cnt;
    if (cnt > 1) return false;
  }
  for (int j = 1; j <= a.n(); ++j) {
    int cnt = 0;
    for (int i = 1; i <= a.n(); ++i)
      if (i != j && a.at(i, j) != 0) ++cnt;
    if (cnt > 1) return false;
  }
  return true;
}

inline ConditionSet main_condition_set(const Mat& a) {
  std::vector<Pos> ps;
  for (int i = 2; i <= a.n(); ++i)
    for (int j = 1; j < i; ++j)
      if (a.at(i, j) != 0) ps.push_back({i, j});
  return ConditionSet(a.n(), ps);
}

// Exponent k with chi_A(M) = zeta_p^k: k = theta_exp(sum over J of A_ij M_ij).
inline int chi_form_exp(const Mat& a, const Mat& m, const RootSet& J) {
  const FieldSpec& f = *a.field();
  fq_repr s = 0;
  for (Pos p : J.positions()) s = f.add(s, f.mul(a.at(p.i, p.j), m.at(p.i, p.j)));
  return f.theta_exp(s);
}

namespace detail {

// Digit-level engine for one split: encoding, decoding and the per-generator
// update programs (all reads and writes touch disjoint positions, so updates
// run in place).
class MonomialContext {
 public:
  explicit MonomialContext(Split sp) : sp_(std::move(sp)), jpos_(sp_.J.positions()) {
    const std::uint32_t q = sp_.F->q();
    for (auto& row : digit_at_) row.fill(-1);
    for (size_t k = 0; k < jpos_.size(); ++k)
      digit_at_[size_t(jpos_[k].i)][size_t(jpos_[k].j)] = int(k);
    label_count_ = 1;
    for (size_t k = 0; k < jpos_.size(); ++k) {
      require(label_count_ <= (std::uint64_t(1) << 22) / q, Errc::too_large,
              "label space exceeds 2^22");
      label_count_ *= q;
    }
    kpos_ = sp_.K.positions();
    for (const Pos& kl : kpos_) progs_.push_back(build_program(kl));
  }

  const Split& split() const { return sp_; }
  const std::vector<Pos>& jpos() const { return jpos_; }
  const std::vector<Pos>& kpos() const { return kpos_; }
  std::uint64_t label_count() const { return label_count_; }

  void decode(std::uint64_t code, std::vector<fq_repr>& digits) const {
    const std::uint32_t q = sp_.F->q();
    digits.resize(jpos_.size());
    for (size_t k = 0; k < jpos_.size(); ++k) {
      digits[k] = fq_repr(code % q);
      code /= q;
    }
  }
  std::uint64_t encode(const std::vector<fq_repr>& digits) const {
    const std::uint32_t q = sp_.F->q();
    std::uint64_t code = 0;
    for (size_t k = digits.size(); k-- > 0;) code = code * q + digits[k];
    return code;
  }

  Mat mat_of(std::uint64_t code) const {
    Mat a(sp_.F, sp_.n());
    const std::uint32_t q = sp_.F->q();
    for (size_t k = 0; k < jpos_.size(); ++k) {
      a.at(jpos_[k].i, jpos_[k].j) = fq_repr(code % q);
      code /= q;
    }
    return a;
  }
  std::uint64_t code_of(const Mat& a) const {
    const std::uint32_t q = sp_.F->q();
    std::uint64_t code = 0;
    for (size_t k = jpos_.size(); k-- > 0;) code = code * q + a.at(jpos_[k].i, jpos_[k].j);
    return code;
  }

  int gen_index(Pos kl) const {
    for (size_t k = 0; k < kpos_.size(); ++k)
      if (kpos_[k] == kl) return int(k);
    return -1;
  }

  // Apply x_{kl}(alpha) from the right; returns the character exponent.
  int apply(std::vector<fq_repr>& d, int gen, fq_repr alpha) const {
    const FieldSpec& f = *sp_.F;
    const GenProgram& pr = progs_[size_t(gen)];
    int exp = 0;
    if (pr.scalar_digit >= 0) exp = f.theta_exp(f.mul(alpha, d[size_t(pr.scalar_digit)]));
    for (auto [t, s] : pr.col_updates) d[size_t(t)] = f.sub(d[size_t(t)], f.mul(alpha, d[size_t(s)]));
    for (auto [t, s] : pr.row_updates) d[size_t(t)] = f.add(d[size_t(t)], f.mul(alpha, d[size_t(s)]));
    return exp;
  }

  // Apply a whole element of U_K (by its unique root-element factorization);
  // accumulates the exponent mod p.
  int apply_element(std::vector<fq_repr>& d, const Mat& g) const {
    int exp = 0;
    for (auto& [pos, alpha] : factor_unitriangular(g, sp_.K)) {
      int gi = gen_index(pos);
      require(gi >= 0, Errc::check_failed, "factor outside K");
      exp = (exp + apply(d, gi, alpha)) % sp_.F->p();
    }
    return exp;
  }

 private:
  struct GenProgram {
    int scalar_digit = -1;
    std::vector<std::pair<int, int>> col_updates;  // target -= alpha * source
    std::vector<std::pair<int, int>> row_updates;  // target += alpha * source
  };

  GenProgram build_program(Pos kl) const {
    GenProgram pr;
    const int n = sp_.n();
    if (sp_.J.contains(kl)) pr.scalar_digit = digit_at_[size_t(kl.i)][size_t(kl.j)];
    // Add -alpha times column l to column k, truncated to J.
    for (int r = 1; r <= n; ++r) {
      int t = digit(r, kl.i), s = digit(r, kl.j);
      if (t >= 0 && s >= 0) pr.col_updates.push_back({t, s});
    }
    // For L-positions additionally add alpha times row k to row l.
    if (sp_.L.contains(kl)) {
      for (int c = 1; c <= n; ++c) {
        int t = digit(kl.j, c), s = digit(kl.i, c);
        if (t >= 0 && s >= 0) pr.row_updates.push_back({t, s});
      }
    }
    return pr;
  }

  int digit(int i, int j) const {
    if (i < 1 || j < 1 || i > sp_.n() || j > sp_.n() || i == j) return -1;
    return digit_at_[size_t(i)][size_t(j)];
  }

  Split sp_;
  std::vector<Pos> jpos_, kpos_;
  std::uint64_t label_count_;
  std::array<std::array<int, kMaxN + 1>, kMaxN + 1> digit_at_{};
  std::vector<GenProgram> progs_;
};

}  // namespace detail

inline MonomialStep act_right(const Label& l, Pos kl, fq_repr alpha, const Split& sp) {
  require(sp.K.contains(kl), Errc::position_not_in_k, "generator position must lie in K");
  const FieldSpec& f = *sp.F;
  const Mat& a = l.a;
  int exp = sp.J.contains(kl) ? f.theta_exp(f.mul(alpha, a.at(kl.i, kl.j))) : 0;
  Mat b = a;
  for (int r = 1; r <= a.n(); ++r)
    if (sp.J.contains(r, kl.i)) b.at(r, kl.i) = f.sub(a.at(r, kl.i), f.mul(alpha, a.at(r, kl.j)));
  if (sp.L.contains(kl))
    for (int c = 1; c <= a.n(); ++c)
      if (sp.J.contains(kl.j, c)) b.at(kl.j, c) = f.add(a.at(kl.j, c), f.mul(alpha, a.at(kl.i, c)));
  return MonomialStep{exp, Label{std::move(b)}};
}

// Left action; defined in the full context only. x_{ij}(alpha) . e_A scales
// by theta(alpha A_ij) and adds -alpha times row i to row j, truncated.
inline MonomialStep act_left(const Label& l, Pos ij, fq_repr alpha, const Split& sp) {
  require(sp.is_full(), Errc::context_not_full, "left action needs J = Phi^-, L = empty");
  require(sp.J.contains(ij), Errc::position_not_in_k, "generator position must be strictly lower");
  const FieldSpec& f = *sp.F;
  const Mat& a = l.a;
  int exp = f.theta_exp(f.mul(alpha, a.at(ij.i, ij.j)));
  Mat b = a;
  for (int c = 1; c < ij.j; ++c) b.at(ij.j, c) = f.sub(a.at(ij.j, c), f.mul(alpha, a.at(ij.i, c)));
  return MonomialStep{exp, Label{std::move(b)}};
}

// Action of a whole group element, composed along its factorization.
inline MonomialStep act_right_elem(const Label& l, const Mat& g, const Split& sp) {
  detail::MonomialContext ctx(sp);
  std::vector<fq_repr> d;
  ctx.decode(ctx.code_of(l.a), d);
  int exp = ctx.apply_element(d, g);
  return MonomialStep{exp, Label{ctx.mat_of(ctx.encode(d))}};
}

struct Orbit {
  Split sp;
  std::vector<std::uint64_t> labels;  // sorted ascending by code
  std::uint64_t rep_code = 0;

  struct Edge {
    std::int64_t parent = -1;  // index into labels; -1 at the representative
    Pos gen{0, 0};
    fq_repr alpha = 0;
    int depth = 0;
  };
  std::vector<Edge> tree;  // aligned with labels

  std::uint64_t size() const { return labels.size(); }
  std::int64_t index_of(std::uint64_t code) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), code);
    if (it == labels.end() || *it != code) return -1;
    return it - labels.begin();
  }
  int transversal_depth() const {
    int d = 0;
    for (const Edge& e : tree) d = std::max(d, e.depth);
    return d;
  }
  // Generator word carrying the representative to labels[idx].
  std::vector<std::pair<Pos, fq_repr>> word_to(std::int64_t idx) const {
    std::vector<std::pair<Pos, fq_repr>> w;
    while (tree[size_t(idx)].parent >= 0) {
      w.push_back({tree[size_t(idx)].gen, tree[size_t(idx)].alpha});
      idx = tree[size_t(idx)].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

namespace detail {

inline Orbit orbit_from_bfs(const MonomialContext& ctx, std::uint64_t start,
                            std::uint64_t budget) {
  const Split& sp = ctx.split();
  const std::uint32_t q = sp.F->q();

  struct Item {
    std::uint64_t code;
    std::int64_t parent;
    Pos gen;
    fq_repr alpha;
    int depth;
  };
  std::vector<Item> found;
  std::vector<std::uint64_t> seen;  // sorted insert would be O(n^2); use hash-ish set
  found.push_back({start, -1, Pos{0, 0}, 0, 0});
  std::vector<bool> visited;
  visited.assign(size_t(ctx.label_count()), false);
  visited[size_t(start)] = true;

  std::vector<fq_repr> d, dwork;
  for (size_t head = 0; head < found.size(); ++head) {
    check_budget(found.size(), budget, "orbit enumeration");
    ctx.decode(found[head].code, d);
    for (size_t gi = 0; gi < ctx.kpos().size(); ++gi)
      for (std::uint32_t a = 1; a < q; ++a) {
        dwork = d;
        ctx.apply(dwork, int(gi), fq_repr(a));
        std::uint64_t nc = ctx.encode(dwork);
        if (visited[size_t(nc)]) continue;
        visited[size_t(nc)] = true;
        found.push_back({nc, std::int64_t(head), ctx.kpos()[gi], fq_repr(a),
                         found[head].depth + 1});
      }
  }
  (void)seen;

  // Sort by code, remapping the BFS tree.
  std::vector<size_t> order(found.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return found[x].code < found[y].code; });
  std::vector<std::int64_t> where(found.size());
  for (size_t k = 0; k < order.size(); ++k) where[order[k]] = std::int64_t(k);

  Orbit o{ctx.split(), {}, start, {}};
  o.labels.reserve(found.size());
  o.tree.reserve(found.size());
  for (size_t k = 0; k < order.size(); ++k) {
    const Item& it = found[order[k]];
    o.labels.push_back(it.code);
    Orbit::Edge e;
    e.parent = it.parent < 0 ? -1 : where[size_t(it.parent)];
    e.gen = it.gen;
    e.alpha = it.alpha;
    e.depth = it.depth;
    o.tree.push_back(e);
  }
  return o;
}

}  // namespace detail

inline Orbit orbit_enumerate(const Label& start, const Split& sp,
                             std::uint64_t budget = kDefaultBudget) {
  detail::MonomialContext ctx(sp);
  return detail::orbit_from_bfs(ctx, ctx.code_of(start.a), budget);
}

// Partition of all of E_J into orbits, ordered by smallest label code.
inline std::vector<Orbit> orbit_partition(const Split& sp, std::uint64_t budget = kDefaultBudget) {
  detail::MonomialContext ctx(sp);
  check_budget(ctx.label_count(), budget, "label space enumeration");
  std::vector<bool> done(size_t(ctx.label_count()), false);
  std::vector<Orbit> out;
  for (std::uint64_t c = 0; c < ctx.label_count(); ++c) {
    if (done[size_t(c)]) continue;
    out.push_back(detail::orbit_from_bfs(ctx, c, budget));
    for (std::uint64_t l : out.back().labels) done[size_t(l)] = true;
  }
  return out;
}

// The unique label in the orbit with at most one nonzero entry per row and
// column; exactly one must exist.
inline std::pair<std::int64_t, Label> find_verge(const Orbit& o) {
  detail::MonomialContext ctx(o.sp);
  std::int64_t at = -1;
  int count = 0;
  for (size_t k = 0; k < o.labels.size(); ++k) {
    Mat a = ctx.mat_of(o.labels[k]);
    if (is_verge_matrix(a)) {
      ++count;
      at = std::int64_t(k);
    }
  }
  require(count == 1, Errc::verge_count_violation,
          "orbit contains " + std::to_string(count) + " verges");
  return {at, Label{ctx.mat_of(o.labels[size_t(at)])}};
}

// Two-sided orbit in the full context: closure under both actions.
struct Biorbit {
  Split sp;
  std::vector<std::uint64_t> labels;  // sorted
};

inline Biorbit biorbit_enumerate(const Label& start, const Split& sp,
                                 std::uint64_t budget = kDefaultBudget) {
  require(sp.is_full(), Errc::context_not_full, "biorbits live in the full context");
  detail::MonomialContext ctx(sp);
  const std::uint32_t q = sp.F->q();
  const int n = sp.n();
  std::vector<bool> visited(size_t(ctx.label_count()), false);
  std::vector<std::uint64_t> queue{ctx.code_of(start.a)};
  visited[size_t(queue[0])] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    check_budget(queue.size(), budget, "biorbit enumeration");
    Label cur{ctx.mat_of(queue[head])};
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        for (std::uint32_t a = 1; a < q; ++a) {
          for (bool left : {false, true}) {
            Label nxt = left ? act_left(cur, {i, j}, fq_repr(a), sp).result
                             : act_right(cur, {i, j}, fq_repr(a), sp).result;
            std::uint64_t nc = ctx.code_of(nxt.a);
            if (!visited[size_t(nc)]) {
              visited[size_t(nc)] = true;
              queue.push_back(nc);
            }
          }
        }
  }
  std::sort(queue.begin(), queue.end());
  return Biorbit{sp, std::move(queue)};
}

// Exact class function on U_G given by listed values over the element codes.
struct CharacterFn {
  Fq F;
  RootSet G;
  std::vector<CycInt> values;  // indexed by PatternGroup(F, G) element codes

  const CycInt& degree() const { return values[0]; }
};

// <chi, psi> = |U_G|^(-1) sum over g of chi(g) conj(psi(g)); the sum must be
// a rational integer.
inline Rational inner_product(const CharacterFn& x, const CharacterFn& y) {
  require(x.F.get() == y.F.get(), Errc::context_mismatch, "characters over different fields");
  require(x.G == y.G, Errc::context_mismatch, "characters over different groups");
  require(x.values.size() == y.values.size(), Errc::context_mismatch, "value tables differ");
  CycInt s = CycInt::zero(x.F->p());
  for (size_t k = 0; k < x.values.size(); ++k) s += x.values[k] * y.values[k].conj();
  std::int64_t num = s.rational_value();
  return Rational(num, std::int64_t(x.values.size()));
}

namespace detail {

// chi(g) = sum over labels B in the orbit fixed by g of the accumulated
// step scalar; evaluated for every g in U_G by walking the generator word.
inline CharacterFn character_of_labels(const MonomialContext& ctx,
                                       const std::vector<std::uint64_t>& labels,
                                       const RootSet& G, std::uint64_t budget) {
  const Split& sp = ctx.split();
  require(G.subset_of(sp.K), Errc::context_mismatch, "G must lie inside K");
  require(is_closed(G), Errc::not_closed, "G must be closed");
  PatternGroup ug(sp.F, G);
  check_budget(ug.order(), budget, "character table");
  const int p = sp.F->p();

  // Transition tables per (generator, alpha): label index -> (index, exp).
  const std::uint32_t q = sp.F->q();
  size_t ngen = ctx.kpos().size();
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> trans(
      ngen * size_t(q));
  auto label_index = [&](std::uint64_t code) -> std::int32_t {
    auto it = std::lower_bound(labels.begin(), labels.end(), code);
    require(it != labels.end() && *it == code, Errc::check_failed,
            "label set not action-stable");
    return std::int32_t(it - labels.begin());
  };
  std::vector<fq_repr> d;
  for (size_t gi = 0; gi < ngen; ++gi)
    for (std::uint32_t a = 1; a < q; ++a) {
      auto& tab = trans[gi * q + a];
      tab.resize(labels.size());
      for (size_t k = 0; k < labels.size(); ++k) {
        ctx.decode(labels[k], d);
        int exp = ctx.apply(d, int(gi), fq_repr(a));
        tab[k] = {label_index(ctx.encode(d)), std::int32_t(exp)};
      }
    }

  CharacterFn chi{sp.F, G, {}};
  chi.values.reserve(size_t(ug.order()));
  for (std::uint64_t gc = 0; gc < ug.order(); ++gc) {
    Mat g = ug.element(gc);
    auto word = factor_unitriangular(g, G);
    std::vector<std::pair<int, fq_repr>> steps;
    for (auto& [pos, alpha] : word) {
      int gi = ctx.gen_index(pos);
      require(gi >= 0, Errc::check_failed, "generator outside K");
      steps.push_back({gi, alpha});
    }
    CycInt val = CycInt::zero(p);
    std::vector<std::int64_t> expcount(size_t(p), 0);
    for (std::int32_t k = 0; k < std::int32_t(labels.size()); ++k) {
      std::int32_t at = k;
      int exp = 0;
      for (auto& [gi, alpha] : steps) {
        auto [nx, e] = trans[size_t(gi) * q + alpha][size_t(at)];
        at = nx;
        exp = (exp + e) % p;
      }
      if (at == k) ++expcount[size_t(exp)];
    }
    for (int e = 0; e < p; ++e)
      if (expcount[size_t(e)] != 0) val += CycInt::root(p, e).scaled(expcount[size_t(e)]);
    chi.values.push_back(val);
  }
  return chi;
}

}  // namespace detail

inline CharacterFn orbit_character(const Orbit& o, const RootSet& G,
                                   std::uint64_t budget = kDefaultBudget) {
  detail::MonomialContext ctx(o.sp);
  return detail::character_of_labels(ctx, o.labels, G, budget);
}

// Character of the whole basis module C E_J as a U_G-module.
inline CharacterFn module_character(const Split& sp, const RootSet& G,
                                    std::uint64_t budget = kDefaultBudget) {
  detail::MonomialContext ctx(sp);
  check_budget(ctx.label_count(), budget, "label space enumeration");
  std::vector<std::uint64_t> all(size_t(ctx.label_count()));
  for (std::uint64_t c = 0; c < ctx.label_count(); ++c) all[size_t(c)] = c;
  return detail::character_of_labels(ctx, all, G, budget);
}

}  // namespace flagchar

#endif
