#include "jonq/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jonq {

BettiTable::BettiTable(std::vector<std::vector<int>> shifts) : shifts_(std::move(shifts)) {
  for (auto& s : shifts_) std::sort(s.begin(), s.end());
}

std::size_t BettiTable::count(std::size_t i, int shift) const {
  if (i >= shifts_.size()) return 0;
  return static_cast<std::size_t>(std::count(shifts_[i].begin(), shifts_[i].end(), shift));
}

HilbertNumerator BettiTable::alternating_numerator() const {
  HilbertNumerator n(std::vector<long long>{});
  for (std::size_t i = 0; i < shifts_.size(); ++i)
    for (int s : shifts_[i]) {
      if (s < 0) throw std::domain_error("alternating_numerator: negative shift");
      auto t = HilbertNumerator::monomial(1, static_cast<unsigned>(s));
      n = i % 2 ? n - t : n + t;
    }
  return n;
}

std::string BettiTable::ranks_string() const {
  std::string out;
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    if (i) out += " | ";
    out += std::to_string(shifts_[i].size());
  }
  return out;
}

std::string BettiTable::shifts_string() const {
  std::string out;
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t k = 0; k < shifts_[i].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(shifts_[i][k]);
    }
  }
  return out;
}

template <class K>
PolyMatrix<K>::PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<K>(ring_)) {}

template <class K>
std::vector<Polynomial<K>> PolyMatrix<K>::column(std::size_t c) const {
  std::vector<Polynomial<K>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

template <class K>
bool PolyMatrix<K>::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix out(ring_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c) += multiply(a, o.at(k, c));
    }
  return out;
}

template <class K>
bool PolyMatrix<K>::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

template <class K>
BettiTable FreeComplex<K>::betti() const {
  return BettiTable(shifts);
}

template <class K>
bool FreeComplex<K>::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i] * maps[i + 1]).is_zero()) return false;
  return true;
}

template <class K>
bool FreeComplex<K>::is_graded() const {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& m = maps[i];
    if (m.rows() != shifts[i].size() || m.cols() != shifts[i + 1].size()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& p = m.at(r, c);
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.total_degree() != shifts[i + 1][c] - shifts[i][r]) return false;
      }
  }
  return true;
}

template <class K>
bool FreeComplex<K>::is_minimal() const {
  for (const auto& m : maps)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero() && m.at(r, c).is_constant()) return false;
  return true;
}

namespace {

template <class K>
struct MTerm {
  Monomial m;
  std::uint32_t comp;
  typename K::Elem c;
};

template <class K>
using MElem = std::vector<MTerm<K>>;

// Basis data of a free module carrying an induced (Schreyer) order.
struct Frame {
  std::vector<Monomial> lead;
  std::vector<std::vector<std::uint32_t>> path;
  std::size_t size() const { return lead.size(); }
};

template <class K>
int frame_compare(const Ring<K>& r, const Frame& f, const Monomial& a, std::uint32_t ca, const Monomial& b,
                  std::uint32_t cb) {
  int c = r.compare(a * f.lead[ca], b * f.lead[cb]);
  if (c != 0) return c;
  const auto& pa = f.path[ca];
  const auto& pb = f.path[cb];
  for (std::size_t k = 0; k < pa.size(); ++k)
    if (pa[k] != pb[k]) return pa[k] < pb[k] ? 1 : -1;
  return 0;
}

template <class K>
MElem<K> normalize_elem(const Ring<K>& r, const Frame& f, MElem<K> terms) {
  const K& F = r.field();
  std::sort(terms.begin(), terms.end(), [&](const MTerm<K>& a, const MTerm<K>& b) {
    int c = frame_compare(r, f, a.m, a.comp, b.m, b.comp);
    if (c != 0) return c > 0;
    return a.comp < b.comp;
  });
  MElem<K> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (F.is_zero(out.back().c)) out.pop_back();
    } else if (!F.is_zero(t.c)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// a - c*m*b
template <class K>
MElem<K> sub_shifted(const Ring<K>& r, const Frame& f, const MElem<K>& a, const typename K::Elem& c,
                     const Monomial& m, const MElem<K>& b) {
  const K& F = r.field();
  MElem<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    Monomial bm;
    if (j < b.size()) bm = b[j].m * m;
    if (i >= a.size()) cmp = -1;
    else if (j >= b.size()) cmp = 1;
    else cmp = frame_compare(r, f, a[i].m, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, b[j].comp, F.neg(F.mul(c, b[j].c))});
      ++j;
    } else {
      auto s = F.sub(a[i].c, F.mul(c, b[j].c));
      if (!F.is_zero(s)) out.push_back({bm, b[j].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Extends `prev` by the lead terms of `elems`, which live in the module that
// `prev` describes.
template <class K>
Frame next_frame(const Frame& prev, const std::vector<MElem<K>>& elems) {
  Frame f;
  for (std::uint32_t w = 0; w < elems.size(); ++w) {
    const auto& lt = elems[w].front();
    f.lead.push_back(lt.m * prev.lead[lt.comp]);
    auto p = prev.path[lt.comp];
    p.push_back(w);
    f.path.push_back(std::move(p));
  }
  return f;
}

// Schreyer syzygies of a Gröbner basis `elems` (of a submodule of the module
// described by `prev`), as elements of the free module on `elems` ordered by
// `next`.
template <class K>
std::vector<MElem<K>> schreyer_syzygies(const Ring<K>& r, const Frame& prev, const std::vector<MElem<K>>& elems,
                                        const Frame& next) {
  const K& F = r.field();
  std::vector<MElem<K>> out;
  const std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& li = elems[i].front();
    std::vector<std::pair<Monomial, std::size_t>> cands;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& lj = elems[j].front();
      if (lj.comp != li.comp) continue;
      cands.push_back({lcm(li.m, lj.m) / li.m, j});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cands.size() && minimal; ++b) {
        if (a == b || !cands[b].first.divides(cands[a].first)) continue;
        if (!(cands[b].first == cands[a].first) || b < a) minimal = false;
      }
      if (!minimal) continue;
      const std::size_t j = cands[a].second;
      const auto& lj = elems[j].front();
      Monomial mji = cands[a].first;
      Monomial mij = lcm(li.m, lj.m) / lj.m;
      auto ci = F.inv(li.c);
      auto cj = F.inv(lj.c);
      MElem<K> tau{{mji, static_cast<std::uint32_t>(i), ci}, {mij, static_cast<std::uint32_t>(j), F.neg(cj)}};
      MElem<K> scaled_i;
      for (const auto& t : elems[i]) scaled_i.push_back({t.m * mji, t.comp, F.mul(ci, t.c)});
      MElem<K> s = sub_shifted(r, prev, scaled_i, cj, mij, elems[j]);
      while (!s.empty()) {
        const auto& lead = s.front();
        std::size_t u = 0;
        for (; u < n; ++u) {
          const auto& lu = elems[u].front();
          if (lu.comp == lead.comp && lu.m.divides(lead.m)) break;
        }
        if (u == n) throw std::logic_error("schreyer: input is not a Gröbner basis");
        const auto& lu = elems[u].front();
        auto q = F.div(lead.c, lu.c);
        Monomial mult = lead.m / lu.m;
        tau.push_back({mult, static_cast<std::uint32_t>(u), F.neg(q)});
        s = sub_shifted(r, prev, s, q, mult, elems[u]);
      }
      tau = normalize_elem(r, next, std::move(tau));
      out.push_back(std::move(tau));
    }
  }
  return out;
}

template <class K>
PolyMatrix<K> to_matrix(const RingPtr<K>& ring, std::size_t rows, const std::vector<MElem<K>>& cols) {
  PolyMatrix<K> m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::vector<typename Polynomial<K>::Term>> by_row(rows);
    for (const auto& t : cols[c]) by_row[t.comp].push_back({t.m, t.c});
    for (std::size_t r = 0; r < rows; ++r)
      if (!by_row[r].empty()) m.at(r, c) = Polynomial<K>::from_terms(ring, std::move(by_row[r]));
  }
  return m;
}

Frame base_frame() {
  Frame f;
  f.lead.push_back(Monomial());
  f.path.push_back({});
  return f;
}

template <class K>
std::vector<MElem<K>> as_elems(const std::vector<Polynomial<K>>& polys) {
  std::vector<MElem<K>> out;
  for (const auto& p : polys) {
    MElem<K> e;
    for (const auto& t : p.terms()) e.push_back({t.mono, 0, t.coeff});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

template <class K>
PolyMatrix<K> syzygies(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("syzygies: no generators");
  auto ring = gens.front().ring();
  auto lb = buchberger_with_lifts(Ideal<K>(ring, gens));
  const auto& basis = lb.basis.elements();
  const std::size_t m = gens.size();
  std::vector<std::vector<Polynomial<K>>> columns;

  Frame f0 = base_frame();
  auto elems = as_elems(basis);
  Frame f1 = next_frame(f0, elems);
  for (const auto& tau : schreyer_syzygies(*ring, f0, elems, f1)) {
    std::vector<Polynomial<K>> col(m, Polynomial<K>(ring));
    for (const auto& t : tau)
      for (std::size_t i = 0; i < m; ++i) col[i] += lb.lifts[t.comp][i].times_term(t.m, t.c);
    columns.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto div = divide<K>(gens[i], basis);
    if (!div.remainder.is_zero()) throw std::logic_error("syzygies: generator not reduced by its basis");
    std::vector<Polynomial<K>> col(m, Polynomial<K>(ring));
    col[i] = Polynomial<K>::one(ring);
    for (std::size_t u = 0; u < basis.size(); ++u)
      for (std::size_t l = 0; l < m; ++l) col[l] -= multiply(div.quotients[u], lb.lifts[u][l]);
    if (std::any_of(col.begin(), col.end(), [](const auto& p) { return !p.is_zero(); }))
      columns.push_back(std::move(col));
  }
  PolyMatrix<K> out(ring, m, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) out.at(r, c) = columns[c][r];
  return out;
}

template <class K>
SchreyerResult<K> schreyer_resolution(const Ideal<K>& ideal, std::size_t max_length) {
  const auto& ring = ideal.ring;
  const Ring<K>& r = *ring;
  auto gb = buchberger(ideal);
  SchreyerResult<K> out{FreeComplex<K>{ring, {{0}}, {}}, true};
  if (gb.is_zero_ideal()) return out;

  Frame prev = base_frame();
  auto elems = as_elems(gb.elements());
  while (!elems.empty()) {
    if (out.complex.maps.size() == max_length) {
      out.complete = false;
      break;
    }
    // order by lead component, then lex-descending lead monomial: keeps the
    // resolution within the number of variables
    std::stable_sort(elems.begin(), elems.end(), [](const MElem<K>& a, const MElem<K>& b) {
      const auto& la = a.front();
      const auto& lb = b.front();
      if (la.comp != lb.comp) return la.comp < lb.comp;
      for (std::size_t v = 0; v < kMaxVars; ++v)
        if (la.m[v] != lb.m[v]) return la.m[v] > lb.m[v];
      return false;
    });
    Frame next = next_frame(prev, elems);
    std::vector<int> shifts;
    for (const auto& l : next.lead) shifts.push_back(static_cast<int>(l.degree()));
    out.complex.maps.push_back(to_matrix(ring, prev.size(), elems));
    out.complex.shifts.push_back(std::move(shifts));
    auto syz = schreyer_syzygies(r, prev, elems, next);
    prev = std::move(next);
    elems = std::move(syz);
  }
  return out;
}

template <class K>
std::size_t matrix_rank(const K& F, std::vector<std::vector<typename K::Elem>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && F.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = F.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (F.is_zero(rows[r][c])) continue;
      auto factor = F.mul(rows[r][c], inv);
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

namespace {

// rank of the constant block of `m` between rows and columns of shift `deg`
template <class K>
std::size_t degree_block_rank(const PolyMatrix<K>& m, const std::vector<int>& row_shifts,
                              const std::vector<int>& col_shifts, int deg) {
  const K& F = m.ring()->field();
  std::vector<std::size_t> rs, cs;
  for (std::size_t r = 0; r < row_shifts.size(); ++r)
    if (row_shifts[r] == deg) rs.push_back(r);
  for (std::size_t c = 0; c < col_shifts.size(); ++c)
    if (col_shifts[c] == deg) cs.push_back(c);
  if (rs.empty() || cs.empty()) return 0;
  std::vector<std::vector<typename K::Elem>> block(rs.size(), std::vector<typename K::Elem>(cs.size(), F.zero()));
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) {
      const auto& p = m.at(rs[a], cs[b]);
      if (!p.is_zero()) block[a][b] = p.lc();
    }
  return matrix_rank(F, std::move(block));
}

}  // namespace

template <class K>
BettiTable minimal_betti(const FreeComplex<K>& c) {
  std::vector<std::vector<int>> out(c.shifts.size());
  for (std::size_t i = 0; i < c.shifts.size(); ++i) {
    std::map<int, std::size_t> counts;
    for (int s : c.shifts[i]) ++counts[s];
    for (auto [deg, n] : counts) {
      std::size_t lost = 0;
      if (i > 0) lost += degree_block_rank(c.maps[i - 1], c.shifts[i - 1], c.shifts[i], deg);
      if (i < c.maps.size()) lost += degree_block_rank(c.maps[i], c.shifts[i], c.shifts[i + 1], deg);
      for (std::size_t k = lost; k < n; ++k) out[i].push_back(deg);
    }
  }
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return BettiTable(std::move(out));
}

namespace {

template <class K>
PolyMatrix<K> drop(const PolyMatrix<K>& m, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  PolyMatrix<K> out(m.ring(), m.rows() - (row ? 1 : 0), m.cols() - (col ? 1 : 0));
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (row && r == *row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (col && c == *col) continue;
      out.at(rr, cc++) = m.at(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

template <class K>
FreeComplex<K> prune(FreeComplex<K> cx) {
  const K& F = cx.ring->field();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cx.maps.size() && !changed; ++i) {
      auto& m = cx.maps[i];
      for (std::size_t r = 0; r < m.rows() && !changed; ++r)
        for (std::size_t c = 0; c < m.cols() && !changed; ++c) {
          const auto& e = m.at(r, c);
          if (e.is_zero() || !e.is_constant()) continue;
          auto u_inv = F.inv(e.lc());
          for (std::size_t k = 0; k < m.cols(); ++k) {
            if (k == c || m.at(r, k).is_zero()) continue;
            auto factor = m.at(r, k).scaled(u_inv);
            for (std::size_t l = 0; l < m.rows(); ++l)
              if (l != r && !m.at(l, c).is_zero()) m.at(l, k) -= multiply(factor, m.at(l, c));
          }
          m = drop(m, r, c);
          if (i + 1 < cx.maps.size()) cx.maps[i + 1] = drop(cx.maps[i + 1], c, std::nullopt);
          if (i > 0) cx.maps[i - 1] = drop(cx.maps[i - 1], std::nullopt, r);
          cx.shifts[i].erase(cx.shifts[i].begin() + static_cast<std::ptrdiff_t>(r));
          cx.shifts[i + 1].erase(cx.shifts[i + 1].begin() + static_cast<std::ptrdiff_t>(c));
          changed = true;
        }
    }
  }
  while (!cx.maps.empty() && cx.shifts.back().empty()) {
    cx.shifts.pop_back();
    cx.maps.pop_back();
  }
  return cx;
}

template <class K>
MinimalResolution<K> minimal_free_resolution(const Ideal<K>& ideal, std::size_t max_length, bool explicit_pruning) {
  auto s = schreyer_resolution(ideal, max_length);
  if (!explicit_pruning) return {minimal_betti(s.complex), std::move(s.complex), s.complete};
  auto pruned = prune(std::move(s.complex));
  auto b = pruned.betti();
  return {std::move(b), std::move(pruned), s.complete};
}

#define JONQ_INSTANTIATE_RES(K)                                                                   \
  template class PolyMatrix<K>;                                                                   \
  template struct FreeComplex<K>;                                                                 \
  template PolyMatrix<K> syzygies(const std::vector<Polynomial<K>>&);                             \
  template SchreyerResult<K> schreyer_resolution(const Ideal<K>&, std::size_t);                   \
  template BettiTable minimal_betti(const FreeComplex<K>&);                                       \
  template FreeComplex<K> prune(FreeComplex<K>);                                                  \
  template MinimalResolution<K> minimal_free_resolution(const Ideal<K>&, std::size_t, bool);      \
  template std::size_t matrix_rank(const K&, std::vector<std::vector<typename K::Elem>>);

JONQ_INSTANTIATE_RES(PrimeField)
JONQ_INSTANTIATE_RES(RationalField)

}  // namespace jonq
