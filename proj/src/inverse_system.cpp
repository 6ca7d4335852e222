#include "matgor/inverse_system.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace matgor {

const char* to_string(IdealKind k) { return k == IdealKind::Ann ? "ann" : "jm"; }

namespace {

// Square-free monomials of degree d dividing some term of f, in lex order.
std::vector<Subset> candidate_monomials(const SquareFreePoly& f, int d) {
  std::set<Subset> out;
  for (const auto& [b, c] : f.terms()) {
    auto idx = elements(b);
    for (Subset pick : k_subsets(int(idx.size()), d)) {
      Subset s = 0;
      for (int i : elements(pick)) s |= singleton(idx[i]);
      out.insert(s);
    }
  }
  std::vector<Subset> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

SparseVec sorted_vec(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

// Coordinates of a polynomial over a monomial index, growing the index as needed.
SparseVec image_vector(const SquareFreePoly& img, std::map<Subset, int>& index) {
  SparseVec v;
  for (const auto& [s, c] : img.terms()) v.emplace_back(index.emplace(s, int(index.size())).first->second, c);
  return sorted_vec(std::move(v));
}

SparseVec image_vector(const SquareFreePoly& img, const std::map<Subset, int>& index) {
  SparseVec v;
  for (const auto& [s, c] : img.terms()) {
    auto it = index.find(s);
    if (it == index.end()) throw Error("image monomial outside the catalecticant index");
    v.emplace_back(it->second, c);
  }
  return sorted_vec(std::move(v));
}

}  // namespace

GradedQuotient GradedQuotient::ann(const SquareFreePoly& f, int nvars) {
  if (f.is_zero()) throw InputError("Ann of the zero polynomial is the whole ring");
  if (!f.is_homogeneous()) throw InputError("Ann requires a homogeneous polynomial");
  if (f.support() & ~full_set(nvars)) throw InputError("polynomial uses variables outside the ring");
  GradedQuotient q;
  q.kind_ = IdealKind::Ann;
  q.nvars_ = nvars;
  q.top_ = f.degree();
  q.f_ = f;
  q.basis_.resize(q.top_ + 1);
  q.image_index_.resize(q.top_ + 1);
  q.echelon_.resize(q.top_ + 1);
  for (int d = 0; d <= q.top_; ++d) {
    auto eb = std::make_shared<EchelonBasis>();
    auto& index = q.image_index_[d];
    for (Subset s : candidate_monomials(f, q.top_ - d)) index.emplace(s, int(index.size()));
    for (Subset s : candidate_monomials(f, d)) {
      auto v = image_vector(apply_diff(s, f), std::as_const(index));
      if (eb->add(v)) q.basis_[d].push_back(s);
    }
    q.echelon_[d] = std::move(eb);
  }
  return q;
}

GradedQuotient GradedQuotient::jm(const Matroid& m) {
  GradedQuotient q;
  q.kind_ = IdealKind::JM;
  q.nvars_ = m.size();
  q.top_ = m.rank();
  q.matroid_ = std::make_shared<const Matroid>(m);
  q.classes_ = std::make_shared<const EquivClasses>(equivalence_classes(m));
  q.basis_.resize(q.top_ + 1);
  for (int l = 0; l <= q.top_; ++l)
    for (const auto& c : q.classes_->levels[l]) q.basis_[l].push_back(c.representative());
  return q;
}

HilbertVector GradedQuotient::hilbert() const {
  HilbertVector h;
  for (const auto& b : basis_) h.push_back(int(b.size()));
  return h;
}

int GradedQuotient::dim(int d) const {
  if (d < 0 || d > top_) return 0;
  return int(basis_[d].size());
}

std::vector<Rational> GradedQuotient::coords(Subset s) const {
  const int d = popcount(s);
  std::vector<Rational> out(dim(d));
  if (d > top_) return out;
  if (kind_ == IdealKind::JM) {
    if (!matroid_->is_independent(s)) return out;
    out[classes_->class_index(s)] = 1;
    return out;
  }
  SquareFreePoly img = apply_diff(s, f_);
  if (img.is_zero()) return out;
  auto v = image_vector(img, image_index_[d]);
  auto c = echelon_[d]->express(v);
  if (!c) throw Error("catalecticant basis does not span the image");
  return *c;
}

QMatrix GradedQuotient::multiplication(const std::vector<Rational>& a, int d) const {
  if (int(a.size()) != nvars_) throw InputError("coefficient vector length differs from the number of variables");
  const int rows = dim(d + 1), cols = dim(d);
  QMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    Subset b = basis_[d][j];
    for (int e = 0; e < nvars_; ++e) {
      if (contains(b, e) || sgn(a[e]) == 0) continue;
      auto c = coords(b | singleton(e));
      for (int i = 0; i < rows; ++i)
        if (sgn(c[i]) != 0) m(i, j) += a[e] * c[i];
    }
  }
  return m;
}

QMatrix GradedQuotient::power_map(const std::vector<Rational>& a, int d, int k) const {
  QMatrix m = QMatrix::identity(dim(d));
  for (int i = 0; i < k; ++i) m = multiplication(a, d + i) * m;
  return m;
}

QMatrix GradedQuotient::pairing(int d) const {
  if (dim(top_) != 1) throw Error("pairing needs a one-dimensional top degree");
  const int e = top_ - d;
  QMatrix m(dim(d), dim(e));
  for (int i = 0; i < dim(d); ++i)
    for (int j = 0; j < dim(e); ++j) {
      Subset x = basis_[d][i], y = basis_[e][j];
      if (x & y) continue;
      m(i, j) = coords(x | y)[0];
    }
  return m;
}

HilbertVector ann_hilbert(const SquareFreePoly& f, int nvars) { return GradedQuotient::ann(f, nvars).hilbert(); }

HilbertVector jm_hilbert(const Matroid& m) { return equivalence_classes(m).counts(); }

Subset grevlex_min(const std::vector<Subset>& members) {
  // For equal-degree square-free monomials, the grevlex-smaller one contains
  // the largest index of the symmetric difference: the larger bitmask.
  return *std::max_element(members.begin(), members.end());
}

AnnVsJm ann_equals_jm(const Matroid& m) {
  check_guard(m.size() <= 20, "ann_equals_jm on more than 20 elements");
  AnnVsJm out;
  const SquareFreePoly f = phi(m);
  const auto classes = equivalence_classes(m);
  // J_M is contained in Ann Phi_M, generator by generator.
  for (const auto& level : classes.levels)
    for (const auto& c : level) {
      auto first = apply_diff(c.members.front(), f);
      for (Subset s : c.members)
        if (apply_diff(s, f) != first)
          throw Error("binomial " + m.describe(c.members.front()) + " - " + m.describe(s) + " does not annihilate Phi");
    }
  for (Subset c : m.circuits())
    if (!apply_diff(c, f).is_zero()) throw Error("circuit monomial " + m.describe(c) + " does not annihilate Phi");

  auto q = GradedQuotient::ann(f, m.size());
  out.hilbert_ann = q.hilbert();
  out.hilbert_jm = classes.counts();
  out.equal = out.hilbert_ann == out.hilbert_jm;
  const int top = m.rank();
  for (int d = 0; d <= top; ++d) {
    const auto& level = classes.levels[d];
    const int nc = int(level.size());
    if (nc == out.hilbert_ann[d]) continue;
    // Catalecticant restricted to class representatives: its kernel is (Ann)_d / (J_M)_d.
    std::map<Subset, int> index;
    std::vector<SparseVec> cols;
    for (const auto& c : level) cols.push_back(image_vector(apply_diff(c.representative(), f), index));
    QMatrix cat(int(index.size()), nc);
    for (int j = 0; j < nc; ++j)
      for (const auto& [i, v] : cols[j]) cat(i, j) = v;
    auto kernel = nullspace(cat);
    // Rewrite on grevlex normal-form monomials, columns in lex order, then RREF.
    std::vector<std::pair<Subset, int>> order;
    for (int j = 0; j < nc; ++j) order.emplace_back(grevlex_min(level[j].members), j);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    QMatrix k(int(kernel.size()), nc);
    for (int r = 0; r < int(kernel.size()); ++r)
      for (int c = 0; c < nc; ++c) k(r, c) = kernel[r][order[c].second];
    rref(k);
    auto& gens = out.extra_generators[d];
    for (int r = 0; r < k.rows(); ++r) {
      SquareFreePoly g;
      for (int c = 0; c < nc; ++c) g.add_term(order[c].first, k(r, c));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<PairingRank> poincare_pairing_ranks(const GradedQuotient& q) {
  std::vector<PairingRank> out;
  if (q.dim(q.top_degree()) != 1) return out;
  for (int d = 0; 2 * d <= q.top_degree(); ++d)
    out.push_back({d, rank(q.pairing(d)), q.dim(d), q.dim(q.top_degree() - d)});
  return out;
}

bool is_gorenstein(const GradedQuotient& q) {
  if (q.dim(q.top_degree()) != 1) return false;
  for (const auto& p : poincare_pairing_ranks(q))
    if (p.rank != p.dim_low || p.rank != p.dim_high) return false;
  return true;
}

bool catalecticant_rank_lemma(const Matroid& m, int l) {
  if (l < 0 || 2 * l > m.rank()) throw InputError("rank lemma needs 0 <= 2l <= r(E)");
  const auto classes = equivalence_classes(m);
  const SquareFreePoly g = phi_level(m, 2 * l);
  EchelonBasis eb;
  std::map<Subset, int> index;
  for (const auto& c : classes.levels[l]) eb.add(image_vector(apply_diff(c.representative(), g), index));
  return eb.size() == int(classes.levels[l].size());
}

}  // namespace matgor
