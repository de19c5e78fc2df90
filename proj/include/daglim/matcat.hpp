#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daglim/error.hpp"
#include "daglim/scalars.hpp"

namespace daglim {

/// A finite-dimensional object: a label plus a dimension. dim == 0 is the
/// zero object; a dim-1 object flagged `unit` is the tensor unit I.
struct Space {
  std::string name;
  int dim = 0;
  bool unit = false;

  friend bool operator==(const Space& a, const Space& b) {
    return a.name == b.name && a.dim == b.dim;
  }
};

inline Space unit_space(std::string name = "I") { return Space{std::move(name), 1, true}; }
inline Space zero_space(std::string name = "0") { return Space{std::move(name), 0, false}; }

/// A morphism dom -> cod, stored as a row-major matrix with cod.dim rows and
/// dom.dim columns. Morphisms act on column vectors; compose(f, g) is the
/// diagrammatic composite f;g, whose matrix is matrix(g) * matrix(f).
template <ScalarType S>
class Morphism {
 public:
  Morphism(Space dom, Space cod)
      : dom_(std::move(dom)), cod_(std::move(cod)),
        a_(static_cast<std::size_t>(dom_.dim) * static_cast<std::size_t>(cod_.dim), S::zero()) {}

  Morphism(Space dom, Space cod, std::vector<S> row_major)
      : dom_(std::move(dom)), cod_(std::move(cod)), a_(std::move(row_major)) {
    if (a_.size() != static_cast<std::size_t>(dom_.dim) * static_cast<std::size_t>(cod_.dim))
      throw Error(Errc::DimensionMismatch, "entry count does not match dom/cod dims");
  }

  static Morphism identity(Space a) {
    Morphism m(a, a);
    for (int i = 0; i < a.dim; ++i) m.at(i, i) = S::one();
    return m;
  }

  static Morphism zero_mor(Space dom, Space cod) { return Morphism(std::move(dom), std::move(cod)); }

  static Morphism from_rows(Space dom, Space cod, std::initializer_list<std::initializer_list<S>> rows) {
    Morphism m(std::move(dom), std::move(cod));
    if (static_cast<int>(rows.size()) != m.cod_.dim)
      throw Error(Errc::DimensionMismatch, "row count != cod.dim");
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.dom_.dim)
        throw Error(Errc::DimensionMismatch, "column count != dom.dim");
      int c = 0;
      for (const S& x : row) m.at(r, c++) = x;
      ++r;
    }
    return m;
  }

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  int rows() const { return cod_.dim; }
  int cols() const { return dom_.dim; }

  S& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols() + c]; }
  const S& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols() + c]; }
  const std::vector<S>& entries() const { return a_; }

  friend Morphism operator+(const Morphism& f, const Morphism& g) { return add(f, g); }

 private:
  Space dom_, cod_;
  std::vector<S> a_;
};

/// Conjugate transpose; swaps dom and cod.
template <ScalarType S>
Morphism<S> dagger(const Morphism<S>& f) {
  Morphism<S> g(f.cod(), f.dom());
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) g.at(c, r) = conj(f.at(r, c));
  return g;
}

/// Diagrammatic composite f;g for f: A -> B, g: B -> C.
template <ScalarType S>
Morphism<S> compose(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.cod().dim != g.dom().dim)
    throw Error(Errc::ObjectMismatch, "compose: cod(f) and dom(g) differ");
  Morphism<S> h(f.dom(), g.cod());
  for (int r = 0; r < h.rows(); ++r)
    for (int c = 0; c < h.cols(); ++c) {
      S acc = S::zero();
      for (int k = 0; k < f.rows(); ++k) acc = acc + g.at(r, k) * f.at(k, c);
      h.at(r, c) = acc;
    }
  return h;
}

template <ScalarType S>
Morphism<S> add(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.dom().dim != g.dom().dim || f.cod().dim != g.cod().dim)
    throw Error(Errc::ObjectMismatch, "add: morphisms are not parallel");
  Morphism<S> h(f.dom(), f.cod());
  for (int r = 0; r < h.rows(); ++r)
    for (int c = 0; c < h.cols(); ++c) h.at(r, c) = f.at(r, c) + g.at(r, c);
  return h;
}

/// Kronecker product; the dim-1 unit object is a strict tensor unit.
template <ScalarType S>
Morphism<S> tensor(const Morphism<S>& f, const Morphism<S>& g) {
  auto prod_space = [](const Space& x, const Space& y) {
    if (x.unit) return y;
    if (y.unit) return x;
    return Space{x.name + "*" + y.name, x.dim * y.dim, false};
  };
  Morphism<S> h(prod_space(f.dom(), g.dom()), prod_space(f.cod(), g.cod()));
  for (int r1 = 0; r1 < f.rows(); ++r1)
    for (int c1 = 0; c1 < f.cols(); ++c1)
      for (int r2 = 0; r2 < g.rows(); ++r2)
        for (int c2 = 0; c2 < g.cols(); ++c2)
          h.at(r1 * g.rows() + r2, c1 * g.cols() + c2) = f.at(r1, c1) * g.at(r2, c2);
  return h;
}

template <ScalarType S>
S trace(const Morphism<S>& f) {
  if (f.dom().dim != f.cod().dim)
    throw Error(Errc::NotEndomorphism, "trace: dom and cod dims differ");
  S acc = S::zero();
  for (int i = 0; i < f.rows(); ++i) acc = acc + f.at(i, i);
  return acc;
}

/// Entrywise scalar action a.f.
template <ScalarType S>
Morphism<S> scale(const S& a, const Morphism<S>& f) {
  Morphism<S> h(f.dom(), f.cod());
  for (int r = 0; r < h.rows(); ++r)
    for (int c = 0; c < h.cols(); ++c) h.at(r, c) = a * f.at(r, c);
  return h;
}

template <ScalarType S>
bool approx_eq(const Morphism<S>& f, const Morphism<S>& g, double eps) {
  if (f.dom().dim != g.dom().dim || f.cod().dim != g.cod().dim) return false;
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      if (!approx_eq(f.at(r, c), g.at(r, c), eps)) return false;
  return true;
}

/// Max absolute entry.
template <ScalarType S>
double inf_norm(const Morphism<S>& f) {
  double m = 0.0;
  for (const S& x : f.entries()) m = std::max(m, abs_val(x));
  return m;
}

/// Max absolute entry of f - g; needs a backend with negation.
template <ScalarType S>
  requires(S::has_negation)
double inf_dist(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.dom().dim != g.dom().dim || f.cod().dim != g.cod().dim)
    throw Error(Errc::ObjectMismatch, "inf_dist: morphisms are not parallel");
  double m = 0.0;
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) m = std::max(m, abs_val(f.at(r, c) - g.at(r, c)));
  return m;
}

// ---------------------------------------------------------------------------
// Biproducts
// ---------------------------------------------------------------------------

/// Orthogonal direct sum of a list of objects. Projections are the daggers
/// of the injections; when all summands share one dimension the n-fold
/// diagonal (stacked identities) and its dagger, the codiagonal, are filled
/// in as well.
template <ScalarType S>
struct Biproduct {
  Space object;
  std::vector<Morphism<S>> injections;
  std::vector<Morphism<S>> projections;
  std::optional<Morphism<S>> diagonal;
  std::optional<Morphism<S>> codiagonal;
};

template <ScalarType S>
Biproduct<S> biproduct(const std::vector<Space>& parts) {
  int total = 0;
  std::string label;
  for (const Space& p : parts) {
    total += p.dim;
    label += (label.empty() ? "" : "+") + p.name;
  }
  if (parts.empty()) label = "0";
  Space sum{label, total, false};

  Biproduct<S> b;
  b.object = sum;
  int offset = 0;
  for (const Space& p : parts) {
    Morphism<S> inj(p, sum);
    for (int i = 0; i < p.dim; ++i) inj.at(offset + i, i) = S::one();
    b.projections.push_back(dagger(inj));
    b.injections.push_back(std::move(inj));
    offset += p.dim;
  }

  bool homogeneous = !parts.empty() &&
      std::all_of(parts.begin(), parts.end(), [&](const Space& p) { return p.dim == parts.front().dim; });
  if (homogeneous) {
    Morphism<S> diag(parts.front(), sum);
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (int i = 0; i < parts.front().dim; ++i)
        diag.at(static_cast<int>(k) * parts.front().dim + i, i) = S::one();
    b.codiagonal = dagger(diag);
    b.diagonal = std::move(diag);
  }
  return b;
}

/// n-fold diagonal A -> A^{(+)n} (stacked identities).
template <ScalarType S>
Morphism<S> diagonal(const Space& a, int n) {
  auto b = biproduct<S>(std::vector<Space>(static_cast<std::size_t>(n), a));
  return *b.diagonal;
}

/// n-fold codiagonal A^{(+)n} -> A; the dagger of the diagonal.
template <ScalarType S>
Morphism<S> codiagonal(const Space& a, int n) {
  auto b = biproduct<S>(std::vector<Space>(static_cast<std::size_t>(n), a));
  return *b.codiagonal;
}

/// Block-diagonal sum f (+) g on the biproducts of domains and codomains.
template <ScalarType S>
Morphism<S> direct_sum(const Morphism<S>& f, const Morphism<S>& g) {
  Space dom{f.dom().name + "+" + g.dom().name, f.dom().dim + g.dom().dim, false};
  Space cod{f.cod().name + "+" + g.cod().name, f.cod().dim + g.cod().dim, false};
  Morphism<S> h(dom, cod);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) h.at(r, c) = f.at(r, c);
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) h.at(f.rows() + r, f.cols() + c) = g.at(r, c);
  return h;
}

/// The enrichment route for f + g: Delta_A ; (f (+) g) ; Nabla_B.
template <ScalarType S>
Morphism<S> boxplus(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.dom().dim != g.dom().dim || f.cod().dim != g.cod().dim)
    throw Error(Errc::ObjectMismatch, "boxplus: morphisms are not parallel");
  auto delta = diagonal<S>(f.dom(), 2);
  auto nabla = codiagonal<S>(f.cod(), 2);
  return compose(compose(delta, direct_sum(f, g)), nabla);
}

/// n-fold sum n.f = f + ... + f.
template <ScalarType S>
Morphism<S> nfold(int n, const Morphism<S>& f) {
  Morphism<S> acc = Morphism<S>::zero_mor(f.dom(), f.cod());
  for (int i = 0; i < n; ++i) acc = add(acc, f);
  return acc;
}

/// Inner product reconstructed from the dagger: the 1x1 scalar of psi;phi†
/// for states phi, psi: I -> A. Conjugate-linear in phi, linear in psi.
template <ScalarType S>
S inner_product_from_dagger(const Morphism<S>& phi, const Morphism<S>& psi) {
  if (phi.dom().dim != 1 || psi.dom().dim != 1)
    throw Error(Errc::NotAState, "inner_product_from_dagger: dom is not the unit object");
  if (phi.cod().dim != psi.cod().dim)
    throw Error(Errc::ObjectMismatch, "inner_product_from_dagger: states live on different objects");
  return compose(psi, dagger(phi)).at(0, 0);
}

}  // namespace daglim
