#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "daglim/diagram.hpp"
#include "daglim/matcat.hpp"
#include "daglim/orthonormal.hpp"

namespace daglim {

template <ScalarType S>
struct EqualizerResult {
  Space object;       // the agreement subspace E
  Morphism<S> e;      // isometry E -> A
};

/// †-equalizer of a parallel family f_i: A -> B. E is the largest subspace
/// of A on which all the maps agree, and e: E -> A is an isometry onto it.
inline EqualizerResult<Cnum> dagger_equalizer(const std::vector<Morphism<Cnum>>& family,
                                              double eps = kDefaultEpsilon) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "dagger_equalizer: no morphisms");
  const Morphism<Cnum>& f0 = family.front();
  for (const auto& f : family)
    if (f.dom().dim != f0.dom().dim || f.cod().dim != f0.cod().dim)
      throw Error(Errc::ObjectMismatch, "dagger_equalizer: family is not parallel");

  const int n = f0.dom().dim;
  const int m = f0.cod().dim;
  Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(family.size() - 1) * m, n);
  for (std::size_t i = 1; i < family.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i - 1) * m, m) =
        to_eigen(family[i]) - to_eigen(f0);

  Eigen::MatrixXcd basis = nullspace(stacked, eps);
  Space e_obj{"E", static_cast<int>(basis.cols()), false};
  return {e_obj, from_eigen(e_obj, f0.dom(), basis)};
}

/// Test-only alternate route from the binary reduction: the equalizer of the
/// column vector F = <f_1..f_n> against f_1;Delta. Kept out of the
/// production path; see the unit tests that compare the two.
inline EqualizerResult<Cnum> dagger_equalizer_via_binary(const std::vector<Morphism<Cnum>>& family,
                                                         double eps = kDefaultEpsilon) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "dagger_equalizer_via_binary: no morphisms");
  const int n = static_cast<int>(family.size());
  auto bp = biproduct<Cnum>(std::vector<Space>(family.size(), family.front().cod()));
  Morphism<Cnum> big_f = Morphism<Cnum>::zero_mor(family.front().dom(), bp.object);
  for (int i = 0; i < n; ++i)
    big_f = add(big_f, compose(family[i], bp.injections[i]));
  Morphism<Cnum> delta_route = compose(family.front(), *bp.diagonal);
  return dagger_equalizer({big_f, delta_route}, eps);
}

/// An isomorphism r: A -> A with r;r† = n . id_A, realized as sqrt(n) . id.
inline Morphism<Cnum> sqrt_scale(const Space& a, int n, double eps = kDefaultEpsilon) {
  if (n < 1) throw Error(Errc::BadInput, "sqrt_scale: n must be positive");
  return scale(sqrt_nonneg(Cnum{static_cast<double>(n)}, eps), Morphism<Cnum>::identity(a));
}

template <ScalarType S>
struct IntersectionResult {
  Space object;                         // the pullback object P
  Morphism<S> s;                        // isometry P -> A, the intersection
  std::vector<Morphism<S>> projections; // isometric pullback projections P -> X_i
};

/// †-intersection of a finite family of isometries x_i: X_i -> A: the
/// pullback with isometric projections, built as the †-equalizer of the
/// maps p_i;x_i out of the biproduct of the X_i, rescaled by sqrt(|J|).
inline IntersectionResult<Cnum> dagger_intersection(const std::vector<Morphism<Cnum>>& isometries,
                                                    double eps = kDefaultEpsilon) {
  if (isometries.empty()) throw Error(Errc::EmptyFamily, "dagger_intersection: no isometries");
  const int a_dim = isometries.front().cod().dim;
  for (const auto& x : isometries) {
    if (x.cod().dim != a_dim)
      throw Error(Errc::ObjectMismatch, "dagger_intersection: codomains differ");
    auto gram = compose(x, dagger(x));
    if (inf_dist(gram, Morphism<Cnum>::identity(x.dom())) > 10 * eps)
      throw Error(Errc::NotIsometry, "dagger_intersection: input map is not an isometry");
  }

  std::vector<Space> doms;
  for (const auto& x : isometries) doms.push_back(x.dom());
  auto bp = biproduct<Cnum>(doms);

  std::vector<Morphism<Cnum>> routed;
  for (std::size_t i = 0; i < isometries.size(); ++i)
    routed.push_back(compose(bp.projections[i], isometries[i]));

  auto eq = dagger_equalizer(routed, eps);
  Space p_obj{"P", eq.object.dim, false};
  Morphism<Cnum> r = sqrt_scale(p_obj, static_cast<int>(isometries.size()), eps);
  Morphism<Cnum> re = compose(r, from_eigen(p_obj, bp.object, to_eigen(eq.e)));

  IntersectionResult<Cnum> out{p_obj, compose(compose(re, bp.projections[0]), isometries[0]), {}};
  for (std::size_t i = 0; i < isometries.size(); ++i)
    out.projections.push_back(compose(re, bp.projections[i]));
  return out;
}

template <ScalarType S>
struct DaggerLimitResult {
  Space limit_object;
  std::map<std::string, Morphism<S>> limit_maps;  // object name -> (L -> F(S))
  std::vector<std::string> omega;
  double normalization_residual = 0.0;
  std::map<std::string, S> weights;               // Tr(l_J†; l_J)
};

/// The canonical self-adjoint morphism l_J†;l_J: F(J) -> F(J) attached to a
/// diagram object. Basis-independent, unlike the limit maps themselves.
template <ScalarType S>
Morphism<S> canonical_self_adjoint(const DaggerLimitResult<S>& r, const std::string& name) {
  const auto& l = r.limit_maps.at(name);
  return compose(dagger(l), l);
}

/// Weights Tr(l_J†;l_J) recomputed from the limit maps.
template <ScalarType S>
std::map<std::string, S> limit_weights(const DaggerLimitResult<S>& r) {
  std::map<std::string, S> w;
  for (const auto& [name, l] : r.limit_maps) w.emplace(name, trace(canonical_self_adjoint(r, name)));
  return w;
}

/// Max cone residual ||l_dom ; F(f) - l_cod|| over all diagram arrows.
template <ScalarType S>
double cone_residual(const Diagram<S>& d, const DaggerLimitResult<S>& r) {
  double worst = 0.0;
  for (const auto& a : d.arrows)
    worst = std::max(worst, inf_dist(compose(r.limit_maps.at(a.dom), a.mor), r.limit_maps.at(a.cod)));
  return worst;
}

/// †-limit of a closed diagram over a supporting subset, by the constructive
/// route: biproduct over omega, a †-equalizer per object, then the
/// †-intersection of those equalizers. basis_seed != 0 reports the limit in
/// a rotated orthonormal basis, exercising the up-to-unitary freedom.
inline DaggerLimitResult<Cnum> dagger_limit(const Diagram<Cnum>& input,
                                            std::optional<std::vector<std::string>> omega = std::nullopt,
                                            std::uint64_t basis_seed = 0) {
  Diagram<Cnum> d = input.closed && (!omega || (input.supporting && *omega == *input.supporting))
                        ? input
                        : close_and_support(input, std::move(omega));
  const double eps = d.epsilon;
  std::vector<std::string> om = d.supporting.value_or(std::vector<std::string>{});

  DaggerLimitResult<Cnum> out;
  out.omega = om;
  if (d.objects.empty()) {
    out.limit_object = zero_space("L");
    return out;
  }
  if (om.empty()) throw Error(Errc::UnsupportedOmega, "empty omega on a nonempty diagram");

  // Keep omega in diagram object order for deterministic block layout.
  std::vector<Space> om_spaces;
  {
    std::set<std::string> om_set(om.begin(), om.end());
    std::vector<std::string> ordered;
    for (const Space& o : d.objects)
      if (om_set.count(o.name)) {
        ordered.push_back(o.name);
        om_spaces.push_back(o);
      }
    om = ordered;
    out.omega = om;
  }

  auto bp = biproduct<Cnum>(om_spaces);
  std::map<std::string, std::size_t> om_index;
  for (std::size_t i = 0; i < om.size(); ++i) om_index[om[i]] = i;

  // One equalizer per object T, over the routed arrows from omega into T.
  std::vector<Morphism<Cnum>> equalizer_isometries;
  std::map<std::string, Morphism<Cnum>> routed_rep;  // a representative [f] per object
  for (const Space& t : d.objects) {
    std::vector<Morphism<Cnum>> routed;
    for (const auto& a : d.arrows)
      if (a.cod == t.name && om_index.count(a.dom))
        routed.push_back(compose(bp.projections[om_index[a.dom]], a.mor));
    if (routed.empty())
      throw Error(Errc::UnsupportedOmega, "object '" + t.name + "' has no arrow from omega");
    routed_rep.emplace(t.name, routed.front());
    equalizer_isometries.push_back(dagger_equalizer(routed, eps).e);
  }

  auto inter = dagger_intersection(equalizer_isometries, eps);
  Space limit_obj{"L", inter.object.dim, false};
  Morphism<Cnum> s = from_eigen(limit_obj, bp.object, to_eigen(inter.s));

  if (basis_seed != 0) {
    std::mt19937_64 rng(basis_seed);
    auto u = from_eigen(limit_obj, limit_obj, random_unitary(limit_obj.dim, rng));
    s = compose(u, s);
  }

  for (const Space& t : d.objects) {
    Morphism<Cnum> l = om_index.count(t.name)
                           ? compose(s, bp.projections[om_index[t.name]])
                           : compose(s, routed_rep.at(t.name));
    out.limit_maps.emplace(t.name, from_eigen(limit_obj, t, to_eigen(l)));
  }

  out.limit_object = limit_obj;
  Morphism<Cnum> norm_sum = Morphism<Cnum>::zero_mor(limit_obj, limit_obj);
  for (const std::string& name : om) {
    const auto& l = out.limit_maps.at(name);
    norm_sum = add(norm_sum, compose(l, dagger(l)));
  }
  out.normalization_residual = inf_dist(norm_sum, Morphism<Cnum>::identity(limit_obj));
  out.weights = limit_weights(out);
  return out;
}

/// Fraction morphism id_A / n, built by †-equalizing the n projections of
/// A^{(+)n} and composing the first component with its dagger.
inline Morphism<Cnum> fraction_morphism(const Space& a, int n, double eps = kDefaultEpsilon) {
  if (n < 1) throw Error(Errc::BadInput, "fraction_morphism: n must be positive");
  auto bp = biproduct<Cnum>(std::vector<Space>(static_cast<std::size_t>(n), a));
  auto eq = dagger_equalizer(bp.projections, eps);
  Morphism<Cnum> e1 = compose(eq.e, bp.projections[0]);
  return compose(dagger(e1), e1);
}

/// The unique comparison map c: L1 -> L2 between two †-limits of the same
/// diagram and omega, satisfying c;m_S = l_S. The uniqueness lemma makes it
/// unitary; callers check the unitarity residuals.
inline Morphism<Cnum> unitary_comparison(const DaggerLimitResult<Cnum>& r1,
                                         const DaggerLimitResult<Cnum>& r2,
                                         double eps = kDefaultEpsilon) {
  if (std::set<std::string>(r1.omega.begin(), r1.omega.end()) !=
      std::set<std::string>(r2.omega.begin(), r2.omega.end()))
    throw Error(Errc::NotComparable, "unitary_comparison: supporting subsets differ");

  const int dim1 = r1.limit_object.dim;
  const int dim2 = r2.limit_object.dim;
  if (r1.omega.empty()) {
    if (dim1 != 0 || dim2 != 0)
      throw Error(Errc::NotComparable, "unitary_comparison: empty omega with nonzero limits");
    return Morphism<Cnum>::zero_mor(r1.limit_object, r2.limit_object);
  }

  int total = 0;
  for (const std::string& name : r1.omega) {
    const auto& l = r1.limit_maps.at(name);
    const auto m_it = r2.limit_maps.find(name);
    if (m_it == r2.limit_maps.end() || m_it->second.cod().dim != l.cod().dim)
      throw Error(Errc::NotComparable, "unitary_comparison: limit maps do not line up");
    total += l.cod().dim;
  }

  Eigen::MatrixXcd s1(total, dim1), s2(total, dim2);
  int row = 0;
  for (const std::string& name : r1.omega) {
    const auto& l = r1.limit_maps.at(name);
    s1.middleRows(row, l.cod().dim) = to_eigen(l);
    s2.middleRows(row, l.cod().dim) = to_eigen(r2.limit_maps.at(name));
    row += l.cod().dim;
  }

  Eigen::MatrixXcd c = s2.adjoint() * s1;
  double residual = (total == 0 || dim1 == 0) ? 0.0 : (s2 * c - s1).cwiseAbs().maxCoeff();
  if (residual > std::max(100 * eps, 1e-10))
    throw Error(Errc::NotComparable, "unitary_comparison: cone factorization residual " +
                                         std::to_string(residual));
  return from_eigen(r1.limit_object, r2.limit_object, c);
}

struct UniquenessReport {
  Morphism<Cnum> comparison;
  double unitary_residual_right = 0.0;  // ||c;c† - id||
  double unitary_residual_left = 0.0;   // ||c†;c - id||
};

/// Computes the limit twice in independently rotated bases and returns the
/// comparison unitary with its unitarity residuals.
inline UniquenessReport verify_unique(const Diagram<Cnum>& d,
                                      std::optional<std::vector<std::string>> omega = std::nullopt,
                                      std::uint64_t seed1 = 1, std::uint64_t seed2 = 2) {
  auto r1 = dagger_limit(d, omega, seed1);
  auto r2 = dagger_limit(d, omega, seed2);
  auto c = unitary_comparison(r1, r2, d.epsilon);
  UniquenessReport rep{c, 0.0, 0.0};
  rep.unitary_residual_right =
      inf_dist(compose(c, dagger(c)), Morphism<Cnum>::identity(c.dom()));
  rep.unitary_residual_left =
      inf_dist(compose(dagger(c), c), Morphism<Cnum>::identity(c.cod()));
  return rep;
}

}  // namespace daglim
