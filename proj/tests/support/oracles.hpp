// Independent oracles for the limit-engine tests. These deliberately avoid
// the constructive equalizer/intersection route: the limit subspace is
// computed from one globally stacked system of cone equations, subspace
// intersections from stacked orthogonal complements, and factorizations by
// least squares.
#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "daglim/daglim.hpp"

namespace oracles {

using daglim::Cnum;
using daglim::Diagram;
using daglim::Morphism;

struct BlockLayout {
  std::map<std::string, int> offset;
  int total = 0;
};

inline BlockLayout omega_layout(const Diagram<Cnum>& d, const std::vector<std::string>& omega) {
  BlockLayout lay;
  for (const std::string& name : omega) {
    lay.offset[name] = lay.total;
    lay.total += d.object(name).dim;
  }
  return lay;
}

/// Direct route to the limit subspace: stack every cone equation
/// [f] - [f0] over all objects T and arrows from omega into T, and take the
/// nullspace of the single global system inside (+) F(omega).
inline Eigen::MatrixXcd agreement_subspace(const Diagram<Cnum>& d,
                                           const std::vector<std::string>& omega) {
  BlockLayout lay = omega_layout(d, omega);

  std::vector<Eigen::MatrixXcd> rows;
  for (const auto& t : d.objects) {
    std::vector<const daglim::Arrow<Cnum>*> incoming;
    for (const auto& a : d.arrows)
      if (a.cod == t.name && lay.offset.count(a.dom)) incoming.push_back(&a);
    for (std::size_t i = 1; i < incoming.size(); ++i) {
      Eigen::MatrixXcd row = Eigen::MatrixXcd::Zero(t.dim, lay.total);
      row.middleCols(lay.offset.at(incoming[i]->dom), d.object(incoming[i]->dom).dim) +=
          daglim::to_eigen(incoming[i]->mor);
      row.middleCols(lay.offset.at(incoming[0]->dom), d.object(incoming[0]->dom).dim) -=
          daglim::to_eigen(incoming[0]->mor);
      rows.push_back(std::move(row));
    }
  }

  Eigen::Index nrows = 0;
  for (const auto& r : rows) nrows += r.rows();
  Eigen::MatrixXcd stacked(nrows, lay.total);
  Eigen::Index at = 0;
  for (const auto& r : rows) {
    stacked.middleRows(at, r.rows()) = r;
    at += r.rows();
  }
  return daglim::nullspace(stacked, d.epsilon);
}

/// || U U† - V V† ||_inf: zero iff the two orthonormal column families span
/// the same subspace.
inline double projector_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  Eigen::MatrixXcd diff = u * u.adjoint() - v * v.adjoint();
  return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

/// Intersection of subspaces given by orthonormal bases: stack the projector
/// complements (I - B B†) and take the nullspace.
inline Eigen::MatrixXcd intersect_subspaces(const std::vector<Eigen::MatrixXcd>& bases,
                                            int ambient_dim, double eps) {
  Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(bases.size()) * ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < bases.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * ambient_dim, ambient_dim) =
        Eigen::MatrixXcd::Identity(ambient_dim, ambient_dim) - bases[i] * bases[i].adjoint();
  return daglim::nullspace(stacked, eps);
}

/// Stacks a limit result's maps over its omega into the isometry P -> (+) F(omega).
inline Eigen::MatrixXcd stacked_limit(const Diagram<Cnum>& d,
                                      const daglim::DaggerLimitResult<Cnum>& r) {
  BlockLayout lay = omega_layout(d, r.omega);
  Eigen::MatrixXcd s(lay.total, r.limit_object.dim);
  for (const std::string& name : r.omega)
    s.middleRows(lay.offset.at(name), d.object(name).dim) = daglim::to_eigen(r.limit_maps.at(name));
  return s;
}

}  // namespace oracles
