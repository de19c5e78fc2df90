#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "daglim/error.hpp"
#include "daglim/matcat.hpp"

namespace daglim {

enum class Shape { Forest, General };

template <ScalarType S>
struct Arrow {
  std::string name;
  std::string dom;
  std::string cod;
  Morphism<S> mor;
};

/// A finite diagram: labeled objects, named arrows between them, a declared
/// shape, and an optional supporting subset. General diagrams are meant to
/// be used after close_and_support; `closed` records that.
template <ScalarType S>
struct Diagram {
  Shape shape = Shape::General;
  double epsilon = kDefaultEpsilon;
  std::vector<Space> objects;
  std::vector<Arrow<S>> arrows;
  std::optional<std::vector<std::string>> supporting;
  bool closed = false;

  const Space& object(const std::string& name) const {
    for (const Space& o : objects)
      if (o.name == name) return o;
    throw Error(Errc::UnknownObject, "no object named '" + name + "'");
  }

  bool has_object(const std::string& name) const {
    for (const Space& o : objects)
      if (o.name == name) return true;
    return false;
  }
};

namespace detail {

template <ScalarType S>
bool is_identity_arrow(const Arrow<S>& a, double eps) {
  if (a.dom != a.cod) return false;
  return approx_eq(a.mor, Morphism<S>::identity(a.mor.dom()), eps);
}

}  // namespace detail

/// Checks object references, matrix dimensions, duplicate names, and the
/// forest condition when the diagram declares it.
template <ScalarType S>
void validate(const Diagram<S>& d) {
  std::set<std::string> names;
  for (const Space& o : d.objects) {
    if (o.dim < 0) throw Error(Errc::BadInput, "object '" + o.name + "' has negative dim");
    if (!names.insert(o.name).second)
      throw Error(Errc::BadInput, "duplicate object name '" + o.name + "'");
  }
  for (const Arrow<S>& a : d.arrows) {
    if (!d.has_object(a.dom)) throw Error(Errc::UnknownObject, "arrow '" + a.name + "': dom '" + a.dom + "'");
    if (!d.has_object(a.cod)) throw Error(Errc::UnknownObject, "arrow '" + a.name + "': cod '" + a.cod + "'");
    if (a.mor.dom().dim != d.object(a.dom).dim || a.mor.cod().dim != d.object(a.cod).dim)
      throw Error(Errc::DimensionMismatch,
                  "arrow '" + a.name + "' matrix shape does not match " + a.dom + " -> " + a.cod);
  }
  if (d.supporting) {
    for (const std::string& s : *d.supporting)
      if (!d.has_object(s)) throw Error(Errc::UnknownObject, "supporting object '" + s + "'");
  }

  if (d.shape == Shape::Forest) {
    // Each component must be a tree directed from leaves to a root: at most
    // one distinct target per node, no cycles. Endo-arrows must be identities.
    std::map<std::string, std::set<std::string>> out;
    for (const Arrow<S>& a : d.arrows) {
      if (a.dom == a.cod) {
        if (!detail::is_identity_arrow(a, d.epsilon))
          throw Error(Errc::NotAForest, "non-identity endo-arrow '" + a.name + "'");
        continue;
      }
      out[a.dom].insert(a.cod);
      if (out[a.dom].size() > 1)
        throw Error(Errc::NotAForest, "object '" + a.dom + "' points at two distinct targets");
    }
    for (const Space& o : d.objects) {
      std::set<std::string> seen{o.name};
      std::string cur = o.name;
      while (true) {
        auto it = out.find(cur);
        if (it == out.end()) break;
        cur = *it->second.begin();
        if (!seen.insert(cur).second)
          throw Error(Errc::NotAForest, "cycle through object '" + cur + "'");
      }
    }
  }
}

/// Objects that are not the target of any non-identity arrow. Forest only.
template <ScalarType S>
std::set<std::string> leaves(const Diagram<S>& d) {
  if (d.shape != Shape::Forest)
    throw Error(Errc::WrongShape, "leaves: diagram is not forest-shaped");
  std::set<std::string> result;
  for (const Space& o : d.objects) result.insert(o.name);
  for (const Arrow<S>& a : d.arrows)
    if (!detail::is_identity_arrow(a, d.epsilon)) result.erase(a.cod);
  return result;
}

/// True when every object can be reached from omega along diagram arrows.
template <ScalarType S>
bool supports(const Diagram<S>& d, const std::vector<std::string>& omega) {
  std::set<std::string> reached(omega.begin(), omega.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Arrow<S>& a : d.arrows)
      if (reached.count(a.dom) && !reached.count(a.cod)) {
        reached.insert(a.cod);
        grew = true;
      }
  }
  return reached.size() == d.objects.size();
}

struct ClosureOptions {
  std::size_t arrow_budget = 4096;
};

/// Closes the arrow set under composition (deduplicating by epsilon
/// equality), adds identities, and validates the supporting subset.
/// Defaults: omega = leaves for forest input, all objects for general.
template <ScalarType S>
Diagram<S> close_and_support(const Diagram<S>& input,
                             std::optional<std::vector<std::string>> omega = std::nullopt,
                             ClosureOptions opts = {}) {
  validate(input);
  Diagram<S> d = input;

  if (!omega) {
    if (d.supporting)
      omega = d.supporting;
    else if (d.shape == Shape::Forest) {
      auto ls = leaves(d);
      omega = std::vector<std::string>(ls.begin(), ls.end());
    } else {
      std::vector<std::string> all;
      for (const Space& o : d.objects) all.push_back(o.name);
      omega = all;
    }
  }

  {
    std::set<std::string> seen;
    std::vector<std::string> cleaned;
    for (const std::string& s : *omega) {
      if (!d.has_object(s)) throw Error(Errc::UnknownObject, "supporting object '" + s + "'");
      if (seen.insert(s).second) cleaned.push_back(s);
    }
    omega = cleaned;
  }

  // Identities first, then saturate under composition.
  for (const Space& o : d.objects) {
    bool have = false;
    for (const Arrow<S>& a : d.arrows)
      if (a.dom == o.name && a.cod == o.name && detail::is_identity_arrow(a, d.epsilon)) have = true;
    if (!have) d.arrows.push_back({"id_" + o.name, o.name, o.name, Morphism<S>::identity(o)});
  }

  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_ends;
  for (std::size_t i = 0; i < d.arrows.size(); ++i)
    by_ends[{d.arrows[i].dom, d.arrows[i].cod}].push_back(i);

  auto find_equal = [&](const std::string& dom, const std::string& cod, const Morphism<S>& m) {
    auto it = by_ends.find({dom, cod});
    if (it == by_ends.end()) return false;
    for (std::size_t idx : it->second)
      if (approx_eq(d.arrows[idx].mor, m, d.epsilon)) return true;
    return false;
  };

  std::size_t frontier_start = 0;
  while (frontier_start < d.arrows.size()) {
    std::size_t end = d.arrows.size();
    std::vector<Arrow<S>> fresh;
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        if (i < frontier_start && j < frontier_start) continue;  // both old: already tried
        const Arrow<S>& f = d.arrows[i];
        const Arrow<S>& g = d.arrows[j];
        if (f.cod != g.dom) continue;
        Morphism<S> comp = compose(f.mor, g.mor);
        if (find_equal(f.dom, g.cod, comp)) continue;
        bool dup = false;
        for (const Arrow<S>& h : fresh)
          if (h.dom == f.dom && h.cod == g.cod && approx_eq(h.mor, comp, d.epsilon)) dup = true;
        if (!dup) fresh.push_back({f.name + ";" + g.name, f.dom, g.cod, std::move(comp)});
      }
    if (d.arrows.size() + fresh.size() > opts.arrow_budget)
      throw Error(Errc::ClosureDiverged,
                  "composition closure exceeded the arrow budget of " + std::to_string(opts.arrow_budget));
    frontier_start = end;
    for (Arrow<S>& a : fresh) {
      by_ends[{a.dom, a.cod}].push_back(d.arrows.size());
      d.arrows.push_back(std::move(a));
    }
  }

  if (!supports(d, *omega)) {
    std::string msg = "omega {";
    for (std::size_t i = 0; i < omega->size(); ++i) msg += (i ? "," : "") + (*omega)[i];
    throw Error(Errc::UnsupportedOmega, msg + "} cannot reach every object");
  }
  d.supporting = omega;
  d.shape = Shape::General;
  d.closed = true;
  return d;
}

}  // namespace daglim
