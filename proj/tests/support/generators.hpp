// Seeded diagram generators for the engine's property and acceptance tests.
// Matrix entries come from a dyadic grid so generated relations (inverse
// pairs, idempotents, path composites) stay exact in doubles and the
// tolerance checks measure the engine, not the generator.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "daglim/daglim.hpp"

namespace generators {

using daglim::Cnum;
using daglim::Diagram;
using daglim::Morphism;
using daglim::Space;

inline Cnum dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> grid(-8, 8);
  return Cnum{grid(rng) / 4.0, grid(rng) / 4.0};
}

inline Morphism<Cnum> dyadic_morphism(std::mt19937_64& rng, const Space& dom, const Space& cod) {
  Morphism<Cnum> f(dom, cod);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) f.at(r, c) = dyadic(rng);
  return f;
}

inline Morphism<Cnum> permutation_morphism(std::mt19937_64& rng, const Space& dom, const Space& cod) {
  std::vector<int> perm(static_cast<std::size_t>(dom.dim));
  for (int i = 0; i < dom.dim; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Morphism<Cnum> f(dom, cod);
  for (int c = 0; c < dom.dim; ++c) f.at(perm[static_cast<std::size_t>(c)], c) = Cnum{1.0};
  return f;
}

struct GenOptions {
  int max_objects = 5;
  int max_dim = 4;
  bool allow_cycles = true;
  bool discrete = false;  // objects only, no arrows
  double arrow_prob = 0.55;
};

/// Random general diagram presented by generators; composition-closable
/// within a small budget by construction. A cycle pair contributes the only
/// cycle through its two objects (they never appear as codomains of other
/// arrows), so every composite loop collapses to an identity and closure
/// terminates quickly.
inline Diagram<Cnum> random_general_diagram(std::uint64_t seed, GenOptions opt = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_obj(1, opt.max_objects), dim(1, opt.max_dim);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Diagram<Cnum> d;
  d.shape = daglim::Shape::General;
  int n = n_obj(rng);
  for (int i = 0; i < n; ++i)
    d.objects.push_back(Space{"O" + std::to_string(i), dim(rng), false});
  if (opt.discrete) return d;

  int arrow_id = 0;
  int pair_a = -1, pair_b = -1;
  if (opt.allow_cycles && n >= 2 && coin(rng) < 0.4) {
    pair_a = 0;
    pair_b = 1;
    d.objects[1].dim = d.objects[0].dim;
    auto fwd = permutation_morphism(rng, d.objects[0], d.objects[1]);
    d.arrows.push_back({"c0", d.objects[0].name, d.objects[1].name, fwd});
    d.arrows.push_back({"c1", d.objects[1].name, d.objects[0].name, daglim::dagger(fwd)});
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == pair_a || j == pair_b) continue;  // cycle objects are sources only
      if (coin(rng) < opt.arrow_prob)
        d.arrows.push_back({"a" + std::to_string(arrow_id++), d.objects[i].name, d.objects[j].name,
                            dyadic_morphism(rng, d.objects[i], d.objects[j])});
    }

  if (opt.allow_cycles && coin(rng) < 0.4) {
    // Idempotent endo-arrow: a coordinate projection.
    int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const Space& o = d.objects[static_cast<std::size_t>(k)];
    Morphism<Cnum> proj(o, o);
    for (int i = 0; i < o.dim; ++i)
      if (coin(rng) < 0.5) proj.at(i, i) = Cnum{1.0};
    d.arrows.push_back({"m" + std::to_string(arrow_id++), o.name, o.name, proj});
  }
  return d;
}

/// Random forest-shaped multigraph with parallel branches.
inline Diagram<Cnum> random_forest_diagram(std::uint64_t seed, GenOptions opt = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_obj(1, opt.max_objects), dim(1, opt.max_dim);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Diagram<Cnum> d;
  d.shape = daglim::Shape::Forest;
  int n = n_obj(rng);
  for (int i = 0; i < n; ++i)
    d.objects.push_back(Space{"O" + std::to_string(i), dim(rng), false});

  // Parent pointers toward lower indices build the trees; index 0 and any
  // unparented node are roots.
  int arrow_id = 0;
  for (int i = 1; i < n; ++i) {
    if (coin(rng) < 0.25) continue;  // new component root
    int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
    int branches = coin(rng) < 0.3 ? 2 : 1;
    for (int b = 0; b < branches; ++b)
      d.arrows.push_back({"t" + std::to_string(arrow_id++), d.objects[i].name,
                          d.objects[parent].name,
                          dyadic_morphism(rng, d.objects[i], d.objects[parent])});
  }
  return d;
}

/// A random valid supporting subset: start from a random nonempty candidate
/// and repair until every object is reachable.
inline std::vector<std::string> random_supporting(const Diagram<Cnum>& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> omega;
  for (const Space& o : d.objects)
    if (coin(rng) < 0.5) omega.push_back(o.name);
  if (omega.empty() && !d.objects.empty())
    omega.push_back(d.objects[std::uniform_int_distribution<std::size_t>(
                                  0, d.objects.size() - 1)(rng)]
                        .name);

  while (!daglim::supports(d, omega)) {
    std::set<std::string> reached(omega.begin(), omega.end());
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : d.arrows)
        if (reached.count(a.dom) && !reached.count(a.cod)) {
          reached.insert(a.cod);
          grew = true;
        }
    }
    for (const Space& o : d.objects)
      if (!reached.count(o.name)) {
        omega.push_back(o.name);
        break;
      }
  }
  return omega;
}

}  // namespace generators
