#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "daglim/json_io.hpp"
#include "daglim/matcat.hpp"

namespace daglim {

enum class Law {
  Nondegeneracy,
  AdditiveCancellation,
  NFoldCancellation,
  Exchange,
  EnrichmentUnique,
  BiproductEquations,
  DiagonalDagger,
  ScalarCommutativity,
  ScalarMultCancellation,
  ABabImplication,
  InnerProductPD,
};

inline const char* law_name(Law l) {
  switch (l) {
    case Law::Nondegeneracy: return "Nondegeneracy";
    case Law::AdditiveCancellation: return "AdditiveCancellation";
    case Law::NFoldCancellation: return "NFoldCancellation";
    case Law::Exchange: return "Exchange";
    case Law::EnrichmentUnique: return "EnrichmentUnique";
    case Law::BiproductEquations: return "BiproductEquations";
    case Law::DiagonalDagger: return "DiagonalDagger";
    case Law::ScalarCommutativity: return "ScalarCommutativity";
    case Law::ScalarMultCancellation: return "ScalarMultCancellation";
    case Law::ABabImplication: return "ABabImplication";
    case Law::InnerProductPD: return "InnerProductPD";
  }
  return "Unknown";
}

inline constexpr Law kAllLaws[] = {
    Law::Nondegeneracy,     Law::AdditiveCancellation,   Law::NFoldCancellation,
    Law::Exchange,          Law::EnrichmentUnique,       Law::BiproductEquations,
    Law::DiagonalDagger,    Law::ScalarCommutativity,    Law::ScalarMultCancellation,
    Law::ABabImplication,   Law::InnerProductPD,
};

enum class Verdict { Holds, FailsWithWitness, NotApplicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

struct LawReport {
  Law law;
  std::string backend;
  Verdict verdict;
  json witness;  // null unless the verdict carries a counterexample
  int trials = 0;
};

inline json report_to_json(const LawReport& r) {
  json j;
  j["law"] = law_name(r.law);
  j["backend"] = r.backend;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness;
  j["trials"] = r.trials;
  return j;
}

/// Which verdict the theory predicts for a backend. The Boolean matrix
/// category has biproducts but no †-limits, and the two laws whose proofs
/// need them really do fail there: addition is idempotent (id_1 + id_1 =
/// id_1, breaking cancellation), and the exchange implication has
/// counterexamples such as f = {(1,*)}, g = {(1,*),(2,*)} into a point,
/// where both sides saturate while f != g.
inline Verdict expected_verdict(Law l, const std::string& backend) {
  if (backend == Bit::backend_name() &&
      (l == Law::AdditiveCancellation || l == Law::Exchange))
    return Verdict::FailsWithWitness;
  return Verdict::Holds;
}

// --------------------------------------------------------------------------
// Seeded sampling. Complex entries are drawn from a dyadic grid so that the
// small sums and products in the law checks stay exact in doubles.
// --------------------------------------------------------------------------

namespace detail {

/// Input separation threshold for implication-style laws: hypotheses like
/// "f != g" are made falsifiable by requiring an explicit gap on inputs.
inline constexpr double kSeparation = 1e-3;

template <ScalarType S>
S random_scalar(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<S, Cnum>) {
    std::uniform_int_distribution<int> grid(-16, 16);
    return Cnum{grid(rng) / 8.0, grid(rng) / 8.0};
  } else if constexpr (std::is_same_v<S, Rat>) {
    std::uniform_int_distribution<int> p(-12, 12), q(1, 8);
    return Rat{p(rng), q(rng)};
  } else {
    std::uniform_int_distribution<int> coin(0, 1);
    return Bit{coin(rng) == 1};
  }
}

template <ScalarType S>
Morphism<S> random_morphism(std::mt19937_64& rng, const Space& dom, const Space& cod) {
  Morphism<S> f(dom, cod);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) f.at(r, c) = random_scalar<S>(rng);
  return f;
}

inline Space random_space(std::mt19937_64& rng, const std::string& name, int max_dim = 6) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  return Space{name, dim(rng), false};
}

template <ScalarType S>
bool scalars_apart(const S& a, const S& b) {
  if constexpr (S::is_exact)
    return !approx_eq(a, b, 0.0);
  else
    return abs_val(a - b) > kSeparation;
}

template <ScalarType S>
bool morphisms_apart(const Morphism<S>& f, const Morphism<S>& g) {
  if constexpr (S::is_exact)
    return !approx_eq(f, g, 0.0);
  else
    return inf_dist(f, g) > kSeparation;
}

// Violation predicates. Each one re-checks a concrete instance, so a stored
// witness can be replayed later from its JSON form.

template <ScalarType S>
bool violates_nondegeneracy(const Morphism<S>& f, double eps) {
  bool f_nonzero = inf_norm(f) > (S::is_exact ? 0.0 : kSeparation);
  return f_nonzero && approx_eq(compose(f, dagger(f)),
                                Morphism<S>::zero_mor(f.dom(), f.dom()), eps);
}

template <ScalarType S>
bool violates_additive_cancellation(const Morphism<S>& f, const Morphism<S>& g,
                                    const Morphism<S>& h, double eps) {
  return morphisms_apart(f, g) && approx_eq(add(f, h), add(g, h), eps);
}

template <ScalarType S>
bool violates_nfold_cancellation(int n, const Morphism<S>& f, const Morphism<S>& g, double eps) {
  return morphisms_apart(f, g) && approx_eq(nfold(n, f), nfold(n, g), eps);
}

template <ScalarType S>
bool violates_exchange(const Morphism<S>& f, const Morphism<S>& g, double eps) {
  auto lhs = add(compose(dagger(f), f), compose(dagger(g), g));
  auto rhs = add(compose(dagger(f), g), compose(dagger(g), f));
  return morphisms_apart(f, g) && approx_eq(lhs, rhs, eps);
}

template <ScalarType S>
bool violates_enrichment_unique(const Morphism<S>& f, const Morphism<S>& g, double eps) {
  return !approx_eq(boxplus(f, g), add(f, g), eps);
}

template <ScalarType S>
bool violates_biproduct_equations(const std::vector<Space>& parts, double eps) {
  auto bp = biproduct<S>(parts);
  auto completeness = Morphism<S>::zero_mor(bp.object, bp.object);
  for (std::size_t k = 0; k < parts.size(); ++k)
    completeness = add(completeness, compose(bp.projections[k], bp.injections[k]));
  if (!approx_eq(completeness, Morphism<S>::identity(bp.object), eps)) return true;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto through = compose(bp.injections[k], bp.projections[j]);
      auto expected = k == j ? Morphism<S>::identity(parts[k])
                             : Morphism<S>::zero_mor(parts[k], parts[j]);
      if (!approx_eq(through, expected, eps)) return true;
    }
  return false;
}

template <ScalarType S>
bool violates_diagonal_dagger(const Space& a, int n) {
  return !approx_eq(dagger(diagonal<S>(a, n)), codiagonal<S>(a, n), 0.0);
}

template <ScalarType S>
bool violates_scalar_commutativity(const S& a, const S& b, double eps) {
  return !approx_eq(a * b, b * a, eps);
}

template <ScalarType S>
bool violates_scalar_mult_cancellation(const S& a, const S& b, const S& c, double eps) {
  bool c_nonzero = abs_val(c) > (S::is_exact ? 0.0 : kSeparation);
  return scalars_apart(a, b) && c_nonzero && approx_eq(a * c, b * c, eps);
}

template <ScalarType S>
bool violates_abab(const S& a, const S& b, const S& big_a, const S& big_b, double eps) {
  return scalars_apart(a, b) && scalars_apart(big_a, big_b) &&
         approx_eq(a * big_a + b * big_b, a * big_b + b * big_a, eps);
}

template <ScalarType S>
bool violates_inner_product_pd(const Morphism<S>& phi, double eps) {
  bool phi_nonzero = inf_norm(phi) > (S::is_exact ? 0.0 : kSeparation);
  return phi_nonzero && is_zero(inner_product_from_dagger(phi, phi), eps);
}

template <ScalarType S>
json mor_witness(const char* key, const Morphism<S>& f) {
  return json{{key, {{"dom_dim", f.dom().dim}, {"cod_dim", f.cod().dim}, {"matrix", matrix_to_json(f)}}}};
}

template <ScalarType S>
Morphism<S> mor_from_witness(const json& w) {
  Space dom{"A", w.at("dom_dim").get<int>(), false};
  Space cod{"B", w.at("cod_dim").get<int>(), false};
  return morphism_from_json<S>(dom, cod, w.at("matrix"));
}

}  // namespace detail

/// Re-evaluates a stored counterexample. True means the witness still
/// violates its law.
template <ScalarType S>
bool replay_witness(const json& w, double eps = kDefaultEpsilon) {
  using namespace detail;
  std::string law = w.at("law").get<std::string>();
  auto mor = [&](const char* key) { return mor_from_witness<S>(w.at(key)); };
  auto scl = [&](const char* key) { return scalar_from_json<S>(w.at(key)); };
  if (law == law_name(Law::Nondegeneracy)) return violates_nondegeneracy(mor("f"), eps);
  if (law == law_name(Law::AdditiveCancellation))
    return violates_additive_cancellation(mor("f"), mor("g"), mor("h"), eps);
  if (law == law_name(Law::NFoldCancellation))
    return violates_nfold_cancellation(w.at("n").get<int>(), mor("f"), mor("g"), eps);
  if (law == law_name(Law::Exchange)) return violates_exchange(mor("f"), mor("g"), eps);
  if (law == law_name(Law::EnrichmentUnique)) return violates_enrichment_unique(mor("f"), mor("g"), eps);
  if (law == law_name(Law::DiagonalDagger))
    return violates_diagonal_dagger<S>(Space{"A", w.at("dim").get<int>(), false}, w.at("n").get<int>());
  if (law == law_name(Law::ScalarCommutativity))
    return violates_scalar_commutativity(scl("a"), scl("b"), eps);
  if (law == law_name(Law::ScalarMultCancellation))
    return violates_scalar_mult_cancellation(scl("a"), scl("b"), scl("c"), eps);
  if (law == law_name(Law::ABabImplication))
    return violates_abab(scl("a"), scl("b"), scl("A"), scl("B"), eps);
  if (law == law_name(Law::InnerProductPD)) return violates_inner_product_pd(mor("phi"), eps);
  if (law == law_name(Law::BiproductEquations)) {
    std::vector<Space> parts;
    for (const json& d : w.at("dims")) parts.push_back(Space{"A", d.get<int>(), false});
    return violates_biproduct_equations<S>(parts, eps);
  }
  throw Error(Errc::BadInput, "replay_witness: unknown law '" + law + "'");
}

/// Runs every law against seeded random morphisms and scalars over one
/// backend and reports a verdict per law.
template <ScalarType S>
std::vector<LawReport> run_law_suite(double eps, std::uint64_t seed, int trials) {
  using namespace detail;
  if (trials < 1) throw Error(Errc::BadInput, "run_law_suite: trials must be >= 1");
  std::vector<LawReport> out;

  auto report = [&](Law law, Verdict v, json witness, int t) {
    if (!witness.is_null()) witness["law"] = law_name(law);
    out.push_back(LawReport{law, S::backend_name(), v, std::move(witness), t});
  };

  auto search = [&](Law law, auto&& one_trial) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(law) + 1)));
    for (int t = 0; t < trials; ++t) {
      json witness = one_trial(rng);
      if (!witness.is_null()) {
        report(law, Verdict::FailsWithWitness, std::move(witness), t + 1);
        return;
      }
    }
    report(law, Verdict::Holds, json{}, trials);
  };

  search(Law::Nondegeneracy, [&](std::mt19937_64& rng) -> json {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_morphism<S>(rng, a, b);
    if (violates_nondegeneracy(f, eps)) return mor_witness("f", f);
    return json{};
  });

  if constexpr (std::is_same_v<S, Bit>) {
    // The paper's Rel counterexample at desk scale: id_1 + id_1 = id_1.
    Space one{"1", 1, false};
    auto id1 = Morphism<Bit>::identity(one);
    auto zero = Morphism<Bit>::zero_mor(one, one);
    json w = mor_witness("f", id1);
    w.update(mor_witness("g", zero));
    w.update(mor_witness("h", id1));
    if (violates_additive_cancellation(id1, zero, id1, eps))
      report(Law::AdditiveCancellation, Verdict::FailsWithWitness, std::move(w), 1);
    else
      report(Law::AdditiveCancellation, Verdict::Holds, json{}, 1);
  } else {
    search(Law::AdditiveCancellation, [&](std::mt19937_64& rng) -> json {
      Space a = random_space(rng, "A"), b = random_space(rng, "B");
      auto f = random_morphism<S>(rng, a, b);
      auto g = random_morphism<S>(rng, a, b);
      auto h = random_morphism<S>(rng, a, b);
      if (violates_additive_cancellation(f, g, h, eps)) {
        json w = mor_witness("f", f);
        w.update(mor_witness("g", g));
        w.update(mor_witness("h", h));
        return w;
      }
      return json{};
    });
  }

  search(Law::NFoldCancellation, [&](std::mt19937_64& rng) -> json {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_morphism<S>(rng, a, b);
    auto g = random_morphism<S>(rng, a, b);
    for (int n : {2, 3, 5})
      if (violates_nfold_cancellation(n, f, g, eps)) {
        json w = mor_witness("f", f);
        w.update(mor_witness("g", g));
        w["n"] = n;
        return w;
      }
    return json{};
  });

  search(Law::Exchange, [&](std::mt19937_64& rng) -> json {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_morphism<S>(rng, a, b);
    auto g = random_morphism<S>(rng, a, b);
    if (violates_exchange(f, g, eps)) {
      json w = mor_witness("f", f);
      w.update(mor_witness("g", g));
      return w;
    }
    return json{};
  });

  search(Law::EnrichmentUnique, [&](std::mt19937_64& rng) -> json {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_morphism<S>(rng, a, b);
    auto g = random_morphism<S>(rng, a, b);
    if (violates_enrichment_unique(f, g, eps)) {
      json w = mor_witness("f", f);
      w.update(mor_witness("g", g));
      return w;
    }
    return json{};
  });

  search(Law::BiproductEquations, [&](std::mt19937_64& rng) -> json {
    std::uniform_int_distribution<int> count(1, 4), dim(0, 4);
    std::vector<Space> parts;
    json dims = json::array();
    int total = 0;
    int n = count(rng);
    for (int i = 0; i < n && total <= 12; ++i) {
      int d = dim(rng);
      total += d;
      parts.push_back(Space{"A" + std::to_string(i), d, false});
      dims.push_back(d);
    }
    if (violates_biproduct_equations<S>(parts, eps)) return json{{"dims", dims}};
    return json{};
  });

  search(Law::DiagonalDagger, [&](std::mt19937_64& rng) -> json {
    std::uniform_int_distribution<int> dim(1, 6), n(1, 4);
    int d = dim(rng), k = n(rng);
    if (violates_diagonal_dagger<S>(Space{"A", d, false}, k)) return json{{"dim", d}, {"n", k}};
    return json{};
  });

  search(Law::ScalarCommutativity, [&](std::mt19937_64& rng) -> json {
    S a = random_scalar<S>(rng), b = random_scalar<S>(rng);
    if (violates_scalar_commutativity(a, b, eps))
      return json{{"a", scalar_to_json(a)}, {"b", scalar_to_json(b)}};
    return json{};
  });

  search(Law::ScalarMultCancellation, [&](std::mt19937_64& rng) -> json {
    S a = random_scalar<S>(rng), b = random_scalar<S>(rng), c = random_scalar<S>(rng);
    if (violates_scalar_mult_cancellation(a, b, c, eps))
      return json{{"a", scalar_to_json(a)}, {"b", scalar_to_json(b)}, {"c", scalar_to_json(c)}};
    return json{};
  });

  if constexpr (std::is_same_v<S, Bit>) {
    // Four scalars over two values: check the implication exhaustively.
    json witness;
    for (int a = 0; a < 2 && witness.is_null(); ++a)
      for (int b = 0; b < 2 && witness.is_null(); ++b)
        for (int ba = 0; ba < 2 && witness.is_null(); ++ba)
          for (int bb = 0; bb < 2 && witness.is_null(); ++bb)
            if (detail::violates_abab(Bit{a}, Bit{b}, Bit{ba}, Bit{bb}, eps))
              witness = json{{"a", a}, {"b", b}, {"A", ba}, {"B", bb}};
    if (witness.is_null())
      report(Law::ABabImplication, Verdict::Holds, json{}, 16);
    else
      report(Law::ABabImplication, Verdict::FailsWithWitness, std::move(witness), 16);
  } else {
    search(Law::ABabImplication, [&](std::mt19937_64& rng) -> json {
      S a = random_scalar<S>(rng), b = random_scalar<S>(rng);
      S big_a = random_scalar<S>(rng), big_b = random_scalar<S>(rng);
      if (violates_abab(a, b, big_a, big_b, eps))
        return json{{"a", scalar_to_json(a)},
                    {"b", scalar_to_json(b)},
                    {"A", scalar_to_json(big_a)},
                    {"B", scalar_to_json(big_b)}};
      return json{};
    });
  }

  search(Law::InnerProductPD, [&](std::mt19937_64& rng) -> json {
    Space a = random_space(rng, "A");
    auto phi = random_morphism<S>(rng, unit_space(), a);
    if (violates_inner_product_pd(phi, eps)) return mor_witness("phi", phi);
    return json{};
  });

  return out;
}

}  // namespace daglim
