#ifndef THOMASON_ADJOINT_HPP
#define THOMASON_ADJOINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thomason/caba.hpp"
#include "thomason/csl.hpp"
#include "thomason/finset.hpp"

namespace thomason {

/// The powerset construction of the left adjoint L : CSL -> caba.
/// L(M) = ℘(M) with unit ι(m) = ↓m.
struct LPowerset {
  CslLattice source;
  Caba algebra;               // atoms = elements of M
  std::vector<Subset> iota;   // by element index of M
};

inline LPowerset l_powerset(const CslLattice& m, std::size_t max_atoms = kDefaultPowersetBound) {
  if (m.size() > max_atoms) {
    throw BoundExceeded("L(M) over " + std::to_string(m.size()) + " atoms exceeds the bound");
  }
  LPowerset out;
  out.source = m;
  out.algebra = powerset_algebra(m.elements());
  out.iota.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.iota.push_back(m.down_set(i));
  // ι must be a complete meet-hom into U(L(M)): ι(a ∧ b) = ι(a) ∩ ι(b) and
  // ι(⊤) = ⊤'s down-set; with down-sets this is the lattice laws themselves.
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (out.iota[m.meet(i, j)] != out.iota[i].meet(out.iota[j])) {
        throw ValidationError("ι is not a meet-homomorphism");  // unreachable for valid M
      }
    }
  }
  return out;
}

/// Checks the generator decomposition {a} = ι(a) ∧ ¬⋁{ι(b) | b < a} and
/// returns the evaluated left-hand side.
inline Subset singleton_decomposition(const LPowerset& lp, std::size_t a) {
  const CslLattice& m = lp.source;
  Subset lower(m.elements());
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (m.lt(b, a)) lower = lower.join(lp.iota[b]);
  }
  Subset got = lp.iota[a].meet(lower.complement());
  Subset want = Subset::singleton(m.elements(), m.elements().label(a));
  if (got != want) {
    throw ConstructionMismatch("singleton decomposition failed at '" + m.elements().label(a) + "'");
  }
  return got;
}

/// The universal extension of a complete meet-hom γ : M -> U(A) to a complete
/// boolean hom τ : L(M) -> A with τ∘ι = γ.  Both the atom-free formula
/// τ(S) = ⋁{γ(a) ∧ ¬⋁{γ(b) | b < a} | a ∈ S} and the adjoint-preimage
/// formula τ(S) = ⋁{x ∈ at(A) | γ*(x) ∈ S} are computed and must agree.
inline CabaHom universal_extend(const LPowerset& lp, const CabaAsCsl& target, const CslHom& gamma,
                                std::size_t full_check_limit = 12) {
  if (gamma.dom() != lp.source || gamma.cod() != target.lattice) {
    throw AmbientMismatch("γ must map the source lattice into the carrier lattice of A");
  }
  const Caba& a = target.view.algebra;
  const CslLattice& m = lp.source;

  FinMap adj = csl_left_adjoint(gamma);  // carrier(A) -> M
  std::vector<std::size_t> dual(a.atom_count());
  for (std::size_t x = 0; x < a.atom_count(); ++x) {
    Subset atom = a.atom(a.atoms().label(x));
    dual[x] = adj.apply(target.view.index_of(atom));
  }
  CabaHom tau(lp.algebra, a, FinMap(a.atoms(), m.elements(), dual));

  // The Remark-style atom-free evaluation, used to cross-check τ.
  auto gamma_elem = [&](std::size_t e) { return target.view.element[gamma.apply(e)]; };
  auto tau_formula = [&](const Subset& s) {
    Subset acc = a.bottom();
    for (std::size_t e = s.bits().find_first(); e != Bits::npos; e = s.bits().find_next(e)) {
      Subset lower = a.bottom();
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (m.lt(b, e)) lower = lower.join(gamma_elem(b));
      }
      acc = acc.join(gamma_elem(e).meet(lower.complement()));
    }
    return acc;
  };

  if (m.size() <= full_check_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m.size()); ++mask) {
      Subset s(m.elements());
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (mask >> i & 1) s.add(i);
      }
      if (tau.apply(s) != tau_formula(s)) {
        throw ConstructionMismatch("the two τ formulas disagree at " + s.label());
      }
    }
  } else {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (tau.apply(lp.iota[e]) != tau_formula(lp.iota[e])) {
        throw ConstructionMismatch("the two τ formulas disagree at ι(" + m.elements().label(e) + ")");
      }
    }
  }
  // Unit law τ∘ι = γ.
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (tau.apply(lp.iota[e]) != gamma_elem(e)) {
      throw ConstructionMismatch("τ∘ι ≠ γ at '" + m.elements().label(e) + "'");
    }
  }
  return tau;
}

/// L on morphisms for the powerset construction: the unique complete hom with
/// L(γ)(↓a) = ↓γ(a), realized with dual atom map γ*.
inline CabaHom l_on_morphism(const CslHom& gamma) {
  Caba lm = powerset_algebra(gamma.dom().elements());
  Caba ln = powerset_algebra(gamma.cod().elements());
  CabaHom out(lm, ln, csl_left_adjoint(gamma));
  for (std::size_t e = 0; e < gamma.dom().size(); ++e) {
    if (out.apply(gamma.dom().down_set(e)) != gamma.cod().down_set(gamma.apply(e))) {
      throw ConstructionMismatch("L(γ)(↓a) ≠ ↓γ(a) at '" + gamma.dom().elements().label(e) + "'");
    }
  }
  return out;
}

inline constexpr std::size_t kDefaultQuotientBound = 10;

/// The free-quotient construction of L.  The free algebra ℘(2^M) is never
/// materialized: the quotient by the complete congruence is the
/// relativization of ℘(2^M) to the complement of the kernel generator, and
/// that complement is exactly the set of valuations that are complete
/// meet-homs M -> 2.
struct LQuotient {
  CslLattice source;
  FinSet valuations;           // all of 2^M, labeled by bit-strings over element order
  Subset kernel_complement;    // ¬x: the surviving valuations
  Caba algebra;                // atoms = surviving valuation labels
  std::vector<Subset> generators;  // □_m = {σ surviving | σ(m) = 1}, by element index
};

inline LQuotient l_quotient(const CslLattice& m, std::size_t max_elements = kDefaultQuotientBound) {
  if (m.size() > max_elements) {
    throw BoundExceeded("valuation space 2^" + std::to_string(m.size()) + " exceeds the bound");
  }
  LQuotient out;
  out.source = m;
  const std::uint64_t total = std::uint64_t(1) << m.size();
  std::vector<std::string> vlabels;
  vlabels.reserve(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    std::string l(m.size(), '0');
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (v >> i & 1) l[i] = '1';
    }
    vlabels.push_back(std::move(l));
  }
  out.valuations = FinSet(vlabels);
  out.kernel_complement = Subset(out.valuations);
  std::vector<std::string> surviving;
  for (std::uint64_t v = 0; v < total; ++v) {
    if (detail::character_element(m, v)) {
      out.kernel_complement.add(vlabels[v]);
      surviving.push_back(vlabels[v]);
    }
  }
  out.algebra = Caba(FinSet(surviving));
  out.generators.reserve(m.size());
  for (std::size_t e = 0; e < m.size(); ++e) {
    Subset g(out.algebra.atoms());
    for (std::size_t s = 0; s < out.algebra.atom_count(); ++s) {
      if (out.algebra.atoms().label(s)[e] == '1') g.add(s);
    }
    out.generators.push_back(std::move(g));
  }
  // Defining relations of the congruence: □_{⋀S} = ⋀{□_s | s ∈ S}, checked on
  // binary meets and the empty meet (sufficient in the finite case).
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (out.generators[m.meet(i, j)] != out.generators[i].meet(out.generators[j])) {
        throw ConstructionMismatch("□_{a∧b} ≠ □_a ∧ □_b in the quotient");
      }
    }
  }
  if (out.generators[m.top()] != out.algebra.top()) {
    throw ConstructionMismatch("□_⊤ is not the top of the quotient");
  }
  return out;
}

/// L on morphisms for the quotient construction: determined by
/// □_a ↦ □_{γ(a)}; the dual atom map precomposes a surviving valuation of N
/// with γ.
inline CabaHom l_quotient_on_morphism(const CslHom& gamma, const LQuotient& lm, const LQuotient& ln) {
  if (lm.source != gamma.dom() || ln.source != gamma.cod()) {
    throw AmbientMismatch("quotient objects do not match γ");
  }
  std::vector<std::size_t> dual(ln.algebra.atom_count());
  for (std::size_t s = 0; s < ln.algebra.atom_count(); ++s) {
    const std::string& sigma = ln.algebra.atoms().label(s);
    std::string composed(gamma.dom().size(), '0');
    for (std::size_t e = 0; e < gamma.dom().size(); ++e) composed[e] = sigma[gamma.apply(e)];
    dual[s] = lm.algebra.atoms().index_of(composed);
  }
  CabaHom out(lm.algebra, ln.algebra, FinMap(ln.algebra.atoms(), lm.algebra.atoms(), dual));
  for (std::size_t e = 0; e < gamma.dom().size(); ++e) {
    if (out.apply(lm.generators[e]) != ln.generators[gamma.apply(e)]) {
      throw ConstructionMismatch("L(γ)(□_a) ≠ □_{γ(a)} at '" + gamma.dom().elements().label(e) + "'");
    }
  }
  return out;
}

/// The isomorphism between the two constructions, induced by the bijection
/// σ ↦ ⋀σ⁻¹(1) between surviving valuations and M, verified on every
/// generator: □_m ↦ ↓m.
struct ConstructionWitness {
  LQuotient quotient;
  LPowerset powerset;
  CabaHom iso;                // quotient.algebra -> powerset.algebra
  FinMap atom_bijection;      // at(quotient) -> M (σ ↦ ⋀σ⁻¹(1))
};

inline ConstructionWitness compare_constructions(const CslLattice& m,
                                                 std::size_t max_elements = kDefaultQuotientBound) {
  ConstructionWitness w;
  w.quotient = l_quotient(m, max_elements);
  w.powerset = l_powerset(m);
  const FinSet& surv = w.quotient.algebra.atoms();
  std::vector<std::size_t> to_m(surv.size());
  for (std::size_t s = 0; s < surv.size(); ++s) {
    const std::string& sigma = surv.label(s);
    Subset ones(m.elements());
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (sigma[e] == '1') ones.add(e);
    }
    to_m[s] = m.meet_of(ones);
  }
  w.atom_bijection = FinMap(surv, m.elements(), to_m);
  if (!w.atom_bijection.is_bijective()) {
    throw ConstructionMismatch("σ ↦ ⋀σ⁻¹(1) is not a bijection onto M");
  }
  // Iso h : ℘(surv) -> ℘(M); its dual atom map is the inverse a ↦ σ_a.
  w.iso = CabaHom(w.quotient.algebra, w.powerset.algebra, w.atom_bijection.inverse());
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (w.iso.apply(w.quotient.generators[e]) != w.powerset.iota[e]) {
      throw ConstructionMismatch("generator correspondence □_m ↦ ↓m failed at '" +
                                 m.elements().label(e) + "'");
    }
  }
  return w;
}

/// The endofunctor H = L∘U on objects: H(A) = ℘(carrier of A).
struct HAlgebraObject {
  Caba base;
  CabaAsCsl carrier;   // U(A)
  LPowerset lifted;    // L(U(A)); lifted.algebra is H(A)
  const Caba& algebra() const { return lifted.algebra; }
};

inline HAlgebraObject h_functor(const Caba& a, std::size_t max_atoms = kDefaultCarrierBound) {
  HAlgebraObject out;
  out.base = a;
  out.carrier = caba_as_csl(a, max_atoms);
  out.lifted = l_powerset(out.carrier.lattice, std::size_t(1) << max_atoms);
  return out;
}

/// H on morphisms: H(α) = L(U(α)); satisfies H(α)(↓a) = ↓α(a).
inline CabaHom h_on_morphism(const CabaHom& alpha, const HAlgebraObject& dom,
                             const HAlgebraObject& cod) {
  return l_on_morphism(forget_hom(alpha, dom.carrier, cod.carrier));
}

/// The natural isomorphism ξ between the quotient and powerset descriptions
/// of H(℘(X)), determined on generators by □_S ↦ ↓S.
struct XiWitness {
  FinSet base;                   // X
  CabaAsCsl lattice;             // U(℘(X))
  ConstructionWitness witness;   // quotient vs powerset over that lattice
};

inline XiWitness xi_iso(const FinSet& x, std::size_t max_elements = kDefaultQuotientBound) {
  XiWitness out;
  out.base = x;
  out.lattice = caba_as_csl(powerset_algebra(x));
  out.witness = compare_constructions(out.lattice.lattice, max_elements);
  return out;
}

/// The finite shadow of K = L_SL∘U : clop(hom_SL(U(A), 2)) with clop = the
/// full powerset.  Ships with the explicit isomorphism onto H(A) given by
/// σ_c ↦ c, which exists because SL- and CSL-characters coincide finitely.
struct KFunctorResult {
  Caba base;
  SlCharacters characters;     // of U(A)
  Caba algebra;                // K(A): atoms = character labels
  CabaAsCsl carrier;           // U(A), for the iso below
  FinMap character_to_element; // at(K(A)) -> carrier(A): σ_c ↦ c
  CabaHom iso_to_h;            // K(A) -> H(A)
};

inline KFunctorResult k_functor_finite(const Caba& a, std::size_t max_atoms = kDefaultCarrierBound) {
  KFunctorResult out;
  out.base = a;
  out.carrier = caba_as_csl(a, max_atoms);
  out.characters = sl_characters(out.carrier.lattice, kDefaultCharacterBound);
  out.algebra = Caba(out.characters.set);
  std::vector<std::size_t> img(out.characters.set.size());
  for (const auto& c : out.characters.characters) {
    img[out.characters.set.index_of(c.label())] = c.element;
  }
  out.character_to_element = FinMap(out.characters.set, out.carrier.view.carrier, std::move(img));
  if (!out.character_to_element.is_bijective()) {
    throw ConstructionMismatch("SL-characters do not biject with the carrier");
  }
  Caba h = powerset_algebra(out.carrier.view.carrier);  // H(A)
  out.iso_to_h = CabaHom(out.algebra, h, out.character_to_element.inverse());
  return out;
}

/// K on morphisms: precomposition of characters, mirroring the quotient
/// description's morphism action.
inline CabaHom k_on_morphism(const CabaHom& alpha, const KFunctorResult& dom,
                             const KFunctorResult& cod) {
  CslHom u = forget_hom(alpha, dom.carrier, cod.carrier);
  std::vector<std::size_t> dual(cod.algebra.atom_count());
  for (std::size_t s = 0; s < cod.algebra.atom_count(); ++s) {
    const Character& sigma = cod.characters.characters[s];
    std::vector<std::size_t> g(u.dom().size());
    for (std::size_t e = 0; e < u.dom().size(); ++e) g[e] = sigma.hom.apply(u.apply(e));
    Character composed{validate_csl_hom(u.dom(), two_chain(), g),
                       csl_left_adjoint(validate_csl_hom(u.dom(), two_chain(), g)).apply(1)};
    dual[cod.algebra.atoms().index_of(sigma.label())] =
        dom.algebra.atoms().index_of(composed.label());
  }
  return CabaHom(dom.algebra, cod.algebra, FinMap(cod.algebra.atoms(), dom.algebra.atoms(), dual));
}

} // namespace thomason

#endif
