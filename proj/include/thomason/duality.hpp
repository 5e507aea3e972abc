#ifndef THOMASON_DUALITY_HPP
#define THOMASON_DUALITY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "thomason/adjoint.hpp"
#include "thomason/caba.hpp"
#include "thomason/finset.hpp"
#include "thomason/modal.hpp"

namespace thomason {

/// at on morphisms: the Tarski dual of a complete hom is its left adjoint
/// restricted to atoms.
inline FinMap tarski_dual_of_hom(const CabaHom& alpha) { return alpha.dual_atom_map(); }

/// ℘ on morphisms: the Tarski dual of a function is its inverse image.
inline CabaHom tarski_dual_of_map(const FinMap& f) { return powerset_hom(f); }

/// Verdict of the strict-equality check H∘℘ = ℘∘P at a map f : X -> Y.
struct SquareHwPReport {
  bool carriers_equal = false;      // H℘(X), ℘P(X) and H℘(Y), ℘P(Y) share atoms
  bool dual_maps_equal = false;     // at-level agreement of H℘(f) and ℘P(f)
  bool full_carrier_equal = false;  // elementwise agreement on all of ℘P(Y)
  std::size_t elements_compared = 0;

  bool holds() const { return carriers_equal && dual_maps_equal && full_carrier_equal; }
};

/// H℘(X) and ℘P(X) are built along both paths and must coincide on the nose:
/// same atom sets, and for f the same hom on the entire double powerset.
inline SquareHwPReport check_square_HwP(const FinMap& f, std::size_t max_base = 4) {
  if (f.dom().size() > max_base || f.cod().size() > max_base) {
    throw BoundExceeded("double powerset check beyond the configured base bound");
  }
  SquareHwPReport rep;

  HAlgebraObject h_wp_x = h_functor(powerset_algebra(f.dom()));
  HAlgebraObject h_wp_y = h_functor(powerset_algebra(f.cod()));
  Caba wp_p_x = powerset_algebra(powerset(f.dom()));
  Caba wp_p_y = powerset_algebra(powerset(f.cod()));
  rep.carriers_equal = h_wp_x.algebra().atoms() == wp_p_x.atoms() &&
                       h_wp_y.algebra().atoms() == wp_p_y.atoms();
  if (!rep.carriers_equal) return rep;

  // ℘(f) : ℘(Y) -> ℘(X), so both composite actions go H℘(Y) -> H℘(X).
  CabaHom via_h = h_on_morphism(powerset_hom(f), h_wp_y, h_wp_x);
  CabaHom via_p = powerset_hom(powerset_map(f));
  rep.dual_maps_equal = via_h.dual_atom_map() == via_p.dual_atom_map();

  rep.full_carrier_equal = true;
  const FinSet& atoms = via_h.dom().atoms();  // P(Y)
  const std::uint64_t total = std::uint64_t(1) << atoms.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s(atoms);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask >> i & 1) s.add(i);
    }
    ++rep.elements_compared;
    if (via_h.apply(s) != via_p.apply(s)) {
      rep.full_carrier_equal = false;
      break;
    }
  }
  return rep;
}

/// ζ_A : at(H(A)) -> P(at(A)), sending the atom {a} of H(A) to the set of
/// atoms below a.  Checked against the characterization as the inverse of
/// at H(ϑ_A) ∘ ε_{P at(A)}.
struct ZetaWitness {
  Caba base;
  FinMap zeta;       // carrier(A) -> powerset(at(A))
  FinMap composite;  // powerset(at(A)) -> carrier(A), the ε/ϑ composite
};

inline ZetaWitness zeta(const Caba& a, std::size_t max_atoms = kDefaultCarrierBound) {
  ZetaWitness out;
  out.base = a;
  CarrierView cv = carrier_view(a, max_atoms);       // at(H(A)) = carrier of A
  FinSet p_at = powerset(a.atoms());                  // P(at(A))
  std::vector<std::size_t> img(cv.carrier.size());
  for (std::size_t i = 0; i < cv.carrier.size(); ++i) {
    Subset below(a.atoms());
    for (std::size_t x = 0; x < a.atom_count(); ++x) {
      if (a.atom(a.atoms().label(x)).leq(cv.element[i])) below.add(x);
    }
    img[i] = p_at.index_of(below.label());
  }
  out.zeta = FinMap(cv.carrier, p_at, std::move(img));

  // The composite at H(ϑ_A) ∘ ε_{P at(A)} : P at(A) -> at H(A).
  HAlgebraObject ha = h_functor(a, max_atoms);
  HAlgebraObject hp = h_functor(powerset_algebra(a.atoms()), max_atoms);
  CabaHom h_theta = h_on_morphism(tarski_unit_alg(a), ha, hp);
  // ε embeds P at(A) into at(H℘at(A)) = the carrier of ℘at(A); under the
  // canonical encoding this is a pure relabeling, built by label lookup.
  std::vector<std::size_t> eps(p_at.size());
  for (std::size_t i = 0; i < p_at.size(); ++i) {
    eps[i] = hp.carrier.view.carrier.index_of(p_at.label(i));
  }
  FinMap epsilon(p_at, hp.carrier.view.carrier, std::move(eps));
  out.composite = h_theta.dual_atom_map().after(epsilon);
  if (!out.composite.is_bijective() || out.zeta != out.composite.inverse()) {
    throw ConstructionMismatch("ζ does not invert at H(ϑ)∘ε");
  }
  return out;
}

/// The lifted functor at̂ : Alg(H) -> Coalg(P) on objects.  The structure map
/// is ζ_A ∘ at(τ); pointwise, ρ(x) is the set of atoms below tau_trace(x) —
/// which is tau_trace(x) itself under the powerset-of-atoms identification.
inline PCoalgebra lift_at(const HAlgebra& h) {
  std::vector<Subset> rho;
  rho.reserve(h.base().atom_count());
  for (std::size_t x = 0; x < h.base().atom_count(); ++x) rho.push_back(h.trace(x));
  return PCoalgebra(h.base().atoms(), std::move(rho));
}

/// The lifted functor ℘̂ : Coalg(P) -> Alg(H) on objects: (℘(X), ℘(g)).  The
/// atom trace of ℘(g) is g itself, since the dual atom map of an inverse
/// image is the underlying function.
inline HAlgebra lift_wp(const PCoalgebra& c) {
  Caba base = powerset_algebra(c.carrier());
  std::vector<Subset> trace;
  trace.reserve(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) trace.push_back(c.rho(x));
  return HAlgebra(std::move(base), std::move(trace));
}

/// The two Thomason composite identities: M℘̂C = ℘ on frames and
/// Fat̂A = at on modal algebras.
struct ThomasonComposites {
  Verdict frames;    // M ℘̂ C (X,R) = (℘(X), □_R)
  Verdict algebras;  // F at̂ A (A,□) = (at(A), R_□)
  bool holds() const { return frames.holds && algebras.holds; }
};

inline ThomasonComposites thomason_composites(const KripkeFrame& f, const ModalAlgebra& ma,
                                              std::size_t max_worlds = kDefaultCarrierBound) {
  ThomasonComposites out;
  ModalAlgebra composite_alg = modal_of_halgebra(lift_wp(coalgebra_of_frame(f)));
  ModalAlgebra direct_alg = box_from_relation(f, max_worlds);
  out.frames = composite_alg == direct_alg
                   ? Verdict::ok()
                   : Verdict::fail("□ tables differ for frame over " +
                                   Subset::full(f.worlds()).label());
  KripkeFrame composite_frame = frame_of_coalgebra(lift_at(halgebra_of_modal(ma)));
  KripkeFrame direct_frame = relation_from_box(ma);
  out.algebras = composite_frame == direct_frame
                     ? Verdict::ok()
                     : Verdict::fail("relations differ on " +
                                     Subset::full(ma.base().atoms()).label());
  return out;
}

/// The finite Stone unit η_X(x) = {U ∈ clop(X) | x ∈ U} with clop(X) = ℘(X).
/// Each value is verified to be an ultrafilter and identified with the
/// principal ultrafilter ↑{x} of ℘(X).
inline FinMap finite_stone_unit(const FinSet& x, std::size_t max_base = kDefaultCarrierBound) {
  if (x.size() > max_base) throw BoundExceeded("Stone unit beyond the powerset bound");
  Caba wp = powerset_algebra(x);
  CarrierView cv = carrier_view(wp);
  Ultrafilters uf = ultrafilters(wp);
  std::vector<std::size_t> img(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    // The family {U ⊆ X | x ∈ U} as a set of carrier elements.
    Subset family(cv.carrier);
    for (std::size_t i = 0; i < cv.carrier.size(); ++i) {
      if (cv.element[i].contains(e)) family.add(i);
    }
    // Ultrafilter laws: proper, upward closed, meet-closed, prime.
    for (std::size_t i = 0; i < cv.carrier.size(); ++i) {
      bool in_i = family.contains(i);
      if (in_i == family.contains(cv.index_of(cv.element[i].complement()))) {
        throw ConstructionMismatch("η(" + x.label(e) + ") is not prime");
      }
      for (std::size_t j = 0; j < cv.carrier.size(); ++j) {
        bool meet_in = family.contains(cv.index_of(cv.element[i].meet(cv.element[j])));
        if (meet_in != (in_i && family.contains(j))) {
          throw ConstructionMismatch("η(" + x.label(e) + ") is not a filter");
        }
      }
    }
    // Principal generator: the meet of the family is the atom {x}.
    Subset gen = wp.top();
    for (std::size_t i = family.bits().find_first(); i != Bits::npos;
         i = family.bits().find_next(i)) {
      gen = gen.meet(cv.element[i]);
    }
    if (!wp.is_atom(gen) || !gen.contains(e)) {
      throw ConstructionMismatch("η(" + x.label(e) + ") is not principal on {" + x.label(e) + "}");
    }
    img[e] = uf.atom_to_uf.apply(gen.bits().find_first());
  }
  return FinMap(x, uf.set, std::move(img));
}

/// Checks that a given atom bijection carries one H-algebra structure to the
/// other: trace₂(b(x)) = b[trace₁(x)] for every atom x.
inline bool halgebra_isomorphic_by(const HAlgebra& h1, const HAlgebra& h2, const FinMap& b) {
  if (b.dom() != h1.base().atoms() || b.cod() != h2.base().atoms() || !b.is_bijective()) {
    return false;
  }
  for (std::size_t x = 0; x < h1.base().atom_count(); ++x) {
    if (direct_image(b, h1.trace(x)) != h2.trace(b.apply(x))) return false;
  }
  return true;
}

namespace detail {
/// Trace-size profile used to prune the bijection search: an iso must match
/// atoms whose traces have equal cardinality.
inline std::vector<std::size_t> trace_sizes(const HAlgebra& h) {
  std::vector<std::size_t> out(h.base().atom_count());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = h.trace(x).count();
  return out;
}
} // namespace detail

/// Searches all atom bijections (with cardinality-profile pruning) for an
/// isomorphism of H-algebras.
inline std::optional<FinMap> find_halgebra_iso(const HAlgebra& h1, const HAlgebra& h2) {
  const std::size_t n = h1.base().atom_count();
  if (n != h2.base().atom_count()) return std::nullopt;
  auto p1 = detail::trace_sizes(h1);
  auto p2 = detail::trace_sizes(h2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool plausible = true;
    for (std::size_t x = 0; x < n && plausible; ++x) plausible = p1[x] == p2[perm[x]];
    if (!plausible) continue;
    FinMap b(h1.base().atoms(), h2.base().atoms(), perm);
    if (halgebra_isomorphic_by(h1, h2, b)) return b;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Checks that a world bijection is a frame isomorphism: xRy iff b(x)R'b(y).
inline bool frame_isomorphic_by(const KripkeFrame& f1, const KripkeFrame& f2, const FinMap& b) {
  if (b.dom() != f1.worlds() || b.cod() != f2.worlds() || !b.is_bijective()) return false;
  for (std::size_t x = 0; x < f1.size(); ++x) {
    for (std::size_t y = 0; y < f1.size(); ++y) {
      if (f1.related(x, y) != f2.related(b.apply(x), b.apply(y))) return false;
    }
  }
  return true;
}

/// Searches world bijections for a frame isomorphism, pruning by in/out
/// degree pairs.
inline std::optional<FinMap> find_frame_iso(const KripkeFrame& f1, const KripkeFrame& f2) {
  const std::size_t n = f1.size();
  if (n != f2.size()) return std::nullopt;
  auto degrees = [](const KripkeFrame& f) {
    std::vector<std::pair<std::size_t, std::size_t>> d(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      for (std::size_t y = 0; y < f.size(); ++y) {
        if (f.related(x, y)) {
          ++d[x].first;
          ++d[y].second;
        }
      }
    }
    return d;
  };
  auto d1 = degrees(f1);
  auto d2 = degrees(f2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool plausible = true;
    for (std::size_t x = 0; x < n && plausible; ++x) plausible = d1[x] == d2[perm[x]];
    if (!plausible) continue;
    FinMap b(f1.worlds(), f2.worlds(), perm);
    if (frame_isomorphic_by(f1, f2, b)) return b;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// The finite shadow of the canonical-extension functor on K-algebras:
/// (-)^σ = ℘̂ ∘ (forget) ∘ uf̂.  Input is α : K(A) -> A against a prepared
/// k_functor_finite(A); output is the H-algebra over ℘(uf(A)), together with
/// the direct reading of α as an H-algebra on A through K(A) ≅ H(A) and the
/// atom bijection x ↦ ↑x witnessing that the two agree.
struct SigmaResult {
  HAlgebra sigma;     // over ℘(uf(A))
  HAlgebra direct;    // over A itself, via the K ≅ H identification
  FinMap witness;     // at(A) -> uf(A), an H-algebra isomorphism direct -> sigma
};

inline SigmaResult sigma_on_algebras(const KFunctorResult& k, const CabaHom& alpha) {
  const Caba& a = k.base;
  if (alpha.dom() != k.algebra || alpha.cod() != a) {
    throw AmbientMismatch("α must be a hom K(A) -> A");
  }
  Ultrafilters uf = ultrafilters(a);

  // uf̂ : the coalgebra (uf(A), uf(α)).  uf(α) sends the principal
  // ultrafilter ↑x to α⁻¹[↑x], principal on the atom α*(x) of K(A); that
  // atom is a character σ_c, identified with c ∈ A and then with a set of
  // ultrafilters through x ↦ ↑x.
  std::vector<Subset> rho(a.atom_count(), Subset(uf.set));
  for (std::size_t x = 0; x < a.atom_count(); ++x) {
    std::size_t character = alpha.dual_atom_map().apply(x);
    std::size_t c = k.character_to_element.apply(character);
    rho[uf.atom_to_uf.apply(x)] = uf.beta(k.carrier.view.element[c]);
  }
  PCoalgebra coalg(uf.set, std::move(rho));

  // The forgetful step is the identity at finite scale; ℘̂ then produces the
  // H-algebra (℘(uf(A)), ℘(uf(α))).
  SigmaResult out;
  out.sigma = lift_wp(coalg);

  // Direct reading: τ = α ∘ (iso_to_h)⁻¹ : H(A) -> A, traced on atoms.
  CabaHom iso_inv(k.iso_to_h.cod(), k.iso_to_h.dom(), k.character_to_element);
  CabaHom tau = alpha.after(iso_inv);
  std::vector<Subset> trace;
  trace.reserve(a.atom_count());
  for (std::size_t x = 0; x < a.atom_count(); ++x) {
    trace.push_back(k.carrier.view.element[tau.dual_atom_map().apply(x)]);
  }
  out.direct = HAlgebra(a, std::move(trace));

  out.witness = uf.atom_to_uf;
  if (!halgebra_isomorphic_by(out.direct, out.sigma, out.witness)) {
    throw ConstructionMismatch("σ route disagrees with the direct K ≅ H reading");
  }
  return out;
}

} // namespace thomason

#endif
