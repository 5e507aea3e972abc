#ifndef THOMASON_CSL_HPP
#define THOMASON_CSL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thomason/caba.hpp"
#include "thomason/finset.hpp"

namespace thomason {

/// A finite complete meet-semilattice: a validated partial order in which
/// every pair has a greatest lower bound and a top element exists.  All
/// subset-meets (and hence joins) follow.  Meets are precomputed at
/// validation time.
class CslLattice {
public:
  CslLattice() = default;

  const FinSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t top() const { return top_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

  /// ⋀S, with ⋀∅ = ⊤.
  std::size_t meet_of(const Subset& s) const {
    if (s.ambient() != elements_) throw AmbientMismatch("meet of a subset of another lattice");
    std::size_t m = top_;
    for (std::size_t i = s.bits().find_first(); i != Bits::npos; i = s.bits().find_next(i)) {
      m = meet(m, i);
    }
    return m;
  }

  /// ⋁S = ⋀{upper bounds of S}; ⋁∅ is the bottom ⋀M.
  std::size_t join_of(const Subset& s) const {
    if (s.ambient() != elements_) throw AmbientMismatch("join of a subset of another lattice");
    Subset ub = Subset::full(elements_);
    for (std::size_t i = s.bits().find_first(); i != Bits::npos; i = s.bits().find_next(i)) {
      ub = ub.meet(Subset(elements_, up_[i]));
    }
    return meet_of(ub);
  }

  std::size_t bottom() const { return meet_of(Subset::full(elements_)); }

  Subset down_set(std::size_t i) const {
    Subset out(elements_);
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq(j, i)) out.add(j);
    }
    return out;
  }

  Subset up_set(std::size_t i) const { return Subset(elements_, up_[i]); }

  bool operator==(const CslLattice& o) const { return elements_ == o.elements_ && up_ == o.up_; }
  bool operator!=(const CslLattice& o) const { return !(*this == o); }

  friend CslLattice validate_csl(const FinSet&,
                                 const std::vector<std::pair<std::string, std::string>>&);
  friend CslLattice validate_csl_indices(const FinSet&,
                                         const std::vector<std::pair<std::size_t, std::size_t>>&);

private:
  FinSet elements_;
  std::vector<Bits> up_;        // up_[i] = {j | i ≤ j}
  std::vector<std::size_t> meet_;
  std::size_t top_ = 0;
};

/// Takes the reflexive-transitive closure of a raw relation, then validates
/// antisymmetry, binary meets and the existence of a top element.
inline CslLattice validate_csl_indices(const FinSet& elements,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& raw) {
  const std::size_t n = elements.size();
  if (n == 0) throw NoTop("empty carrier has no top element");
  CslLattice m;
  m.elements_ = elements;
  m.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) m.up_[i].set(i);
  for (const auto& [i, j] : raw) m.up_[i].set(j);
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.up_[i].test(k)) m.up_[i] |= m.up_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.up_[i].test(j) && m.up_[j].test(i)) {
        throw NotAPoset("cycle through '" + elements.label(i) + "' and '" + elements.label(j) + "'");
      }
    }
  }
  std::size_t top = SIZE_MAX;
  for (std::size_t t = 0; t < n; ++t) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = m.up_[i].test(t);
    if (ok) {
      top = t;
      break;
    }
  }
  if (top == SIZE_MAX) throw NoTop("no greatest element");
  m.top_ = top;
  m.meet_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Greatest lower bound by brute force over the lower-bound set.
      std::size_t glb = SIZE_MAX;
      for (std::size_t k = 0; k < n; ++k) {
        if (m.up_[k].test(i) && m.up_[k].test(j)) {
          if (glb == SIZE_MAX || m.up_[glb].test(k)) glb = k;
        }
      }
      if (glb == SIZE_MAX) {
        throw NoMeet("no lower bound for ('" + elements.label(i) + "', '" + elements.label(j) + "')");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (m.up_[k].test(i) && m.up_[k].test(j) && !m.up_[k].test(glb)) {
          throw NoMeet("no greatest lower bound for ('" + elements.label(i) + "', '" +
                       elements.label(j) + "')");
        }
      }
      m.meet_[i * n + j] = glb;
    }
  }
  return m;
}

inline CslLattice validate_csl(const FinSet& elements,
                               const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) pairs.emplace_back(elements.index_of(a), elements.index_of(b));
  return validate_csl_indices(elements, pairs);
}

/// The fixed two-element chain 0 < 1.
inline const CslLattice& two_chain() {
  static const CslLattice two = validate_csl(FinSet({"0", "1"}), {{"0", "1"}});
  return two;
}

/// A complete meet-homomorphism between finite lattices.  For finite carriers
/// preservation of binary meets and top is equivalent to preservation of all
/// meets; the validator checks the former.
class CslHom {
public:
  CslHom() = default;

  const CslLattice& dom() const { return dom_; }
  const CslLattice& cod() const { return cod_; }

  std::size_t apply(std::size_t i) const { return img_.at(i); }
  const std::string& apply(const std::string& l) const {
    return cod_.elements().label(img_.at(dom_.elements().index_of(l)));
  }

  const std::vector<std::size_t>& graph() const { return img_; }

  CslHom after(const CslHom& g) const {
    if (g.cod_ != dom_) throw AmbientMismatch("lattice map composition mismatch");
    CslHom out;
    out.dom_ = g.dom_;
    out.cod_ = cod_;
    out.img_.resize(g.img_.size());
    for (std::size_t i = 0; i < g.img_.size(); ++i) out.img_[i] = img_[g.img_[i]];
    return out;
  }

  bool operator==(const CslHom& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && img_ == o.img_;
  }
  bool operator!=(const CslHom& o) const { return !(*this == o); }

  friend CslHom validate_csl_hom(const CslLattice&, const CslLattice&,
                                 const std::vector<std::size_t>&);

private:
  CslLattice dom_;
  CslLattice cod_;
  std::vector<std::size_t> img_;
};

inline CslHom validate_csl_hom(const CslLattice& dom, const CslLattice& cod,
                               const std::vector<std::size_t>& graph) {
  if (graph.size() != dom.size()) throw ValidationError("lattice map is not total");
  for (std::size_t i : graph) {
    if (i >= cod.size()) throw ValidationError("lattice map image out of range");
  }
  if (graph[dom.top()] != cod.top()) {
    throw TopViolation("top maps to '" + cod.elements().label(graph[dom.top()]) + "'");
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i; j < dom.size(); ++j) {
      if (graph[dom.meet(i, j)] != cod.meet(graph[i], graph[j])) {
        throw MeetViolation("meet violated at ('" + dom.elements().label(i) + "', '" +
                            dom.elements().label(j) + "')");
      }
    }
  }
  CslHom h;
  h.dom_ = dom;
  h.cod_ = cod;
  h.img_ = graph;
  return h;
}

inline CslHom csl_identity(const CslLattice& m) {
  std::vector<std::size_t> g(m.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = i;
  return validate_csl_hom(m, m, g);
}

inline constexpr std::size_t kDefaultCharacterBound = 20;

/// A character M -> 2 together with the element a it is determined by:
/// σ_a(m) = 1 iff a ≤ m.
struct Character {
  CslHom hom;
  std::size_t element;  // index of a in M

  /// Label used when characters are materialized as a set: "σ_a".
  std::string label() const { return "σ_" + hom.dom().elements().label(element); }
};

namespace detail {
/// σ is a (complete) meet-hom into 2 iff σ⁻¹(1) is the principal up-set of
/// its own meet.  An O(|M|) test per valuation, no subset enumeration.
inline std::optional<std::size_t> character_element(const CslLattice& m, std::uint64_t valuation) {
  Subset f(m.elements());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (valuation >> i & 1) f.add(i);
  }
  if (f.is_empty()) return std::nullopt;  // σ(⊤) must be 1 (empty meet)
  std::size_t a = m.meet_of(f);
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool one = (valuation >> i & 1) != 0;
    if (one != m.leq(a, i)) return std::nullopt;
  }
  return a;
}
} // namespace detail

/// Enumerates all complete meet-homomorphisms M -> 2, each paired with the
/// unique a ∈ M it equals σ_a for.  Canonically ordered by that element.
inline std::vector<Character> csl_characters(const CslLattice& m,
                                             std::size_t max_elements = kDefaultCharacterBound) {
  if (m.size() > max_elements) {
    throw BoundExceeded("character enumeration over " + std::to_string(m.size()) + " elements");
  }
  std::vector<std::optional<std::uint64_t>> by_element(m.size());
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << m.size()); ++v) {
    if (auto a = detail::character_element(m, v)) by_element[*a] = v;
  }
  std::vector<Character> out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (!by_element[a]) continue;
    std::vector<std::size_t> g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) g[i] = (*by_element[a] >> i & 1) ? 1 : 0;
    out.push_back(Character{validate_csl_hom(m, two_chain(), g), a});
  }
  return out;
}

/// SL-characters: maps preserving binary meets and top only.  For finite M
/// this coincides with csl_characters; the coincidence is a tested theorem,
/// not assumed here — the filter genuinely checks only the finite laws.
struct SlCharacters {
  std::vector<Character> characters;
  FinSet set;                    // materialized character labels
  std::vector<Subset> i_m;       // i_M(m) = {σ | σ(m) = 1}, by element index
};

inline SlCharacters sl_characters(const CslLattice& m,
                                  std::size_t max_elements = kDefaultCharacterBound) {
  if (m.size() > max_elements) {
    throw BoundExceeded("character enumeration over " + std::to_string(m.size()) + " elements");
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> found;  // (defining element, valuation)
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << m.size()); ++v) {
    auto bit = [&](std::size_t i) { return (v >> i & 1) != 0; };
    if (!bit(m.top())) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      for (std::size_t j = i; j < m.size() && ok; ++j) {
        if (bit(m.meet(i, j)) != (bit(i) && bit(j))) ok = false;
      }
    }
    if (!ok) continue;
    Subset f(m.elements());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (bit(i)) f.add(i);
    }
    found.emplace_back(m.meet_of(f), v);
  }
  std::sort(found.begin(), found.end());
  SlCharacters out;
  std::vector<std::string> labels;
  for (const auto& [a, v] : found) {
    std::vector<std::size_t> g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) g[i] = (v >> i & 1) ? 1 : 0;
    Character c{validate_csl_hom(m, two_chain(), g), a};
    labels.push_back(c.label());
    out.characters.push_back(std::move(c));
  }
  out.set = FinSet(labels);
  for (std::size_t e = 0; e < m.size(); ++e) {
    Subset s(out.set);
    for (const auto& c : out.characters) {
      if (c.hom.apply(e) == 1) s.add(c.label());
    }
    out.i_m.push_back(std::move(s));
  }
  return out;
}

/// The order-reversing bijection a ↦ σ_a, as a FinMap from M to the
/// materialized character set.
struct CharacterBijection {
  FinSet characters;
  FinMap element_to_character;
  std::vector<Character> list;  // ordered by defining element
};

inline CharacterBijection character_bijection(const CslLattice& m,
                                              std::size_t max_elements = kDefaultCharacterBound) {
  auto chars = csl_characters(m, max_elements);
  std::vector<std::string> labels;
  for (const auto& c : chars) labels.push_back(c.label());
  CharacterBijection out;
  out.characters = FinSet(labels);
  std::vector<std::size_t> img(m.size(), SIZE_MAX);
  for (const auto& c : chars) img[c.element] = out.characters.index_of(c.label());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] == SIZE_MAX) throw ValidationError("element without a character — not a lattice?");
  }
  out.element_to_character = FinMap(m.elements(), out.characters, std::move(img));
  out.list = std::move(chars);
  return out;
}

/// The left adjoint of a complete meet-homomorphism: g(n) = ⋀{a | n ≤ γ(a)},
/// satisfying g(n) ≤ a ⟺ n ≤ γ(a) (verified for every pair).
inline FinMap csl_left_adjoint(const CslHom& gamma) {
  const CslLattice& dom = gamma.dom();
  const CslLattice& cod = gamma.cod();
  std::vector<std::size_t> img(cod.size());
  for (std::size_t n = 0; n < cod.size(); ++n) {
    Subset above(dom.elements());
    for (std::size_t a = 0; a < dom.size(); ++a) {
      if (cod.leq(n, gamma.apply(a))) above.add(a);
    }
    img[n] = dom.meet_of(above);
  }
  for (std::size_t n = 0; n < cod.size(); ++n) {
    for (std::size_t a = 0; a < dom.size(); ++a) {
      if (dom.leq(img[n], a) != cod.leq(n, gamma.apply(a))) {
        throw ValidationError("adjunction law failed at ('" + cod.elements().label(n) + "', '" +
                              dom.elements().label(a) + "')");
      }
    }
  }
  return FinMap(cod.elements(), dom.elements(), std::move(img));
}

/// The forgetful functor caba -> CSL on objects: the carrier of A ordered by
/// inclusion.  A view constructor, not a subtype.
struct CabaAsCsl {
  CslLattice lattice;
  CarrierView view;  // element index in `lattice` matches carrier index in `view`
};

inline CabaAsCsl caba_as_csl(const Caba& a, std::size_t max_atoms = kDefaultCarrierBound) {
  CabaAsCsl out;
  out.view = carrier_view(a, max_atoms);
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  const std::size_t n = out.view.carrier.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (out.view.element[i].leq(out.view.element[j])) leq.emplace_back(i, j);
    }
  }
  out.lattice = validate_csl_indices(out.view.carrier, leq);
  return out;
}

/// The forgetful functor on morphisms: a complete boolean hom viewed as a
/// complete meet-hom between the carrier lattices.
inline CslHom forget_hom(const CabaHom& alpha, const CabaAsCsl& dom, const CabaAsCsl& cod) {
  if (dom.view.algebra != alpha.dom() || cod.view.algebra != alpha.cod()) {
    throw AmbientMismatch("forgetful view does not match the hom");
  }
  std::vector<std::size_t> g(dom.lattice.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = cod.view.index_of(alpha.apply(dom.view.element[i]));
  }
  return validate_csl_hom(dom.lattice, cod.lattice, g);
}

} // namespace thomason

#endif
