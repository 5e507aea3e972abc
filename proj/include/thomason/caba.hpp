#ifndef THOMASON_CABA_HPP
#define THOMASON_CABA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thomason/finset.hpp"

namespace thomason {

/// A finite complete atomic boolean algebra, carried by its atom set.  The
/// carrier is implicitly the powerset of the atoms; elements are Subsets of
/// the atom set, with set-theoretic meet, join and complement.
class Caba {
public:
  Caba() = default;
  explicit Caba(FinSet atoms) : atoms_(std::move(atoms)) {}

  const FinSet& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }

  Subset bottom() const { return Subset(atoms_); }
  Subset top() const { return Subset::full(atoms_); }
  Subset atom(const std::string& l) const { return Subset::singleton(atoms_, l); }
  Subset element(const std::vector<std::string>& members) const { return Subset(atoms_, members); }

  bool is_element(const Subset& s) const { return s.ambient() == atoms_; }
  bool is_atom(const Subset& s) const { return is_element(s) && s.count() == 1; }

  bool operator==(const Caba& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const Caba& o) const { return !(*this == o); }

private:
  FinSet atoms_;
};

/// The powerset functor on objects, under the identification of a powerset
/// algebra with the Caba carried by its atom set.
inline Caba powerset_algebra(FinSet x) { return Caba(std::move(x)); }

inline constexpr std::size_t kDefaultCarrierBound = 16;

/// Materialized carrier of a Caba: the FinSet of canonical element encodings,
/// with conversions between carrier indices and atom-bitmasks.
struct CarrierView {
  Caba algebra;
  FinSet carrier;                        // sorted element labels
  std::vector<Subset> element;           // by carrier index
  std::vector<std::size_t> index_of_mask; // atom-bitmask -> carrier index
  std::vector<std::uint64_t> mask_of_index;

  std::size_t index_of(const Subset& s) const {
    std::uint64_t mask = 0;
    for (std::size_t i = s.bits().find_first(); i != Bits::npos; i = s.bits().find_next(i)) {
      mask |= std::uint64_t(1) << i;
    }
    return index_of_mask[mask];
  }
};

inline CarrierView carrier_view(const Caba& a, std::size_t max_atoms = kDefaultCarrierBound) {
  const std::size_t n = a.atom_count();
  if (n > max_atoms) {
    throw BoundExceeded("carrier of a " + std::to_string(n) +
                        "-atom algebra exceeds the materialization bound " +
                        std::to_string(max_atoms));
  }
  CarrierView v;
  v.algebra = a;
  const std::uint64_t total = std::uint64_t(1) << n;
  std::vector<std::string> labels(total);
  std::vector<Subset> by_mask(total, a.bottom());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s = a.bottom();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.add(i);
    }
    labels[mask] = s.label();
    by_mask[mask] = std::move(s);
  }
  v.carrier = FinSet(labels);
  v.element.resize(total, a.bottom());
  v.index_of_mask.resize(total);
  v.mask_of_index.resize(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::size_t idx = v.carrier.index_of(labels[mask]);
    v.index_of_mask[mask] = idx;
    v.mask_of_index[idx] = mask;
    v.element[idx] = by_mask[mask];
  }
  return v;
}

/// A complete boolean homomorphism, stored by its dual atom map
/// at(cod) -> at(dom).  Evaluation: α(a) = {y ∈ at(cod) | dual(y) ∈ a}.
class CabaHom {
public:
  CabaHom() = default;

  CabaHom(Caba dom, Caba cod, FinMap dual_atom_map)
      : dom_(std::move(dom)), cod_(std::move(cod)), dual_(std::move(dual_atom_map)) {
    if (dual_.dom() != cod_.atoms() || dual_.cod() != dom_.atoms()) {
      throw ValidationError("dual atom map must go from at(cod) to at(dom)");
    }
  }

  static CabaHom identity(const Caba& a) {
    return CabaHom(a, a, FinMap::identity(a.atoms()));
  }

  const Caba& dom() const { return dom_; }
  const Caba& cod() const { return cod_; }
  const FinMap& dual_atom_map() const { return dual_; }

  Subset apply(const Subset& a) const {
    if (a.ambient() != dom_.atoms()) throw AmbientMismatch("hom applied outside its domain");
    Subset out(cod_.atoms());
    for (std::size_t y = 0; y < cod_.atom_count(); ++y) {
      if (a.contains(dual_.apply(y))) out.add(y);
    }
    return out;
  }

  /// this after g, i.e. (this ∘ g).  Dual maps compose the other way round.
  CabaHom after(const CabaHom& g) const {
    if (g.cod_ != dom_) throw AmbientMismatch("hom composition mismatch");
    return CabaHom(g.dom_, cod_, g.dual_.after(dual_));
  }

  bool operator==(const CabaHom& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && dual_ == o.dual_;
  }
  bool operator!=(const CabaHom& o) const { return !(*this == o); }

private:
  Caba dom_;
  Caba cod_;
  FinMap dual_;
};

/// The contravariant powerset functor on morphisms: ℘(f) = f⁻¹, whose dual
/// atom map is f itself.
inline CabaHom powerset_hom(const FinMap& f) {
  return CabaHom(powerset_algebra(f.cod()), powerset_algebra(f.dom()), f);
}

inline FinSet atoms_of(const Caba& a) { return a.atoms(); }

/// Restriction of the left adjoint α* to atoms; this is the Tarski dual of α.
inline FinMap left_adjoint(const CabaHom& alpha) { return alpha.dual_atom_map(); }

/// The left adjoint on arbitrary elements: α*(b) = ⋁{α*(y) | y atom, y ≤ b}.
inline Subset left_adjoint_element(const CabaHom& alpha, const Subset& b) {
  if (b.ambient() != alpha.cod().atoms()) throw AmbientMismatch("left adjoint applied outside cod");
  Subset out(alpha.dom().atoms());
  for (std::size_t y = b.bits().find_first(); y != Bits::npos; y = b.bits().find_next(y)) {
    out.add(alpha.dual_atom_map().apply(y));
  }
  return out;
}

/// Validates a raw element-to-element table as a complete homomorphism and
/// extracts its dual atom map.  `table` is aligned with carrier_view(dom).
inline CabaHom validate_complete_hom(const Caba& dom, const Caba& cod,
                                     const std::vector<Subset>& table,
                                     std::size_t max_atoms = kDefaultCarrierBound) {
  CarrierView dv = carrier_view(dom, max_atoms);
  if (table.size() != dv.carrier.size()) {
    throw ValidationError("hom table is not total on the carrier");
  }
  for (const Subset& s : table) {
    if (s.ambient() != cod.atoms()) throw AmbientMismatch("hom table value outside cod");
  }
  const auto& at = [&](const Subset& s) -> const Subset& { return table[dv.index_of(s)]; };

  if (at(dom.top()) != cod.top()) {
    throw NotAHomomorphism("top is not preserved: α(⊤) = " + at(dom.top()).label());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset& a = dv.element[i];
    if (at(a.complement()) != table[i].complement()) {
      throw NotAHomomorphism("complement violated at " + a.label() + ": α(¬a) = " +
                             at(a.complement()).label() + " but ¬α(a) = " +
                             table[i].complement().label());
    }
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i; j < table.size(); ++j) {
      const Subset& a = dv.element[i];
      const Subset& b = dv.element[j];
      if (at(a.meet(b)) != table[i].meet(table[j])) {
        throw NotAHomomorphism("meet violated at (" + a.label() + ", " + b.label() + ")");
      }
    }
  }

  // All finite laws hold; extract the dual atom map y ↦ ⋀{a | y ≤ α(a)}.
  std::vector<std::size_t> dual(cod.atom_count());
  for (std::size_t y = 0; y < cod.atom_count(); ++y) {
    Subset m = dom.top();
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].contains(y)) m = m.meet(dv.element[i]);
    }
    if (m.count() != 1) {
      throw NotComplete("atom " + cod.atoms().label(y) +
                        " has no preimage atom; ⋀{a | y ≤ α(a)} = " + m.label());
    }
    dual[y] = m.bits().find_first();
  }
  CabaHom hom(dom, cod, FinMap(cod.atoms(), dom.atoms(), std::move(dual)));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (hom.apply(dv.element[i]) != table[i]) {
      throw NotAHomomorphism("table disagrees with its induced dual atom map at " +
                             dv.element[i].label());
    }
  }
  return hom;
}

/// The unit ϑ of Tarski duality on the algebra side: a ↦ ↓a ∩ at(A).  Under
/// the powerset-of-atoms identification its dual atom map is the identity;
/// it is still produced by evaluating the defining formula.
inline CabaHom tarski_unit_alg(const Caba& a) {
  Caba cod = powerset_algebra(a.atoms());
  // ϑ(x) for an atom x is the singleton {x}; the dual map sends it back to x.
  std::vector<std::size_t> dual(a.atom_count());
  for (std::size_t x = 0; x < a.atom_count(); ++x) {
    Subset theta_x(a.atoms());
    for (std::size_t y = 0; y < a.atom_count(); ++y) {
      if (a.atom(a.atoms().label(y)).leq(a.atom(a.atoms().label(x)))) theta_x.add(y);
    }
    dual[x] = theta_x.bits().find_first();
  }
  return CabaHom(a, cod, FinMap(cod.atoms(), a.atoms(), std::move(dual)));
}

/// Ultrafilters of a finite Caba.  Every ultrafilter is principal on an atom;
/// they are materialized with labels "↑x", with the identification
/// uf(A) ≅ at(A) kept as an explicit named bijection.
struct Ultrafilters {
  Caba source;
  FinSet set;           // labels "↑x"
  FinMap atom_to_uf;    // at(A) -> uf(A), the named bijection

  /// The Stone map β_A(a) = {x ∈ uf(A) | a ∈ x}.
  Subset beta(const Subset& a) const {
    if (a.ambient() != source.atoms()) throw AmbientMismatch("beta applied outside the algebra");
    Subset out(set);
    for (std::size_t x = a.bits().find_first(); x != Bits::npos; x = a.bits().find_next(x)) {
      out.add(atom_to_uf.apply(x));
    }
    return out;
  }
};

inline Ultrafilters ultrafilters(const Caba& a) {
  std::vector<std::string> labels;
  labels.reserve(a.atom_count());
  for (const auto& l : a.atoms().labels()) labels.push_back("↑" + l);
  Ultrafilters uf;
  uf.source = a;
  uf.set = FinSet(labels);
  std::vector<std::size_t> img(a.atom_count());
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    img[i] = uf.set.index_of("↑" + a.atoms().label(i));
  }
  uf.atom_to_uf = FinMap(a.atoms(), uf.set, std::move(img));
  return uf;
}

/// Report of the density/compactness checks for A^σ = ℘(uf(A)) with e = β_A.
struct CanonicalExtensionReport {
  bool density = false;
  bool compactness = false;
  bool embedding_bijective = false;
  bool exhaustive_compactness = false;  // true if the naive S,T quantifier ran
  std::size_t cases_checked = 0;

  bool all_hold() const { return density && compactness && embedding_bijective; }
};

inline CanonicalExtensionReport check_canonical_extension(const Caba& a,
                                                          std::size_t max_atoms = kDefaultCarrierBound) {
  CanonicalExtensionReport rep;
  Ultrafilters uf = ultrafilters(a);
  CarrierView cv = carrier_view(a, max_atoms);
  const std::size_t carrier = cv.carrier.size();

  // Images e(a) = β_A(a) for every element of A.
  std::vector<Subset> image;
  image.reserve(carrier);
  for (std::size_t i = 0; i < carrier; ++i) image.push_back(uf.beta(cv.element[i]));

  // e bijective: all images distinct and the extension has the same size.
  rep.embedding_bijective = true;
  {
    std::vector<std::string> seen;
    for (const auto& s : image) seen.push_back(s.label());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) rep.embedding_bijective = false;
    if (image.size() != (std::size_t(1) << uf.set.size())) rep.embedding_bijective = false;
  }

  // Density: close e[A] under pairwise meets, then pairwise joins, and check
  // every element of ℘(uf(A)) is reached.
  {
    auto close = [](std::vector<Subset> xs, bool meets) {
      bool grew = true;
      auto has = [&xs](const Subset& s) {
        for (const auto& t : xs) {
          if (t == s) return true;
        }
        return false;
      };
      while (grew) {
        grew = false;
        const std::size_t n = xs.size();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            Subset c = meets ? xs[i].meet(xs[j]) : xs[i].join(xs[j]);
            if (!has(c)) {
              xs.push_back(c);
              grew = true;
            }
          }
        }
      }
      return xs;
    };
    std::vector<Subset> meets = image;
    meets.push_back(Subset::full(uf.set));  // empty meet
    meets = close(std::move(meets), true);
    std::vector<Subset> joins = meets;
    joins.push_back(Subset(uf.set));        // empty join
    joins = close(std::move(joins), false);
    std::vector<std::string> distinct;
    for (const auto& s : joins) distinct.push_back(s.label());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    rep.density = distinct.size() == (std::size_t(1) << uf.set.size());
  }

  // Compactness.  For carriers up to 8 elements the naive quantifier over all
  // S,T ⊆ A runs; above that the factored criterion is used: e preserves all
  // subset meets and joins and reflects order, which entails the naive form.
  if (carrier <= 8) {
    rep.exhaustive_compactness = true;
    rep.compactness = true;
    for (std::uint64_t sm = 0; sm < (std::uint64_t(1) << carrier); ++sm) {
      for (std::uint64_t tm = 0; tm < (std::uint64_t(1) << carrier); ++tm) {
        Subset meet_e = Subset::full(uf.set);
        Subset meet_a = a.top();
        Subset join_e(uf.set);
        Subset join_a = a.bottom();
        for (std::size_t i = 0; i < carrier; ++i) {
          if (sm >> i & 1) {
            meet_e = meet_e.meet(image[i]);
            meet_a = meet_a.meet(cv.element[i]);
          }
          if (tm >> i & 1) {
            join_e = join_e.join(image[i]);
            join_a = join_a.join(cv.element[i]);
          }
        }
        ++rep.cases_checked;
        if (meet_e.leq(join_e) && !meet_a.leq(join_a)) {
          rep.compactness = false;
          return rep;
        }
      }
    }
  } else {
    rep.compactness = true;
    for (std::uint64_t sm = 0; sm < (std::uint64_t(1) << carrier); ++sm) {
      Subset meet_e = Subset::full(uf.set);
      Subset meet_a = a.top();
      Subset join_e(uf.set);
      Subset join_a = a.bottom();
      for (std::size_t i = 0; i < carrier; ++i) {
        if (sm >> i & 1) {
          meet_e = meet_e.meet(image[i]);
          meet_a = meet_a.meet(cv.element[i]);
          join_e = join_e.join(image[i]);
          join_a = join_a.join(cv.element[i]);
        }
      }
      ++rep.cases_checked;
      if (meet_e != uf.beta(meet_a) || join_e != uf.beta(join_a)) {
        rep.compactness = false;
        return rep;
      }
    }
    for (std::size_t i = 0; i < carrier && rep.compactness; ++i) {
      for (std::size_t j = 0; j < carrier; ++j) {
        if (image[i].leq(image[j]) && !cv.element[i].leq(cv.element[j])) {
          rep.compactness = false;
          break;
        }
      }
    }
  }
  return rep;
}

inline constexpr std::size_t kDefaultFreeGeneratorBound = 4;

/// The free complete atomic boolean algebra over a set of generators: atoms
/// are the 0/1-valuations of the generators, labeled by bit-strings over the
/// sorted generator list.
struct FreeCaba {
  Caba algebra;
  FinSet generators;
  std::vector<Subset> gen;  // generator index -> f(x) = {v | v(x) = 1}
};

inline FreeCaba free_caba(const FinSet& x, std::size_t max_generators = kDefaultFreeGeneratorBound) {
  if (x.size() > max_generators) {
    throw BoundExceeded("free algebra over " + std::to_string(x.size()) +
                        " generators exceeds the bound " + std::to_string(max_generators));
  }
  const std::uint64_t total = std::uint64_t(1) << x.size();
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    std::string l(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (v >> i & 1) l[i] = '1';
    }
    labels.push_back(std::move(l));
  }
  FreeCaba out;
  out.algebra = Caba(FinSet(std::move(labels)));
  out.generators = x;
  out.gen.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Subset g(out.algebra.atoms());
    for (std::size_t v = 0; v < out.algebra.atom_count(); ++v) {
      if (out.algebra.atoms().label(v)[i] == '1') g.add(v);
    }
    out.gen.push_back(std::move(g));
  }
  return out;
}

/// The universal extension of g : X -> A to a complete homomorphism
/// free_caba(X) -> A.  Its dual atom map sends an atom a of A to the
/// valuation v_a with v_a(x) = 1 iff a ≤ g(x).
inline CabaHom free_extend(const FreeCaba& f, const Caba& a, const std::vector<Subset>& g) {
  if (g.size() != f.generators.size()) throw ValidationError("generator assignment is not total");
  for (const Subset& s : g) {
    if (s.ambient() != a.atoms()) throw AmbientMismatch("generator image outside the target algebra");
  }
  std::vector<std::size_t> dual(a.atom_count());
  for (std::size_t atom = 0; atom < a.atom_count(); ++atom) {
    std::string v(f.generators.size(), '0');
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].contains(atom)) v[i] = '1';
    }
    dual[atom] = f.algebra.atoms().index_of(v);
  }
  return CabaHom(f.algebra, a, FinMap(a.atoms(), f.algebra.atoms(), std::move(dual)));
}

} // namespace thomason

#endif
