#include <catch2/catch_amalgamated.hpp>

#include "thomason/adjoint.hpp"
#include "thomason/enumerate.hpp"
#include "thomason/suite.hpp"

using namespace thomason;
using suites::canonical_caba;

namespace {

CslLattice three_chain() {
  return validate_csl(FinSet({"0", "1", "m"}), {{"0", "m"}, {"m", "1"}});
}

// Naive survivor oracle for the quotient: a valuation survives iff it sends
// every subset-meet to the conjunction of its bits.
bool survives_naive(const CslLattice& m, std::uint64_t v) {
  for (std::uint64_t sm = 0; sm < (std::uint64_t(1) << m.size()); ++sm) {
    Subset s(m.elements());
    bool conj = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (sm >> i & 1) {
        s.add(i);
        conj = conj && (v >> i & 1);
      }
    }
    if (((v >> m.meet_of(s) & 1) != 0) != conj) return false;
  }
  return true;
}

} // namespace

TEST_CASE("powerset construction and its unit") {
  CslLattice m = three_chain();
  LPowerset lp = l_powerset(m);
  CHECK(lp.algebra.atoms() == m.elements());
  CHECK(lp.iota[m.elements().index_of("m")].label() == "{0,m}");
  CHECK(lp.iota[m.elements().index_of("1")].is_full());
  CHECK(lp.iota[m.elements().index_of("0")].label() == "{0}");
  for (const CslLattice& any : all_csls_up_to(4)) {
    LPowerset l = l_powerset(any);
    for (std::size_t a = 0; a < any.size(); ++a) {
      REQUIRE(singleton_decomposition(l, a).count() == 1);
    }
  }
}

TEST_CASE("universal extension agrees with the worked example") {
  CslLattice m = three_chain();
  LPowerset lp = l_powerset(m);
  CabaAsCsl target = caba_as_csl(powerset_algebra(FinSet({"p", "q"})));
  std::vector<std::size_t> g(m.size());
  g[m.elements().index_of("0")] = target.lattice.elements().index_of("{}");
  g[m.elements().index_of("m")] = target.lattice.elements().index_of("{p}");
  g[m.elements().index_of("1")] = target.lattice.elements().index_of("{p,q}");
  CslHom gamma = validate_csl_hom(m, target.lattice, g);
  CabaHom tau = universal_extend(lp, target, gamma);
  Subset just_m = Subset::singleton(m.elements(), "m");
  CHECK(tau.apply(just_m).label() == "{p}");
  Subset m_and_1 = just_m.join(Subset::singleton(m.elements(), "1"));
  CHECK(tau.apply(m_and_1).is_full());
  CHECK(tau.apply(Subset(m.elements())).is_empty());
  // τ∘ι = γ on every element.
  for (std::size_t e = 0; e < m.size(); ++e) {
    CHECK(tau.apply(lp.iota[e]) == target.view.element[gamma.apply(e)]);
  }
}

TEST_CASE("universal extension exists and is unique for enumerated inputs") {
  // Every complete meet-hom γ : M -> U(A) extends to exactly one complete
  // boolean hom τ with τ∘ι = γ; uniqueness is counted over all atom maps.
  for (const CslLattice& m : all_csls_up_to(3)) {
    LPowerset lp = l_powerset(m);
    for (std::size_t atoms = 1; atoms <= 2; ++atoms) {
      Caba a = canonical_caba(atoms);
      CabaAsCsl target = caba_as_csl(a);
      for (const CslHom& gamma : all_csl_homs(m, target.lattice)) {
        CabaHom tau = universal_extend(lp, target, gamma);
        std::size_t matching = 0;
        for (const CabaHom& cand : all_caba_homs(lp.algebra, a)) {
          bool unit = true;
          for (std::size_t e = 0; e < m.size() && unit; ++e) {
            unit = cand.apply(lp.iota[e]) == target.view.element[gamma.apply(e)];
          }
          if (unit) {
            ++matching;
            REQUIRE(cand.dual_atom_map() == tau.dual_atom_map());
          }
        }
        REQUIRE(matching == 1);
      }
    }
  }
}

TEST_CASE("L on morphisms collapses down-sets correctly") {
  CslLattice m = three_chain();
  const CslLattice& two = two_chain();
  std::vector<std::size_t> g(m.size());
  g[m.elements().index_of("0")] = 0;
  g[m.elements().index_of("m")] = 1;
  g[m.elements().index_of("1")] = 1;
  CslHom gamma = validate_csl_hom(m, two, g);
  CabaHom lg = l_on_morphism(gamma);
  CHECK(lg.apply(m.down_set(m.elements().index_of("m"))) == two.down_set(1));
  CHECK(lg.apply(m.down_set(m.elements().index_of("0"))) == two.down_set(0));

  // Functor laws over enumerated homs on small lattices.
  auto lattices = all_csls_up_to(3);
  for (const CslLattice& d : lattices) {
    REQUIRE(l_on_morphism(csl_identity(d)).dual_atom_map() == FinMap::identity(d.elements()));
    for (const CslLattice& c : lattices) {
      for (const CslHom& f : all_csl_homs(d, c)) {
        for (const CslHom& h : all_csl_homs(c, d)) {
          REQUIRE(l_on_morphism(h.after(f)).dual_atom_map() ==
                  l_on_morphism(h).after(l_on_morphism(f)).dual_atom_map());
        }
      }
    }
  }
}

TEST_CASE("quotient construction matches the naive congruence oracle") {
  for (const CslLattice& m : all_csls_up_to(4)) {
    LQuotient lq = l_quotient(m);
    REQUIRE(lq.valuations.size() == (std::size_t(1) << m.size()));
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << m.size()); ++v) {
      std::string l(m.size(), '0');
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (v >> i & 1) l[i] = '1';
      }
      REQUIRE(lq.kernel_complement.contains(lq.valuations.index_of(l)) == survives_naive(m, v));
    }
    REQUIRE(lq.algebra.atom_count() == m.size());
  }
}

TEST_CASE("the two constructions are isomorphic over generators") {
  for (const CslLattice& m : all_csls_up_to(4)) {
    ConstructionWitness w = compare_constructions(m);
    REQUIRE(w.atom_bijection.is_bijective());
    for (std::size_t e = 0; e < m.size(); ++e) {
      REQUIRE(w.iso.apply(w.quotient.generators[e]) == w.powerset.iota[e]);
    }
  }
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    CslLattice m = random_csl(rng, 8);
    ConstructionWitness w = compare_constructions(m);
    REQUIRE(w.atom_bijection.is_bijective());
  }
}

TEST_CASE("xi is natural in the base set") {
  FinSet x({"a"});
  FinSet y({"b", "c"});
  XiWitness wx = xi_iso(x);
  XiWitness wy = xi_iso(y);
  for (const FinMap& f : all_finmaps(x, y)) {
    // ℘(f) : ℘(Y) -> ℘(X) is contravariant, so the square runs Y-side to X-side.
    CslHom u = forget_hom(powerset_hom(f), wy.lattice, wx.lattice);
    CabaHom lq = l_quotient_on_morphism(u, wy.witness.quotient, wx.witness.quotient);
    CabaHom lp = l_on_morphism(u);
    // iso_X ∘ L_q(U℘f) = L_℘(U℘f) ∘ iso_Y
    CHECK(wx.witness.iso.after(lq).dual_atom_map() == lp.after(wy.witness.iso).dual_atom_map());
  }
}

TEST_CASE("H is a functor and acts as L over U") {
  Caba a = canonical_caba(2);
  HAlgebraObject ha = h_functor(a);
  CHECK(ha.algebra().atom_count() == 4);
  CHECK(h_on_morphism(CabaHom::identity(a), ha, ha).dual_atom_map() ==
        FinMap::identity(ha.algebra().atoms()));

  Rng rng(3);
  for (int t = 0; t < 15; ++t) {
    Caba b = canonical_caba(1 + rng.below(3));
    Caba c = canonical_caba(1 + rng.below(3));
    Caba d = canonical_caba(1 + rng.below(3));
    CabaHom alpha = suites::random_caba_hom(rng, b, c);
    CabaHom beta = suites::random_caba_hom(rng, c, d);
    HAlgebraObject hb = h_functor(b), hc = h_functor(c), hd = h_functor(d);
    CabaHom hab = h_on_morphism(alpha, hb, hc);
    CabaHom hbc = h_on_morphism(beta, hc, hd);
    REQUIRE(h_on_morphism(beta.after(alpha), hb, hd).dual_atom_map() ==
            hbc.after(hab).dual_atom_map());
    // H(α)(↓a) = ↓α(a) for every carrier element.
    for (std::size_t i = 0; i < hb.carrier.lattice.size(); ++i) {
      Subset down = hb.carrier.lattice.down_set(i);
      std::size_t img = hc.carrier.view.index_of(alpha.apply(hb.carrier.view.element[i]));
      REQUIRE(hab.apply(down) == hc.carrier.lattice.down_set(img));
    }
  }
}

TEST_CASE("K mirrors H through the character bijection") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    Caba b = canonical_caba(1 + rng.below(2));
    Caba c = canonical_caba(1 + rng.below(2));
    CabaHom alpha = suites::random_caba_hom(rng, b, c);
    KFunctorResult kb = k_functor_finite(b), kc = k_functor_finite(c);
    HAlgebraObject hb = h_functor(b), hc = h_functor(c);
    CabaHom ka = k_on_morphism(alpha, kb, kc);
    CabaHom hmap = h_on_morphism(alpha, hb, hc);
    // iso ∘ K(α) = H(α) ∘ iso
    REQUIRE(kc.iso_to_h.after(ka).dual_atom_map() ==
            hmap.after(kb.iso_to_h).dual_atom_map());
    // Identity law for K.
    REQUIRE(k_on_morphism(CabaHom::identity(b), kb, kb).dual_atom_map() ==
            FinMap::identity(kb.algebra.atoms()));
  }
}
