#include <catch2/catch_amalgamated.hpp>

#include "thomason/csl.hpp"
#include "thomason/enumerate.hpp"

using namespace thomason;

namespace {

CslLattice three_chain() {
  return validate_csl(FinSet({"0", "1", "m"}), {{"0", "m"}, {"m", "1"}});
}

// Independent oracle: a valuation is a complete meet-hom into 2 iff it sends
// the meet of every subset (including the empty one) to the conjunction of
// its bits.  Exponential on purpose.
std::vector<std::uint64_t> brute_force_two_valued_homs(const CslLattice& m) {
  std::vector<std::uint64_t> out;
  const std::size_t n = m.size();
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
    bool ok = true;
    for (std::uint64_t sm = 0; sm < (std::uint64_t(1) << n) && ok; ++sm) {
      Subset s(m.elements());
      bool conj = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (sm >> i & 1) {
          s.add(i);
          conj = conj && (v >> i & 1);
        }
      }
      ok = ((v >> m.meet_of(s) & 1) != 0) == conj;
    }
    if (ok) out.push_back(v);
  }
  return out;
}

} // namespace

TEST_CASE("lattice validation accepts chains and diamonds") {
  CslLattice m = three_chain();
  std::size_t z = m.elements().index_of("0");
  std::size_t mid = m.elements().index_of("m");
  std::size_t one = m.elements().index_of("1");
  CHECK(m.top() == one);
  CHECK(m.bottom() == z);
  CHECK(m.leq(z, mid));
  CHECK_FALSE(m.leq(mid, z));
  CHECK(m.meet(mid, one) == mid);
  CHECK(m.join_of(Subset(m.elements(), std::vector<std::string>{"0", "m"})) == mid);
  CHECK(m.down_set(mid).label() == "{0,m}");

  CslLattice diamond = validate_csl(FinSet({"b", "t", "x", "y"}),
                                    {{"b", "x"}, {"b", "y"}, {"x", "t"}, {"y", "t"}});
  CHECK(diamond.meet(diamond.elements().index_of("x"), diamond.elements().index_of("y")) ==
        diamond.elements().index_of("b"));
  CHECK(diamond.join_of(Subset(diamond.elements(), std::vector<std::string>{"x", "y"})) ==
        diamond.top());
}

TEST_CASE("lattice validation rejects what it must") {
  CHECK_THROWS_AS(validate_csl(FinSet({"a", "b"}), {{"a", "b"}, {"b", "a"}}), NotAPoset);
  CHECK_THROWS_AS(validate_csl(FinSet({"a", "b"}), {}), NoTop);
  CHECK_THROWS_AS(validate_csl(FinSet(), {}), NoTop);
  // x and y have two maximal lower bounds a, b: no greatest one.
  CHECK_THROWS_AS(validate_csl(FinSet({"a", "b", "t", "x", "y"}),
                               {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"},
                                {"x", "t"}, {"y", "t"}}),
                  NoMeet);
}

TEST_CASE("hom validation and composition") {
  CslLattice m = three_chain();
  const CslLattice& two = two_chain();
  std::size_t z = m.elements().index_of("0");
  std::size_t mid = m.elements().index_of("m");
  std::size_t one = m.elements().index_of("1");

  // σ_m: 1 on {m,1}, 0 on {0}.
  std::vector<std::size_t> g(m.size());
  g[z] = 0; g[mid] = 1; g[one] = 1;
  CslHom sigma = validate_csl_hom(m, two, g);
  CHECK(sigma.apply("m") == "1");

  // Swapping 0 and m breaks the meet law.
  std::vector<std::size_t> bad(m.size());
  bad[z] = 1; bad[mid] = 0; bad[one] = 1;
  CHECK_THROWS_AS(validate_csl_hom(m, two, bad), MeetViolation);
  // Constant 0 breaks the top law.
  CHECK_THROWS_AS(validate_csl_hom(m, two, std::vector<std::size_t>(m.size(), 0)), TopViolation);
  CHECK_THROWS_AS(validate_csl_hom(m, two, {0, 1}), ValidationError);

  CHECK(sigma.after(csl_identity(m)) == sigma);
  CHECK(csl_identity(two).after(sigma) == sigma);
}

TEST_CASE("characters against the exponential oracle, all lattices up to 4") {
  for (const CslLattice& m : all_csls_up_to(4)) {
    auto chars = csl_characters(m);
    auto oracle = brute_force_two_valued_homs(m);
    REQUIRE(chars.size() == oracle.size());
    REQUIRE(chars.size() == m.size());
    for (const Character& c : chars) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (c.hom.apply(i) == 1) v |= std::uint64_t(1) << i;
      }
      REQUIRE(std::find(oracle.begin(), oracle.end(), v) != oracle.end());
      // σ_a(m) = 1 iff a ≤ m.
      for (std::size_t i = 0; i < m.size(); ++i) {
        REQUIRE((c.hom.apply(i) == 1) == m.leq(c.element, i));
      }
    }
  }
}

TEST_CASE("character bijection reverses the order") {
  for (const CslLattice& m : all_csls_up_to(4)) {
    CharacterBijection bij = character_bijection(m);
    REQUIRE(bij.element_to_character.is_bijective());
    for (const Character& ca : bij.list) {
      for (const Character& cb : bij.list) {
        bool pointwise_leq = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (ca.hom.apply(i) > cb.hom.apply(i)) pointwise_leq = false;
        }
        REQUIRE(m.leq(cb.element, ca.element) == pointwise_leq);
      }
    }
  }
}

TEST_CASE("finite meet-semilattice characters are complete characters") {
  for (const CslLattice& m : all_csls_up_to(4)) {
    SlCharacters sl = sl_characters(m);
    auto full = csl_characters(m);
    REQUIRE(sl.characters.size() == full.size());
    for (std::size_t k = 0; k < full.size(); ++k) {
      REQUIRE(sl.characters[k].element == full[k].element);
      REQUIRE(sl.characters[k].hom.graph() == full[k].hom.graph());
    }
    // i_M(m) collects exactly the characters that accept m.
    for (std::size_t e = 0; e < m.size(); ++e) {
      for (const Character& c : sl.characters) {
        REQUIRE(sl.i_m[e].contains(sl.set.index_of(c.label())) == (c.hom.apply(e) == 1));
      }
    }
  }
}

TEST_CASE("left adjoint of a meet-hom into a powerset carrier") {
  CslLattice m = three_chain();
  CabaAsCsl u = caba_as_csl(powerset_algebra(FinSet({"p", "q"})));
  std::vector<std::size_t> g(m.size());
  g[m.elements().index_of("0")] = u.lattice.elements().index_of("{}");
  g[m.elements().index_of("m")] = u.lattice.elements().index_of("{p}");
  g[m.elements().index_of("1")] = u.lattice.elements().index_of("{p,q}");
  CslHom gamma = validate_csl_hom(m, u.lattice, g);
  FinMap adj = csl_left_adjoint(gamma);
  CHECK(adj.apply("{}") == "0");
  CHECK(adj.apply("{p}") == "m");
  CHECK(adj.apply("{q}") == "1");
  CHECK(adj.apply("{p,q}") == "1");
}

TEST_CASE("left adjoint law holds for every enumerated hom") {
  auto lattices = all_csls_up_to(3);
  for (const CslLattice& dom : lattices) {
    for (const CslLattice& cod : lattices) {
      for (const CslHom& gamma : all_csl_homs(dom, cod)) {
        FinMap adj = csl_left_adjoint(gamma);  // throws if the law fails
        // The adjoint is the pointwise least choice.
        for (std::size_t n = 0; n < cod.size(); ++n) {
          for (std::size_t a = 0; a < dom.size(); ++a) {
            if (cod.leq(n, gamma.apply(a))) REQUIRE(dom.leq(adj.apply(n), a));
          }
        }
      }
    }
  }
}

TEST_CASE("forgetful functor produces a validated lattice") {
  Caba a = powerset_algebra(FinSet({"p", "q"}));
  CabaAsCsl u = caba_as_csl(a);
  CHECK(u.lattice.size() == 4);
  CHECK(u.lattice.elements().label(u.lattice.top()) == "{p,q}");
  CHECK(u.lattice.elements().label(u.lattice.bottom()) == "{}");

  CabaHom theta = tarski_unit_alg(a);
  CslHom forgotten = forget_hom(theta, u, caba_as_csl(theta.cod()));
  CHECK(forgotten.apply(u.lattice.top()) == forgotten.cod().top());
  // Subset meets in the carrier lattice are intersections.
  for (std::uint64_t sm = 0; sm < 16; ++sm) {
    Subset s(u.lattice.elements());
    Subset expected = a.top();
    for (std::size_t i = 0; i < 4; ++i) {
      if (sm >> i & 1) {
        s.add(i);
        expected = expected.meet(u.view.element[i]);
      }
    }
    REQUIRE(u.view.element[u.lattice.meet_of(s)] == expected);
  }
}
