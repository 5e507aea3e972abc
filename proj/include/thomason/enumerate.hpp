#ifndef THOMASON_ENUMERATE_HPP
#define THOMASON_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thomason/caba.hpp"
#include "thomason/csl.hpp"
#include "thomason/finset.hpp"
#include "thomason/modal.hpp"

namespace thomason {

/// Deterministic splitmix64 stream; the whole suite's randomness flows from
/// one seed through per-case derived streams.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// True with probability p (p in [0,1]).
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  /// A decorrelated child stream for case number i.
  Rng fork(std::uint64_t i) const { return Rng(state_ ^ (0xa0761d6478bd642fULL * (i + 1))); }

private:
  std::uint64_t state_;
};

/// All total functions dom -> cod, in lexicographic image order.
inline std::vector<FinMap> all_finmaps(const FinSet& dom, const FinSet& cod) {
  std::vector<FinMap> out;
  if (cod.empty() && !dom.empty()) return out;
  std::vector<std::size_t> img(dom.size(), 0);
  while (true) {
    out.push_back(FinMap(dom, cod, img));
    std::size_t i = 0;
    while (i < img.size() && ++img[i] == cod.size()) img[i++] = 0;
    if (i == img.size()) break;
  }
  return out;
}

/// Non-throwing CslHom test on a raw graph.
inline bool is_csl_hom(const CslLattice& dom, const CslLattice& cod,
                       const std::vector<std::size_t>& graph) {
  if (graph[dom.top()] != cod.top()) return false;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (graph[dom.meet(i, j)] != cod.meet(graph[i], graph[j])) return false;
    }
  }
  return true;
}

/// All complete meet-homs M -> N by brute force over all |N|^|M| graphs.
inline std::vector<CslHom> all_csl_homs(const CslLattice& dom, const CslLattice& cod) {
  std::vector<CslHom> out;
  std::vector<std::size_t> img(dom.size(), 0);
  while (true) {
    if (is_csl_hom(dom, cod, img)) out.push_back(validate_csl_hom(dom, cod, img));
    std::size_t i = 0;
    while (i < img.size() && ++img[i] == cod.size()) img[i++] = 0;
    if (i == img.size()) break;
  }
  return out;
}

/// All complete boolean homs dom -> cod: every atom map at(cod) -> at(dom)
/// induces exactly one, so the enumeration is over atom maps.
inline std::vector<CabaHom> all_caba_homs(const Caba& dom, const Caba& cod) {
  std::vector<CabaHom> out;
  for (const FinMap& d : all_finmaps(cod.atoms(), dom.atoms())) {
    out.push_back(CabaHom(dom, cod, d));
  }
  return out;
}

inline std::optional<CslLattice> try_csl_indices(
    const FinSet& elements, const std::vector<std::pair<std::size_t, std::size_t>>& raw) {
  try {
    return validate_csl_indices(elements, raw);
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace detail {
inline FinSet standard_elements(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i));
  return FinSet(std::move(labels));
}

/// Canonical form of an n×n relation matrix: the lexicographically least
/// bit-string over all simultaneous row/column permutations.
inline std::string canonical_relation(const std::vector<Bits>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  do {
    std::string sig(n * n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[perm[i]].test(perm[j])) sig[i * n + j] = '1';
      }
    }
    if (best.empty() || sig < best) best = sig;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}
} // namespace detail

/// All complete meet-semilattices with exactly n elements, one per
/// isomorphism class.  Every finite poset admits a linear extension, so only
/// relations contained in the strict upper triangle (i < j allowed only for
/// i < j as indices) are generated; duplicates are removed by a
/// permutation-canonical signature.
inline std::vector<CslLattice> all_csls(std::size_t n, std::size_t max_n = 6) {
  if (n > max_n) throw BoundExceeded("lattice enumeration over " + std::to_string(n) + " elements");
  std::vector<CslLattice> out;
  if (n == 0) return out;
  FinSet elements = detail::standard_elements(n);
  std::vector<std::pair<std::size_t, std::size_t>> tri;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) tri.emplace_back(i, j);
  }
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << tri.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    for (std::size_t k = 0; k < tri.size(); ++k) {
      if (mask >> k & 1) raw.push_back(tri[k]);
    }
    auto m = try_csl_indices(elements, raw);
    if (!m) continue;
    std::vector<Bits> leq(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m->leq(i, j)) leq[i].set(j);
      }
    }
    if (seen.insert(detail::canonical_relation(leq)).second) out.push_back(std::move(*m));
  }
  return out;
}

/// All CSLs with at most n elements, one per isomorphism class.
inline std::vector<CslLattice> all_csls_up_to(std::size_t n) {
  std::vector<CslLattice> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& m : all_csls(k)) out.push_back(std::move(m));
  }
  return out;
}

inline FinSet world_set(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
  return FinSet(std::move(labels));
}

/// Random frame with edge probability p.
inline KripkeFrame random_frame(Rng& rng, std::size_t n, double p) {
  FinSet worlds = world_set(n);
  std::vector<Bits> succ(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rng.chance(p)) succ[x].set(y);
    }
  }
  return KripkeFrame(std::move(worlds), std::move(succ));
}

/// Random CSL with at most max_size elements: a random family of bitmask
/// generators is closed under intersection (the meet-closure repair) with the
/// full mask as top; ordered by inclusion this is always a valid CSL.
/// Oversized closures are rejected and resampled.
inline CslLattice random_csl(Rng& rng, std::size_t max_size, std::size_t universe = 5) {
  while (true) {
    std::set<std::uint64_t> masks;
    const std::uint64_t full = (std::uint64_t(1) << universe) - 1;
    masks.insert(full);
    std::size_t gens = 1 + rng.below(max_size);
    for (std::size_t g = 0; g < gens; ++g) masks.insert(rng.next() & full);
    bool grew = true;
    while (grew && masks.size() <= max_size) {
      grew = false;
      for (auto i = masks.begin(); i != masks.end() && !grew; ++i) {
        for (auto j = std::next(i); j != masks.end() && !grew; ++j) {
          grew = masks.insert(*i & *j).second;
        }
      }
    }
    if (masks.size() > max_size) continue;
    std::vector<std::string> labels;
    for (std::uint64_t mk : masks) {
      std::string l(universe, '0');
      for (std::size_t b = 0; b < universe; ++b) {
        if (mk >> b & 1) l[b] = '1';
      }
      labels.push_back(std::move(l));
    }
    FinSet elements(labels);
    std::vector<std::pair<std::size_t, std::size_t>> leq;
    std::vector<std::uint64_t> ordered;
    for (std::uint64_t mk : masks) ordered.push_back(mk);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (std::size_t j = 0; j < ordered.size(); ++j) {
        if ((ordered[i] & ordered[j]) == ordered[i]) {
          std::string a(universe, '0'), b(universe, '0');
          for (std::size_t bit = 0; bit < universe; ++bit) {
            if (ordered[i] >> bit & 1) a[bit] = '1';
            if (ordered[j] >> bit & 1) b[bit] = '1';
          }
          leq.emplace_back(elements.index_of(a), elements.index_of(b));
        }
      }
    }
    return validate_csl_indices(elements, leq);
  }
}

/// Random subset of a FinSet with inclusion probability p.
inline Subset random_subset(Rng& rng, const FinSet& x, double p = 0.5) {
  Subset s(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rng.chance(p)) s.add(i);
  }
  return s;
}

/// Random □ table over the carrier of A — usually NOT a modal operator; used
/// to exercise the validator's rejection paths.
inline ModalAlgebra random_box_table(Rng& rng, const Caba& a) {
  const std::uint64_t total = std::uint64_t(1) << a.atom_count();
  std::vector<Subset> box;
  box.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) box.push_back(random_subset(rng, a.atoms()));
  return ModalAlgebra(a, std::move(box));
}

/// All valid □ tables over A, by filtering every candidate table through the
/// modal-operator laws.  Feasible only for ≤ 2 atoms (carrier ≤ 4).
inline std::vector<ModalAlgebra> all_modal_algebras(const Caba& a) {
  if (a.atom_count() > 2) throw BoundExceeded("exhaustive □ tables beyond 2 atoms");
  CarrierView cv = carrier_view(a);
  const std::size_t carrier = cv.carrier.size();
  std::vector<ModalAlgebra> out;
  std::vector<std::size_t> pick(carrier, 0);
  while (true) {
    std::vector<Subset> box;
    box.reserve(carrier);
    for (std::uint64_t mask = 0; mask < carrier; ++mask) {
      // Table is indexed by atom-bitmask; the picked value is a bitmask too.
      box.push_back(cv.element[cv.index_of_mask[pick[mask]]]);
    }
    ModalAlgebra candidate(a, std::move(box));
    try {
      candidate.validate();
      out.push_back(std::move(candidate));
    } catch (const NotAHomomorphism&) {
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == carrier) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

} // namespace thomason

#endif
