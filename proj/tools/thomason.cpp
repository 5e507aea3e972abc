// Command-line front end: validation, dualization, round trips, map checking,
// left-adjoint construction and the seeded property-suite runner.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thomason/duality.hpp"
#include "thomason/enumerate.hpp"
#include "thomason/io.hpp"
#include "thomason/suite.hpp"

namespace {

using namespace thomason;

constexpr int kOk = 0;
constexpr int kVerdictFail = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path) { return parse_document(slurp(path)); }

void emit(const Json& j, const std::string& out_path) {
  std::string text = print_document(j);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw SchemaError("cannot write '" + out_path + "'");
    out << text;
  }
}

int cmd_validate(const std::string& file) {
  Document doc = load(file);
  if (doc.kind == Document::Kind::modal_algebra) doc.modal.validate();
  std::cout << "ok\n";
  return kOk;
}

int cmd_dual(const std::string& file, const std::string& out) {
  Document doc = load(file);
  if (doc.kind == Document::Kind::kripke_frame) {
    emit(modal_to_json(box_from_relation(doc.frame)), out);
    return kOk;
  }
  if (doc.kind == Document::Kind::modal_algebra) {
    doc.modal.validate();
    emit(frame_to_json(relation_from_box(doc.modal)), out);
    return kOk;
  }
  throw SchemaError("dual expects a kripke_frame or modal_algebra document");
}

int cmd_roundtrip(const std::string& file) {
  Document doc = load(file);
  if (doc.kind == Document::Kind::kripke_frame) {
    KripkeFrame back = relation_from_box(box_from_relation(doc.frame));
    auto iso = find_frame_iso(doc.frame, back);
    if (!iso) {
      std::cout << "no isomorphism found\n";
      return kVerdictFail;
    }
    emit(map_to_json(*iso), "");
    return kOk;
  }
  if (doc.kind == Document::Kind::modal_algebra) {
    doc.modal.validate();
    ModalAlgebra back = box_from_relation(relation_from_box(doc.modal));
    if (back != doc.modal) {
      std::cout << "round trip is not the identity\n";
      return kVerdictFail;
    }
    emit(map_to_json(FinMap::identity(doc.modal.base().atoms())), "");
    return kOk;
  }
  throw SchemaError("roundtrip expects a kripke_frame or modal_algebra document");
}

int report_verdict(const Verdict& v) {
  if (v.holds) {
    std::cout << "ok\n";
    return kOk;
  }
  std::cout << "fails at " << v.witness << "\n";
  return kVerdictFail;
}

int cmd_check_map(const std::string& kind, const std::string& f1, const std::string& f2,
                  const std::string& mapfile) {
  Document d1 = load(f1), d2 = load(f2), dm = load(mapfile);
  if (dm.kind != Document::Kind::map) throw SchemaError("third argument must be a map document");

  if (kind == "pmorphism" || kind == "coalg") {
    if (d1.kind != Document::Kind::kripke_frame || d2.kind != Document::Kind::kripke_frame) {
      throw SchemaError(kind + " expects two kripke_frame documents");
    }
    FinMap f = FinMap::from_pairs(d1.frame.worlds(), d2.frame.worlds(), dm.pairs);
    Verdict v = kind == "pmorphism"
                    ? check_pmorphism(d1.frame, d2.frame, f)
                    : check_coalg_morphism(coalgebra_of_frame(d1.frame),
                                           coalgebra_of_frame(d2.frame), f);
    return report_verdict(v);
  }
  if (kind == "cslhom") {
    if (d1.kind != Document::Kind::csl || d2.kind != Document::Kind::csl) {
      throw SchemaError("cslhom expects two csl documents");
    }
    FinMap f = FinMap::from_pairs(d1.csl.elements(), d2.csl.elements(), dm.pairs);
    std::vector<std::size_t> graph(d1.csl.size());
    for (std::size_t i = 0; i < graph.size(); ++i) graph[i] = f.apply(i);
    try {
      validate_csl_hom(d1.csl, d2.csl, graph);
    } catch (const MeetViolation& e) {
      std::cout << "fails: " << e.what() << "\n";
      return kVerdictFail;
    } catch (const TopViolation& e) {
      std::cout << "fails: " << e.what() << "\n";
      return kVerdictFail;
    }
    std::cout << "ok\n";
    return kOk;
  }
  if (kind == "cabahom" || kind == "halg") {
    if (d1.kind != Document::Kind::modal_algebra || d2.kind != Document::Kind::modal_algebra) {
      throw SchemaError(kind + " expects two modal_algebra documents");
    }
    const Caba& a1 = d1.modal.base();
    const Caba& a2 = d2.modal.base();
    if (kind == "cabahom") {
      // The map is a full element table dom-carrier -> cod-carrier.
      CarrierView cv = carrier_view(a1);
      std::vector<Subset> table(cv.carrier.size(), a2.bottom());
      std::vector<bool> seen(cv.carrier.size(), false);
      for (const auto& [k, v] : dm.pairs) {
        Subset arg = decode_element(a1, k, "map key");
        std::size_t idx = cv.index_of(arg);
        if (seen[idx]) throw SchemaError("element '" + k + "' mapped twice");
        seen[idx] = true;
        table[idx] = decode_element(a2, v, "map value");
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw SchemaError("element '" + encode_element(cv.element[i]) + "' has no image");
      }
      try {
        validate_complete_hom(a1, a2, table);
      } catch (const NotAHomomorphism& e) {
        std::cout << "fails: " << e.what() << "\n";
        return kVerdictFail;
      } catch (const NotComplete& e) {
        std::cout << "fails: " << e.what() << "\n";
        return kVerdictFail;
      }
      std::cout << "ok\n";
      return kOk;
    }
    // halg: the map document carries the dual atom map at(A2) -> at(A1) of a
    // candidate hom alpha : A1 -> A2.
    d1.modal.validate();
    d2.modal.validate();
    FinMap dual = FinMap::from_pairs(a2.atoms(), a1.atoms(), dm.pairs);
    CabaHom alpha(a1, a2, dual);
    return report_verdict(
        check_halg_morphism(halgebra_of_modal(d1.modal), halgebra_of_modal(d2.modal), alpha));
  }
  throw SchemaError("unknown map kind '" + kind + "'");
}

int cmd_left_adjoint(const std::string& file, const std::string& method) {
  Document doc = load(file);
  if (doc.kind != Document::Kind::csl) throw SchemaError("left-adjoint expects a csl document");
  const CslLattice& m = doc.csl;
  if (method == "powerset" || method == "both") {
    LPowerset lp = l_powerset(m);
    std::cout << "powerset construction: " << lp.algebra.atom_count() << " atoms, carrier "
              << (std::size_t(1) << lp.algebra.atom_count()) << "\n";
    for (std::size_t e = 0; e < m.size(); ++e) {
      std::cout << "  iota(" << m.elements().label(e) << ") = " << lp.iota[e].label() << "\n";
    }
  }
  if (method == "congruence" || method == "both") {
    LQuotient lq = l_quotient(m);
    std::cout << "congruence construction: " << lq.valuations.size() << " valuations, "
              << lq.algebra.atom_count() << " survive the kernel\n";
    for (std::size_t e = 0; e < m.size(); ++e) {
      std::cout << "  box(" << m.elements().label(e) << ") = " << lq.generators[e].label() << "\n";
    }
  }
  if (method == "both") {
    ConstructionWitness w = compare_constructions(m);
    std::cout << "isomorphism (sigma -> meet of its 1-set):\n";
    for (std::size_t s = 0; s < w.atom_bijection.dom().size(); ++s) {
      std::cout << "  " << w.atom_bijection.dom().label(s) << " -> "
                << w.atom_bijection.cod().label(w.atom_bijection.apply(s)) << "\n";
    }
  }
  return kOk;
}

int cmd_free_caba(std::size_t n, const std::string& target_file, const std::string& gen_file) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  FinSet gens{labels};
  FreeCaba fc = free_caba(gens);
  std::cout << "free algebra on " << n << " generators: " << fc.algebra.atom_count()
            << " atoms, carrier " << (std::size_t(1) << fc.algebra.atom_count()) << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << "  f(" << gens.label(i) << ") = " << fc.gen[i].label() << "\n";
  }
  if (target_file.empty()) return kOk;
  Document target = load(target_file);
  if (target.kind != Document::Kind::modal_algebra) {
    throw SchemaError("--target expects a modal_algebra document (its base algebra is used)");
  }
  if (gen_file.empty()) throw SchemaError("--target requires --gen");
  Document gdoc = load(gen_file);
  if (gdoc.kind != Document::Kind::map) throw SchemaError("--gen expects a map document");
  const Caba& a = target.modal.base();
  std::vector<Subset> g(n, a.bottom());
  std::vector<bool> seen(n, false);
  for (const auto& [k, v] : gdoc.pairs) {
    std::size_t i = gens.index_of(k);
    if (seen[i]) throw SchemaError("generator '" + k + "' assigned twice");
    seen[i] = true;
    g[i] = decode_element(a, v, "generator image");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw SchemaError("generator '" + gens.label(i) + "' has no image");
  }
  CabaHom psi = free_extend(fc, a, g);
  for (std::size_t i = 0; i < n; ++i) {
    if (psi.apply(fc.gen[i]) != g[i]) {
      std::cout << "universal property fails at " << gens.label(i) << "\n";
      return kVerdictFail;
    }
  }
  std::cout << "universal extension ok; dual atom map:\n";
  for (std::size_t y = 0; y < a.atom_count(); ++y) {
    std::cout << "  " << a.atoms().label(y) << " -> "
              << fc.algebra.atoms().label(psi.dual_atom_map().apply(y)) << "\n";
  }
  if (n <= 2 && a.atom_count() <= 2) {
    std::size_t matching = 0;
    for (const CabaHom& h : all_caba_homs(fc.algebra, a)) {
      bool all = true;
      for (std::size_t i = 0; i < n && all; ++i) all = h.apply(fc.gen[i]) == g[i];
      if (all) ++matching;
    }
    std::cout << "uniqueness: " << matching << " extension(s) found\n";
    if (matching != 1) return kVerdictFail;
  }
  return kOk;
}

int cmd_suite(const std::string& only, std::uint64_t seed, std::size_t max_size, std::size_t cases,
              bool json) {
  std::vector<SuiteReport> reports;
  bool found = only.empty();
  for (const SuiteSpec& spec : suite_registry()) {
    if (!only.empty() && spec.name != only) continue;
    found = true;
    reports.push_back(run_suite(spec, seed, max_size, cases));
  }
  if (!found) throw SchemaError("unknown suite '" + only + "'");
  bool failed = false;
  if (json) {
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
      failed = failed || !r.ok();
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << report_to_text(r);
      failed = failed || !r.ok();
    }
  }
  return failed ? kVerdictFail : kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Tarski/Thomason duality toolkit"};
  app.require_subcommand(1);

  std::string file, out, kind, method = "both", f1, f2, mapfile, only, target, gen;
  std::uint64_t seed = 0;
  std::size_t max_size = 6, cases = 25, free_n = 0;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  validate->add_option("file", file)->required();

  auto* dual = app.add_subcommand("dual", "dualize a frame or modal algebra");
  dual->add_option("file", file)->required();
  dual->add_option("--out", out);

  auto* roundtrip = app.add_subcommand("roundtrip", "dualize twice and emit the iso witness");
  roundtrip->add_option("file", file)->required();

  auto* check = app.add_subcommand("check-map", "check a map between two structures");
  check->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"pmorphism", "cslhom", "cabahom", "coalg", "halg"}));
  check->add_option("f1", f1)->required();
  check->add_option("f2", f2)->required();
  check->add_option("map", mapfile)->required();

  auto* ladj = app.add_subcommand("left-adjoint", "build L(M) from a csl document");
  ladj->add_option("file", file)->required();
  ladj->add_option("--method", method)->check(CLI::IsMember({"powerset", "congruence", "both"}));

  auto* free_cmd = app.add_subcommand("free-caba", "free algebra stats and universal property");
  free_cmd->add_option("n", free_n)->required();
  free_cmd->add_option("--target", target);
  free_cmd->add_option("--gen", gen);

  auto* suite = app.add_subcommand("suite", "run property suites");
  suite->add_option("--only", only);
  suite->add_option("--seed", seed);
  suite->add_option("--max-size", max_size);
  suite->add_option("--cases", cases);
  suite->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (dual->parsed()) return cmd_dual(file, out);
    if (roundtrip->parsed()) return cmd_roundtrip(file);
    if (check->parsed()) return cmd_check_map(kind, f1, f2, mapfile);
    if (ladj->parsed()) return cmd_left_adjoint(file, method);
    if (free_cmd->parsed()) return cmd_free_caba(free_n, target, gen);
    if (suite->parsed()) return cmd_suite(only, seed, max_size, cases, json);
  } catch (const thomason::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
