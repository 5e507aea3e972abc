#ifndef THOMASON_IO_HPP
#define THOMASON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thomason/caba.hpp"
#include "thomason/csl.hpp"
#include "thomason/finset.hpp"
#include "thomason/modal.hpp"

namespace thomason {

using Json = nlohmann::json;

/// Labels in documents must stay clear of the characters the canonical
/// encodings use as separators.
inline void check_document_label(const std::string& l, const std::string& where) {
  if (l.empty()) throw SchemaError(where + ": empty label");
  for (char c : l) {
    if (c == ',' || c == '{' || c == '}') {
      throw SchemaError(where + ": label '" + l + "' contains a reserved character");
    }
  }
}

struct Document {
  enum class Kind { kripke_frame, modal_algebra, csl, map } kind;
  KripkeFrame frame;                                       // kripke_frame
  ModalAlgebra modal;                                      // modal_algebra
  CslLattice csl;                                          // csl
  std::vector<std::pair<std::string, std::string>> pairs;  // map
};

/// Carrier-element encoding for modal-algebra documents: sorted comma-joined
/// atom labels, empty string for ⊥.
inline std::string encode_element(const Subset& s) { return join_labels(s.members()); }

inline Subset decode_element(const Caba& a, const std::string& text, const std::string& where) {
  if (text.empty()) return a.bottom();
  Subset s(a.atoms());
  for (const std::string& part : split_top_level(text)) {
    if (!a.atoms().contains(part)) {
      throw SchemaError(where + ": unknown atom '" + part + "' in element '" + text + "'");
    }
    s.add(part);
  }
  return s;
}

namespace detail {
inline std::vector<std::string> read_label_array(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw SchemaError("missing or non-array field '" + key + "'");
  }
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw SchemaError("field '" + key + "' must contain strings");
    check_document_label(e.get<std::string>(), key);
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> read_pair_array(const Json& j,
                                                                        const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw SchemaError("missing or non-array field '" + key + "'");
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw SchemaError("field '" + key + "' must contain [string, string] pairs");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}
} // namespace detail

inline Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("document must be an object with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  Document doc;

  if (kind == "kripke_frame") {
    doc.kind = Document::Kind::kripke_frame;
    FinSet worlds(detail::read_label_array(j, "worlds"));
    auto edges = detail::read_pair_array(j, "relation");
    for (const auto& [a, b] : edges) {
      if (!worlds.contains(a) || !worlds.contains(b)) {
        throw SchemaError("relation edge [\"" + a + "\",\"" + b + "\"] uses an unknown world");
      }
    }
    doc.frame = KripkeFrame(std::move(worlds), edges);
  } else if (kind == "modal_algebra") {
    doc.kind = Document::Kind::modal_algebra;
    Caba base{FinSet(detail::read_label_array(j, "atoms"))};
    if (base.atom_count() > 8) throw SchemaError("modal_algebra documents support at most 8 atoms");
    if (!j.contains("box") || !j["box"].is_object()) {
      throw SchemaError("missing or non-object field 'box'");
    }
    const std::uint64_t total = std::uint64_t(1) << base.atom_count();
    std::vector<Subset> box(total, base.bottom());
    std::vector<bool> seen(total, false);
    for (const auto& [key, value] : j["box"].items()) {
      if (!value.is_string()) throw SchemaError("box value for '" + key + "' must be a string");
      Subset arg = decode_element(base, key, "box key");
      std::uint64_t mask = ModalAlgebra::mask_of(arg);
      if (encode_element(arg) != key) {
        throw SchemaError("box key '" + key + "' is not in canonical sorted form");
      }
      if (seen[mask]) throw SchemaError("box key '" + key + "' appears twice");
      seen[mask] = true;
      box[mask] = decode_element(base, value.get<std::string>(), "box value");
    }
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (!seen[mask]) {
        Subset missing = base.bottom();
        for (std::size_t i = 0; i < base.atom_count(); ++i) {
          if (mask >> i & 1) missing.add(i);
        }
        throw SchemaError("box table is missing element '" + encode_element(missing) + "'");
      }
    }
    doc.modal = ModalAlgebra(std::move(base), std::move(box));
  } else if (kind == "csl") {
    doc.kind = Document::Kind::csl;
    FinSet elements(detail::read_label_array(j, "elements"));
    auto leq = detail::read_pair_array(j, "leq");
    for (const auto& [a, b] : leq) {
      if (!elements.contains(a) || !elements.contains(b)) {
        throw SchemaError("leq pair [\"" + a + "\",\"" + b + "\"] uses an unknown element");
      }
    }
    doc.csl = validate_csl(elements, leq);
  } else if (kind == "map") {
    doc.kind = Document::Kind::map;
    // Pair entries may reference carrier-element encodings (comma-joined), so
    // no label charset restriction applies here.
    doc.pairs = detail::read_pair_array(j, "pairs");
  } else {
    throw SchemaError("unknown document kind '" + kind + "'");
  }
  return doc;
}

/// Canonical printers: sorted labels (FinSet order is already sorted) and
/// sorted edge/pair lists, two-space indentation, trailing newline.

inline Json frame_to_json(const KripkeFrame& f) {
  Json j;
  j["kind"] = "kripke_frame";
  j["worlds"] = f.worlds().labels();
  auto edges = f.edges();
  std::sort(edges.begin(), edges.end());
  Json rel = Json::array();
  for (const auto& [a, b] : edges) rel.push_back(Json::array({a, b}));
  j["relation"] = std::move(rel);
  return j;
}

inline Json modal_to_json(const ModalAlgebra& ma) {
  Json j;
  j["kind"] = "modal_algebra";
  j["atoms"] = ma.base().atoms().labels();
  // Keys in canonical element encoding; nlohmann objects serialize sorted.
  Json box = Json::object();
  const std::uint64_t total = std::uint64_t(1) << ma.base().atom_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    box[encode_element(ma.element_of_mask(mask))] = encode_element(ma.box_mask(mask));
  }
  j["box"] = std::move(box);
  return j;
}

inline Json csl_to_json(const CslLattice& m) {
  Json j;
  j["kind"] = "csl";
  j["elements"] = m.elements().labels();
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.leq(i, k)) leq.emplace_back(m.elements().label(i), m.elements().label(k));
    }
  }
  std::sort(leq.begin(), leq.end());
  Json arr = Json::array();
  for (const auto& [a, b] : leq) arr.push_back(Json::array({a, b}));
  j["leq"] = std::move(arr);
  return j;
}

inline Json map_to_json(const FinMap& f) {
  Json j;
  j["kind"] = "map";
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    pairs.emplace_back(f.dom().label(i), f.cod().label(f.apply(i)));
  }
  std::sort(pairs.begin(), pairs.end());
  Json arr = Json::array();
  for (const auto& [a, b] : pairs) arr.push_back(Json::array({a, b}));
  j["pairs"] = std::move(arr);
  return j;
}

inline std::string print_document(const Json& j) { return j.dump(2) + "\n"; }

} // namespace thomason

#endif
