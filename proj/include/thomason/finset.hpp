#ifndef THOMASON_FINSET_HPP
#define THOMASON_FINSET_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#define BOOST_DYNAMIC_BITSET_DONT_USE_FRIENDS
#include <boost/dynamic_bitset.hpp>

#include "thomason/errors.hpp"

namespace thomason {

using Bits = boost::dynamic_bitset<>;

/// A finite set of opaque string labels.  Labels are kept sorted so that equal
/// sets are structurally equal and element indices are canonical.  Copies are
/// cheap: the label table is shared.
class FinSet {
public:
  FinSet() : data_(empty_data()) {}

  explicit FinSet(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] == labels[i - 1]) {
        throw ValidationError("duplicate label in finite set: '" + labels[i] + "'");
      }
    }
    auto d = std::make_shared<Data>();
    d->labels = std::move(labels);
    d->index.reserve(d->labels.size());
    for (std::size_t i = 0; i < d->labels.size(); ++i) d->index.emplace(d->labels[i], i);
    data_ = std::move(d);
  }

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return data_->labels.empty(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }

  bool contains(const std::string& l) const { return data_->index.count(l) != 0; }

  std::size_t index_of(const std::string& l) const {
    auto it = data_->index.find(l);
    if (it == data_->index.end()) throw ValidationError("label '" + l + "' is not an element");
    return it->second;
  }

  bool operator==(const FinSet& o) const {
    return data_ == o.data_ || data_->labels == o.data_->labels;
  }
  bool operator!=(const FinSet& o) const { return !(*this == o); }

private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto d = std::make_shared<Data>();
    return d;
  }

  std::shared_ptr<const Data> data_;
};

/// A subset of a FinSet, stored as a bitset over element indices.
class Subset {
public:
  Subset() = default;

  explicit Subset(FinSet ambient)
      : ambient_(std::move(ambient)), bits_(ambient_.size()) {}

  Subset(FinSet ambient, Bits bits) : ambient_(std::move(ambient)), bits_(std::move(bits)) {
    if (bits_.size() != ambient_.size()) throw ValidationError("subset bit width mismatch");
  }

  Subset(FinSet ambient, const std::vector<std::string>& members)
      : ambient_(std::move(ambient)), bits_(ambient_.size()) {
    for (const auto& m : members) bits_.set(ambient_.index_of(m));
  }

  static Subset full(FinSet ambient) {
    Subset s(std::move(ambient));
    s.bits_.set();
    return s;
  }

  static Subset singleton(FinSet ambient, const std::string& l) {
    Subset s(std::move(ambient));
    s.bits_.set(s.ambient_.index_of(l));
    return s;
  }

  const FinSet& ambient() const { return ambient_; }
  const Bits& bits() const { return bits_; }
  std::size_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all() || ambient_.size() == 0; }

  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(const std::string& l) const { return bits_.test(ambient_.index_of(l)); }

  Subset& add(std::size_t i) { bits_.set(i); return *this; }
  Subset& add(const std::string& l) { return add(ambient_.index_of(l)); }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    out.reserve(bits_.count());
    for (std::size_t i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      out.push_back(ambient_.label(i));
    }
    return out;
  }

  Subset meet(const Subset& o) const {
    require_same_ambient(o, "subset operation");
    return Subset(ambient_, bits_ & o.bits_);
  }
  Subset join(const Subset& o) const {
    require_same_ambient(o, "subset operation");
    return Subset(ambient_, bits_ | o.bits_);
  }
  Subset minus(const Subset& o) const {
    require_same_ambient(o, "subset operation");
    return Subset(ambient_, bits_ & ~o.bits_);
  }
  Subset sym_diff(const Subset& o) const {
    require_same_ambient(o, "subset operation");
    return Subset(ambient_, bits_ ^ o.bits_);
  }
  Subset complement() const { return Subset(ambient_, ~bits_); }

  bool leq(const Subset& o) const {
    require_same_ambient(o, "subset comparison");
    return bits_.is_subset_of(o.bits_);
  }

  bool operator==(const Subset& o) const { return ambient_ == o.ambient_ && bits_ == o.bits_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  /// Canonical encoding: "{m1,m2,...}" with members in ambient (sorted) order.
  std::string label() const;

private:
  void require_same_ambient(const Subset& o, const char* what) const {
    if (ambient_ != o.ambient_) throw AmbientMismatch(std::string(what) + ": ambient sets differ");
  }

  FinSet ambient_;
  Bits bits_;
};

inline std::string join_labels(const std::vector<std::string>& parts, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

inline std::string Subset::label() const {
  return "{" + join_labels(members()) + "}";
}

/// Splits a comma-separated list at brace depth zero, so canonical subset
/// encodings can be nested inside each other.
inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

/// Parses a canonical "{...}" subset encoding back into a Subset of `ambient`.
inline Subset parse_subset_label(const FinSet& ambient, const std::string& label) {
  if (label.size() < 2 || label.front() != '{' || label.back() != '}') {
    throw ValidationError("malformed subset encoding: '" + label + "'");
  }
  return Subset(ambient, split_top_level(label.substr(1, label.size() - 2)));
}

/// A total function between finite sets, stored by element index.
class FinMap {
public:
  FinMap() = default;

  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> images)
      : dom_(std::move(dom)), cod_(std::move(cod)), img_(std::move(images)) {
    if (img_.size() != dom_.size()) throw ValidationError("function graph is not total");
    for (std::size_t i : img_) {
      if (i >= cod_.size()) throw ValidationError("function image out of codomain");
    }
  }

  /// Builds a map from label pairs; every dom label must appear exactly once.
  static FinMap from_pairs(const FinSet& dom, const FinSet& cod,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::size_t> img(dom.size(), SIZE_MAX);
    for (const auto& [x, y] : pairs) {
      std::size_t i = dom.index_of(x);
      if (img[i] != SIZE_MAX) throw ValidationError("element '" + x + "' mapped twice");
      img[i] = cod.index_of(y);
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] == SIZE_MAX) {
        throw ValidationError("element '" + dom.label(i) + "' has no image");
      }
    }
    return FinMap(dom, cod, std::move(img));
  }

  static FinMap identity(const FinSet& x) {
    std::vector<std::size_t> img(x.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
    return FinMap(x, x, std::move(img));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }

  std::size_t apply(std::size_t i) const { return img_.at(i); }
  const std::string& apply(const std::string& l) const {
    return cod_.label(img_.at(dom_.index_of(l)));
  }

  /// this after g, i.e. (this ∘ g)(x) = this(g(x)).
  FinMap after(const FinMap& g) const {
    if (g.cod_ != dom_) throw AmbientMismatch("composition: codomain/domain mismatch");
    std::vector<std::size_t> img(g.dom_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = img_[g.img_[i]];
    return FinMap(g.dom_, cod_, std::move(img));
  }

  bool is_injective() const {
    Bits seen(cod_.size());
    for (std::size_t i : img_) {
      if (seen.test(i)) return false;
      seen.set(i);
    }
    return true;
  }

  bool is_bijective() const { return dom_.size() == cod_.size() && is_injective(); }

  FinMap inverse() const {
    if (!is_bijective()) throw ValidationError("inverse of a non-bijective map");
    std::vector<std::size_t> img(cod_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = i;
    return FinMap(cod_, dom_, std::move(img));
  }

  bool operator==(const FinMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && img_ == o.img_;
  }
  bool operator!=(const FinMap& o) const { return !(*this == o); }

private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> img_;
};

inline constexpr std::size_t kDefaultPowersetBound = 20;

/// The covariant powerset on objects: the FinSet of all canonical subset
/// encodings of X.  Element labels are the encodings themselves.
inline FinSet powerset(const FinSet& x, std::size_t max_base = kDefaultPowersetBound) {
  if (x.size() > max_base) {
    throw BoundExceeded("powerset of a " + std::to_string(x.size()) +
                        "-element set exceeds the enumeration bound " +
                        std::to_string(max_base));
  }
  std::vector<std::string> labels;
  labels.reserve(std::size_t(1) << x.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << x.size()); ++mask) {
    Subset s(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (mask >> i & 1) s.add(i);
    }
    labels.push_back(s.label());
  }
  return FinSet(std::move(labels));
}

/// P on morphisms: the direct image f[S].
inline Subset direct_image(const FinMap& f, const Subset& s) {
  if (s.ambient() != f.dom()) throw AmbientMismatch("direct_image: subset not over dom(f)");
  Subset out(f.cod());
  for (std::size_t i = s.bits().find_first(); i != Bits::npos; i = s.bits().find_next(i)) {
    out.add(f.apply(i));
  }
  return out;
}

inline Subset inverse_image(const FinMap& f, const Subset& t) {
  if (t.ambient() != f.cod()) throw AmbientMismatch("inverse_image: subset not over cod(f)");
  Subset out(f.dom());
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (t.contains(f.apply(i))) out.add(i);
  }
  return out;
}

/// The powerset-functor action as a FinMap between materialized powersets.
inline FinMap powerset_map(const FinMap& f, std::size_t max_base = kDefaultPowersetBound) {
  FinSet px = powerset(f.dom(), max_base);
  FinSet py = powerset(f.cod(), max_base);
  std::vector<std::size_t> img(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    Subset s = parse_subset_label(f.dom(), px.label(i));
    img[i] = py.index_of(direct_image(f, s).label());
  }
  return FinMap(px, py, std::move(img));
}

/// The unit ε of Tarski duality on the set side: x ↦ {x}, landing in the
/// singleton elements of the materialized powerset.
inline FinMap tarski_unit_set(const FinSet& x, std::size_t max_base = kDefaultPowersetBound) {
  FinSet px = powerset(x, max_base);
  std::vector<std::size_t> img(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    img[i] = px.index_of(Subset::singleton(x, x.label(i)).label());
  }
  return FinMap(x, px, std::move(img));
}

} // namespace thomason

#endif
