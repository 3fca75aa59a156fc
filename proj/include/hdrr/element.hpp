#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hdrr {

enum class ElementKind : std::uint8_t { Atom, Const, Gadget, Removal, Tuple, Set };

// Immutable structured identifier for combinatorial elements. Universe
// elements are Atom/Const/Gadget/Removal nodes; relation elements are Tuple
// or Set nodes over other ids. Gadget/Removal embed exactly one source id,
// which makes pre-image checks syntactic.
class ElementId {
 public:
  ElementId() = default;

  static ElementId atom(std::string tag, std::int64_t index = 0);
  static ElementId constant(std::int64_t index, std::string tag = {});
  static ElementId gadget(const ElementId& source, std::int64_t local);
  static ElementId removal(const ElementId& source, std::int64_t local);
  static ElementId tuple(std::vector<ElementId> parts);
  // Unordered collection; parts are sorted and deduplicated.
  static ElementId set(std::vector<ElementId> parts);

  bool valid() const { return node_ != nullptr; }
  ElementKind kind() const;
  const std::string& tag() const;
  std::int64_t index() const;
  const std::vector<ElementId>& parts() const;  // Tuple/Set members
  const ElementId& source() const;              // Gadget/Removal source

  // Structural containment used for relation closure: descends through
  // Tuple/Set members only. Gadget/Removal nodes are opaque; their embedded
  // source does not count as contained.
  bool contains(const ElementId& e) const;

  std::size_t hash() const;
  std::string str() const;

  bool operator==(const ElementId& o) const;
  bool operator!=(const ElementId& o) const { return !(*this == o); }
  bool operator<(const ElementId& o) const;
  bool operator>(const ElementId& o) const { return o < *this; }
  bool operator<=(const ElementId& o) const { return !(o < *this); }
  bool operator>=(const ElementId& o) const { return !(*this < o); }

 private:
  struct Node;
  explicit ElementId(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static ElementId make(ElementKind k, std::string tag, std::int64_t index,
                        std::vector<ElementId> parts);
  std::shared_ptr<const Node> node_;
};

using ElementSet = std::set<ElementId>;
using ElementVec = std::vector<ElementId>;

struct ElementIdHash {
  std::size_t operator()(const ElementId& e) const { return e.hash(); }
};

}  // namespace hdrr
