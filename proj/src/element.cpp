#include "hdrr/element.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hdrr {

struct ElementId::Node {
  ElementKind kind = ElementKind::Atom;
  std::string tag;
  std::int64_t index = 0;
  std::vector<ElementId> parts;  // Tuple/Set members or [source] for Gadget/Removal
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t node_hash(ElementKind k, const std::string& tag, std::int64_t index,
                      const std::vector<ElementId>& parts) {
  std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL + 1;
  h = mix(h, std::hash<std::string>{}(tag));
  h = mix(h, std::hash<std::int64_t>{}(index));
  for (const auto& p : parts) h = mix(h, p.hash());
  return h;
}

const std::vector<ElementId>& empty_parts() {
  static const std::vector<ElementId> e;
  return e;
}

}  // namespace

ElementId ElementId::make(ElementKind k, std::string tag, std::int64_t index,
                          std::vector<ElementId> parts) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->tag = std::move(tag);
  n->index = index;
  n->parts = std::move(parts);
  n->hash = node_hash(n->kind, n->tag, n->index, n->parts);
  return ElementId(std::shared_ptr<const Node>(std::move(n)));
}

ElementId ElementId::atom(std::string tag, std::int64_t index) {
  return make(ElementKind::Atom, std::move(tag), index, {});
}

ElementId ElementId::constant(std::int64_t index, std::string tag) {
  return make(ElementKind::Const, std::move(tag), index, {});
}

ElementId ElementId::gadget(const ElementId& source, std::int64_t local) {
  if (!source.valid()) throw std::invalid_argument("gadget source must be valid");
  return make(ElementKind::Gadget, {}, local, {source});
}

ElementId ElementId::removal(const ElementId& source, std::int64_t local) {
  if (!source.valid()) throw std::invalid_argument("removal source must be valid");
  return make(ElementKind::Removal, {}, local, {source});
}

ElementId ElementId::tuple(std::vector<ElementId> parts) {
  return make(ElementKind::Tuple, {}, 0, std::move(parts));
}

ElementId ElementId::set(std::vector<ElementId> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return make(ElementKind::Set, {}, 0, std::move(parts));
}

ElementKind ElementId::kind() const { return node_->kind; }
const std::string& ElementId::tag() const { return node_->tag; }
std::int64_t ElementId::index() const { return node_->index; }

const std::vector<ElementId>& ElementId::parts() const {
  if (!node_) return empty_parts();
  return node_->parts;
}

const ElementId& ElementId::source() const {
  if (node_->kind != ElementKind::Gadget && node_->kind != ElementKind::Removal)
    throw std::logic_error("source() on non-gadget element");
  return node_->parts.front();
}

bool ElementId::contains(const ElementId& e) const {
  if (*this == e) return true;
  if (!node_) return false;
  if (node_->kind == ElementKind::Tuple || node_->kind == ElementKind::Set) {
    for (const auto& p : node_->parts)
      if (p.contains(e)) return true;
  }
  return false;
}

std::size_t ElementId::hash() const { return node_ ? node_->hash : 0; }

bool ElementId::operator==(const ElementId& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash) return false;
  if (node_->kind != o.node_->kind || node_->index != o.node_->index ||
      node_->tag != o.node_->tag || node_->parts.size() != o.node_->parts.size())
    return false;
  for (std::size_t i = 0; i < node_->parts.size(); ++i)
    if (!(node_->parts[i] == o.node_->parts[i])) return false;
  return true;
}

bool ElementId::operator<(const ElementId& o) const {
  if (node_ == o.node_) return false;
  if (!node_) return o.node_ != nullptr;
  if (!o.node_) return false;
  if (node_->kind != o.node_->kind) return node_->kind < o.node_->kind;
  if (node_->tag != o.node_->tag) return node_->tag < o.node_->tag;
  if (node_->index != o.node_->index) return node_->index < o.node_->index;
  const auto& a = node_->parts;
  const auto& b = o.node_->parts;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string ElementId::str() const {
  if (!node_) return "<null>";
  std::ostringstream os;
  switch (node_->kind) {
    case ElementKind::Atom:
      os << node_->tag;
      if (node_->index != 0) os << node_->index;
      break;
    case ElementKind::Const:
      os << "k:" << (node_->tag.empty() ? std::to_string(node_->index) : node_->tag);
      break;
    case ElementKind::Gadget:
      os << "g" << node_->index << "(" << node_->parts[0].str() << ")";
      break;
    case ElementKind::Removal:
      os << "r" << node_->index << "(" << node_->parts[0].str() << ")";
      break;
    case ElementKind::Tuple: {
      os << "(";
      for (std::size_t i = 0; i < node_->parts.size(); ++i)
        os << (i ? "," : "") << node_->parts[i].str();
      os << ")";
      break;
    }
    case ElementKind::Set: {
      os << "{";
      for (std::size_t i = 0; i < node_->parts.size(); ++i)
        os << (i ? "," : "") << node_->parts[i].str();
      os << "}";
      break;
    }
  }
  return os.str();
}

}  // namespace hdrr
