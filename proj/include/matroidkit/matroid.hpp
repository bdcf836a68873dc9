// Copyright 2026 The MatroidKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Matroid expression trees evaluated through a memoized rank oracle.
//
// Every matroid lives in an index space 0..capacity-1 and has a ground set
// (a subset of that space). Minors keep the parent's index space and shrink
// the ground set, so a matroid and all of its minors can be queried with the
// same ElementSet values. Direct sums and product constructions move
// children into a new index space through `relabel`.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/error.hpp"

namespace matroidkit {

enum class NodeKind {
  uniform,
  graphic,
  partition,
  explicit_family,
  dual,
  restrict,
  contract,
  direct_sum,
  relabel,
};

/// How an explicit family is to be read.
enum class FamilyKind { bases, independent_sets };

struct PartitionBlock {
  ElementSet elements;
  int capacity = 1;
};

namespace detail {

class Node {
 public:
  Node(NodeKind kind, std::size_t capacity, ElementSet ground)
      : kind_(kind), capacity_(capacity), ground_(ground) {}
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  NodeKind kind() const { return kind_; }
  std::size_t capacity() const { return capacity_; }
  const ElementSet& ground() const { return ground_; }

  /// Rank of a subset of the ground set, given as raw bits.
  int rank_bits(std::uint64_t bits) const {
    if (!cacheable()) return compute_rank(bits);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(bits);
      if (it != cache_.end()) return it->second;
    }
    const int r = compute_rank(bits);
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() > kCacheLimit) cache_.clear();
    cache_.emplace(bits, static_cast<std::int8_t>(r));
    return r;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 protected:
  virtual int compute_rank(std::uint64_t bits) const = 0;
  virtual bool cacheable() const { return true; }

 private:
  static constexpr std::size_t kCacheLimit = std::size_t{1} << 20;

  NodeKind kind_;
  std::size_t capacity_;
  ElementSet ground_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::int8_t> cache_;
};

using NodePtr = std::shared_ptr<const Node>;

class UniformNode final : public Node {
 public:
  UniformNode(ElementSet ground, int rank)
      : Node(NodeKind::uniform, ground.universe(), ground), rank_(rank) {}
  int rank() const { return rank_; }

 protected:
  int compute_rank(std::uint64_t bits) const override {
    return std::min(std::popcount(bits), rank_);
  }
  bool cacheable() const override { return false; }

 private:
  int rank_;
};

class GraphicNode final : public Node {
 public:
  GraphicNode(std::size_t vertices,
              std::vector<std::pair<std::size_t, std::size_t>> edges)
      : Node(NodeKind::graphic, edges.size(), ElementSet::full(edges.size())),
        vertices_(vertices),
        edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      if (u >= vertices_ || v >= vertices_) {
        throw Error(Errc::parse_error, "graphic edge endpoint out of range");
      }
    }
  }
  std::size_t vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

 protected:
  // Spanning-forest size via union-find; a self-loop never merges.
  int compute_rank(std::uint64_t bits) const override {
    std::vector<std::size_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    int rank = 0;
    for (Element e : ElementSet(capacity(), bits)) {
      const std::size_t a = find(edges_[e].first);
      const std::size_t b = find(edges_[e].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  }
  bool cacheable() const override { return false; }

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

class PartitionNode final : public Node {
 public:
  PartitionNode(std::size_t capacity, std::vector<PartitionBlock> blocks)
      : Node(NodeKind::partition, capacity, union_of(capacity, blocks)),
        blocks_(std::move(blocks)) {}
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }

 protected:
  int compute_rank(std::uint64_t bits) const override {
    int rank = 0;
    for (const auto& b : blocks_) {
      rank += std::min(std::popcount(bits & b.elements.bits()), b.capacity);
    }
    return rank;
  }
  bool cacheable() const override { return false; }

 private:
  static ElementSet union_of(std::size_t capacity,
                             const std::vector<PartitionBlock>& blocks) {
    ElementSet all(capacity);
    for (const auto& b : blocks) {
      if (b.elements.universe() != capacity) {
        throw Error(Errc::universe_mismatch, "partition block universe");
      }
      if (all.intersects(b.elements)) {
        throw Error(Errc::overlapping_universes, "partition blocks overlap");
      }
      if (b.capacity < 0) {
        throw Error(Errc::parse_error, "negative block capacity");
      }
      all |= b.elements;
    }
    return all;
  }

  std::vector<PartitionBlock> blocks_;
};

class ExplicitNode final : public Node {
 public:
  ExplicitNode(std::size_t capacity, std::vector<ElementSet> family,
               FamilyKind kind)
      : Node(NodeKind::explicit_family, capacity, ElementSet::full(capacity)),
        family_(std::move(family)),
        family_kind_(kind) {
    for (const auto& f : family_) {
      if (f.universe() != capacity) {
        throw Error(Errc::universe_mismatch, "explicit family member universe");
      }
    }
    std::sort(family_.begin(), family_.end());
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
  }
  const std::vector<ElementSet>& family() const { return family_; }
  FamilyKind family_kind() const { return family_kind_; }

 protected:
  // Bases: max |B ∩ S|. Independent sets: the largest listed subset of S,
  // which keeps rank(S) == |S| equivalent to literal membership (-1 when no
  // listed set fits, so an omitted ∅ reads as dependent).
  int compute_rank(std::uint64_t bits) const override {
    int best = family_kind_ == FamilyKind::bases ? 0 : -1;
    for (const auto& f : family_) {
      if (family_kind_ == FamilyKind::bases) {
        best = std::max(best, std::popcount(f.bits() & bits));
      } else if ((f.bits() & ~bits) == 0) {
        best = std::max(best, std::popcount(f.bits()));
      }
    }
    return best;
  }

 private:
  std::vector<ElementSet> family_;
  FamilyKind family_kind_;
};

class DualNode final : public Node {
 public:
  explicit DualNode(NodePtr child)
      : Node(NodeKind::dual, child->capacity(), child->ground()),
        child_(std::move(child)),
        child_rank_(child_->rank_bits(child_->ground().bits())) {}
  const NodePtr& child() const { return child_; }

 protected:
  // r*(S) = |S| + r(E \ S) - r(E)
  int compute_rank(std::uint64_t bits) const override {
    return std::popcount(bits) +
           child_->rank_bits(ground().bits() & ~bits) - child_rank_;
  }

 private:
  NodePtr child_;
  int child_rank_;
};

class RestrictNode final : public Node {
 public:
  RestrictNode(NodePtr child, ElementSet keep)
      : Node(NodeKind::restrict, child->capacity(), keep), child_(std::move(child)) {}
  const NodePtr& child() const { return child_; }

 protected:
  int compute_rank(std::uint64_t bits) const override {
    return child_->rank_bits(bits);
  }
  bool cacheable() const override { return false; }

 private:
  NodePtr child_;
};

class ContractNode final : public Node {
 public:
  ContractNode(NodePtr child, ElementSet removed)
      : Node(NodeKind::contract, child->capacity(), child->ground() - removed),
        child_(std::move(child)),
        removed_(removed),
        removed_rank_(child_->rank_bits(removed.bits())) {}
  const NodePtr& child() const { return child_; }
  const ElementSet& removed() const { return removed_; }

 protected:
  // r_{M/X}(S) = r(S ∪ X) - r(X)
  int compute_rank(std::uint64_t bits) const override {
    return child_->rank_bits(bits | removed_.bits()) - removed_rank_;
  }

 private:
  NodePtr child_;
  ElementSet removed_;
  int removed_rank_;
};

class DirectSumNode final : public Node {
 public:
  DirectSumNode(std::size_t capacity, std::vector<NodePtr> parts)
      : Node(NodeKind::direct_sum, capacity, union_of(capacity, parts)),
        parts_(std::move(parts)) {}
  const std::vector<NodePtr>& parts() const { return parts_; }

 protected:
  int compute_rank(std::uint64_t bits) const override {
    int rank = 0;
    for (const auto& p : parts_) rank += p->rank_bits(bits & p->ground().bits());
    return rank;
  }
  bool cacheable() const override { return parts_.size() > 1; }

 private:
  static ElementSet union_of(std::size_t capacity,
                             const std::vector<NodePtr>& parts) {
    ElementSet all(capacity);
    for (const auto& p : parts) {
      if (p->capacity() != capacity) {
        throw Error(Errc::universe_mismatch, "direct_sum parts over different index spaces");
      }
      if (all.intersects(p->ground())) {
        throw Error(Errc::overlapping_universes, "direct_sum parts overlap");
      }
      all |= p->ground();
    }
    return all;
  }

  std::vector<NodePtr> parts_;
};

class RelabelNode final : public Node {
 public:
  RelabelNode(NodePtr child, std::vector<Element> to, std::size_t capacity)
      : Node(NodeKind::relabel, capacity, image(*child, to, capacity)),
        child_(std::move(child)),
        to_(std::move(to)) {}
  const NodePtr& child() const { return child_; }
  const std::vector<Element>& mapping() const { return to_; }

 protected:
  int compute_rank(std::uint64_t bits) const override {
    std::uint64_t back = 0;
    for (Element e : child_->ground()) {
      if ((bits >> to_[e]) & 1U) back |= std::uint64_t{1} << e;
    }
    return child_->rank_bits(back);
  }
  bool cacheable() const override { return false; }

 private:
  static ElementSet image(const Node& child, const std::vector<Element>& to,
                          std::size_t capacity) {
    if (to.size() != child.capacity()) {
      throw Error(Errc::universe_mismatch, "relabel map must cover the child index space");
    }
    ElementSet img(capacity);
    for (Element e : child.ground()) {
      if (to[e] >= capacity || img.contains(to[e])) {
        throw Error(Errc::precondition_violated, "relabel map is not an injection into the target");
      }
      img.insert(to[e]);
    }
    return img;
  }

  NodePtr child_;
  std::vector<Element> to_;
};

}  // namespace detail

/// Immutable handle to a matroid expression plus element labels. Copies share
/// the underlying oracle and its cache.
class Matroid {
 public:
  Matroid(detail::NodePtr node, std::shared_ptr<const GroundSet> labels)
      : node_(std::move(node)), labels_(std::move(labels)) {
    if (!labels_) {
      labels_ = std::make_shared<const GroundSet>(GroundSet::indexed(node_->capacity()));
    }
    if (labels_->size() != node_->capacity()) {
      throw Error(Errc::universe_mismatch, "label count differs from index space");
    }
  }

  NodeKind kind() const { return node_->kind(); }
  const detail::Node& node() const { return *node_; }
  const detail::NodePtr& node_ptr() const { return node_; }
  const std::shared_ptr<const GroundSet>& labels_ptr() const { return labels_; }
  const GroundSet& labels() const { return *labels_; }

  std::size_t capacity() const { return node_->capacity(); }
  const ElementSet& ground() const { return node_->ground(); }
  ElementSet empty_set() const { return ElementSet(capacity()); }

  /// Throws Errc::universe_mismatch unless `s` is a subset of the ground set.
  void check_subset(const ElementSet& s) const {
    if (s.universe() != capacity() || !s.is_subset_of(ground())) {
      throw Error(Errc::universe_mismatch, "set is not over the matroid's ground set");
    }
  }

  int rank(const ElementSet& s) const {
    check_subset(s);
    return node_->rank_bits(s.bits());
  }
  int rank() const { return node_->rank_bits(ground().bits()); }
  bool is_independent(const ElementSet& s) const {
    return rank(s) == static_cast<int>(s.size());
  }

 private:
  detail::NodePtr node_;
  std::shared_ptr<const GroundSet> labels_;
};

namespace detail {
inline std::shared_ptr<const GroundSet> labels_or_indexed(
    std::size_t n, std::optional<std::vector<std::string>> labels) {
  if (labels) {
    if (labels->size() != n) {
      throw Error(Errc::parse_error, "expected " + std::to_string(n) + " labels");
    }
    return std::make_shared<const GroundSet>(std::move(*labels));
  }
  return std::make_shared<const GroundSet>(GroundSet::indexed(n));
}
}  // namespace detail

// Constructors ---------------------------------------------------------------

inline Matroid uniform(std::size_t n, int r,
                       std::optional<std::vector<std::string>> labels = std::nullopt) {
  if (r < 0 || static_cast<std::size_t>(r) > n) {
    throw Error(Errc::precondition_violated, "uniform rank must lie in 0..n");
  }
  return Matroid(std::make_shared<detail::UniformNode>(ElementSet::full(n), r),
                 detail::labels_or_indexed(n, std::move(labels)));
}

inline Matroid free_matroid(std::size_t n,
                            std::optional<std::vector<std::string>> labels = std::nullopt) {
  return uniform(n, static_cast<int>(n), std::move(labels));
}

inline Matroid rank_zero(std::size_t n,
                         std::optional<std::vector<std::string>> labels = std::nullopt) {
  return uniform(n, 0, std::move(labels));
}

/// Cycle matroid of a multigraph; element i is edge i. Self-loops are matroid
/// loops.
inline Matroid graphic(std::size_t vertices,
                       std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::optional<std::vector<std::string>> labels = std::nullopt) {
  const std::size_t n = edges.size();
  return Matroid(std::make_shared<detail::GraphicNode>(vertices, std::move(edges)),
                 detail::labels_or_indexed(n, std::move(labels)));
}

/// Partition matroid; the ground set is the union of the blocks.
inline Matroid partition(std::size_t capacity, std::vector<PartitionBlock> blocks,
                         std::optional<std::vector<std::string>> labels = std::nullopt) {
  return Matroid(std::make_shared<detail::PartitionNode>(capacity, std::move(blocks)),
                 detail::labels_or_indexed(capacity, std::move(labels)));
}

/// Matroid given by a literal family. With FamilyKind::bases independence is
/// "subset of a listed base"; with FamilyKind::independent_sets it is literal
/// membership, so `axiom_check` can judge a malformed list honestly.
inline Matroid explicit_matroid(std::size_t n, std::vector<ElementSet> family,
                                FamilyKind kind = FamilyKind::bases,
                                std::optional<std::vector<std::string>> labels = std::nullopt) {
  return Matroid(std::make_shared<detail::ExplicitNode>(n, std::move(family), kind),
                 detail::labels_or_indexed(n, std::move(labels)));
}

// Operations producing new expressions ----------------------------------------

inline Matroid dual(const Matroid& m) {
  return Matroid(std::make_shared<detail::DualNode>(m.node_ptr()), m.labels_ptr());
}

/// M restricted to X (M↾X).
inline Matroid restrict_to(const Matroid& m, const ElementSet& x) {
  m.check_subset(x);
  return Matroid(std::make_shared<detail::RestrictNode>(m.node_ptr(), x), m.labels_ptr());
}

/// M - X.
inline Matroid delete_set(const Matroid& m, const ElementSet& x) {
  m.check_subset(x);
  return restrict_to(m, m.ground() - x);
}

/// M / X.
inline Matroid contract(const Matroid& m, const ElementSet& x) {
  m.check_subset(x);
  if (x.empty()) return m;
  return Matroid(std::make_shared<detail::ContractNode>(m.node_ptr(), x), m.labels_ptr());
}

/// M.X := M / (E \ X), the contraction onto X.
inline Matroid contract_onto(const Matroid& m, const ElementSet& x) {
  m.check_subset(x);
  return contract(m, m.ground() - x);
}

/// Moves `m` into a new index space of size `capacity`; element e goes to
/// to[e]. Without caller labels the moved elements keep theirs, unless that
/// would clash with the index labels of the rest, in which case everything
/// gets index labels.
inline Matroid relabel(const Matroid& m, std::vector<Element> to, std::size_t capacity,
                       std::shared_ptr<const GroundSet> labels = nullptr) {
  if (!labels) {
    std::vector<std::string> names = GroundSet::indexed(capacity).labels();
    for (Element e : m.ground()) {
      if (to.size() == m.capacity() && to[e] < capacity) names[to[e]] = m.labels().label(e);
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      names = GroundSet::indexed(capacity).labels();
    }
    labels = std::make_shared<const GroundSet>(std::move(names));
  }
  return Matroid(
      std::make_shared<detail::RelabelNode>(m.node_ptr(), std::move(to), capacity),
      std::move(labels));
}

/// Direct sum of matroids sharing one index space with disjoint ground sets.
inline Matroid direct_sum(const std::vector<Matroid>& parts,
                          std::shared_ptr<const GroundSet> labels = nullptr) {
  if (parts.empty()) throw Error(Errc::precondition_violated, "direct_sum of nothing");
  const std::size_t capacity = parts.front().capacity();
  std::vector<detail::NodePtr> nodes;
  for (const auto& p : parts) nodes.push_back(p.node_ptr());
  auto node = std::make_shared<detail::DirectSumNode>(capacity, std::move(nodes));
  if (!labels) {
    std::vector<std::string> names = parts.front().labels().labels();
    for (const auto& p : parts) {
      for (Element e : p.ground()) names[e] = p.labels().label(e);
    }
    labels = std::make_shared<const GroundSet>(std::move(names));
  }
  return Matroid(std::move(node), std::move(labels));
}

/// Direct sum of matroids with separate index spaces: each part's ground set
/// is laid out consecutively, in part order. Labels must stay distinct.
inline Matroid concat_sum(const std::vector<Matroid>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.ground().size();
  if (total > kMaxElements) throw Error(Errc::too_large, "direct sum exceeds the bit-set limit");
  std::vector<std::string> names;
  std::vector<Matroid> moved;
  Element next = 0;
  for (const auto& p : parts) {
    std::vector<Element> to(p.capacity(), 0);
    for (Element e : p.ground()) {
      to[e] = next++;
      names.push_back(p.labels().label(e));
    }
    moved.push_back(relabel(p, std::move(to), total));
  }
  std::shared_ptr<const GroundSet> labels;
  try {
    labels = std::make_shared<const GroundSet>(std::move(names));
  } catch (const Error&) {
    throw Error(Errc::overlapping_universes, "direct sum parts share element labels");
  }
  if (moved.empty()) return Matroid(std::make_shared<detail::UniformNode>(ElementSet(0), 0), labels);
  return direct_sum(moved, labels);
}

/// Relabels the ground set onto 0..|E|-1, preserving order and labels.
inline Matroid compact(const Matroid& m) {
  if (m.ground() == ElementSet::full(m.capacity())) return m;
  std::vector<Element> to(m.capacity(), 0);
  std::vector<std::string> names;
  Element next = 0;
  for (Element e : m.ground()) {
    to[e] = next++;
    names.push_back(m.labels().label(e));
  }
  const std::size_t size = names.size();
  return relabel(m, std::move(to), size, std::make_shared<const GroundSet>(std::move(names)));
}

/// Moves `m` into the index space of `target_labels`, matching by label. The
/// result's ground set is m's ground set under that matching.
inline Matroid align_to(const Matroid& m, std::shared_ptr<const GroundSet> target_labels) {
  std::vector<Element> to(m.capacity(), 0);
  for (Element e : m.ground()) to[e] = target_labels->find(m.labels().label(e));
  const std::size_t capacity = target_labels->size();
  return relabel(m, std::move(to), capacity, std::move(target_labels));
}

}  // namespace matroidkit
