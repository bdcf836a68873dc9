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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroidkit/error.hpp"

namespace matroidkit {

using Element = std::uint32_t;

/// Hard limit of the bit-set representation.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of the index space 0..universe-1, stored in one machine word.
///
/// Binary operations require both operands to live over the same universe
/// size and throw Errc::universe_mismatch otherwise.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe, std::uint64_t bits = 0)
      : bits_(bits), universe_(static_cast<std::uint32_t>(universe)) {
    if (universe > kMaxElements) {
      throw Error(Errc::too_large, "universe of " + std::to_string(universe) +
                                       " elements exceeds the bit-set limit");
    }
    bits_ &= full_mask(universe);
  }

  static ElementSet full(std::size_t universe) {
    return ElementSet(universe, full_mask(universe));
  }
  static ElementSet of(std::size_t universe,
                       std::initializer_list<Element> elements) {
    ElementSet s(universe);
    for (Element e : elements) s.insert(e);
    return s;
  }
  static ElementSet of(std::size_t universe,
                       const std::vector<Element>& elements) {
    ElementSet s(universe);
    for (Element e : elements) s.insert(e);
    return s;
  }

  static constexpr std::uint64_t full_mask(std::size_t universe) {
    return universe >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << universe) - 1;
  }

  std::size_t universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  bool contains(Element e) const {
    return e < universe_ && ((bits_ >> e) & 1U) != 0;
  }
  void insert(Element e) {
    check_element(e);
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(Element e) {
    check_element(e);
    bits_ &= ~(std::uint64_t{1} << e);
  }
  ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  /// Smallest member; the set must be non-empty.
  Element first() const {
    if (bits_ == 0) throw Error(Errc::not_defined, "first() of empty set");
    return static_cast<Element>(std::countr_zero(bits_));
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  ElementSet complement() const {
    return ElementSet(universe_, ~bits_ & full_mask(universe_));
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const ElementSet& other) const {
    check_same(other);
    return (bits_ & other.bits_) != 0;
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    check_same(o);
    bits_ &= ~o.bits_;
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    check_same(o);
    bits_ ^= o.bits_;
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  /// Symmetric difference.
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.universe_ != b.universe_ ? a.universe_ < b.universe_
                                      : a.bits_ < b.bits_;
  }

 private:
  void check_element(Element e) const {
    if (e >= universe_) {
      throw Error(Errc::universe_mismatch,
                  "element " + std::to_string(e) + " outside universe of size " +
                      std::to_string(universe_));
    }
  }
  void check_same(const ElementSet& o) const {
    if (o.universe_ != universe_) {
      throw Error(Errc::universe_mismatch,
                  "sets over universes of size " + std::to_string(universe_) +
                      " and " + std::to_string(o.universe_));
    }
  }

  std::uint64_t bits_ = 0;
  std::uint32_t universe_ = 0;
};

/// Calls fn(sub) for every subset of `set`, in increasing bitmask order.
template <typename Fn>
void for_each_subset(const ElementSet& set, Fn&& fn) {
  const std::uint64_t mask = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(set.universe(), sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Reflected Gray-code walk over the subsets of `set`. Consecutive subsets
/// differ in exactly one element; fn(sub, toggled, added) receives the element
/// that changed (ignored for the initial empty set).
template <typename Fn>
void for_each_subset_gray(const ElementSet& set, Fn&& fn) {
  const std::vector<Element> members = set.to_vector();
  const std::size_t k = members.size();
  if (k >= 63) throw Error(Errc::too_large, "gray walk over >= 63 elements");
  ElementSet current(set.universe());
  fn(current, Element{0}, false);
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < count; ++i) {
    const Element e = members[static_cast<std::size_t>(std::countr_zero(i))];
    const bool added = !current.contains(e);
    if (added) {
      current.insert(e);
    } else {
      current.erase(e);
    }
    fn(current, e, added);
  }
}

/// Display labels for the index space of a matroid.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxElements) {
      throw Error(Errc::too_large, "ground set of " +
                                       std::to_string(labels_.size()) +
                                       " elements exceeds the bit-set limit");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<Element>(i)).second) {
        throw Error(Errc::parse_error, "duplicate element label '" + labels_[i] + "'");
      }
    }
  }

  static GroundSet indexed(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has(const std::string& label) const { return index_.count(label) != 0; }
  Element find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw Error(Errc::universe_mismatch, "unknown element label '" + label + "'");
    }
    return it->second;
  }

  ElementSet set_of(const std::vector<std::string>& labels) const {
    ElementSet s(size());
    for (const auto& l : labels) s.insert(find(l));
    return s;
  }
  std::vector<std::string> labels_of(const ElementSet& s) const {
    std::vector<std::string> out;
    for (Element e : s) out.push_back(label(e));
    return out;
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace matroidkit
