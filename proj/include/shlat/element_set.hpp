#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace shlat {

using Element = int;

// Sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<Element> xs) : members_(xs) { normalize(); }
  explicit ElementSet(std::vector<Element> xs) : members_(std::move(xs)) { normalize(); }

  static ElementSet range(int n) {
    std::vector<Element> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
    return ElementSet(std::move(xs));
  }

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Element front() const { return members_.front(); }
  const std::vector<Element>& members() const { return members_; }

  bool contains(Element x) const { return std::binary_search(members_.begin(), members_.end(), x); }

  void insert(Element x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) members_.insert(it, x);
  }

  void erase(Element x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it != members_.end() && *it == x) members_.erase(it);
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Element> members_;
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace shlat
