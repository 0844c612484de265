// A fixed-universe bitset of group element identifiers.

#ifndef SUPERCHAR_ELEMENT_SET_HPP_
#define SUPERCHAR_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace superchar {

using Element = std::uint32_t;

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::span<const Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u);
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    return full(universe_) - *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  // Smallest member; universe() when empty.
  Element min() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return static_cast<Element>(universe_);
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Canonical order: by size, then by the sorted member list.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.to_vector() < b.to_vector();
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// "{a,b,c}"
inline std::string describe(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace superchar

#endif  // SUPERCHAR_ELEMENT_SET_HPP_
