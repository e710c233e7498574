#pragma once

// Isomorphism-class encoding for small multigraphs.
//
// The form is the lexicographically smallest code over all vertex orders
// that list vertices by nondecreasing degree. The code is
//   [order, size, sorted degree sequence..., column-major upper triangle of
//    the multiplicity matrix]
// and the search prunes on partial columns against the best code so far,
// plus on interchangeable ("twin") vertices.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"

namespace graphsplice {

inline constexpr std::size_t kCanonicalOrderCap = 10;

struct CanonicalForm {
  std::vector<std::uint32_t> code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < code.size(); ++k) {
      if (k != 0) out += '.';
      out += std::to_string(code[k]);
    }
    return out;
  }
};

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const PlfGraph& g) : n_(g.order()), adj_(n_ * n_, 0), degree_(n_, 0) {
    for (const auto& e : g.edges()) {
      ++adj_[(e.u - 1) * n_ + (e.v - 1)];
      ++adj_[(e.v - 1) * n_ + (e.u - 1)];
      ++degree_[e.u - 1];
      ++degree_[e.v - 1];
    }
    target_degree_ = degree_;
    std::sort(target_degree_.begin(), target_degree_.end());

    twin_of_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      twin_of_[v] = v;
      for (std::size_t w = 0; w < v; ++w) {
        if (twins(w, v)) {
          twin_of_[v] = twin_of_[w];
          break;
        }
      }
    }

    header_.push_back(static_cast<std::uint32_t>(n_));
    header_.push_back(static_cast<std::uint32_t>(g.size()));
    for (auto d : target_degree_) header_.push_back(static_cast<std::uint32_t>(d));
  }

  CanonicalForm run() {
    placed_.assign(n_, 0);
    used_.assign(n_, false);
    current_.clear();
    best_.clear();
    search(0);
    CanonicalForm form;
    form.code = header_;
    form.code.insert(form.code.end(), best_.begin(), best_.end());
    return form;
  }

 private:
  std::uint32_t at(std::size_t a, std::size_t b) const { return adj_[a * n_ + b]; }

  // Swapping twins is an automorphism, so only one of them needs trying.
  bool twins(std::size_t a, std::size_t b) const {
    if (degree_[a] != degree_[b]) return false;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != a && x != b && at(a, x) != at(b, x)) return false;
    }
    return true;
  }

  // Column k of the code lives at offset k*(k-1)/2 and has k entries. A
  // partial code that already exceeds the best code's prefix is abandoned.
  void search(std::size_t k) {
    if (k == n_) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    std::vector<std::size_t> tried_classes;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || degree_[v] != target_degree_[k]) continue;
      if (std::find(tried_classes.begin(), tried_classes.end(), twin_of_[v]) != tried_classes.end()) continue;
      tried_classes.push_back(twin_of_[v]);

      const std::size_t mark = current_.size();
      for (std::size_t i = 0; i < k; ++i) current_.push_back(at(placed_[i], v));

      const bool prune =
          !best_.empty() &&
          std::lexicographical_compare_three_way(current_.begin(), current_.end(), best_.begin(),
                                                 best_.begin() + static_cast<std::ptrdiff_t>(current_.size())) > 0;
      if (!prune) {
        used_[v] = true;
        placed_[k] = v;
        search(k + 1);
        used_[v] = false;
      }
      current_.resize(mark);
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> target_degree_;
  std::vector<std::size_t> twin_of_;
  std::vector<std::uint32_t> header_;

  std::vector<std::size_t> placed_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
};

}  // namespace detail

/// Equal iff the two multigraphs are isomorphic. Throws cap_exceeded above
/// `order_cap` vertices.
inline CanonicalForm canonical_form(const PlfGraph& g, std::size_t order_cap = kCanonicalOrderCap) {
  if (g.order() > order_cap) {
    throw cap_exceeded("canonical form capped at order " + std::to_string(order_cap) + ", got " +
                       std::to_string(g.order()));
  }
  return detail::Canonicalizer(g).run();
}

inline std::vector<std::size_t> sorted_degrees(const PlfGraph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (const auto& e : g.edges()) {
    ++d[e.u - 1];
    ++d[e.v - 1];
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline bool is_isomorphic(const PlfGraph& a, const PlfGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace graphsplice
