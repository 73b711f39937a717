#ifndef SCG_TREE_HPP
#define SCG_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scg/structure.hpp"

namespace scg {

/** Node of the infinitely branching tree: level n plus an integer path. */
struct tree_element {
  std::int64_t n = 0;
  std::vector<std::int64_t> tau;

  friend bool operator==(const tree_element&, const tree_element&) = default;

  // Stable string key: "e<n>" then one "_<entry>" per path entry, negatives
  // written with an "m" prefix ("e2_m3" is (2,<-3>)). Never collides with the
  // empty-word key "e".
  std::string key() const;
  static tree_element from_key(const std::string& key);
};

tree_element tree_parent(const tree_element& x);
tree_element tree_child(const tree_element& x, std::int64_t i);
bool tree_decoration(const tree_element& x);  // n + |tau| even

// Zig-zag enumeration of the integers: 0, 1, -1, 2, -2, ...
int zigzag(std::int64_t i);
std::int64_t unzigzag(int m);

/** Infinite computable tree structure over keys, per-level parent map plus
    integer-indexed children; optionally carries the parity decoration P. */
class tree_structure final : public structure_oracle {
public:
  tree_structure(bool decorated, int child_index_bound);

  bool decorated() const { return decorated_; }
  int child_index_bound() const { return child_bound_; }

  // Symbol index of c_i; evaluation accepts any i, enumeration stops at the
  // child index bound.
  int child_symbol(std::int64_t i) const;

  bool signature_finite() const override { return false; }
  std::vector<symbol> symbols_upto(int max_m) const override;
  bool has_symbol(int m) const override { return m >= 1; }
  symbol symbol_at(int m) const override;
  bool domain_finite() const override { return false; }
  std::vector<std::string> domain() const override;
  bool element_exists(const std::string& key) const override;
  std::string apply(int m, const std::vector<std::string>& args) const override;
  bool holds(int m, const std::vector<std::string>& args) const override;
  std::vector<std::string> generators() const override { return {tree_element{}.key()}; }

private:
  bool decorated_;
  int child_bound_;
  int base_;  // first child symbol index: p is 1, P (when decorated) is 2
};

/** Outcome of the one-level shift transfer check. */
struct shift_check_result {
  bool ok = false;  // formula still true at the shifted witnesses
  std::vector<tree_element> shifted;
};

// Checks that satisfaction of `phi` survives moving every level-0 witness
// (0,tau) to (1,k^tau) while parameters stay fixed. Preconditions (distinct
// errors, reported as domain_error): phi uses only the parent map, children
// c_i with |i| < k, and the decoration; parameters live at level >= 1; every
// path entry of params and witnesses has absolute value < k; phi holds at the
// original witnesses. Variables 0..|witnesses|-1 are the witnesses, the
// parameters follow.
shift_check_result sigma1_shift_check(const qf_formula& phi,
                                      const std::vector<tree_element>& params,
                                      const std::vector<tree_element>& witnesses, int k,
                                      bool decorated);

}  // namespace scg

#endif
