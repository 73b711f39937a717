#include "scg/tree.hpp"

#include <charconv>
#include <cmath>

namespace scg {

namespace {

std::string entry_text(std::int64_t i) {
  return i < 0 ? "m" + std::to_string(-i) : std::to_string(i);
}

std::int64_t parse_entry(const std::string& text, const std::string& key) {
  std::string digits = text;
  bool negative = false;
  if (!digits.empty() && digits[0] == 'm') {
    negative = true;
    digits = digits.substr(1);
  }
  if (digits.empty()) throw parse_error("malformed tree element key '" + key + "'");
  std::int64_t value = 0;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
    throw parse_error("malformed tree element key '" + key + "'");
  if (digits.size() > 1 && digits[0] == '0')
    throw parse_error("malformed tree element key '" + key + "'");
  if (negative && value == 0) throw parse_error("malformed tree element key '" + key + "'");
  return negative ? -value : value;
}

}  // namespace

std::string tree_element::key() const {
  std::string out = "e" + std::to_string(n);
  for (std::int64_t i : tau) out += "_" + entry_text(i);
  return out;
}

tree_element tree_element::from_key(const std::string& key) {
  if (key.size() < 2 || key[0] != 'e')
    throw parse_error("malformed tree element key '" + key + "'");
  tree_element out;
  std::size_t us = key.find('_');
  std::string head = key.substr(1, us == std::string::npos ? std::string::npos : us - 1);
  std::int64_t n = parse_entry(head, key);
  if (n < 0) throw parse_error("malformed tree element key '" + key + "'");
  out.n = n;
  while (us != std::string::npos) {
    std::size_t next = key.find('_', us + 1);
    std::string part = key.substr(us + 1, next == std::string::npos ? std::string::npos
                                                                    : next - us - 1);
    out.tau.push_back(parse_entry(part, key));
    us = next;
  }
  return out;
}

tree_element tree_parent(const tree_element& x) {
  tree_element out = x;
  if (out.tau.empty()) {
    ++out.n;
  } else {
    out.tau.pop_back();
  }
  return out;
}

tree_element tree_child(const tree_element& x, std::int64_t i) {
  tree_element out = x;
  out.tau.push_back(i);
  return out;
}

bool tree_decoration(const tree_element& x) {
  return (x.n + static_cast<std::int64_t>(x.tau.size())) % 2 == 0;
}

int zigzag(std::int64_t i) {
  if (i == 0) return 0;
  if (i > 0) return static_cast<int>(2 * i - 1);
  return static_cast<int>(-2 * i);
}

std::int64_t unzigzag(int m) {
  if (m == 0) return 0;
  if (m % 2 == 1) return (m + 1) / 2;
  return -(m / 2);
}

tree_structure::tree_structure(bool decorated, int child_index_bound)
    : decorated_(decorated), child_bound_(child_index_bound), base_(decorated ? 3 : 2) {
  if (child_index_bound < 1) throw domain_error("child index bound must be at least 1");
}

int tree_structure::child_symbol(std::int64_t i) const { return base_ + zigzag(i); }

std::vector<symbol> tree_structure::symbols_upto(int max_m) const {
  if (max_m < 0) throw domain_error("the tree signature is infinite; a symbol bound is required");
  std::vector<symbol> out;
  int last_child = child_symbol(child_bound_);
  int negative_last = child_symbol(-static_cast<std::int64_t>(child_bound_));
  int top = std::min(max_m, std::max(last_child, negative_last));
  for (int m = 1; m <= top; ++m) out.push_back(symbol_at(m));
  return out;
}

symbol tree_structure::symbol_at(int m) const {
  if (m < 1) throw domain_error("no symbol with index " + std::to_string(m));
  if (m == 1) return {1, "p", symbol_kind::function, 1};
  if (decorated_ && m == 2) return {2, "P", symbol_kind::relation, 1};
  std::int64_t i = unzigzag(m - base_);
  return {m, "c_" + entry_text(i), symbol_kind::function, 1};
}

std::vector<std::string> tree_structure::domain() const {
  throw domain_error("the tree domain is infinite");
}

bool tree_structure::element_exists(const std::string& key) const {
  try {
    tree_element::from_key(key);
    return true;
  } catch (const parse_error&) {
    return false;
  }
}

std::string tree_structure::apply(int m, const std::vector<std::string>& args) const {
  if (args.size() != 1) throw domain_error("tree operations are unary");
  tree_element x = tree_element::from_key(args[0]);
  if (m == 1) return tree_parent(x).key();
  if (decorated_ && m == 2) throw domain_error("apply on relation symbol 'P'");
  if (m < base_) throw domain_error("no function symbol with index " + std::to_string(m));
  return tree_child(x, unzigzag(m - base_)).key();
}

bool tree_structure::holds(int m, const std::vector<std::string>& args) const {
  if (!decorated_ || m != 2)
    throw domain_error("holds on non-relation symbol index " + std::to_string(m));
  if (args.size() != 1) throw domain_error("tree operations are unary");
  return tree_decoration(tree_element::from_key(args[0]));
}

shift_check_result sigma1_shift_check(const qf_formula& phi,
                                      const std::vector<tree_element>& params,
                                      const std::vector<tree_element>& witnesses, int k,
                                      bool decorated) {
  if (k < 1) throw domain_error("shift parameter k must be positive");
  tree_structure tree(decorated, k);

  std::set<int> functions, relations;
  phi.collect_symbols(functions, relations);
  for (int m : functions) {
    if (m == 1) continue;
    if (m < (decorated ? 3 : 2))
      throw domain_error("formula uses a non-function symbol as a function");
    std::int64_t i = unzigzag(m - (decorated ? 3 : 2));
    if (std::llabs(i) >= k)
      throw domain_error("formula uses child index " + std::to_string(i) +
                         " outside the shift bound");
  }
  for (int m : relations) {
    if (!decorated || m != 2)
      throw domain_error("formula uses relation index " + std::to_string(m) +
                         " absent from the tree signature");
  }
  for (const tree_element& p : params) {
    if (p.n < 1) throw domain_error("shift parameters must live at level 1 or above");
  }
  for (const std::vector<tree_element>* group : {&params, &witnesses}) {
    for (const tree_element& x : *group)
      for (std::int64_t entry : x.tau)
        if (std::llabs(entry) >= k)
          throw domain_error("path entry " + std::to_string(entry) +
                             " outside the shift bound");
  }

  auto keys = [](const std::vector<tree_element>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.key());
    return out;
  };
  std::vector<std::string> assignment = keys(witnesses);
  for (const auto& p : params) assignment.push_back(p.key());
  oracle_universe u{&tree};
  if (!eval_qf(phi, u, assignment))
    throw domain_error("formula does not hold at the original witnesses");

  shift_check_result result;
  for (const tree_element& wtn : witnesses) {
    if (wtn.n == 0) {
      tree_element moved;
      moved.n = 1;
      moved.tau.push_back(k);
      moved.tau.insert(moved.tau.end(), wtn.tau.begin(), wtn.tau.end());
      result.shifted.push_back(std::move(moved));
    } else {
      result.shifted.push_back(wtn);
    }
  }
  std::vector<std::string> shifted_assignment = keys(result.shifted);
  for (const auto& p : params) shifted_assignment.push_back(p.key());
  result.ok = eval_qf(phi, u, shifted_assignment);
  return result;
}

}  // namespace scg
