#ifndef SCG_DECODER_HPP
#define SCG_DECODER_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "scg/encoder.hpp"

namespace scg {

/** The structure read back out of an encoding: group words representing the
    domain plus tables rebuilt from word-problem queries. */
struct decoded_structure {
  std::vector<power_word> reps;    // pairwise non-equal in the group
  std::vector<std::string> names;  // serialization names, parallel to reps
  fg_structure rebuilt;            // tables over names
  std::string provenance;          // comment line for serialization
};

// True iff u_A(x, c) and u_A(x, d) both reduce to the identity; exactly the
// domain membership condition.
bool in_domain(const power_word& x, const group_of_structure& g);

// Relation symbol m: whether w_m(xs, b) is trivial. Function symbol m: the
// unique candidate y with w_m(xs, b)*y^-1 trivial. Every xs entry must
// already satisfy in_domain. No matching candidate throws domain_error (the
// decoding budget was too small); two matches throw property_violation.
std::variant<bool, power_word> recover_symbol(int m, const std::vector<power_word>& xs,
                                              const group_of_structure& g,
                                              const std::vector<power_word>& candidates = {});

// Enumerates nonempty freely reduced words of at most `budget` letters in
// length-lex order, keeps those passing in_domain, merges group-equal
// candidates (keeping the enumeration-first representative), then rebuilds
// every symbol table through recover_symbol. Finite sources close at budget
// 1. symbol_bound truncates infinite signatures; -1 means all symbols and
// requires a finite signature.
decoded_structure decode(const group_of_structure& g, int budget, int symbol_bound = -1);

// The quantifier-free membership test for the orbit of (b, c, d, f1, f2):
// t1, t2 are nontrivial torsion of the two prime orders, v commutes them both
// ways, and x, y, z satisfy the matching u-family relations against both
// while avoiding torsion themselves. Inputs are Dehn-normalized first, so
// group-equal inputs answer alike.
bool orbit_formula(const power_word& x, const power_word& y, const power_word& z,
                   const power_word& t1, const power_word& t2,
                   const group_of_structure& g);

struct roundtrip_report {
  bool ok = false;
  std::map<std::string, std::string> bijection;  // decoded name -> source element
};

// decode(encode(s)) compared with s up to isomorphism; s is normalized first
// so constants survive as their unary-relation form.
roundtrip_report roundtrip_check(const fg_structure& s, const construction_profile& profile);

// Structure-grammar text with the provenance comment.
std::string serialize_decoded(const decoded_structure& d);

}  // namespace scg

#endif
