#ifndef SCG_ENCODER_HPP
#define SCG_ENCODER_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scg/presentation.hpp"
#include "scg/profile.hpp"
#include "scg/structure.hpp"

namespace scg {

/** Selects the exponent block of a u-family relator word. */
enum class u_family { A, b, c, d };

/** Provenance of one stored relator: which schema produced it and the factor
    context the relevance filter and the exponent audit key on. */
struct relator_info {
  enum class family { torsion, v, ub, uc, ud, ua, w_relation, w_function };
  family fam = family::torsion;
  std::vector<gen_index> lhs_letters;  // all of these must occur for relevance
  std::string context;                 // x-part letters as text; tuples space-joined
  gen_index y_gen = 0;                 // the exponent-carrying letter
  int m = 0;                           // symbol index, w families only
};

/** A structure's encoding: the presentation plus the bookkeeping tying
    generators back to elements. Immutable after encode, except that lazy
    encodings append generators for newly touched elements (the alphabet
    keeps existing indices stable). */
struct group_of_structure {
  presentation pres;
  std::shared_ptr<const structure_oracle> source;
  construction_profile profile;
  gen_index b = 0, c = 0, d = 0, f1 = 0, f2 = 0;
  std::map<std::string, gen_index> element_gens;  // finite: all; lazy: initial generators
  std::vector<relator_info> infos;  // parallel to the relator list; empty when lazy
  bool lazy = false;
};

// ∏_{i in block} x·y^{i^2}, freely reduced; the block is the profile range of
// the family. Multi-run cores of y make the power expansion literal, so such
// arguments are only feasible for small exponent blocks.
power_word build_u(u_family fam, const power_word& x, const power_word& y,
                   const construction_profile& profile);

// ∏_{i in v-block} x·y^{i^2}, freely reduced.
power_word build_v(const power_word& x, const power_word& y,
                   const construction_profile& profile);

// ∏_{i=1..wBlockLen} x1…xn·y^{wBase(m)+i}, freely reduced. The caller supplies
// xs matching the arity of symbol m; signature-aware callers (encode,
// recover_symbol) enforce the match.
power_word build_w(int m, const std::vector<power_word>& xs, const power_word& y,
                   const construction_profile& profile);

// The encoding presentation: torsion relators f_i^{p_i}, both v words, the six
// u_{b,c,d} words, two u_A words per element, and one w word per function
// table entry (with the value letter inverted at the end) or held relation
// tuple. Finite structures get the full stored list; infinite domains or
// signatures get a lazy family enumerated on demand. Requires a normalized
// signature: every symbol a function or relation of arity at least one.
group_of_structure encode(std::shared_ptr<const structure_oracle> source,
                          const construction_profile& profile = paper_profile());
group_of_structure encode(const fg_structure& source,
                          const construction_profile& profile = paper_profile());

// Every non-torsion relator of letter length under 2*max_len whose
// left-hand-side letters all lie in `letters` (the function-relator value
// letter is exempt). Torsion is handled separately via exponent reduction.
std::vector<power_word> relevant_relators(const group_of_structure& g,
                                          const std::vector<gen_index>& letters,
                                          std::int64_t max_len);

// Generator index of a structure element, appended to the alphabet on first
// use for lazy encodings. Rejects unknown elements and name clashes with the
// construction constants.
gen_index element_generator(const group_of_structure& g, const std::string& key);

// Factor-level audit behind the exponent-disjointness invariant: no two
// distinct relators may share a factor (x-context, y-letter, exponent), and
// across different relator families even a bare (y-letter, exponent) repeat
// is flagged. Returns human-readable violations; empty means clean. Finite
// encodings only.
std::vector<std::string> exponent_collisions(const group_of_structure& g);

}  // namespace scg

#endif
