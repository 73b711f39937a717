#ifndef SCG_PRESENTATION_HPP
#define SCG_PRESENTATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scg/words.hpp"

namespace scg {

/** Exact nonnegative fraction; den > 0. Comparisons never overflow. */
struct ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const ratio&, const ratio&) = default;
};

// a < b by cross multiplication in 128-bit arithmetic.
bool ratio_less(const ratio& a, const ratio& b);

/** The defining relators, either a stored list or a generator-driven schema.

    relevant(letters, n) returns at least every relator of letter length
    under 2n whose left-hand-side letters all occur in `letters`, and nothing
    of length 2n or more; a word admits a longer-than-half overlap only with
    such relators. Torsion relators g^p live in the presentation's torsion
    table, not here. Schemas must be pure, so concurrent calls are safe. */
class relator_family {
public:
  using schema_fn = std::function<std::vector<power_word>(
      const std::vector<gen_index>&, std::int64_t)>;

  explicit relator_family(std::vector<power_word> list);
  explicit relator_family(schema_fn schema);

  bool finite() const { return !schema_; }
  const std::vector<power_word>& list() const;  // finite families only
  std::vector<power_word> relevant(const std::vector<gen_index>& letters,
                                   std::int64_t max_letter_len) const;

private:
  std::vector<power_word> list_;
  schema_fn schema_;
};

/** Group presentation: alphabet, relators, and the orders of the torsion
    generators (each order entry mirrors a relator g^p). Immutable; all
    queries are pure. */
class presentation {
public:
  presentation(alphabet_ptr alph, relator_family relators,
               std::map<gen_index, std::int64_t> torsion_orders = {});

  const alphabet_ptr& alph() const { return alph_; }
  const relator_family& relators() const { return relators_; }
  const std::map<gen_index, std::int64_t>& torsion_orders() const { return torsion_; }

private:
  alphabet_ptr alph_;
  relator_family relators_;
  std::map<gen_index, std::int64_t> torsion_;
};

/** Outcome of the small-cancellation metric check. */
struct metric_report {
  bool holds = true;
  ratio max_piece;      // largest |piece| / |relator|; 0/1 when no piece exists
  std::string witness;  // description of the maximal piece, empty if none
};

// Checks the C'(lambda) condition over the finite relator list: every common
// prefix of two distinct symmetrized relators must be shorter than lambda
// times each relator it sits in. Rotations are enumerated at run granularity.
metric_report verify_metric(const presentation& p, const ratio& lambda);

/** One rewriting step: the matched span of the subject word, the rotated
    relator it overlaps (match is the rotation's prefix, strictly longer than
    half), and the strictly shorter replacement (inverse of the remainder). */
struct dehn_step {
  std::int64_t start_letter = 0;  // 0-based letter offset of the match
  std::int64_t length = 0;        // letters matched
  std::size_t start_run = 0;      // run containing the first matched letter
  std::int64_t start_offset = 0;  // letters into that run
  std::size_t end_run = 0;        // run containing the last matched letter
  std::int64_t end_offset = 0;    // matched letters within that run
  power_word relator_rotation;
  power_word replacement;
};

std::optional<dehn_step> find_dehn_step(const power_word& w, const presentation& p);

struct dehn_result {
  power_word minimal;
  std::vector<dehn_step> log;
};

// Applies find_dehn_step until none applies. Letter length strictly
// decreases per step, so this terminates; the log is a replayable
// certificate of the reduction.
dehn_result dehn_reduce(const power_word& w, const presentation& p);

// Re-applies every logged step mechanically, checking at each step that the
// span matches the rotation prefix and the replacement is the inverted
// remainder; throws property_violation on any mismatch with `output`.
void replay_dehn_log(const power_word& input, const std::vector<dehn_step>& log,
                     const power_word& output);

// Word problem: w = e exactly when its Dehn reduction is empty. Requires the
// presentation to satisfy C'(1/6).
bool is_trivial(const power_word& w, const presentation& p);

// Conjugacy-stable normal form: alternates cyclic reduction with Dehn steps
// (including seam-crossing ones) until stable. Inputs already stable come
// back unchanged.
power_word cyclic_dehn_reduce(const power_word& w, const presentation& p);

// Whether w^{p_i} = e, for the torsion generator f_i (i is 1 or 2): holds
// exactly when the cyclic Dehn reduction is empty or a single f_i run. The
// p_i-fold power is never constructed.
bool has_order_dividing(const power_word& w, int i, const presentation& p);

/** Witnesses that a trivial word contains large relator portions. */
struct greendlinger_report {
  enum class kind { relator, spans, failure };
  struct span {
    std::int64_t start = 0;       // letter offset into the cyclic core
    std::int64_t length = 0;      // letters matched
    std::int64_t relator_len = 0; // letter length of the matched relator
  };

  kind result = kind::failure;
  std::int64_t core_offset = 0;  // letters of w before the cyclic core
  std::int64_t core_length = 0;
  std::vector<span> spans;       // two disjoint spans in the spans case
};

// For a verified-trivial nonempty w: either its cyclic core is itself a
// symmetrized relator, or two disjoint subwords of the core each cover more
// than (1-3*lambda) of some symmetrized relator. kind::failure would falsify
// the small-cancellation hypothesis. Throws domain_error when w is empty or
// not trivial.
greendlinger_report greendlinger_witnesses(const power_word& w, const presentation& p,
                                           const ratio& lambda);

// Text format: "generators: ..." line, one relator per line, optional
// trailing "torsion: g=<order> ..." line; "#" lines are comments. Generators
// named b, c, d, f1, f2 get their construction roles.
presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const presentation& p);

}  // namespace scg

#endif
