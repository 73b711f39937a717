#ifndef SCG_WORDS_HPP
#define SCG_WORDS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scg/alphabet.hpp"
#include "scg/checked.hpp"

namespace scg {

/** One maximal block of equal letters: gen^exp with exp != 0. */
struct run {
  gen_index gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const run&, const run&) = default;
};

/** Freely reduced group word in run-length form.

    Invariants: every exponent is nonzero, adjacent runs use distinct
    generators, letter_length() is the exact sum of |exp| over runs. Words
    with letter counts in the billions stay a few thousand runs long. */
class power_word {
public:
  power_word() = default;
  explicit power_word(alphabet_ptr alph) : alph_(std::move(alph)) {}

  // Freely reduces the raw run list (merges equal-generator neighbours,
  // drops zero runs, cascades cancellation).
  power_word(alphabet_ptr alph, std::vector<run> raw);

  const std::vector<run>& runs() const { return runs_; }
  const alphabet_ptr& alph() const { return alph_; }
  bool empty() const { return runs_.empty(); }
  std::int64_t letter_length() const { return letter_len_; }

  // Generators occurring in this word, as indices without repetition.
  std::vector<gen_index> letters() const;

  friend bool operator==(const power_word& a, const power_word& b) {
    return a.runs_ == b.runs_;
  }

private:
  alphabet_ptr alph_;
  std::vector<run> runs_;
  std::int64_t letter_len_ = 0;

  friend power_word concat(const power_word&, const power_word&);
};

/** Result of splitting off the maximal cancelling conjugator:
    word = conjugator * core * conjugator^-1 with core cyclically reduced. */
struct cyclic_split {
  power_word conjugator;
  power_word core;
};

power_word parse_word(const std::string& text, const alphabet_ptr& alph);
std::string render_word(const power_word& w);

power_word concat(const power_word& a, const power_word& b);
power_word invert(const power_word& w);
cyclic_split cyclic_reduce(const power_word& w);

// w^k via the cyclic split; throws overflow_error when the literal expansion
// of a multi-run core would exceed max_runs.
power_word pow(const power_word& w, std::int64_t k, std::size_t max_runs = 1u << 20);

power_word single_run(const alphabet_ptr& alph, gen_index g, std::int64_t exp);

// Letters [start, start+len) of w as a word; partial boundary runs allowed.
power_word subword(const power_word& w, std::int64_t start, std::int64_t len);

// w with letters [start, start+len) replaced by `repl`, freely reduced.
power_word splice(const power_word& w, std::int64_t start, std::int64_t len,
                  const power_word& repl);

/** Rotation class of a cyclically reduced word, with the wrap-around seam
    merged so adjacency invariants hold cyclically. */
struct cyclic_word {
  std::vector<run> runs;
  std::int64_t letter_len = 0;

  bool single_run() const { return runs.size() == 1; }
  friend bool operator==(const cyclic_word&, const cyclic_word&) = default;
};

// Requires w cyclically reduced (cyclic_reduce(w).conjugator empty).
cyclic_word to_cyclic(const power_word& w);
cyclic_word invert(const cyclic_word& w);

// Rotation of c as a linear word, starting `offset` letters into runs[first].
power_word rotation(const alphabet_ptr& alph, const cyclic_word& c,
                    std::size_t first, std::int64_t offset);

// True when a and b are rotations of each other.
bool cyclically_equal(const cyclic_word& a, const cyclic_word& b);

}  // namespace scg

#endif
