#ifndef SCG_TESTS_HELPERS_HPP
#define SCG_TESTS_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "scg/alphabet.hpp"
#include "scg/profile.hpp"
#include "scg/words.hpp"

namespace scg::testing {

inline alphabet_ptr make_alphabet(const std::vector<std::string>& names) {
  auto alph = std::make_shared<alphabet>();
  for (const auto& n : names) alph->add({n, gen_role::generic});
  return alph;
}

// Alphabet shaped like an encoding of a small structure: a0..a{k-1}, b, c, d, f1, f2.
inline alphabet_ptr encoding_alphabet(int domain_size) {
  auto alph = std::make_shared<alphabet>();
  for (int i = 0; i < domain_size; ++i)
    alph->add({"a" + std::to_string(i), gen_role::domain});
  alph->add({"b", gen_role::b});
  alph->add({"c", gen_role::c});
  alph->add({"d", gen_role::d});
  alph->add({"f1", gen_role::f1});
  alph->add({"f2", gen_role::f2});
  return alph;
}

inline power_word w(const alphabet_ptr& alph, const std::string& text) {
  return parse_word(text, alph);
}

// 150-index blocks and eight-digit primes: the same relator shapes at a size
// where thousands of word-problem runs stay cheap. The dominant piece between
// two u relators spans two adjacent squared runs, about 2*hi^2 letters, so
// blocks must be long enough for that to stay under one twentieth.
inline construction_profile scaled_profile() {
  construction_profile p;
  p.scale = "custom";
  p.ua = {1, 150};
  p.ub = {151, 300};
  p.uc = {301, 450};
  p.ud = {451, 600};
  p.v = {601, 750};
  p.w_block_len = 60;
  std::int64_t q = 22'500'001;
  while (!is_prime(q)) q += 2;
  p.p1 = q;
  q += 2;
  while (!is_prime(q)) q += 2;
  p.p2 = q;
  validate_profile(p);
  return p;
}

}  // namespace scg::testing

#endif
