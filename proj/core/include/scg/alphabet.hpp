#ifndef SCG_ALPHABET_HPP
#define SCG_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "scg/errors.hpp"

namespace scg {

/** Distinguishes the letters of an encoding group; generic letters cover
    hand-written presentations. */
enum class gen_role : std::uint8_t {
  generic,
  domain,  // one generator per structure element
  b,
  c,
  d,
  f1,
  f2,
};

using gen_index = std::uint32_t;

struct generator_id {
  std::string name;
  gen_role role = gen_role::generic;
};

/** Ordered set of named generators; words refer to generators by index.

    Immutable once observed through words, except that encodings of infinite
    structures may append generators on demand (existing indices never change,
    appends are internally synchronized). */
class alphabet {
public:
  alphabet() = default;
  explicit alphabet(std::vector<generator_id> gens);

  // Throws alphabet_error on duplicates or a name that collides with the
  // empty-word literal "e".
  gen_index add(generator_id gen);

  gen_index index_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  // By value: the backing vector may grow while readers hold the result.
  generator_id gen(gen_index i) const;
  std::size_t size() const;
  std::vector<std::string> names() const;

  // First generator with the given role, if any.
  bool find_role(gen_role role, gen_index& out) const;

  static bool valid_name(const std::string& name);

private:
  mutable std::mutex mu_;
  std::vector<generator_id> gens_;
  std::unordered_map<std::string, gen_index> index_;
};

using alphabet_ptr = std::shared_ptr<alphabet>;

}  // namespace scg

#endif
