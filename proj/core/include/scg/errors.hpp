#ifndef SCG_ERRORS_HPP
#define SCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scg {

/** Malformed textual input: words, structure files, presentation files, profiles. */
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/** Operation arguments violate a documented precondition. */
class domain_error : public std::invalid_argument {
public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/** Mixing words over different alphabets, or unknown generator names. */
class alphabet_error : public domain_error {
public:
  explicit alphabet_error(const std::string& what) : domain_error(what) {}
};

/** Exponent or length arithmetic left the exactly representable range. */
class overflow_error : public std::runtime_error {
public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

/** A verified structural guarantee failed at runtime; callers treat this as a
    result about the inputs, not as a bug in the caller. */
class property_violation : public std::runtime_error {
public:
  explicit property_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scg

#endif
