#include "scg/profile.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <vector>

#include "scg/errors.hpp"

namespace scg {

construction_profile paper_profile() { return construction_profile{}; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) out = mulmod(out, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t u = static_cast<std::uint64_t>(n);
  std::uint64_t d = u - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality exactly below 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, u);
      if (x == u - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void validate_profile(const construction_profile& p) {
  if (p.scale != "paper" && p.scale != "custom")
    throw domain_error("profile scale must be 'paper' or 'custom'");
  if (p.lambda_target.num < 1 || p.lambda_target.den < 1)
    throw domain_error("lambda target must be a positive fraction");
  if (6 * p.lambda_target.num > p.lambda_target.den)
    throw domain_error("lambda target above 1/6 leaves Dehn reduction unsound");
  std::array<block_range, 5> blocks = {p.ua, p.ub, p.uc, p.ud, p.v};
  const char* names[] = {"uA", "ub", "uc", "ud", "v"};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].lo < 1 || blocks[i].hi < blocks[i].lo)
      throw domain_error(std::string("block ") + names[i] + " is not a positive interval");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      bool apart = blocks[i].hi < blocks[j].lo || blocks[j].hi < blocks[i].lo;
      if (!apart)
        throw domain_error(std::string("blocks ") + names[i] + " and " + names[j] +
                           " overlap");
    }
  // Relevance filtering drops relators whose left-hand letters are absent
  // from a word; that is sound only while no half-relator subword can dodge a
  // letter, i.e. no factor (and no inter-occurrence gap) reaches half the
  // relator. Enforce it per block and for the narrowest w relator.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    __int128 total = 0;
    for (std::int64_t n = blocks[i].lo; n <= blocks[i].hi; ++n)
      total += 1 + static_cast<__int128>(n) * n;
    __int128 largest = 1 + static_cast<__int128>(blocks[i].hi) * blocks[i].hi;
    if (2 * largest >= total)
      throw domain_error(std::string("block ") + names[i] +
                         " has a factor spanning half its relator");
  }
  if (p.w_block_len < 5)
    throw domain_error("w block length below 5 lets one factor span half a relator");
  {
    std::int64_t L = p.w_block_len;
    __int128 min_len = static_cast<__int128>(L) + static_cast<__int128>(L) * p.w_base(1) +
                       static_cast<__int128>(L) * (L + 1) / 2;
    __int128 max_gap = 2 * (static_cast<__int128>(p.w_base(1)) + L) + 1;
    if (2 * max_gap >= min_len)
      throw domain_error("w window lets one factor span half a relator");
  }
  if (p.p1 == p.p2) throw domain_error("torsion primes must be distinct");
  for (std::int64_t q : {p.p1, p.p2}) {
    if (!is_prime(q)) throw domain_error("torsion order " + std::to_string(q) + " is not prime");
    std::int64_t top = 0;
    for (const block_range& b : blocks) top = std::max(top, b.hi);
    // Largest piece a torsion power can share with a u or v relator is one
    // f-run of top^2 letters; the prime must dwarf it at the lambda target.
    __int128 bound = static_cast<__int128>(2) * top * top * p.lambda_target.den;
    if (static_cast<__int128>(q) * p.lambda_target.num <= bound)
      throw domain_error("torsion order " + std::to_string(q) +
                         " is too small for the exponent blocks");
  }
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& key) {
  std::int64_t value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw parse_error("malformed integer for profile key '" + key + "': '" + text + "'");
  return value;
}

block_range parse_block(const std::string& text, const std::string& key) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("profile key '" + key + "' expects lo:hi, got '" + text + "'");
  return {parse_int(text.substr(0, colon), key), parse_int(text.substr(colon + 1), key)};
}

}  // namespace

construction_profile parse_profile(const std::string& text) {
  construction_profile out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw parse_error("profile entries are key=value, got '" + token + "'");
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "p1") {
      out.p1 = parse_int(value, key);
    } else if (key == "p2") {
      out.p2 = parse_int(value, key);
    } else if (key == "scale") {
      out.scale = value;
    } else if (key == "uA") {
      out.ua = parse_block(value, key);
    } else if (key == "ub") {
      out.ub = parse_block(value, key);
    } else if (key == "uc") {
      out.uc = parse_block(value, key);
    } else if (key == "ud") {
      out.ud = parse_block(value, key);
    } else if (key == "v") {
      out.v = parse_block(value, key);
    } else if (key == "wlen") {
      out.w_block_len = parse_int(value, key);
    } else if (key == "lambda") {
      std::size_t slash = value.find('/');
      if (slash == std::string::npos)
        throw parse_error("profile lambda expects num/den, got '" + value + "'");
      out.lambda_target = {parse_int(value.substr(0, slash), key),
                           parse_int(value.substr(slash + 1), key)};
    } else {
      throw parse_error("unknown profile key '" + key + "'");
    }
  }
  validate_profile(out);
  return out;
}

std::string serialize_profile(const construction_profile& p) {
  std::ostringstream out;
  out << "p1=" << p.p1 << " p2=" << p.p2 << " scale=" << p.scale;
  auto block = [&](const char* name, const block_range& b) {
    out << " " << name << "=" << b.lo << ":" << b.hi;
  };
  block("uA", p.ua);
  block("ub", p.ub);
  block("uc", p.uc);
  block("ud", p.ud);
  block("v", p.v);
  out << " wlen=" << p.w_block_len;
  out << " lambda=" << p.lambda_target.num << "/" << p.lambda_target.den;
  return out.str();
}

}  // namespace scg
