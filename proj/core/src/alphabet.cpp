#include "scg/alphabet.hpp"

#include <cctype>

namespace scg {

alphabet::alphabet(std::vector<generator_id> gens) {
  for (auto& g : gens) add(std::move(g));
}

gen_index alphabet::add(generator_id gen) {
  if (!valid_name(gen.name)) throw alphabet_error("invalid generator name: '" + gen.name + "'");
  std::lock_guard<std::mutex> lock(mu_);
  if (index_.count(gen.name)) throw alphabet_error("duplicate generator name: '" + gen.name + "'");
  gen_index i = static_cast<gen_index>(gens_.size());
  index_.emplace(gen.name, i);
  gens_.push_back(std::move(gen));
  return i;
}

gen_index alphabet::index_of(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(name);
  if (it == index_.end()) throw alphabet_error("unknown generator: '" + name + "'");
  return it->second;
}

bool alphabet::contains(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  return index_.count(name) != 0;
}

generator_id alphabet::gen(gen_index i) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (i >= gens_.size()) throw alphabet_error("generator index out of range");
  return gens_[i];
}

std::size_t alphabet::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return gens_.size();
}

std::vector<std::string> alphabet::names() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

bool alphabet::find_role(gen_role role, gen_index& out) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].role == role) {
      out = static_cast<gen_index>(i);
      return true;
    }
  }
  return false;
}

bool alphabet::valid_name(const std::string& name) {
  if (name.empty() || name == "e") return false;  // "e" denotes the empty word
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_') return false;
  }
  return true;
}

}  // namespace scg
