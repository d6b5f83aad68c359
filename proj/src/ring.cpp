#include "jonq/ring.hpp"

#include <set>
#include <stdexcept>

namespace jonq {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Deglex: return "deglex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

template <class K>
Ring<K>::Ring(K field, std::vector<std::string> names, MonomialOrder order, std::optional<Bigrading> split)
    : field_(std::move(field)), names_(std::move(names)), order_(order), split_(split) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("ring has " + std::to_string(names_.size()) + " variables; at most " +
                                std::to_string(kMaxVars) + " supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
  }
  if (split_ && split_->nx + split_->ny != names_.size())
    throw std::invalid_argument("bigrading split does not cover the variables");
  if (order_.kind() == MonomialOrder::Kind::Block && order_.block() > names_.size())
    throw std::invalid_argument("elimination block larger than the ring");
}

template <class K>
std::optional<std::size_t> Ring<K>::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

template <class K>
std::shared_ptr<const Ring<K>> Ring<K>::with_order(const MonomialOrder& order) const {
  return std::make_shared<const Ring<K>>(field_, names_, order, split_);
}

template class Ring<PrimeField>;
template class Ring<RationalField>;

}  // namespace jonq
