#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jonq/field.hpp"
#include "jonq/monomial.hpp"

namespace jonq {

/// Sizes of the (x | y) variable blocks of a bigraded ring.
struct Bigrading {
  std::size_t nx = 0;
  std::size_t ny = 0;
  bool operator==(const Bigrading&) const = default;
};

/// Polynomial ring k[v_1..v_m] with a fixed monomial order. Immutable; shared
/// through `RingPtr`.
template <class K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
       std::optional<Bigrading> split = std::nullopt);

  const K& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const MonomialOrder& order() const { return order_; }
  const std::optional<Bigrading>& bigrading() const { return split_; }

  /// Same variables and field, different order.
  std::shared_ptr<const Ring> with_order(const MonomialOrder& order) const;

  /// Structural equality: field, names, order and split all agree.
  bool same_as(const Ring& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_ && split_ == o.split_;
  }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::optional<Bigrading> split_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
                     std::optional<Bigrading> split = std::nullopt) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(names), order, split);
}

/// Names `prefix1 .. prefixN`.
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);

template <class K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  return a == b || (a && b && a->same_as(*b));
}

extern template class Ring<PrimeField>;
extern template class Ring<RationalField>;

}  // namespace jonq
