#pragma once

#include <string>
#include <vector>

#include "jonq/groebner.hpp"
#include "jonq/text.hpp"

namespace jt {

using Q = jonq::RationalField;
using Fp = jonq::PrimeField;

template <class K>
jonq::RingPtr<K> ring(const std::string& spec, K field = K{}, jonq::MonomialOrder order = jonq::MonomialOrder::grevlex()) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return jonq::make_ring<K>(field, names, order);
}

template <class K>
jonq::Polynomial<K> P(const jonq::RingPtr<K>& r, const std::string& s) {
  return jonq::parse_polynomial<K>(s, r);
}

template <class K>
jonq::Ideal<K> I(const jonq::RingPtr<K>& r, std::initializer_list<const char*> gens) {
  jonq::Ideal<K> out(r);
  for (auto g : gens) out.gens.push_back(P(r, g));
  return out;
}

}  // namespace jt
