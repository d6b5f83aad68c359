#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "jonq/polynomial.hpp"

namespace jonq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses the ASCII grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer ['/' integer] | name ['^' integer] | '(' poly ')' ['^' integer]
/// so `x1^2 - x2*x3`, `2/3 x1 y2` and `-(x1+x2)^2` are accepted.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring);

/// Canonical printing in the ring order: `x1^2 - x2*x3`, `-2/3*x1`, `0`.
template <class K>
std::string to_string(const Polynomial<K>& p);

}  // namespace jonq
