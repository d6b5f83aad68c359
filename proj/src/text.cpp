#include "jonq/text.hpp"

#include <cctype>

namespace jonq {

namespace {

template <class K>
class Parser {
 public:
  Parser(std::string_view s, const RingPtr<K>& ring) : s_(s), ring_(ring) {}

  Polynomial<K> parse() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    auto p = poly();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> poly() {
    Polynomial<K> acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    auto t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Polynomial<K> term() {
    if (!starts_factor()) {
      skip_ws();
      throw ParseError("expected a term", pos_);
    }
    auto acc = factor();
    while (true) {
      if (accept('*')) {
        if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
        acc = multiply(acc, factor());
      } else if (starts_factor()) {
        acc = multiply(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    if (!accept('^')) return 1;
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected an exponent after '^'", pos_);
    mpz_class e = integer();
    if (e > 0xFFFF) throw ParseError("exponent too large", pos_);
    return static_cast<unsigned>(e.get_ui());
  }

  Polynomial<K> factor() {
    skip_ws();
    char c = s_[pos_];
    const K& F = ring_->field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) throw ParseError("zero denominator", pos_);
      }
      try {
        return Polynomial<K>::constant(ring_, F.from_rational(num, den));
      } catch (const FieldError& e) {
        throw ParseError(e.what(), pos_);
      }
    }
    if (c == '(') {
      ++pos_;
      auto inner = poly();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return power(inner, exponent());
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", start);
    unsigned e = exponent();
    return Polynomial<K>::term(ring_, Monomial::variable(*idx, e), F.one());
  }

  std::string_view s_;
  const RingPtr<K>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  return Parser<K>(text, ring).parse();
}

template <class K>
std::string to_string(const Polynomial<K>& p) {
  if (p.is_zero()) return "0";
  const K& F = p.field();
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = F.is_negative(t.coeff);
    auto mag = neg ? F.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += F.to_string(mag);
    } else {
      if (!F.is_one(mag)) out += F.to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const RingPtr<PrimeField>&);
template Polynomial<RationalField> parse_polynomial(std::string_view, const RingPtr<RationalField>&);
template std::string to_string(const Polynomial<PrimeField>&);
template std::string to_string(const Polynomial<RationalField>&);

}  // namespace jonq
