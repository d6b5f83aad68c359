#include <algorithm>
#include <stdexcept>

#include "jonq/groebner.hpp"

namespace jonq {

HilbertNumerator::HilbertNumerator(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void HilbertNumerator::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertNumerator HilbertNumerator::operator+(const HilbertNumerator& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return HilbertNumerator(std::move(c));
}

HilbertNumerator HilbertNumerator::operator-(const HilbertNumerator& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return HilbertNumerator(std::move(c));
}

HilbertNumerator HilbertNumerator::operator*(const HilbertNumerator& o) const {
  if (is_zero() || o.is_zero()) return HilbertNumerator(std::vector<long long>{});
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return HilbertNumerator(std::move(c));
}

HilbertNumerator HilbertNumerator::one_minus_t_pow(unsigned k) {
  if (k == 0) return HilbertNumerator(std::vector<long long>{});
  std::vector<long long> c(k + 1, 0);
  c[0] = 1;
  c[k] = -1;
  return HilbertNumerator(std::move(c));
}

HilbertNumerator HilbertNumerator::monomial(long long c, unsigned k) {
  std::vector<long long> v(k + 1, 0);
  v[k] = c;
  return HilbertNumerator(std::move(v));
}

std::pair<int, HilbertNumerator> HilbertNumerator::strip_one_minus_t() const {
  if (is_zero()) throw std::domain_error("strip_one_minus_t: zero numerator");
  int count = 0;
  std::vector<long long> c = coeffs_;
  while (true) {
    long long s = 0;
    for (auto v : c) s += v;
    if (s != 0) break;
    // synthetic division by (1 - t): q_i = sum_{j<=i} c_j
    std::vector<long long> q(c.size() - 1);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      q[i] = acc;
    }
    c = std::move(q);
    ++count;
  }
  return {count, HilbertNumerator(std::move(c))};
}

long long HilbertNumerator::value_at_one() const {
  long long s = 0;
  for (auto v : coeffs_) s += v;
  return s;
}

int HilbertNumerator::dimension(std::size_t nvars) const {
  if (is_zero()) return -1;
  return static_cast<int>(nvars) - strip_one_minus_t().first;
}

long long HilbertNumerator::multiplicity() const {
  if (is_zero()) return 0;
  return strip_one_minus_t().second.value_at_one();
}

std::string HilbertNumerator::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

unsigned wdeg(const Monomial& m, std::span<const int> w) { return weighted_degree(m, w); }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

HilbertNumerator numerator(std::vector<Monomial> gens, std::span<const int> w, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return HilbertNumerator();
  if (gens.front().is_one()) return HilbertNumerator(std::vector<long long>{});

  std::vector<int> count(nvars, 0);
  bool pairwise_coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    std::uint32_t m = g.support_mask();
    if (seen & m) pairwise_coprime = false;
    seen |= m;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v]) ++count[v];
  }
  if (pairwise_coprime) {
    HilbertNumerator n;
    for (const auto& g : gens) n = n * HilbertNumerator::one_minus_t_pow(wdeg(g, w));
    return n;
  }
  std::size_t pivot = std::max_element(count.begin(), count.end()) - count.begin();
  Monomial x = Monomial::variable(pivot);

  // N(M) = N(M + (x)) + t^{w(x)} N(M : x)
  std::vector<Monomial> plus{x};
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    if (!g[pivot]) plus.push_back(g);
    Monomial q = g;
    if (g[pivot]) q.set(pivot, g[pivot] - 1u);
    quot.push_back(q);
  }
  return numerator(std::move(plus), w, nvars) +
         HilbertNumerator::monomial(1, wdeg(x, w)) * numerator(std::move(quot), w, nvars);
}

}  // namespace

HilbertNumerator monomial_ideal_numerator(std::vector<Monomial> gens, std::span<const int> weights, std::size_t nvars) {
  if (!weights.empty() && weights.size() != nvars)
    throw std::invalid_argument("monomial_ideal_numerator: one weight per variable");
  return numerator(std::move(gens), weights, nvars);
}

}  // namespace jonq
