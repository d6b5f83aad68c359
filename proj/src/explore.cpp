#include "jonq/explore.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "jonq/text.hpp"

namespace jonq {

CheckSet CheckSet::parse(const std::string& list) {
  CheckSet c{false, false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "theorem") c.theorem = true;
    else if (item == "colon") c.colon = true;
    else if (item == "cone") c.cone = true;
    else if (item == "projdim") c.projdim = true;
    else if (item == "special") c.special = true;
    else if (item == "all") c = CheckSet{};
    else if (!item.empty()) throw std::invalid_argument("unknown check '" + item + "'");
  }
  return c;
}

bool CaseOutcome::pass() const {
  if (!error.empty()) return false;
  if (checks.theorem && !theorem) return false;
  if (checks.colon && !colon) return false;
  if (checks.cone && !cone_hilbert) return false;
  if (checks.special && !special) return false;
  if (checks.projdim && !(projdim_complete && projdim <= spec.n + 1)) return false;
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<CaseSpec> case_grid(std::size_t n_lo, std::size_t n_hi, int d_lo, int d_hi, int trials,
                                std::uint64_t seed) {
  std::vector<CaseSpec> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (int d = d_lo; d <= d_hi; ++d)
      for (int t = 0; t < trials; ++t) {
        auto s = splitmix64(seed ^ splitmix64((n << 40) ^ (static_cast<std::uint64_t>(d) << 20) ^
                                              static_cast<std::uint64_t>(t)));
        out.push_back({n, d, s});
      }
  return out;
}

template <class K>
CaseOutcome run_checks(const DeJonquieres<K>& j, const CheckSet& checks, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CaseOutcome out;
  out.spec = {j.n(), j.d(), seed};
  out.f = to_string(j.f());
  out.g = to_string(j.g());
  out.checks = checks;
  auto note = [&out](const std::string& w) {
    if (out.witness.empty()) out.witness = w;
  };
  try {
    auto p = rees_presentation(j);
    if (checks.theorem) {
      auto r = verify_main_theorem(j, p);
      out.theorem = r.pass();
      out.linear_type = r.linear_type;
      if (!out.theorem) note("theorem: " + r.witness);
    }
    if (checks.colon) {
      auto r = colon_lemma_checks(j, p);
      out.colon = r.pass();
      if (!out.colon) note("colon: " + r.witness);
    }
    if (checks.cone) {
      auto r = cone_betti(j, p);
      out.cone_hilbert = r.hilbert_ok;
      if (!out.cone_hilbert) note("cone: predicted " + r.predicted.to_string() + ", actual " + r.actual.to_string());
    }
    if (checks.projdim) {
      auto r = projdim_probe(j, p);
      out.projdim = r.projdim;
      out.projdim_complete = r.complete;
      out.cm = r.cohen_macaulay();
    }
    if (checks.special) {
      auto r = specialization_check(j, seed);
      out.special = r.pass(j.d());
      if (!out.special) note("special: no proportional implicit equation");
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

CaseOutcome run_case(const CaseSpec& c, std::uint32_t modulus, const CheckSet& checks) {
  try {
    auto j = random_map(PrimeField(modulus), c.n, c.d, c.seed);
    auto out = run_checks(j, checks, c.seed);
    out.spec = c;
    return out;
  } catch (const std::exception& e) {
    CaseOutcome out;
    out.spec = c;
    out.checks = checks;
    out.error = e.what();
    return out;
  }
}

std::vector<CaseOutcome> sweep(const std::vector<CaseSpec>& cases, std::uint32_t modulus, const CheckSet& checks,
                               bool parallel) {
  std::vector<CaseOutcome> out(cases.size());
  const auto count = static_cast<long>(cases.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) out[i] = run_case(cases[i], modulus, checks);
  } else {
    for (long i = 0; i < count; ++i) out[i] = run_case(cases[i], modulus, checks);
  }
  return out;
}

template CaseOutcome run_checks(const DeJonquieres<PrimeField>&, const CheckSet&, std::uint64_t);
template CaseOutcome run_checks(const DeJonquieres<RationalField>&, const CheckSet&, std::uint64_t);

}  // namespace jonq
