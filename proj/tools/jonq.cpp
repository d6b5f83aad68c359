#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "jonq/explore.hpp"
#include "jonq/text.hpp"

using namespace jonq;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kParse = 1, kRejected = 2, kFalsified = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::uint32_t default_modulus() {
  if (const char* env = std::getenv("JONQ_MODULUS")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("JONQ_MODULUS is not a number: ") + env);
    }
  }
  return PrimeField::kDefaultModulus;
}

// `key = value` lines; `#` starts a comment.
struct CaseFile {
  std::size_t n = 0;
  std::optional<int> d;
  std::string field = "GF";
  std::string f, g;
  std::uint64_t seed = 0;
  std::string checks = "all";

  static CaseFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    CaseFile c;
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
      kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    auto need = [&](const char* key) {
      auto it = kv.find(key);
      if (it == kv.end()) throw UsageError(path + ": missing '" + key + "'");
      return it->second;
    };
    try {
      c.n = std::stoul(need("n"));
      if (kv.count("d")) c.d = std::stoi(kv["d"]);
      if (kv.count("seed")) c.seed = std::stoull(kv["seed"]);
    } catch (const std::logic_error&) {
      throw UsageError(path + ": n, d and seed must be integers");
    }
    c.f = need("f");
    c.g = need("g");
    if (kv.count("field")) c.field = kv["field"];
    if (kv.count("checks")) c.checks = kv["checks"];
    return c;
  }
};

// "GF", "GF(p)" or "QQ"
std::optional<std::uint32_t> prime_of(const std::string& field, std::uint32_t modulus) {
  if (field == "QQ") return std::nullopt;
  if (field == "GF") return modulus;
  if (field.size() > 4 && field.rfind("GF(", 0) == 0 && field.back() == ')') {
    try {
      return static_cast<std::uint32_t>(std::stoul(field.substr(3, field.size() - 4)));
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("unknown field '" + field + "' (use QQ, GF or GF(p))");
}

template <class K>
std::string field_name(const K& field) {
  if constexpr (std::is_same_v<K, PrimeField>)
    return "GF(" + std::to_string(field.modulus()) + ")";
  else
    return "QQ";
}

template <class K>
std::string tuple(const std::vector<Polynomial<K>>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " : " : "") + to_string(ps[i]);
  return s + ")";
}

struct Rejected {
  Violation violation;
  std::string detail;
};

template <class K>
DeJonquieres<K> load_map(const CaseFile& c, const K& field) {
  auto ring = x_ring(field, c.n);
  auto f = parse_polynomial(c.f, ring);
  auto g = parse_polynomial(c.g, ring);
  if (c.d && !g.is_zero() && g.total_degree() != *c.d)
    throw UsageError("declared d = " + std::to_string(*c.d) + " but g has degree " + std::to_string(g.total_degree()));
  auto built = DeJonquieres<K>::construct(f, g);
  if (!built) throw Rejected{built.violation, built.detail};
  return std::move(*built.map);
}

json case_json(const CaseSpec& spec, const std::string& field, const std::string& f, const std::string& g) {
  return json{{"n", spec.n}, {"d", spec.d}, {"seed", spec.seed}, {"field", field}, {"f", f}, {"g", g}};
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

json report_json(const CaseOutcome& o, const std::string& field) {
  json j{{"case", case_json(o.spec, field, o.f, o.g)}};
  if (o.checks.theorem) j["theorem"] = verdict(o.theorem);
  if (o.checks.colon) j["colon"] = verdict(o.colon);
  if (o.checks.cone) j["cone_hilbert"] = verdict(o.cone_hilbert);
  if (o.checks.special) j["special"] = verdict(o.special);
  if (o.checks.projdim) {
    j["projdim"] = o.projdim;
    j["cm"] = o.cm;
  }
  if (!o.witness.empty()) j["witness"] = o.witness;
  if (!o.error.empty()) j["error"] = o.error;
  j["runtime_ms"] = o.runtime_ms;
  return j;
}

CheckSet parse_checks(const std::string& list) {
  try {
    return CheckSet::parse(list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <class K>
int cmd_validate(const CaseFile& c, const K& field) {
  auto j = load_map(c, field);
  std::cout << "accepted: n = " << j.n() << ", d = " << j.d() << " over " << field_name(field) << "\n"
            << "J = " << tuple(j.coords()) << "\n";
  return kOk;
}

template <class K>
int cmd_invert(const CaseFile& c, const K& field) {
  auto j = load_map(c, field);
  auto inv = inverse(j);
  std::cout << "inverse: " << tuple(inv.map.coords()) << "\n"
            << "f' = " << to_string(inv.map.f()) << "\n"
            << "g' = " << to_string(inv.map.g()) << "\n"
            << "factor: " << to_string(inv.certificate.factor) << "\n"
            << "factor degree: " << inv.certificate.factor_degree << "\n";
  return kOk;
}

template <class K>
int cmd_downgrade(const CaseFile& c, const K& field) {
  auto j = load_map(c, field);
  auto seq = downgraded_sequence(j);
  for (std::size_t i = 0; i < seq.q.size(); ++i) std::cout << "q" << i + 1 << " = " << to_string(seq.q[i]) << "\n";
  for (std::size_t i = 0; i < seq.forms.size(); ++i) {
    auto [a, b] = bidegree(seq.forms[i]);
    std::cout << "F" << i << " = " << to_string(seq.forms[i]) << "    [bidegree (" << a << "," << b << ")]\n";
  }
  return kOk;
}

template <class K>
int cmd_resolve(const CaseFile& c, const K& field) {
  auto j = load_map(c, field);
  auto betti = resolution(j).betti();
  auto computed = minimal_free_resolution(j.base_ideal()).betti;
  std::cout << betti.ranks_string() << "\n"
            << "shifts: " << betti.shifts_string() << "\n"
            << "groebner: " << (computed == betti ? "agrees" : "differs: " + computed.shifts_string()) << "\n";
  return computed == betti ? kOk : kFalsified;
}

template <class K>
int cmd_rees(const CaseFile& c, const K& field, const std::string& checks, bool as_json) {
  const auto set = parse_checks(checks.empty() ? c.checks : checks);
  auto j = load_map(c, field);
  auto o = run_checks(j, set, c.seed);
  if (as_json) {
    std::cout << report_json(o, field_name(field)).dump(2) << "\n";
  } else {
    std::cout << "case: n = " << o.spec.n << ", d = " << o.spec.d << ", seed = " << o.spec.seed << " over "
              << field_name(field) << "\n";
    if (o.checks.theorem) std::cout << "theorem:      " << verdict(o.theorem) << (o.linear_type ? " (linear type)" : "") << "\n";
    if (o.checks.colon) std::cout << "colon:        " << verdict(o.colon) << "\n";
    if (o.checks.cone) std::cout << "cone_hilbert: " << verdict(o.cone_hilbert) << "\n";
    if (o.checks.special) std::cout << "special:      " << verdict(o.special) << "\n";
    if (o.checks.projdim)
      std::cout << "projdim:      " << o.projdim << (o.cm ? " (Cohen-Macaulay)" : " (not Cohen-Macaulay)") << "\n";
    if (!o.witness.empty()) std::cout << "witness:      " << o.witness << "\n";
    if (!o.error.empty()) std::cout << "error:        " << o.error << "\n";
  }
  if (!o.error.empty()) return kInternal;
  return o.pass() ? kOk : kFalsified;
}

std::pair<long, long> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      long v = std::stol(s);
      return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "' (expected a..b)");
  }
}

int cmd_explore(const std::string& n_range, const std::string& d_range, int trials, std::uint64_t seed,
                std::uint32_t modulus, const std::string& checks, bool serial) {
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [d_lo, d_hi] = parse_range(d_range);
  if (n_lo < 2 || n_hi < n_lo || d_lo < 2 || d_hi < d_lo || trials < 1) throw UsageError("need 2 <= lo <= hi and trials >= 1");
  auto cases = case_grid(n_lo, n_hi, d_lo, d_hi, trials, seed);
  auto results = sweep(cases, modulus, parse_checks(checks), !serial);

  const auto field = "GF(" + std::to_string(modulus) + ")";
  struct Row {
    int cases = 0, cm = 0, non_cm = 0, failed = 0;
  };
  std::map<std::pair<std::size_t, int>, Row> table;
  std::vector<const CaseOutcome*> deviations;
  for (const auto& o : results) {
    std::cout << report_json(o, field).dump() << "\n";
    auto& row = table[{o.spec.n, o.spec.d}];
    ++row.cases;
    if (!o.pass()) ++row.failed;
    if (o.checks.projdim && o.error.empty()) {
      ++(o.cm ? row.cm : row.non_cm);
      if (!o.matches_conjecture()) deviations.push_back(&o);
    }
  }
  std::cerr << " n  d  cases  CM  non-CM  failed\n";
  int failed = 0;
  for (const auto& [key, row] : table) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%2zu %2d %6d %3d %7d %7d\n", key.first, key.second, row.cases, row.cm, row.non_cm,
                  row.failed);
    std::cerr << buf;
    failed += row.failed;
  }
  for (const auto* o : deviations)
    std::cerr << "CM verdict differs from d <= n+1: n = " << o->spec.n << ", d = " << o->spec.d
              << ", seed = " << o->spec.seed << ", f = " << o->f << ", g = " << o->g << "\n";
  return failed ? kFalsified : kOk;
}

template <class Fn>
int with_field(const CaseFile& c, std::uint32_t modulus, Fn&& fn) {
  if (auto p = prime_of(c.field, modulus)) return fn(PrimeField(*p));
  return fn(RationalField());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jonq: generalized de Jonquieres maps, their inverses, resolutions and Rees ideals"};
  app.require_subcommand(1);
  std::optional<std::uint32_t> modulus_flag;
  app.add_option("--modulus", modulus_flag, "prime for GF cases (default $JONQ_MODULUS or 32003)");

  std::string file;
  auto add_file_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "case file")->required();
    return cmd;
  };
  auto* validate = add_file_cmd("validate", "check the map conditions");
  auto* invert = add_file_cmd("invert", "compute and certify the inverse");
  auto* downgrade = add_file_cmd("downgrade", "print the downgraded sequence");
  auto* resolve = add_file_cmd("resolve", "Betti table of the base ideal");
  auto* rees = add_file_cmd("rees", "verify the Rees ideal presentation");
  std::string checks;
  bool as_json = false;
  rees->add_option("--checks", checks, "subset of theorem,colon,cone,projdim,special");
  rees->add_flag("--json", as_json, "print the JSON report");

  auto* explore = app.add_subcommand("explore", "random sweep over a grid of (n, d)");
  std::string n_range = "2..3", d_range = "2..4", explore_checks = "all";
  int trials = 5, threads = 0;
  std::uint64_t seed = 0;
  bool serial = false;
  explore->add_option("--n-range", n_range, "a..b");
  explore->add_option("--d-range", d_range, "a..b");
  explore->add_option("--trials", trials, "maps per (n, d)");
  explore->add_option("--seed", seed, "base seed");
  explore->add_option("--checks", explore_checks, "subset of theorem,colon,cone,projdim,special");
  explore->add_option("--threads", threads, "worker threads (0: OpenMP default)");
  explore->add_flag("--serial", serial, "run the cases one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    const auto modulus = modulus_flag ? *modulus_flag : default_modulus();
    if (explore->parsed()) {
      if (threads > 0) omp_set_num_threads(threads);
      return cmd_explore(n_range, d_range, trials, seed, modulus, explore_checks, serial);
    }
    const auto c = CaseFile::load(file);
    return with_field(c, modulus, [&](const auto& field) {
      if (validate->parsed()) return cmd_validate(c, field);
      if (invert->parsed()) return cmd_invert(c, field);
      if (downgrade->parsed()) return cmd_downgrade(c, field);
      if (resolve->parsed()) return cmd_resolve(c, field);
      return cmd_rees(c, field, checks, as_json);
    });
  } catch (const Rejected& r) {
    std::cout << "rejected: " << describe(r.violation) << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    return kRejected;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
