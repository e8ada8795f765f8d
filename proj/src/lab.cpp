#include "stanley/lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "stanley/partition_engine.hpp"
#include "stanley/report.hpp"

namespace stanley {

// ---------------------------------------------------------------- config

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long to_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + key + "' expects an integer, got '" + value + "'");
}

double to_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + key + "' expects a number, got '" + value + "'");
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "yes" || value == "1" || value == "on") return true;
  if (value == "false" || value == "no" || value == "0" || value == "off") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + value + "'");
}

/// "a" or "a..b".
std::pair<int, int> to_range(const std::string& key, const std::string& value) {
  const auto dots = value.find("..");
  if (dots == std::string::npos) {
    const int v = static_cast<int>(to_integer(key, value));
    return {v, v};
  }
  return {static_cast<int>(to_integer(key, trim(value.substr(0, dots)))),
          static_cast<int>(to_integer(key, trim(value.substr(dots + 2))))};
}

EPolicy to_policy(const std::string& value) {
  if (value == "none") return EPolicy::None;
  if (value == "degree_d1" || value == "degree-d1") return EPolicy::DegreeD1;
  if (value == "inside_xt" || value == "inside-xt") return EPolicy::InsideXt;
  throw ConfigError("unknown E policy '" + value + "' (none, degree_d1, inside_xt)");
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

}  // namespace

CampaignConfig parse_campaign_config(std::string_view text) {
  CampaignConfig config;
  bool has_instance = false;
  bool mode_given = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("F:", 0) == 0 || line.rfind("E:", 0) == 0 || line.rfind("J:", 0) == 0) {
      has_instance = has_instance || line[0] == 'F';
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") {
      std::tie(config.n_min, config.n_max) = to_range(key, value);
    } else if (key == "n_min") {
      config.n_min = static_cast<int>(to_integer(key, value));
    } else if (key == "n_max") {
      config.n_max = static_cast<int>(to_integer(key, value));
    } else if (key == "d") {
      config.d = static_cast<int>(to_integer(key, value));
    } else if (key == "r") {
      std::tie(config.r_min, config.r_max) = to_range(key, value);
    } else if (key == "r_min") {
      config.r_min = static_cast<int>(to_integer(key, value));
    } else if (key == "r_max") {
      config.r_max = static_cast<int>(to_integer(key, value));
    } else if (key == "e_policy") {
      config.e_policy = to_policy(value);
    } else if (key == "j_density") {
      config.j_density = to_real(key, value);
    } else if (key == "e_density") {
      config.e_density = to_real(key, value);
    } else if (key == "mode") {
      mode_given = true;
      if (value == "exhaustive") {
        config.mode = EnumerationMode::Exhaustive;
      } else if (value == "random") {
        config.mode = EnumerationMode::Random;
      } else if (value == "single") {
        config.mode = EnumerationMode::Single;
      } else {
        throw ConfigError("unknown mode '" + value + "' (exhaustive, random, single)");
      }
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(to_integer(key, value));
    } else if (key == "field") {
      try {
        config.field = parse_field(value);
      } catch (const ParseError& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "instance_cap" || key == "count") {
      config.instance_cap = static_cast<std::size_t>(to_integer(key, value));
    } else if (key == "output" || key == "out") {
      config.output = value;
    } else if (key == "exhaustive_bound") {
      config.exhaustive_bound = static_cast<int>(to_integer(key, value));
    } else if (key == "require_t_hypothesis") {
      config.require_t_hypothesis = to_bool(key, value);
    } else if (key == "lemma_dep") {
      config.lemma_dep = to_bool(key, value);
    } else if (key == "cross_check_every") {
      config.cross_check_every = static_cast<std::size_t>(to_integer(key, value));
    } else if (key == "exact_sdepth_limit") {
      config.exact_sdepth_limit = static_cast<std::size_t>(to_integer(key, value));
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (has_instance) {
    config.instance = parse_instance(text);
    if (!mode_given) config.mode = EnumerationMode::Single;
  }
  validate_config(config);
  return config;
}

CampaignConfig load_campaign_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_campaign_config(buf.str());
}

void validate_config(const CampaignConfig& c) {
  if (c.mode == EnumerationMode::Single) {
    if (!c.instance) throw ConfigError("single mode needs an instance (F:, E:, J: lines)");
    return;
  }
  if (c.d < 1) throw ConfigError("d must be positive");
  if (c.n_min < 1 || c.n_max > Monomial::kMaxVariables) throw ConfigError("n outside 1..64");
  if (c.r_min < 1) throw ConfigError("r must be positive");
  if (c.j_density < 0 || c.j_density > 1 || c.e_density < 0 || c.e_density > 1) {
    throw ConfigError("densities must lie in [0, 1]");
  }
  if (c.mode == EnumerationMode::Exhaustive && c.n_max > c.exhaustive_bound) {
    throw ConfigError("exhaustive mode is limited to n <= " + std::to_string(c.exhaustive_bound));
  }
  if (c.require_t_hypothesis && (c.r_min != 5 || c.r_max != 5)) {
    throw ConfigError("require_t_hypothesis needs r = 5");
  }
  if (c.n_min > c.n_max || c.r_min > c.r_max) return;  // empty range
  bool feasible = false;
  for (int n = c.n_min; n <= c.n_max && !feasible; ++n) {
    feasible = binomial(n, c.d) >= static_cast<std::uint64_t>(c.r_min);
  }
  if (!feasible) {
    throw ConfigError("no n in range has " + std::to_string(c.r_min) +
                      " squarefree monomials of degree " + std::to_string(c.d));
  }
}

// ------------------------------------------------------- canonical forms

namespace {

std::uint64_t relabel(std::uint64_t support, const std::vector<int>& target) {
  std::uint64_t out = 0;
  while (support != 0) {
    const int v = std::countr_zero(support);
    support &= support - 1;
    out |= std::uint64_t{1} << target[v];
  }
  return out;
}

std::vector<std::uint64_t> supports(const std::vector<Monomial>& ms) {
  std::vector<std::uint64_t> out;
  for (const auto& m : ms) out.push_back(m.support());
  return out;
}

}  // namespace

CanonicalForm canonical_form(const QuotientInstance& inst) {
  const int n = inst.n;
  const std::vector<std::vector<std::uint64_t>> lists = {
      supports(inst.F), supports(inst.E), supports(inst.J.generators())};

  // Occurrence signature of each variable: per list and degree.
  std::vector<std::vector<int>> signature(n, std::vector<int>(3 * (n + 1), 0));
  for (std::size_t l = 0; l < lists.size(); ++l) {
    for (auto s : lists[l]) {
      const int deg = std::popcount(s);
      for_each_variable(s, [&](int v) { ++signature[v - 1][l * (n + 1) + deg]; });
    }
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return signature[a] > signature[b]; });
  // Classes of equal signature occupy consecutive target positions.
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || signature[order[i]] != signature[order[i - 1]]) classes.emplace_back();
    classes.back().push_back(order[i]);
  }

  constexpr std::uint64_t kBudget = 40320;
  std::uint64_t total = 1;
  for (const auto& c : classes) {
    for (std::size_t k = 2; k <= c.size() && total <= kBudget; ++k) total *= k;
  }
  const bool exact = total <= kBudget;

  std::vector<std::uint64_t> best;
  std::vector<int> best_target;
  std::vector<int> target(n);
  auto evaluate = [&] {
    int pos = 0;
    for (const auto& c : classes) {
      for (int v : c) target[v] = pos++;
    }
    std::vector<std::uint64_t> key{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(inst.d)};
    for (const auto& list : lists) {
      std::vector<std::uint64_t> mapped;
      for (auto s : list) mapped.push_back(relabel(s, target));
      std::sort(mapped.begin(), mapped.end());
      key.push_back(mapped.size());
      key.insert(key.end(), mapped.begin(), mapped.end());
    }
    if (best.empty() || key < best) {
      best = std::move(key);
      best_target = target;
    }
  };

  if (exact) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    while (true) {
      evaluate();
      std::size_t c = classes.size();
      bool advanced = false;
      while (c > 0) {
        --c;
        if (std::next_permutation(classes[c].begin(), classes[c].end())) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (std::uint64_t trial = 0; trial < kBudget; ++trial) {
      for (auto& c : classes) std::shuffle(c.begin(), c.end(), rng);
      evaluate();
    }
  }

  auto map_all = [&](const std::vector<std::uint64_t>& list) {
    std::vector<Monomial> out;
    for (auto s : list) out.emplace_back(n, relabel(s, best_target));
    return out;
  };
  CanonicalForm form{best,
                     QuotientInstance::make(n, inst.d, map_all(lists[0]), map_all(lists[1]),
                                            map_all(lists[2])),
                     exact};
  return form;
}

// ---------------------------------------------------------- generation

namespace {

std::vector<std::uint64_t> supports_of_degree(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k > n || k < 0) return out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (std::popcount(s) == k) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) { return a < b; });
  return out;
}

bool covered_by(const std::vector<std::uint64_t>& gens, std::uint64_t s) {
  return std::any_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return (g & ~s) == 0; });
}

std::vector<Monomial> as_monomials(int n, const std::vector<std::uint64_t>& ss) {
  std::vector<Monomial> out;
  for (auto s : ss) out.emplace_back(n, s);
  return out;
}

/// Candidate E generators: degree d+1, outside (F), inside (x_t) if t > 0.
std::vector<std::uint64_t> e_candidates(int n, int d, const std::vector<std::uint64_t>& F, int t) {
  std::vector<std::uint64_t> out;
  for (auto s : supports_of_degree(n, d + 1)) {
    if (covered_by(F, s)) continue;
    if (t > 0 && !((s >> (t - 1)) & 1U)) continue;
    out.push_back(s);
  }
  return out;
}

/// Non-generator monomials of I of degree >= d+1, sorted by degree
/// descending.
std::vector<std::uint64_t> j_candidates(int n, int d, const std::vector<std::uint64_t>& gens,
                                        const std::vector<std::uint64_t>& E) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (std::popcount(s) < d + 1 || !covered_by(gens, s)) continue;
    if (std::find(E.begin(), E.end(), s) != E.end()) continue;
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  return out;
}

/// Calls `emit(J generators)` for every up-set of `q` (degree descending).
template <class Emit>
void for_each_upset(int n, const std::vector<std::uint64_t>& q, Emit&& emit) {
  std::vector<signed char> state(std::size_t{1} << n, -1);  // -1 not in q, 0 out, 1 in
  for (auto s : q) state[s] = 0;
  std::vector<std::uint64_t> chosen;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == q.size()) {
      std::vector<std::uint64_t> gens;
      for (auto s : chosen) {
        bool minimal = true;
        for_each_variable(s, [&](int v) {
          if (state[s & ~(std::uint64_t{1} << (v - 1))] == 1) minimal = false;
        });
        if (minimal) gens.push_back(s);
      }
      emit(gens);
      return;
    }
    const std::uint64_t s = q[k];
    rec(k + 1);  // leave s out
    bool closed = true;
    for_each_variable(all & ~s, [&](int v) {
      const std::uint64_t up = s | (std::uint64_t{1} << (v - 1));
      if (state[up] == 0) closed = false;
    });
    if (closed) {
      state[s] = 1;
      chosen.push_back(s);
      rec(k + 1);
      chosen.pop_back();
      state[s] = 0;
    }
  };
  rec(0);
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<QuotientInstance> generate_exhaustive(const CampaignConfig& c) {
  std::map<std::vector<std::uint64_t>, QuotientInstance> found;
  const std::size_t cap = c.instance_cap;
  auto full = [&] { return cap != 0 && found.size() >= cap; };
  for (int n = c.n_min; n <= c.n_max && !full(); ++n) {
    const auto monos = supports_of_degree(n, c.d);
    for (int r = c.r_min; r <= c.r_max && !full(); ++r) {
      if (static_cast<std::size_t>(r) > monos.size()) continue;
      std::set<std::vector<std::uint64_t>> f_seen;
      std::vector<std::size_t> pick(r);
      for (int i = 0; i < r; ++i) pick[i] = i;
      while (!full()) {
        std::vector<std::uint64_t> F;
        for (auto i : pick) F.push_back(monos[i]);
        const auto f_form =
            canonical_form(QuotientInstance::make(n, c.d, as_monomials(n, F), {}, {}));
        if (f_seen.insert(f_form.key).second) {
          std::vector<std::vector<std::uint64_t>> e_options;
          if (c.e_policy == EPolicy::None) {
            e_options.push_back({});
          } else {
            std::set<std::vector<std::uint64_t>> uniq;
            std::vector<int> ts;
            if (c.e_policy == EPolicy::DegreeD1) {
              ts.push_back(0);
            } else {
              std::uint64_t used = 0;
              for (auto f : F) used |= f;
              for (int t = 1; t <= n; ++t) {
                if (!((used >> (t - 1)) & 1U)) ts.push_back(t);
              }
            }
            for (int t : ts) {
              const auto cand = e_candidates(n, c.d, F, t);
              if (cand.size() > 20) throw ConfigError("too many E candidates for exhaustive mode");
              for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
                std::vector<std::uint64_t> E;
                for (std::size_t i = 0; i < cand.size(); ++i) {
                  if ((mask >> i) & 1U) E.push_back(cand[i]);
                }
                uniq.insert(E);
              }
            }
            e_options.assign(uniq.begin(), uniq.end());
          }
          for (const auto& E : e_options) {
            if (full()) break;
            std::vector<std::uint64_t> gens = F;
            gens.insert(gens.end(), E.begin(), E.end());
            const auto q = j_candidates(n, c.d, gens, E);
            if (q.size() > 63) throw ConfigError("exhaustive J enumeration too large");
            for_each_upset(n, q, [&](const std::vector<std::uint64_t>& J) {
              if (full()) return;
              auto inst = QuotientInstance::make(n, c.d, as_monomials(n, F), as_monomials(n, E),
                                                 as_monomials(n, J));
              auto form = canonical_form(inst);
              found.emplace(std::move(form.key), std::move(form.instance));
            });
          }
        }
        // Next r-combination of the degree-d monomials.
        int i = r - 1;
        while (i >= 0 && pick[i] == monos.size() - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::vector<QuotientInstance> out;
  out.reserve(found.size());
  for (auto& [key, inst] : found) out.push_back(std::move(inst));
  return out;
}

std::optional<QuotientInstance> random_attempt(const CampaignConfig& c, std::mt19937_64& rng) {
  const int n = c.n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(c.n_max - c.n_min + 1));
  const int r = c.r_min + static_cast<int>(rng() % static_cast<std::uint64_t>(c.r_max - c.r_min + 1));
  auto monos = supports_of_degree(n, c.d);
  if (static_cast<std::size_t>(r) > monos.size()) return std::nullopt;
  for (int i = 0; i < r; ++i) {
    const std::size_t j = i + rng() % (monos.size() - i);
    std::swap(monos[i], monos[j]);
  }
  std::vector<std::uint64_t> F(monos.begin(), monos.begin() + r);
  std::vector<std::uint64_t> E;
  if (c.e_policy != EPolicy::None) {
    int t = 0;
    if (c.e_policy == EPolicy::InsideXt) {
      std::uint64_t used = 0;
      for (auto f : F) used |= f;
      std::vector<int> ts;
      for (int v = 1; v <= n; ++v) {
        if (!((used >> (v - 1)) & 1U)) ts.push_back(v);
      }
      if (ts.empty()) return std::nullopt;
      t = ts[rng() % ts.size()];
    }
    for (auto s : e_candidates(n, c.d, F, t)) {
      if (unit_real(rng) < c.e_density) E.push_back(s);
    }
  }
  std::vector<std::uint64_t> gens = F;
  gens.insert(gens.end(), E.begin(), E.end());
  std::vector<std::uint64_t> J;
  for (auto s : j_candidates(n, c.d, gens, E)) {
    if (std::popcount(s) <= c.d + 2 && unit_real(rng) < c.j_density) J.push_back(s);
  }
  auto inst = QuotientInstance::make(n, c.d, as_monomials(n, F), as_monomials(n, E),
                                     as_monomials(n, J));
  if (c.require_t_hypothesis) {
    const auto rep = analyze(inst);
    if (!rep.flags.case_r5_t) return std::nullopt;
  }
  return inst;
}

std::vector<QuotientInstance> generate_random(const CampaignConfig& c) {
  std::vector<QuotientInstance> out;
  for (std::size_t idx = 0; idx < c.instance_cap; ++idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    std::mt19937_64 rng(seq);
    std::optional<QuotientInstance> inst;
    for (int attempt = 0; attempt < 10000 && !inst; ++attempt) inst = random_attempt(c, rng);
    if (!inst) {
      throw ConfigError("no random instance satisfies the constraints after 10000 attempts");
    }
    out.push_back(std::move(*inst));
  }
  return out;
}

}  // namespace

std::vector<QuotientInstance> generate_instances(const CampaignConfig& config) {
  validate_config(config);
  switch (config.mode) {
    case EnumerationMode::Single: return {*config.instance};
    case EnumerationMode::Exhaustive:
      if (config.n_min > config.n_max || config.r_min > config.r_max) return {};
      return generate_exhaustive(config);
    case EnumerationMode::Random:
      if (config.n_min > config.n_max || config.r_min > config.r_max) return {};
      return generate_random(config);
  }
  return {};
}

// -------------------------------------------------------------- verdicts

std::string to_string(ConjectureStatus status) {
  switch (status) {
    case ConjectureStatus::PremiseFalse: return "PremiseFalse";
    case ConjectureStatus::Verified: return "Verified";
    case ConjectureStatus::Violation: return "VIOLATION";
  }
  return "?";
}

LemmaDepReport verify_lemma_dep(const QuotientInstance& inst, const Field& field) {
  LemmaDepReport rep;
  rep.r = inst.r();
  const PosetSlice poset = build_poset(inst);
  const auto C = poset.by_degree(inst.d + 2);
  // Candidate intervals [f_i, c] as element sets.
  std::vector<std::vector<std::pair<Monomial, std::vector<Monomial>>>> options(inst.r());
  for (int i = 0; i < inst.r(); ++i) {
    for (const auto& c : C) {
      if (divides(inst.F[i], c)) {
        options[i].push_back({c, interval_elements(poset, {inst.F[i], c})});
      }
    }
  }
  std::vector<Monomial> used, tops;
  std::function<bool(int)> search = [&](int i) {
    if (i == inst.r()) return true;
    for (const auto& [c, elems] : options[i]) {
      const bool clash = std::any_of(elems.begin(), elems.end(), [&](const Monomial& w) {
        return std::find(used.begin(), used.end(), w) != used.end();
      });
      if (clash) continue;
      used.insert(used.end(), elems.begin(), elems.end());
      tops.push_back(c);
      if (search(i + 1)) return true;
      tops.pop_back();
      used.resize(used.size() - elems.size());
    }
    return false;
  };
  rep.found = search(0);
  if (rep.found) rep.tops = tops;
  rep.depth = depth(SquarefreeModuleSpec::quotient(inst), field);
  if (rep.found && rep.r <= 4) rep.holds = rep.depth >= inst.d + 1;
  rep.r5_counterexample = rep.found && rep.r == 5 && rep.depth <= inst.d;
  return rep;
}

namespace {

std::optional<PbCheck> check_pb(const QuotientInstance& inst, const StructureReport& rep) {
  for (const auto& b : rep.B) {
    if (contains_sorted(rep.W, b)) continue;
    if (std::find(inst.E.begin(), inst.E.end(), b) != inst.E.end()) continue;
    const auto dropped = default_dropped_index(inst, b);
    if (!dropped) continue;
    PbCheck check;
    check.b = b;
    check.dropped = *dropped;
    try {
      const auto pb = build_pb(inst, b, *dropped);
      check.built = pb.has_value();
      if (pb) {
        std::set<Monomial> image;
        for (const auto& [a, c] : pb->h()) image.insert(c);
        const std::size_t want = static_cast<std::size_t>(rep.s) - 2 * (inst.r() - 1) - 1;
        if (image.size() != pb->h().size() || image.size() != want) {
          check.invariants_ok = false;
          check.message = "h is not injective or |Im h| is wrong";
        }
      }
    } catch (const InvalidInstance& e) {
      check.invariants_ok = false;
      check.message = e.what();
    }
    return check;
  }
  return std::nullopt;
}

}  // namespace

VerdictRecord verify_conjecture_case(const QuotientInstance& inst, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord rec;
  rec.form = canonical_form(inst);
  rec.n = inst.n;
  rec.d = inst.d;
  rec.r = inst.r();
  const PosetSlice poset = build_poset(inst);
  const StructureReport rep = analyze(inst, poset);
  rec.s = rep.s;
  rec.q = rep.q;
  rec.flags = rep.flags;
  rec.poset_size = poset.size();

  // The status only needs to know how sdepth compares with d+1.
  const int d = inst.d;
  rec.sdepth = d;
  rec.witness = *sdepth_decision(poset, d);
  if (auto w1 = sdepth_decision(poset, d + 1)) {
    rec.sdepth = d + 1;
    rec.witness = std::move(*w1);
    if (auto w2 = sdepth_decision(poset, d + 2)) {
      rec.sdepth = d + 2;
      rec.witness = std::move(*w2);
      if (poset.size() <= options.exact_sdepth_limit) {
        for (int k = d + 3; k <= poset.max_degree(); ++k) {
          auto w = sdepth_decision(poset, k);
          if (!w) break;
          rec.sdepth = k;
          rec.witness = std::move(*w);
        }
      } else {
        rec.sdepth_exact = false;
      }
    }
  }

  const auto spec = SquarefreeModuleSpec::quotient(inst);
  rec.field = options.field;
  rec.depth = depth(spec, options.field);
  if (options.cross_check) {
    rec.depth_rationals = depth(spec, Field::rationals());
    rec.depth_gfp = depth(spec, Field::gfp(32003));
    rec.field_disagreement = *rec.depth_rationals != rec.depth || *rec.depth_gfp != rec.depth;
  }

  if (rec.sdepth != d + 1) {
    rec.status = ConjectureStatus::PremiseFalse;
  } else if (rec.depth <= d + 1) {
    rec.status = ConjectureStatus::Verified;
  } else {
    rec.status = ConjectureStatus::Violation;
    OracleRecheck check;
    if (poset.size() <= 14) {
      check.sdepth = brute_force_sdepth(poset);
      check.sdepth_route = "brute-force";
    } else {
      SdepthOptions alt;
      alt.trim = false;
      alt.branching = Branching::Canonical;
      check.sdepth = sdepth(poset, alt).value;
      check.sdepth_route = "untrimmed-search";
    }
    check.taylor_depth = taylor_depth_oracle(spec, options.field);
    check.confirmed = check.sdepth == d + 1 && check.taylor_depth > d + 1;
    rec.recheck = check;
  }

  rec.depth_ge_d = rec.depth >= d;
  rec.sdepth_ge_d = rec.sdepth >= d;
  if (rec.r == 4 && inst.E.empty() && rep.s < 2 * rec.r) rec.shen_bound = rec.depth <= d + 1;
  if (rec.r == 4 && options.pb_check) rec.pb = check_pb(inst, rep);
  if (options.lemma_dep) rec.lemma_dep = verify_lemma_dep(inst, options.field);

  rec.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ------------------------------------------------------------- campaign

CampaignSummary run_campaign(const CampaignConfig& config, unsigned jobs, bool write_files,
                             const std::function<void(const VerdictRecord&)>& on_record) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<QuotientInstance> instances = generate_instances(config);

  std::vector<std::optional<VerdictRecord>> records(instances.size());
  std::vector<std::string> errors(instances.size());
  std::atomic<std::size_t> next{0};
  const Field field = config.field.value_or(default_field());
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      VerifyOptions opt;
      opt.field = field;
      opt.lemma_dep = config.lemma_dep;
      opt.cross_check = config.cross_check_every != 0 && i % config.cross_check_every == 0;
      opt.exact_sdepth_limit = config.exact_sdepth_limit;
      try {
        records[i] = verify_conjecture_case(instances[i], opt);
        records[i]->index = i;
      } catch (const Error& e) {
        errors[i] = std::string(e.what()) + " for instance:\n" + format_instance(instances[i]);
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (!records[a] || !records[b]) return records[a].has_value() > records[b].has_value();
    return records[a]->form < records[b]->form;
  });

  CampaignSummary sum;
  std::vector<const VerdictRecord*> ordered;
  for (std::size_t i : order) {
    if (!records[i]) {
      ++sum.errors;
      sum.error_messages.push_back(errors[i]);
      continue;
    }
    const VerdictRecord& r = *records[i];
    ordered.push_back(&r);
    ++sum.total;
    switch (r.status) {
      case ConjectureStatus::PremiseFalse: ++sum.premise_false; break;
      case ConjectureStatus::Verified: ++sum.verified; break;
      case ConjectureStatus::Violation:
        if (r.recheck && r.recheck->confirmed) {
          ++sum.violations;
          sum.violation_records.push_back(r);
        } else {
          ++sum.refuted_violations;
        }
        break;
    }
    sum.depth_below_d += !r.depth_ge_d;
    sum.sdepth_below_d += !r.sdepth_ge_d;
    if (r.shen_bound) {
      ++sum.shen_checked;
      sum.shen_failed += !*r.shen_bound;
    }
    if (r.pb) {
      ++sum.pb_attempted;
      sum.pb_built += r.pb->built;
      sum.pb_invariant_failures += !r.pb->invariants_ok;
    }
    if (r.lemma_dep) {
      sum.lemma_dep_found += r.lemma_dep->found;
      sum.lemma_dep_failures += !r.lemma_dep->holds;
      sum.lemma_dep_r5_counterexamples += r.lemma_dep->r5_counterexample;
    }
    if (r.depth_rationals) {
      ++sum.cross_checked;
      sum.field_disagreements += r.field_disagreement;
    }
    sum.max_runtime_ms = std::max(sum.max_runtime_ms, r.runtime_ms);
    if (on_record) on_record(r);
  }
  sum.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (write_files) write_campaign_files(config, ordered, sum);
  return sum;
}

}  // namespace stanley
