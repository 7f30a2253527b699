#include "isograss/verify.hpp"

#include "isograss/errors.hpp"
#include "isograss/invariants.hpp"
#include "isograss/oracle.hpp"
#include "isograss/witness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace isograss {

namespace {

constexpr std::size_t kMaxExamples = 5;

struct Unit {
  CaseTag c;
  GroupParams g;
  std::size_t index;  // position in the global work list, used for seeding
};

class Recorder {
public:
  explicit Recorder(const std::vector<std::string>& names) {
    for (const auto& n : names) results_[n].name = n;
  }
  bool enabled(const std::string& suite) const { return results_.count(suite) != 0; }
  void check(const std::string& suite, bool ok, const std::string& what) {
    SuiteResult& r = results_.at(suite);
    ++r.checks;
    if (!ok) fail(r, what);
  }
  void error(const std::string& suite, const std::string& what) {
    SuiteResult& r = results_.at(suite);
    ++r.checks;
    fail(r, what);
  }
  std::map<std::string, SuiteResult>& results() { return results_; }

private:
  static void fail(SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.examples.size() < kMaxExamples) r.examples.push_back(what);
  }
  std::map<std::string, SuiteResult> results_;
};

std::string label(const Unit& u) {
  return std::string(to_string(u.c)) + ' ' + params_to_string(u.c, u.g);
}

std::string label(const Unit& u, const OrbitParams& t) { return label(u) + ' ' + t.to_string(); }

// Run `body`, turning any library error into a recorded failure.
template <class F>
void guarded(Recorder& rec, const std::string& suite, const std::string& where, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rec.error(suite, where + ": " + e.what());
  }
}

int total_cosets(CaseTag c) {
  switch (c) {
    case CaseTag::RealOrthogonal: return 4;
    case CaseTag::ComplexOrthogonal: return 2;
    default: return 1;
  }
}

void run_unit(const Unit& u, const VerifyConfig& cfg, Recorder& rec) {
  const SpacePtr space = standard_space(u.c, u.g);
  const int rmax = max_isotropic_dim(u.c, u.g);
  const std::uint64_t unit_seed = derive_seed(cfg.seed, u.index);

  // Random group elements shared by every representative of this space:
  // Cayley samples on both factors, cycled through all component
  // representatives of H.
  std::vector<IsometryElement> samples;
  if (rec.enabled("invariance")) {
    guarded(rec, "invariance", label(u), [&] {
      const auto reps = component_representatives(*space);
      for (int i = 0; i < cfg.trials; ++i) {
        IsometryElement h =
            cayley_element(*space, derive_seed(unit_seed, 1000 + static_cast<std::uint64_t>(i)),
                           cfg.magnitude);
        samples.push_back(h.compose(reps[static_cast<std::size_t>(i) % reps.size()].element));
      }
    });
  }

  const bool need_oracle = rec.enabled("formula-vs-oracle") || rec.enabled("open-orbit-argmax") ||
                           rec.enabled("equal-dimension");
  std::vector<OrbitParams> all_tuples;

  for (int r = 1; r <= rmax; ++r) {
    const std::vector<OrbitParams> tuples = valid_tuples(u.c, u.g, r);
    all_tuples.insert(all_tuples.end(), tuples.begin(), tuples.end());
    std::map<OrbitParams, std::int64_t> oracle_dim;

    for (const OrbitParams& t : tuples) {
      const std::string where = label(u, t);
      std::optional<Subspace> rep;
      try {
        rep = canonical_rep(space, t);
      } catch (const std::exception& e) {
        for (const auto& [name, res] : rec.results()) {
          (void)res;
          if (name != "symplectic-parity" && name != "witness") rec.error(name, where + ": " + e.what());
        }
        continue;
      }
      const Subspace& s = *rep;

      if (rec.enabled("round-trip")) {
        guarded(rec, "round-trip", where, [&] {
          const OrbitParams got = classify(s);
          rec.check("round-trip", got == t, where + ": classify gave " + got.to_string());
          const OrbitParams slow = classify_by_definition(s);
          rec.check("round-trip", slow == t,
                    where + ": classify_by_definition gave " + slow.to_string());
        });
      }

      if (rec.enabled("invariance")) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
          guarded(rec, "invariance", where, [&] {
            const OrbitParams got = classify(apply(samples[i], s));
            rec.check("invariance", got == t,
                      where + ": sample " + std::to_string(i) + " gave " + got.to_string());
          });
        }
      }

      if (need_oracle) {
        const char* owner = rec.enabled("formula-vs-oracle")   ? "formula-vs-oracle"
                            : rec.enabled("open-orbit-argmax") ? "open-orbit-argmax"
                                                               : "equal-dimension";
        guarded(rec, owner, where, [&] { oracle_dim[t] = tangent_orbit_dim(s); });
      }

      if (rec.enabled("formula-vs-oracle") && oracle_dim.count(t)) {
        guarded(rec, "formula-vs-oracle", where, [&] {
          const std::int64_t predicted = dim_group(u.c, u.g) - cfg.formula(u.c, u.g, t);
          rec.check("formula-vs-oracle", predicted == oracle_dim[t],
                    where + ": formula orbit dim " + std::to_string(predicted) + ", oracle " +
                        std::to_string(oracle_dim[t]));
        });
      }

      if (rec.enabled("components")) {
        guarded(rec, "components", where, [&] {
          const std::vector<int> found = stabilizer_sign_cosets(s);
          const std::vector<int> predicted = predicted_stabilizer_cosets(u.c, u.g, t);
          rec.check("components", found == predicted,
                    where + ": sign stabilizer meets " + std::to_string(found.size()) +
                        " cosets, predicted " + std::to_string(predicted.size()));
          const int n = component_count(u.c, u.g, t);
          rec.check("components", n * static_cast<int>(found.size()) == total_cosets(u.c),
                    where + ": N = " + std::to_string(n) + " but the sign stabilizer meets " +
                        std::to_string(found.size()) + " of " +
                        std::to_string(total_cosets(u.c)) + " cosets");
        });
      }
    }

    const std::string rwhere = label(u) + " r=" + std::to_string(r);
    if (rec.enabled("open-orbit-argmax")) {
      guarded(rec, "open-orbit-argmax", rwhere, [&] {
        const std::vector<OrbitParams> closed = open_orbits_closed_form(u.c, u.g, r);
        std::int64_t best = -1;
        for (const auto& [t, d] : oracle_dim) best = std::max(best, d);
        std::vector<OrbitParams> argmax;
        for (const auto& [t, d] : oracle_dim)
          if (d == best) argmax.push_back(t);
        std::sort(argmax.begin(), argmax.end());
        rec.check("open-orbit-argmax", closed == argmax,
                  rwhere + ": closed form lists " + std::to_string(closed.size()) +
                      " open orbits, the oracle argmax " + std::to_string(argmax.size()));
        // The library's own cross-checked routine must agree as well.
        rec.check("open-orbit-argmax", open_orbits(u.c, u.g, r) == closed,
                  rwhere + ": open_orbits disagrees with its closed form");
      });
    }

    if (rec.enabled("equal-dimension") && is_signed_case(u.c)) {
      guarded(rec, "equal-dimension", rwhere, [&] {
        std::map<std::vector<int>, std::set<std::int64_t>> groups;
        for (const auto& [t, d] : oracle_dim) groups[{t.r_u, t.r_w, t.a, t.k()}].insert(d);
        for (const auto& [key, dims] : groups)
          rec.check("equal-dimension", dims.size() == 1,
                    rwhere + ": tuples with (r_U,r_W,a,a_U+a_W) = (" + std::to_string(key[0]) +
                        ',' + std::to_string(key[1]) + ',' + std::to_string(key[2]) + ',' +
                        std::to_string(key[3]) + ") have different orbit dimensions");
      });
    }

    if (rec.enabled("symplectic-parity") && u.c == CaseTag::Symplectic) {
      guarded(rec, "symplectic-parity", rwhere, [&] {
        int max_b = -1;
        for (const auto& t : tuples) max_b = std::max(max_b, t.b);
        for (const auto& t : open_orbits(u.c, u.g, r))
          rec.check("symplectic-parity", t.b == max_b,
                    rwhere + ": open orbit " + t.to_string() + " does not have maximal b");
        for (int i = 0; i < cfg.trials; ++i) {
          const std::uint64_t seed =
              derive_seed(unit_seed, 100000 + 1000 * static_cast<std::uint64_t>(r) +
                                         static_cast<std::uint64_t>(i));
          try {
            const OrbitParams t = classify(random_symplectic_isotropic(space, r, seed));
            rec.check("symplectic-parity", t.b % 2 == 0,
                      rwhere + ": odd b in " + t.to_string());
          } catch (const std::exception& e) {
            rec.error("symplectic-parity", rwhere + ": " + e.what());
          }
        }
      });
    }
  }

  if (rec.enabled("witness") && !all_tuples.empty()) {
    Rng rng(derive_seed(unit_seed, 7));
    for (int i = 0; i < cfg.trials; ++i) {
      const OrbitParams& t = all_tuples[rng.next() % all_tuples.size()];
      const std::string where = label(u, t) + " pair " + std::to_string(i);
      guarded(rec, "witness", where, [&] {
        const Subspace s = random_in_orbit(space, t, rng.next(), cfg.magnitude);
        const Subspace s2 = random_in_orbit(space, t, rng.next(), cfg.magnitude);
        const IsometryElement g = orbit_witness(s, s2);
        rec.check("witness", is_in_group(*space, g) && apply(g, s) == s2,
                  where + ": witness does not map S to S2");
      });
    }
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& s : suites) {
    os << "suite " << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " (checks=" << s.checks
       << ", failures=" << s.failures << ")\n";
    for (const auto& e : s.examples) os << "  failure: " << e << '\n';
  }
  os << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::vector<GroupParams> parameter_sets(CaseTag c, int max_ambient) {
  std::vector<GroupParams> out;
  if (is_signed_case(c)) {
    for (int p = 2; p <= max_ambient; ++p)
      for (int q = 2; p + q <= max_ambient; ++q)
        for (int p1 = 1; p1 < p; ++p1)
          for (int q1 = 1; q1 < q; ++q1) out.push_back(GroupParams::signed_params(p, q, p1, q1));
  } else if (c == CaseTag::ComplexOrthogonal) {
    for (int n = 2; n <= max_ambient; ++n)
      for (int m = 1; m < n; ++m) out.push_back(GroupParams::nm(n, m));
  } else {
    for (int n = 2; 2 * n <= max_ambient; ++n)
      for (int m = 1; m < n; ++m) out.push_back(GroupParams::nm(n, m));
  }
  return out;
}

VerifyReport run_verification(const VerifyConfig& cfg) {
  for (const auto& s : cfg.suites)
    if (std::find(all_suite_names().begin(), all_suite_names().end(), s) == all_suite_names().end())
      throw InvalidArgument("unknown suite '" + s + "'");
  if (cfg.trials < 0) throw InvalidArgument("trials must be nonnegative");

  std::vector<Unit> units;
  for (CaseTag c : cfg.cases) {
    const int bound = c == CaseTag::Symplectic ? cfg.max_symplectic_ambient : cfg.max_ambient;
    for (const auto& g : parameter_sets(c, bound)) units.push_back({c, g, units.size()});
  }

  std::vector<Recorder> partial(units.size(), Recorder(cfg.suites));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) run_unit(units[i], cfg, partial[i]);
  };
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerifyReport report;
  for (const auto& name : all_suite_names()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end()) continue;
    SuiteResult merged;
    merged.name = name;
    for (auto& rec : partial) {
      const SuiteResult& r = rec.results().at(name);
      merged.checks += r.checks;
      merged.failures += r.failures;
      for (const auto& e : r.examples)
        if (merged.examples.size() < kMaxExamples) merged.examples.push_back(e);
    }
    report.suites.push_back(std::move(merged));
  }
  return report;
}

}  // namespace isograss
