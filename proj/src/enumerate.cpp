#include "spheromo/colored.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace spheromo {

const char* level_name(Level l) {
  switch (l) {
    case Level::q_admissible: return "q-admissible";
    case Level::admissible: return "admissible";
    case Level::smooth: return "smooth";
    case Level::q_reflexive: return "q-reflexive";
    case Level::reflexive: return "reflexive";
    case Level::kaehler: return "kaehler";
  }
  return "?";
}

std::optional<Level> parse_level(const std::string& s) {
  for (Level l : {Level::q_admissible, Level::admissible, Level::smooth, Level::q_reflexive, Level::reflexive,
                  Level::kaehler})
    if (s == level_name(l)) return l;
  return std::nullopt;
}

Verdict check_level(const Instance& in, const std::vector<SphericalRoot>& sigma, Level level,
                    const SocleRegistry* registry) {
  auto need_registry = [&]() -> const SocleRegistry& {
    if (!registry) throw DomainError(std::string("level ") + level_name(level) + " needs a socle registry");
    return *registry;
  };
  switch (level) {
    case Level::q_admissible: return q_admissible(in, sigma);
    case Level::admissible: return admissible(in, sigma);
    case Level::smooth: return smooth_check(in, sigma, need_registry(), SmoothLevel::algebraic);
    case Level::q_reflexive: return reflexive_check(in, sigma, ReflexiveLevel::q_reflexive);
    case Level::reflexive: return reflexive_check(in, sigma, ReflexiveLevel::reflexive);
    case Level::kaehler: return smooth_check(in, sigma, need_registry(), SmoothLevel::real);
  }
  return Verdict::ok();
}

bool sigma_less(const std::vector<SphericalRoot>& a, const std::vector<SphericalRoot>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), spherical_root_less);
}

namespace {

// Sets of pairwise Q-admissible roots; by the pairwise characterization these
// are exactly the Q-admissible subsets of the compatible roots.
void cliques(const std::vector<std::vector<bool>>& ok, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < ok.size(); ++i) {
    bool fits = true;
    for (auto j : cur) fits = fits && ok[i][j];
    if (!fits) continue;
    cur.push_back(i);
    cliques(ok, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Enumeration enumerate_sigma(const Instance& in, Level level, const SocleRegistry* registry, unsigned jobs) {
  Enumeration e;
  for (const auto& s : in.catalog()) {
    Verdict v = q_compatible(in, s);
    if (v.passed())
      e.compatible.push_back(s);
    else if (v.status == Status::unsupported)
      e.unsupported.emplace_back(s, v);
  }
  std::size_t n = e.compatible.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      ok[i][j] = ok[j][i] = q_admissible(in, {e.compatible[i], e.compatible[j]}).passed();
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> cur;
  cliques(ok, 0, cur, sets);

  std::vector<Candidate> results(sets.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < sets.size(); k = next++) {
      try {
        for (auto i : sets[k]) results[k].sigma.push_back(e.compatible[i]);
        results[k].verdict = check_level(in, results[k].sigma, level, registry);
      } catch (const UnsupportedError& ex) {
        results[k].verdict = Verdict::unsupported("data", ex.what());
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(sets.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& c : results) {
    if (c.verdict.status == Status::pass)
      e.passing.push_back(std::move(c));
    else if (c.verdict.status == Status::unsupported)
      e.undecided.push_back(std::move(c));
  }
  auto by_sigma = [](const Candidate& a, const Candidate& b) { return sigma_less(a.sigma, b.sigma); };
  std::sort(e.passing.begin(), e.passing.end(), by_sigma);
  std::sort(e.undecided.begin(), e.undecided.end(), by_sigma);
  return e;
}

}  // namespace spheromo
