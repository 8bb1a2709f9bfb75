#include "ofm/brute_force.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ofm {

bool SearchSpec::accepts(const DegreeProfile& p) const {
  if (exact_profile) return p == *exact_profile;
  if (allowed_degrees.empty()) return true;
  for (const auto& [deg, count] : p) {
    (void)count;
    if (!std::binary_search(allowed_degrees.begin(), allowed_degrees.end(), deg)) return false;
  }
  return true;
}

SearchSpec SearchSpec::four_regular(std::size_t genus, unsigned threads) {
  if (genus < 1) throw std::invalid_argument("four_regular: genus must be >= 1");
  SearchSpec s;
  s.dart_count = 8 * genus - 4;
  s.allowed_degrees = {4};
  s.exact_profile = DegreeProfile{{4, 2 * genus - 1}};
  s.threads = threads;
  return s;
}

SearchSpec SearchSpec::one_four(std::size_t g, std::size_t k, unsigned threads) {
  const long n = 3 * static_cast<long>(k) + 1 - 2 * static_cast<long>(g);
  const long leaves = 2 * static_cast<long>(k) + 2 - 4 * static_cast<long>(g);
  if (n < 1 || leaves < 0)
    throw std::invalid_argument("one_four: empty family (no such maps)");
  SearchSpec s;
  s.dart_count = 2 * static_cast<std::size_t>(n);
  s.allowed_degrees = {1, 4};
  DegreeProfile p;
  if (leaves > 0) p[1] = static_cast<std::size_t>(leaves);
  if (k > 0) p[4] = k;
  s.exact_profile = std::move(p);
  s.threads = threads;
  return s;
}

SearchSpec SearchSpec::unrestricted(std::size_t dart_count, unsigned threads) {
  SearchSpec s;
  s.dart_count = dart_count;
  s.threads = threads;
  return s;
}

namespace {

// Depth-first enumeration of fixed-point-free involutions with incremental
// vertex-degree pruning. Pairing dart a with b fixes two values of the
// vertex permutation: sigma(a-1) = b and sigma(b-1) = a (indices mod 2n).
// The known part of sigma is a disjoint union of open paths and closed
// cycles; a closed cycle is a finished vertex. A branch dies as soon as an
// open path outgrows the largest permitted degree, a cycle closes with a
// forbidden length, or a degree count overshoots the required profile.
class Engine {
 public:
  struct EdgeUndo {
    signed char kind = 0;  // 0 none, 1 closed a cycle, 2 merged two paths
    int s = 0, e = 0, u = 0, v = 0;
    int old_len = 0;
  };
  using PairUndo = std::array<EdgeUndo, 2>;

  explicit Engine(const SearchSpec& spec) : n2_(static_cast<int>(spec.dart_count)) {
    if (spec.dart_count == 0 || spec.dart_count % 2 != 0)
      throw std::invalid_argument("search: dart count must be even and positive");
    allowed_.assign(n2_ + 1, spec.allowed_degrees.empty() ? 1 : 0);
    for (std::size_t d : spec.allowed_degrees)
      if (d >= 1 && d <= static_cast<std::size_t>(n2_)) allowed_[d] = 1;
    max_len_ = 0;
    for (int l = 1; l <= n2_; ++l)
      if (allowed_[l]) max_len_ = l;
    cap_.assign(n2_ + 1, -1);
    target_.assign(n2_ + 1, 0);
    if (spec.exact_profile) {
      exact_ = true;
      for (const auto& [deg, count] : *spec.exact_profile) {
        if (deg < 1 || deg > static_cast<std::size_t>(n2_))
          throw std::invalid_argument("search: profile degree out of range");
        target_[deg] = static_cast<long>(count);
      }
      cap_ = target_;
    }
    partner_.assign(n2_, -1);
    pstart_.resize(n2_);
    pend_.resize(n2_);
    plen_.assign(n2_, 1);
    for (int d = 0; d < n2_; ++d) pstart_[d] = pend_[d] = d;
    closed_.assign(n2_ + 1, 0);
  }

  // Pairs darts a and b (both currently unpaired); returns false and leaves
  // the state untouched if the branch cannot lead to an accepted leaf.
  bool pair(int a, int b, PairUndo& undo) {
    partner_[a] = b;
    partner_[b] = a;
    undo[0].kind = undo[1].kind = 0;
    if (add_edge(prev(a), b, undo[0]) && add_edge(prev(b), a, undo[1])) return true;
    undo_edge(undo[1]);
    undo_edge(undo[0]);
    partner_[a] = partner_[b] = -1;
    return false;
  }

  void unpair(int a, int b, const PairUndo& undo) {
    undo_edge(undo[1]);
    undo_edge(undo[0]);
    partner_[a] = partner_[b] = -1;
  }

  // Exhausts all completions; the smallest unpaired dart is matched with
  // every larger unpaired dart, so leaves arrive in lexicographic order of
  // the involution (as a sequence of partner choices for darts 0, 1, ...).
  template <class Leaf>
  void run(Leaf&& leaf, int lo = 0) {
    while (lo < n2_ && partner_[lo] >= 0) ++lo;
    if (lo == n2_) {
      if (!exact_ || closed_ == target_) leaf(partner_);
      return;
    }
    PairUndo undo;
    for (int b = lo + 1; b < n2_; ++b) {
      if (partner_[b] >= 0) continue;
      if (pair(lo, b, undo)) {
        run(leaf, lo + 1);
        unpair(lo, b, undo);
      }
    }
  }

  int dart_count() const { return n2_; }

 private:
  int prev(int d) const { return d == 0 ? n2_ - 1 : d - 1; }

  // Records sigma(u) = v. The path ending at u and the path starting at v
  // are concatenated; if they are the same path, a vertex cycle closes.
  bool add_edge(int u, int v, EdgeUndo& un) {
    const int s = pstart_[u];
    if (s == v) {
      const int len = plen_[s];
      if (!allowed_[len]) return false;
      if (cap_[len] >= 0 && closed_[len] >= cap_[len]) return false;
      ++closed_[len];
      un.kind = 1;
      un.old_len = len;
      return true;
    }
    const int e = pend_[v];
    const int len = plen_[s] + plen_[v];
    if (len > max_len_) return false;
    un.kind = 2;
    un.s = s;
    un.e = e;
    un.u = u;
    un.v = v;
    un.old_len = plen_[s];
    pend_[s] = e;
    pstart_[e] = s;
    plen_[s] = len;
    return true;
  }

  void undo_edge(const EdgeUndo& un) {
    if (un.kind == 1) {
      --closed_[un.old_len];
    } else if (un.kind == 2) {
      pend_[un.s] = un.u;
      pstart_[un.e] = un.v;
      plen_[un.s] = un.old_len;
    }
  }

  int n2_;
  int max_len_ = 0;
  bool exact_ = false;
  std::vector<char> allowed_;
  std::vector<long> cap_, target_, closed_;
  std::vector<int> partner_, pstart_, pend_, plen_;
};

// Runs one engine per top-level branch (the partner of dart 0) across a
// thread pool. Each worker owns a state created by `make`, `work` processes
// one branch into it, and `merge` folds it into the caller's result under a
// lock. Branches are independent, so the total does not depend on
// scheduling order. spec.threads == 0 means "use all hardware threads".
template <class MakeState, class Work, class Merge>
void parallel_branches(const SearchSpec& spec, MakeState make, Work work, Merge merge) {
  const int n2 = static_cast<int>(spec.dart_count);
  unsigned threads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n2 - 1));
  if (threads <= 1 || n2 < 8) {
    Engine engine(spec);
    Engine::PairUndo undo;
    auto state = make();
    for (int b = 1; b < n2; ++b)
      if (engine.pair(0, b, undo)) {
        work(engine, state);
        engine.unpair(0, b, undo);
      }
    merge(state);
    return;
  }
  std::atomic<int> next{1};
  std::mutex merge_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      Engine engine(spec);
      Engine::PairUndo undo;
      auto state = make();
      for (int b = next.fetch_add(1); b < n2; b = next.fetch_add(1)) {
        if (engine.pair(0, b, undo)) {
          work(engine, state);
          engine.unpair(0, b, undo);
        }
      }
      std::scoped_lock lk(merge_mu);
      merge(state);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

BigInt count_rooted(const SearchSpec& spec) {
  std::uint64_t total = 0;
  parallel_branches(
      spec, [] { return std::uint64_t{0}; },
      [](Engine& engine, std::uint64_t& count) {
        engine.run([&count](const std::vector<int>&) { ++count; }, 1);
      },
      [&total](std::uint64_t count) { total += count; });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt count_rooted_14(std::size_t g, std::size_t k, unsigned threads) {
  const long n = 3 * static_cast<long>(k) + 1 - 2 * static_cast<long>(g);
  const long leaves = 2 * static_cast<long>(k) + 2 - 4 * static_cast<long>(g);
  if (n < 1 || leaves < 0) return BigInt(0);
  return count_rooted(SearchSpec::one_four(g, k, threads));
}

BigInt count_unrooted_burnside(const SearchSpec& spec) {
  const int n2 = static_cast<int>(spec.dart_count);
  std::vector<std::uint64_t> fixed(static_cast<std::size_t>(n2), 0);
  parallel_branches(
      spec, [n2] { return std::vector<std::uint64_t>(static_cast<std::size_t>(n2), 0); },
      [n2](Engine& engine, std::vector<std::uint64_t>& fix) {
        engine.run(
            [n2, &fix](const std::vector<int>& alpha) {
              // Rotation by j fixes the map iff relabelling every dart d to
              // d + j (mod 2n) leaves alpha unchanged.
              for (int j = 0; j < n2; ++j) {
                bool ok = true;
                for (int d = 0; d < n2; ++d) {
                  const int pre = d - j < 0 ? d - j + n2 : d - j;
                  int img = alpha[pre] + j;
                  if (img >= n2) img -= n2;
                  if (img != alpha[d]) {
                    ok = false;
                    break;
                  }
                }
                if (ok) ++fix[j];
              }
            },
            1);
      },
      [n2, &fixed](const std::vector<std::uint64_t>& fix) {
        for (int j = 0; j < n2; ++j) fixed[j] += fix[j];
      });
  BigInt sum(0);
  for (int j = 0; j < n2; ++j) sum += BigInt(static_cast<unsigned long>(fixed[j]));
  return exact_div(sum, BigInt(n2));
}

void enumerate_rooted(const SearchSpec& spec,
                      const std::function<void(const RootedMap&)>& visit) {
  Engine engine(spec);
  engine.run([&visit](const std::vector<int>& partner) {
    std::vector<Dart> alpha(partner.size());
    for (std::size_t d = 0; d < partner.size(); ++d)
      alpha[d] = static_cast<Dart>(partner[d]);
    visit(RootedMap::from_alpha(std::move(alpha)));
  });
}

}  // namespace ofm
