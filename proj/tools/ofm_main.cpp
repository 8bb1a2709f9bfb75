// ofm: counts of 4-regular one-face maps by genus, exact arithmetic only.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 input-file error.
#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofm/brute_force.hpp"
#include "ofm/closed_form.hpp"
#include "ofm/map_io.hpp"
#include "ofm/orbifold.hpp"
#include "ofm/surgery.hpp"
#include "ofm/table.hpp"

namespace {

using namespace ofm;

int require_positive_genus(unsigned long g) {
  if (g >= 1) return 0;
  std::cerr << "genus must be ≥ 1\n";
  return 2;
}

std::string cycle_str(const std::vector<Dart>& cycle) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out << ' ';
    out << cycle[i];
  }
  out << ')';
  return out.str();
}

std::string profile_str(const DegreeProfile& profile) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [deg, count] : profile) {
    if (!first) out << ',';
    first = false;
    out << deg << ':' << count;
  }
  out << '}';
  return out.str();
}

int cmd_map_info(const std::string& path) {
  RootedMap m = [&] {
    try {
      return load_map_file(path);
    } catch (const std::exception& e) {
      std::cerr << "map info: " << e.what() << "\n";
      std::exit(3);
    }
  }();
  std::cout << "darts " << m.dart_count() << "\n";
  std::cout << "edges " << m.edge_count() << "\n";
  std::cout << "vertices " << m.vertex_count() << "\n";
  std::cout << "genus " << m.genus() << "\n";
  std::cout << "four-regular " << (m.is_four_regular() ? "yes" : "no") << "\n";
  std::cout << "degrees " << profile_str(m.degree_profile()) << "\n";
  std::cout << "vertex cycles";
  for (const auto& cycle : m.vertices()) std::cout << ' ' << cycle_str(cycle);
  std::cout << "\n";
  const auto tris = trisections(m);
  std::cout << "trisections";
  if (tris.empty()) std::cout << " none";
  for (Dart t : tris) std::cout << ' ' << t;
  std::cout << "\n";
  std::cout << "intertwined triples";
  bool any = false;
  for (const auto& cycle : m.vertices()) {
    if (cycle.size() < 3) continue;
    std::vector<Dart> darts = cycle;
    std::sort(darts.begin(), darts.end());
    for (std::size_t i = 0; i < darts.size(); ++i)
      for (std::size_t j = i + 1; j < darts.size(); ++j)
        for (std::size_t k = j + 1; k < darts.size(); ++k) {
          Triple t{darts[i], darts[j], darts[k]};
          if (is_intertwined(m, t)) {
            std::cout << " (" << t.a1 << ' ' << t.a2 << ' ' << t.a3 << ')';
            any = true;
          }
        }
  }
  if (!any) std::cout << " none";
  std::cout << "\n";
  return 0;
}

int cmd_signatures(unsigned long g) {
  if (int rc = require_positive_genus(g)) return rc;
  BigRational total(0);
  for (unsigned long order : {1ul, 2ul, 4ul}) {
    for (const auto& sig : signatures_for(g, order)) {
      std::ostringstream indices;
      indices << '[';
      for (std::size_t i = 0; i < sig.indices.size(); ++i) {
        if (i) indices << ',';
        indices << sig.indices[i];
      }
      indices << ']';
      const BigRational share = signature_contribution(sig, g);
      total += share;
      std::cout << "order " << sig.order << " quotient-genus " << sig.quotient_genus
                << " indices " << indices.str() << " epi0 " << epi0(sig) << " contribution "
                << share.get_str() << "\n";
    }
  }
  std::cout << "total " << total.get_str() << "\n";
  if (total != BigRational(eps4_unrooted(g))) {
    std::cerr << "signatures: contributions sum to " << total.get_str()
              << " but the unrooted count is " << eps4_unrooted(g) << "\n";
    return 1;
  }
  return 0;
}

int cmd_oracle(bool unrooted, unsigned long g, unsigned threads) {
  if (int rc = require_positive_genus(g)) return rc;
  if (g > 3) {
    std::cerr << "oracle is an exhaustive search; genus must be between 1 and 3\n";
    return 2;
  }
  auto spec = SearchSpec::four_regular(g, threads);
  std::cerr << "searching involutions on " << spec.dart_count << " darts ("
            << (unrooted ? "orbit count" : "rooted count") << ", threads="
            << threads << ")\n";
  const auto start = std::chrono::steady_clock::now();
  const BigInt result = unrooted ? count_unrooted_burnside(spec) : count_rooted(spec);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "search finished in " << elapsed.count() << "s\n";
  std::cout << result << "\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyState {
  int failures = 0;

  void pass(const std::string& what) { std::cout << "PASS " << what << "\n"; }
  void fail(const std::string& what) {
    std::cout << "FAIL " << what << "\n";
    ++failures;
  }
  void check(bool ok, const std::string& what, const std::string& detail) {
    if (ok)
      pass(what);
    else
      fail(what + ": " + detail);
  }
};

// Product of factorials in the denominator; zero if any argument is negative.
// Local twin of the f2 summand used only by the fault-injection hook below.
BigRational faulty_f2_term(long top, std::initializer_list<long> bottoms) {
  if (top < 0) return BigRational(0);
  for (long b : bottoms)
    if (b < 0) return BigRational(0);
  BigRational r(factorial(static_cast<unsigned long>(top)));
  for (long b : bottoms) r /= BigRational(factorial(static_cast<unsigned long>(b)));
  return r;
}

// Deliberately wrong f2: the inner summation stops one k short. Used by
// `verify --inject-f2-bound-fault` as a negative control proving the
// reconstruction check can actually fail.
BigInt faulty_f2(unsigned long g) {
  const long gl = static_cast<long>(g);
  BigRational sum(0);
  for (long qg = 0; 2 * qg <= gl; ++qg)
    for (long k = std::max(0l, 2 * qg - 1); k <= gl - 2; ++k)
      sum += faulty_f2_term(2 * gl - 2 * qg + k - 1,
                            {qg, 2 * k - 4 * qg + 2, k - qg, 2 * gl - 1 - 2 * k});
  return to_integer(BigRational(4 * g - 2) * sum);
}

int cmd_verify(unsigned long max_genus, bool inject_f2_fault) {
  if (max_genus < 1 || max_genus > 3) {
    std::cerr << "verify: --max-genus must be between 1 and 3 (exhaustive searches beyond "
                 "genus 3 are infeasible)\n";
    return 2;
  }
  VerifyState v;

  for (unsigned long g = 1; g <= max_genus; ++g) {
    const BigInt formula = eps4_rooted(g);
    const BigInt search = count_rooted(SearchSpec::four_regular(g));
    v.check(formula == search,
            "rooted closed form = exhaustive search (genus " + std::to_string(g) + ")",
            "formula " + formula.get_str() + ", search " + search.get_str());
  }

  for (unsigned long g = 1; g <= max_genus; ++g) {
    const BigInt formula = eps4_unrooted(g);
    const BigInt orbits = count_unrooted_burnside(SearchSpec::four_regular(g));
    v.check(formula == orbits,
            "unrooted count = orbit count of the search (genus " + std::to_string(g) + ")",
            "formula " + formula.get_str() + ", orbits " + orbits.get_str());
  }

  {
    bool all = true;
    std::string detail;
    for (unsigned long g = 0; g <= 2 && all; ++g)
      for (unsigned long k = 0; k <= 8; ++k) {
        const long n = 3 * static_cast<long>(k) + 1 - 2 * static_cast<long>(g);
        const long leaves = 2 * static_cast<long>(k) + 2 - 4 * static_cast<long>(g);
        if (n < 1 || leaves < 0 || 2 * n > 14) continue;
        const BigInt formula = eps14(g, k);
        const BigInt search = count_rooted_14(g, k);
        if (formula != search) {
          all = false;
          detail = "at (g=" + std::to_string(g) + ", k=" + std::to_string(k) + ") formula " +
                   formula.get_str() + ", search " + search.get_str();
          break;
        }
      }
    v.check(all, "{1,4}-degree closed form = exhaustive search (all families with <= 14 darts)",
            detail);
  }

  {
    bool all = true;
    std::string detail;
    for (unsigned long g = 1; g <= 30 && all; ++g)
      for (unsigned long k = 0; k <= 2 * g + 8; ++k)
        if (!recurrence_holds14(g, k)) {
          all = false;
          detail = "fails at (g=" + std::to_string(g) + ", k=" + std::to_string(k) + ")";
          break;
        }
    v.check(all, "trisection recurrence on {1,4}-degree counts (genus 1..30)", detail);
  }

  {
    bool all = true;
    std::string detail;
    for (unsigned long g = 1; g <= 30 && all; ++g) {
      const BigInt f2_val = inject_f2_fault ? faulty_f2(g) : f2(g);
      const BigRational rebuilt =
          (BigRational(eps4_rooted(g)) + BigRational(f2_val) + f4(g)) / BigRational(8 * g - 4);
      const BigRational direct(eps4_unrooted(g));
      if (rebuilt != direct) {
        all = false;
        detail = "at genus " + std::to_string(g) + ": direct " + direct.get_str() +
                 ", (rooted + f2 + f4)/(8g-4) = " + rebuilt.get_str();
      }
    }
    v.check(all, "unrooted reconstruction identity (genus 1..30)", detail);
  }

  {
    bool all = true;
    std::string detail;
    for (unsigned long g = 1; g <= 30 && all; ++g) {
      const BigInt slice = f2_genus_zero_slice(g);
      const BigInt closed = exact_div(3 * binomial(4 * g - 2, 2 * g), BigInt(2 * g + 1));
      if (slice != closed) {
        all = false;
        detail = "at genus " + std::to_string(g) + ": slice " + slice.get_str() + ", binomial " +
                 closed.get_str();
      }
    }
    v.check(all, "quotient-genus-0 slice of f2 = 3/(2g+1) * binom(4g-2, 2g) (genus 1..30)",
            detail);
  }

  {
    bool all = true;
    std::string detail;
    std::size_t maps = 0;
    auto check_map = [&](const RootedMap& m) {
      const std::size_t count = trisections(m).size();
      if (count != 2 * m.genus()) {
        all = false;
        detail = "a genus-" + std::to_string(m.genus()) + " map has " + std::to_string(count) +
                 " trisections, want " + std::to_string(2 * m.genus());
      }
      ++maps;
    };
    for (unsigned long g = 1; g <= std::min<unsigned long>(max_genus, 2); ++g)
      enumerate_rooted(SearchSpec::four_regular(g), check_map);
    for (std::size_t darts = 2; darts <= 8; darts += 2)
      enumerate_rooted(SearchSpec::unrestricted(darts), check_map);
    v.check(all,
            "trisection count = 2 * genus over " + std::to_string(maps) + " enumerated maps",
            detail);
  }

  {
    bool all = true;
    std::string detail;
    std::size_t down_trips = 0, up_trips = 0;
    for (std::size_t darts = 6; darts <= 8 && all; darts += 2) {
      enumerate_rooted(SearchSpec::unrestricted(darts), [&](const RootedMap& m) {
        if (!all) return;
        for (Dart a3 = 2; a3 < m.dart_count() && all; ++a3)
          for (Dart a1 = 0; a1 + 1 < a3 && all; ++a1)
            for (Dart a2 = a1 + 1; a2 < a3 && all; ++a2) {
              Triple t{a1, a2, a3};
              if (m.genus() >= 1) {
                try {
                  const RootedMap down = cut(m, t);
                  const RootedMap back = glue(down, t);
                  ++down_trips;
                  if (down.genus() + 1 != m.genus() || !(back == m)) {
                    all = false;
                    detail = "cut/glue failed on a genus-" + std::to_string(m.genus()) + " map";
                  }
                } catch (const std::invalid_argument&) {
                }
              }
              try {
                const RootedMap up = glue(m, t);
                const RootedMap back = cut(up, t);
                ++up_trips;
                if (up.genus() != m.genus() + 1 || !(back == m)) {
                  all = false;
                  detail = "glue/cut failed on a genus-" + std::to_string(m.genus()) + " map";
                }
              } catch (const std::invalid_argument&) {
              }
            }
      });
    }
    v.check(all,
            "surgery round trips are exact (" + std::to_string(down_trips) + " cut/glue, " +
                std::to_string(up_trips) + " glue/cut)",
            detail);
  }

  if (v.failures > 0) {
    std::cerr << v.failures << " check(s) failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of 4-regular one-face maps on orientable surfaces"};
  app.require_subcommand(1);
  std::function<int()> run;

  unsigned long genus = 0;
  unsigned long k14 = 0;
  unsigned long min_genus = 1, max_genus = 1;
  std::string format = "md";
  unsigned threads = 1;
  std::string map_path;
  bool inject_f2_fault = false;

  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->require_subcommand(1);
  auto* count_rooted_cmd = count->add_subcommand("rooted", "Rooted maps of a genus");
  count_rooted_cmd->add_option("--genus", genus, "Genus (>= 1)")->required();
  count_rooted_cmd->callback([&] {
    run = [&]() -> int {
      if (int rc = require_positive_genus(genus)) return rc;
      std::cout << eps4_rooted(genus) << "\n";
      return 0;
    };
  });
  auto* count_unrooted_cmd = count->add_subcommand("unrooted", "Unrooted maps of a genus");
  count_unrooted_cmd->add_option("--genus", genus, "Genus (>= 1)")->required();
  count_unrooted_cmd->callback([&] {
    run = [&]() -> int {
      if (int rc = require_positive_genus(genus)) return rc;
      std::cout << eps4_unrooted(genus) << "\n";
      return 0;
    };
  });
  auto* count_14_cmd =
      count->add_subcommand("maps14", "Rooted maps with degrees in {1,4} and k 4-valent vertices");
  count_14_cmd->add_option("--genus", genus, "Genus (>= 0)")->required();
  count_14_cmd->add_option("--k", k14, "Number of 4-valent vertices")->required();
  count_14_cmd->callback([&] {
    run = [&]() -> int {
      std::cout << eps14(genus, k14) << "\n";
      return 0;
    };
  });

  auto* table = app.add_subcommand("table", "Rooted and unrooted counts per genus");
  table->add_option("--min-genus", min_genus, "First genus (>= 1)");
  table->add_option("--max-genus", max_genus, "Last genus")->required();
  table->add_option("--format", format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  table->callback([&] {
    run = [&]() -> int {
      if (min_genus < 1) {
        std::cerr << "genus must be ≥ 1\n";
        return 2;
      }
      if (max_genus < min_genus) {
        std::cerr << "table: --max-genus must be >= --min-genus\n";
        return 2;
      }
      const TableFormat fmt = format == "csv"  ? TableFormat::kCsv
                              : format == "json" ? TableFormat::kJson
                                                 : TableFormat::kMarkdown;
      std::cout << render_table(table_rows(min_genus, max_genus), fmt);
      return 0;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive-search counts (independent of formulas)");
  oracle->require_subcommand(1);
  auto* oracle_rooted = oracle->add_subcommand("rooted", "Count rooted maps by search");
  auto* oracle_unrooted = oracle->add_subcommand("unrooted", "Count re-rooting orbits by search");
  for (auto* sub : {oracle_rooted, oracle_unrooted}) {
    sub->add_option("--genus", genus, "Genus (1..3)")->required();
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }
  oracle_rooted->callback([&] { run = [&] { return cmd_oracle(false, genus, threads); }; });
  oracle_unrooted->callback([&] { run = [&] { return cmd_oracle(true, genus, threads); }; });

  auto* signatures = app.add_subcommand("signatures", "Symmetry signatures and their shares");
  signatures->add_option("--genus", genus, "Genus (>= 1)")->required();
  signatures->callback([&] { run = [&] { return cmd_signatures(genus); }; });

  auto* map = app.add_subcommand("map", "Operations on map files");
  map->require_subcommand(1);
  auto* info = map->add_subcommand("info", "Invariants of a map file");
  info->add_option("path", map_path, "JSON map file")->required();
  info->callback([&] { run = [&] { return cmd_map_info(map_path); }; });

  auto* verify = app.add_subcommand("verify", "Cross-check formulas, search and surgery");
  verify->add_option("--max-genus", max_genus, "Largest genus searched exhaustively (1..3)")
      ->required();
  verify->add_flag("--inject-f2-bound-fault", inject_f2_fault)->group("");
  verify->callback([&] { run = [&] { return cmd_verify(max_genus, inject_f2_fault); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
