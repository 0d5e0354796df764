// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "isq/grid.hpp"
#include "isq/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "weighted-resolvent identity", {"weighted-resolvent"}},
      {2, "eigenvalue counting", {"eigenvalue-count"}},
      {3, "toy spiral geometry", {"spiral"}},
      {4, "bound-state oracle agreement", {"bound-states"}},
      {5, "H_0^nu ground state", {"log-ground-state"}},
      {6, "Hankel involution and factorization", {"hankel-involution", "hankel-factorization"}},
      {7, "resolvent representations", {"resolvent-representations"}},
      {8, "similarity of spectra", {"similarity"}},
      {9, "Moeller operators", {"moeller"}},
      {10, "phase diagram", {"phase"}},
      {11, "holomorphy probe", {"holomorphy"}},
  };
  const isq::RunConfig cfg;
  int failed = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    std::string detail;
    for (const auto& s : c.suites) {
      const auto r = isq::verify::run_suite(s, cfg);
      pass = pass && r.passed();
      for (const auto& ch : r.checks) {
        std::printf("    %s %s/%s achieved %s target %s\n", ch.pass ? "ok  " : "FAIL", s.c_str(), ch.name.c_str(),
                    isq::format_double(ch.achieved).c_str(), isq::format_double(ch.target).c_str());
      }
    }
    std::printf("criterion %d: %s %s\n", c.id, pass ? "PASS" : "FAIL", c.title);
    std::fflush(stdout);
    failed += !pass;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
