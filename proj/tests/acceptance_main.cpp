// Acceptance suite: one pass/fail line per criterion. Exit nonzero on any
// failure. --p5-only runs just the long p = 5 stretch case.
#include <chrono>
#include <cstring>
#include <iostream>

#include "knot/verify.hpp"

int main(int argc, char** argv) {
  bool p5_only = false;
  bool with_p5 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--p5-only") == 0) p5_only = true;
    if (std::strcmp(argv[i], "--with-p5") == 0) with_p5 = true;
  }
  static const char* kNames[] = {
      "",
      "criterion 1: p=3 star classification, seven groups give Z/3",
      "criterion 2: p=3 p-group dichotomy",
      "criterion 3: decomposition-set dependence",
      "criterion 4: non-SL2 vanishing",
      "criterion 5: drakokhrust agreement at p=3",
      "criterion 6: S^2 character orders",
      "criterion 7: oracle suites",
      "criterion 8: p=2 sanity (V4)",
      "criterion 9: adequate decomposition sets give trivial sha",
      "criterion 10: p=5 drakokhrust stretch",
  };
  int first = p5_only ? 10 : 1;
  int last = p5_only || with_p5 ? 10 : 9;
  bool all_pass = true;
  for (int i = first; i <= last; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    try {
      for (const knot::CheckResult& c : knot::run_criterion(i)) {
        if (!c.pass) {
          pass = false;
          detail += "\n    " + c.name + ": expected " + c.expected +
                    ", computed " + c.computed;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("\n    exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (pass ? "PASS" : "FAIL") << "  " << kNames[i] << "  ("
              << ms << " ms)" << detail << "\n";
    all_pass &= pass;
  }
  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES above")
            << "\n";
  return all_pass ? 0 : 1;
}
