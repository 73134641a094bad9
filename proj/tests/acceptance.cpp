#include <iostream>

#include "hilbdiag/verify.hpp"

int main() {
  hilbdiag::VerifyConfig cfg;
  int failed = 0;
  for (auto check : hilbdiag::all_checks()) {
    auto r = check(cfg);
    std::cout << hilbdiag::format_result(r) << std::endl;
    failed += !r.pass();
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << (9 - failed) << " of 9 criteria" << std::endl;
  return failed ? 1 : 0;
}
