// Runs the verification suite and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>

#include "radial/verify.hpp"

int main() {
    auto start = std::chrono::steady_clock::now();
    bool ok = radial::run_acceptance([](const std::string& line) { std::cout << line << std::endl; });
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "all criteria passed" : "FAILURES above") << " (" << elapsed << " s)\n";
    return ok ? 0 : 1;
}
