// Runs the theorem suite over every canonical tournament up to n_max and
// prints the report; a second run with a deliberately wrong dom solver shows
// the harness catching it.

#include "tourlab/tourlab.hpp"

#include <cstdio>
#include <iostream>
#include <thread>

using namespace tourlab;

int main(int argc, char** argv) {
    ScanOptions o;
    o.n_max = argc > 1 ? std::atoi(argv[1]) : 5;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    const SearchReport ok = scan_theorem_suite(o);
    std::cout << report_text(ok) << '\n';

    TheoremSuiteHooks broken;
    broken.dom = [](const Tournament& t) { return dom(t) + 1; };
    const SearchReport caught = scan_theorem_suite(o, broken);
    std::cout << "with dom off by one: " << caught.outcome << ' ' << (caught.witness ? caught.witness->dump() : "") << '\n';
    std::cout << "witness reproduces with the real solver: " << (revalidate(caught) ? "yes" : "no") << '\n';
    return ok.found() ? 1 : 0;
}
