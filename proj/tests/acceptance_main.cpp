// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Optional argument: path for the JSON report (without timings).

#include <iostream>

#include "sapp/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace sapp::acceptance;
    Run run = run_all();
    for (const auto& c : run.criteria) {
        std::cout << summary_line(c) << "\n";
        for (const auto& d : c.details) std::cout << "      " << d << "\n";
        for (const auto& f : c.findings) std::cout << "      finding: " << f << "\n";
    }
    for (const auto& d : run.diagrams) {
        std::cout << "diagram " << summary_line(d) << "\n";
        for (const auto& x : d.details) std::cout << "      " << x << "\n";
    }
    std::cout << (run.pass() ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    if (argc > 1) sapp::io::write_file(argv[1], sapp::io::pretty(run_json(run, false)));
    return run.pass() ? 0 : 1;
}
