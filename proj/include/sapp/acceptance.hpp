#pragma once

#include <string>
#include <vector>

#include "sapp/io.hpp"

namespace sapp::acceptance {

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = true;
    double seconds = 0;
    std::size_t instances = 0;
    std::vector<std::string> details;
    std::vector<std::string> findings;  // flagged, never fatal
    std::vector<CheckReport> failures;

    Criterion() = default;
    Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

    void require(bool ok, const std::string& what);
    void require(const CheckReport& rep, const std::string& what);
    void detail(std::string s) { details.push_back(std::move(s)); }
};

Criterion example_3_25();
Criterion example_6_29();
Criterion equivalence_battery();
Criterion constructive_implications();
Criterion round_trips();
Criterion negative_controls();

// Instance-level checks of the two squares relating the commutative and SAPP sides.
Criterion zinbiel_square();
Criterion rota_baxter_square();

struct Run {
    std::vector<Criterion> criteria;
    std::vector<Criterion> diagrams;
    bool pass() const;
};

Run run_all();

// Byte-stable when `timings` is false.
io::ojson run_json(const Run& run, bool timings);
std::string summary_line(const Criterion& c);

}  // namespace sapp::acceptance
