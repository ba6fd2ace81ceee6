#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sapp/dense.hpp"

namespace sapp {

struct ResidualEntry {
    std::vector<std::size_t> index;
    std::string value;
    friend bool operator==(const ResidualEntry&, const ResidualEntry&) = default;
};

// Tuples and residual indices are 0-based here; files shift them to 1-based.
struct Violation {
    std::string equation;
    std::vector<std::size_t> tuple;
    std::vector<ResidualEntry> residual;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
    std::string suite;
    bool pass = true;
    std::optional<Violation> first;
    std::vector<std::string> failing;
    std::vector<std::string> notes;

    CheckReport() = default;
    explicit CheckReport(std::string id) : suite(std::move(id)) {}

    explicit operator bool() const { return pass; }

    void fail(const std::string& equation, std::vector<std::size_t> tuple, std::vector<ResidualEntry> residual) {
        pass = false;
        if (!first) first = Violation{equation, std::move(tuple), std::move(residual)};
        if (std::find(failing.begin(), failing.end(), equation) == failing.end()) failing.push_back(equation);
    }

    bool failed(const std::string& equation) const {
        return std::find(failing.begin(), failing.end(), equation) != failing.end();
    }

    // Fold a sub-report in; order of absorption decides the first violation.
    void absorb(const CheckReport& sub) {
        if (sub.pass) return;
        pass = false;
        if (!first) first = sub.first;
        for (const auto& f : sub.failing)
            if (!failed(f)) failing.push_back(f);
        for (const auto& n : sub.notes) notes.push_back(n);
    }

    void note(std::string s) { notes.push_back(std::move(s)); }
};

template <class K>
std::vector<ResidualEntry> residual_of(const Vec<K>& v) {
    std::vector<ResidualEntry> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({{i}, v[i].str()});
    return out;
}

template <class K>
std::vector<ResidualEntry> residual_of(const Matrix<K>& m) {
    std::vector<ResidualEntry> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back({{i, j}, m(i, j).str()});
    return out;
}

template <class K>
std::vector<ResidualEntry> residual_of(const Tensor3<K>& t) {
    std::vector<ResidualEntry> out;
    std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!t(i, j, k).is_zero()) out.push_back({{i, j, k}, t(i, j, k).str()});
    return out;
}

// Record a failure when a residual is nonzero; returns true on a zero residual.
template <class T>
bool expect_zero(CheckReport& rep, const std::string& equation, std::vector<std::size_t> tuple, const T& residual) {
    if (residual.is_zero()) return true;
    rep.fail(equation, std::move(tuple), residual_of(residual));
    return false;
}

template <class K>
bool expect_zero(CheckReport& rep, const std::string& equation, std::vector<std::size_t> tuple, const Vec<K>& residual) {
    if (sapp::is_zero(residual)) return true;
    rep.fail(equation, std::move(tuple), residual_of(residual));
    return false;
}

}  // namespace sapp
