#pragma once

#include <string>
#include <vector>

#include "sapp/suites.hpp"

namespace sapp {

// "ID" or "ID:arg,arg,...". Missing arguments take the defaults below.
//   AVERAGING:m,P                 (dot, P)
//   ADMISSIBLE_PAIR:P,Q,m         (P, Q, dot)
//   ADMISSIBLE_ZINBIEL:P,Q,m      (P, Q, star)
//   ROTA_BAXTER:m,R,lambda        (dot, R, 0)
//   ROTA_BAXTER_SAPP:R,lambda     (R, 0)
//   COMMUTE:P,R                   (P, R)
//   ADMISSIBLE_AVERAGING_COMM:P,Q (P, Q)
//   COMM_ASSOC:m, PERM:m, ZINBIEL:m
struct SuiteSpec {
    std::string id;
    std::vector<std::string> args;
};

inline SuiteSpec parse_suite_spec(const std::string& text) {
    SuiteSpec s;
    auto colon = text.find(':');
    s.id = text.substr(0, colon);
    if (colon == std::string::npos) return s;
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (true) {
        auto comma = rest.find(',', start);
        s.args.push_back(rest.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (const auto& a : s.args)
        if (a.empty()) throw ParseError("empty argument in suite \"" + text + "\"");
    return s;
}

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"COMM_ASSOC",      "PERM",           "ZINBIEL",
                                              "SAPP",            "PRE_PERM",       "PRE_SAPP",
                                              "AVERAGING",       "ADMISSIBLE_PAIR", "ADMISSIBLE_ZINBIEL",
                                              "ROTA_BAXTER",     "ROTA_BAXTER_SAPP", "COMMUTE",
                                              "ADMISSIBLE_AVERAGING_COMM"};
    return ids;
}

template <class K>
IdentitySuite<K> suite_by_id(const std::string& text) {
    SuiteSpec s = parse_suite_spec(text);
    auto arg = [&](std::size_t i, const std::string& dflt) { return i < s.args.size() ? s.args[i] : dflt; };
    auto arity = [&](std::size_t n) {
        if (s.args.size() > n) throw ParseError("too many arguments for suite " + s.id);
    };
    auto weight = [&](std::size_t i) { return i < s.args.size() ? K::parse(s.args[i]) : K(0); };
    if (s.id == "COMM_ASSOC") return arity(1), suites::comm_assoc<K>(arg(0, names::dot));
    if (s.id == "PERM") return arity(1), suites::perm<K>(arg(0, names::circ));
    if (s.id == "ZINBIEL") return arity(1), suites::zinbiel<K>(arg(0, names::star));
    if (s.id == "SAPP") return arity(0), suites::sapp<K>();
    if (s.id == "PRE_PERM") return arity(0), suites::pre_perm<K>();
    if (s.id == "PRE_SAPP") return arity(0), suites::pre_sapp<K>();
    if (s.id == "AVERAGING") return arity(2), suites::averaging<K>(arg(0, names::dot), arg(1, "P"));
    if (s.id == "ADMISSIBLE_PAIR")
        return arity(3), suites::admissible_pair<K>(arg(0, "P"), arg(1, "Q"), arg(2, names::dot));
    if (s.id == "ADMISSIBLE_ZINBIEL")
        return arity(3), suites::admissible_zinbiel<K>(arg(0, "P"), arg(1, "Q"), arg(2, names::star));
    if (s.id == "ROTA_BAXTER") return arity(3), suites::rota_baxter<K>(arg(0, names::dot), arg(1, "R"), weight(2));
    if (s.id == "ROTA_BAXTER_SAPP") return arity(2), suites::rota_baxter_sapp<K>(arg(0, "R"), weight(1));
    if (s.id == "COMMUTE") return arity(2), suites::commute<K>(arg(0, "P"), arg(1, "R"));
    if (s.id == "ADMISSIBLE_AVERAGING_COMM")
        return arity(2), suites::admissible_averaging_comm<K>(arg(0, "P"), arg(1, "Q"));
    throw UnknownName("suite " + s.id);
}

}  // namespace sapp
