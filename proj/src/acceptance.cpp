#include "sapp/acceptance.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace sapp::acceptance {

void Criterion::require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    details.push_back("FAIL: " + what);
}

void Criterion::require(const CheckReport& rep, const std::string& what) {
    if (rep.pass) return;
    pass = false;
    std::string where = rep.first ? " at " + rep.first->equation : "";
    details.push_back("FAIL: " + what + " (" + rep.suite + where + ")");
    failures.push_back(rep);
}

bool Run::pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    for (const auto& d : diagrams)
        if (!d.pass) return false;
    return true;
}

namespace {

using Q = Rational;
using steady = std::chrono::steady_clock;

double seconds_since(steady::time_point t0) {
    return std::chrono::duration<double>(steady::now() - t0).count();
}

std::string verdict(bool b) { return b ? "PASS" : "FAIL"; }

template <class K>
std::string table_key(const Bundle<K>& b) {
    std::string s;
    for (const auto& [name, m] : b.mults) {
        s += name + ":";
        for (const auto& x : m.data()) s += x.str() + ",";
    }
    return s;
}

template <class K>
Bundle<K> comm_bundle(const Mult<K>& dot, const LinearMap<K>& P, const LinearMap<K>& Qop) {
    Bundle<K> b(dot.dim());
    b.set_mult(names::dot, dot);
    b.set_op("P", P);
    b.set_op("Q", Qop);
    return b;
}

template <class K>
Bundle<K> plain_sapp(const Bundle<K>& a) {
    Bundle<K> b(a.dim);
    b.set_mult(names::tri_r, a.mult(names::tri_r));
    b.set_mult(names::tri_l, a.mult(names::tri_l));
    return b;
}

// Admissible averaging commutative algebras in dims 1 and 2 with (P, Q) from `maps_for(n)`.
template <class K, class Maps>
std::vector<Bundle<K>> admissible_bundles(const std::vector<Mult<K>>& algs, Maps&& maps_for) {
    std::vector<Bundle<K>> out;
    for (const auto& m : algs) {
        auto maps = maps_for(m.dim());
        for (const auto& [P, Qop] : admissible_pairs(m, maps, maps)) out.push_back(comm_bundle(m, P, Qop));
    }
    return out;
}

template <class K>
std::vector<Mult<K>> comm_algebras_upto2(const std::vector<K>& vals) {
    auto out = comm_assoc_algebras<K>(1, vals);
    for (auto& m : comm_assoc_algebras<K>(2, vals)) out.push_back(m);
    return out;
}

std::vector<Mult<Q>> rational_comm_algebras() {
    std::vector<Mult<Q>> out;
    Mult<Q> one(1), zero1(1);
    one(0, 0, 0) = Q(1);
    out.push_back(one);
    out.push_back(zero1);
    out.push_back(detail::ex_3_25_base_dot<Q>());
    out.push_back(Mult<Q>(2));
    Mult<Q> split(2), nil(2), unit(2);
    split(0, 0, 0) = split(1, 1, 1) = Q(1);
    nil(0, 0, 1) = Q(1);
    unit(0, 0, 0) = Q(1);
    unit(0, 1, 1) = unit(1, 0, 1) = Q(-1);
    out.push_back(split);
    out.push_back(nil);
    out.push_back(unit);
    return out;
}

template <class K>
std::vector<Bundle<K>> dedup(std::vector<Bundle<K>> in) {
    std::set<std::string> seen;
    std::vector<Bundle<K>> out;
    for (auto& b : in)
        if (seen.insert(table_key(b)).second) out.push_back(std::move(b));
    return out;
}

template <class K>
std::vector<Bundle<K>> sapps_from(const std::vector<Bundle<K>>& comm) {
    std::vector<Bundle<K>> out;
    for (const auto& b : comm) out.push_back(plain_sapp(sapp_from_admissible(b)));
    return dedup(std::move(out));
}

struct Tally {
    std::size_t bundles = 0;
    std::uint64_t candidates = 0, invariant = 0, solutions = 0, oop_checked = 0, violations = 0;
};

template <class K>
void search_all(const std::vector<Bundle<K>>& bundles, Target t, const std::vector<K>& vals, Tally& tally,
                Criterion& c, const std::string& label) {
    for (const auto& b : bundles) {
        auto res = exhaust_ybe(b, t, vals);
        ++tally.bundles;
        tally.candidates += res.candidates;
        tally.invariant += res.invariant_candidates;
        tally.oop_checked += res.invariant_candidates;
        tally.solutions += res.solutions.size();
        tally.violations += res.equivalence_violations.size();
        c.require(res.report, label + " " + target_name(t) + " equivalence");
    }
}

std::string tally_line(const std::string& label, const Tally& t) {
    std::ostringstream s;
    s << label << ": bundles " << t.bundles << ", candidates " << t.candidates << ", invariant "
      << t.invariant << ", YBE solutions " << t.solutions << ", violations " << t.violations;
    return s.str();
}

// Quasi-triangular comm data from the F2 battery.
struct CommInstance {
    Bundle<F2> bundle;
    Tensor2<F2> r;
    RClassification cls;
};

std::vector<CommInstance> quasi_triangular_f2() {
    auto vals = field_values<F2>();
    auto bundles = admissible_bundles<F2>(comm_algebras_upto2<F2>(vals), [&](std::size_t n) {
        return all_maps<F2>(n, vals);
    });
    std::vector<CommInstance> out;
    for (const auto& b : bundles)
        for (const auto& s : exhaust_ybe(b, Target::aaybe, vals).solutions)
            if (s.classification.verdict != "none") out.push_back({b, s.r, s.classification});
    return out;
}

struct SappInstance {
    Bundle<F2> bundle;
    Tensor2<F2> r;
    RClassification cls;
};

std::vector<Bundle<F2>> all_sapps_f2() {
    auto vals = field_values<F2>();
    auto out = sapp_algebras<F2>(1, vals);
    for (auto& b : sapp_algebras<F2>(2, vals)) out.push_back(b);
    return out;
}

std::vector<SappInstance> quasi_triangular_sapp_f2() {
    std::vector<SappInstance> out;
    for (const auto& b : all_sapps_f2())
        for (const auto& s : exhaust_ybe(b, Target::sapp_ybe).solutions)
            if (s.classification.verdict != "none") out.push_back({b, s.r, s.classification});
    return out;
}

template <class K>
bool same_sapp(const Bundle<K>& a, const Bundle<K>& b) {
    return a.mult(names::tri_r) == b.mult(names::tri_r) && a.mult(names::tri_l) == b.mult(names::tri_l);
}

std::string entry_name(std::size_t i, std::size_t n) {
    return i < n ? "e" + std::to_string(i + 1) : "e*" + std::to_string(i - n + 1);
}

std::string vector_text(const Vec<Q>& v, std::size_t n) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += (v[k] == Q(1) ? "" : v[k].str()) + entry_name(k, n);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

Criterion example_3_25() {
    auto t0 = steady::now();
    Criterion c{1, "ex_3_25 reproduction"};
    auto base = catalog_example<Q>("ex_3_25_base");
    auto cat = catalog_example<Q>("ex_3_25");
    c.require(check_suite(base, suites::comm_assoc<Q>()), "A is commutative associative");
    c.require(check_suite(base, suites::rota_baxter<Q>(names::dot, "R", Q(-1))), "R = id has weight -1");

    Bundle<Q> d = rb_frobenius_double(base, "R", Q(-1));
    d.set_op("P", projection<Q>(2, 2, true));
    c.require(d.mult(names::dot) == cat.mult(names::dot), "double multiplication matches the listed products");
    c.require(d.op("R") == cat.op("R"), "R on the double is proj_A");
    const auto& B = d.form("B");
    c.require(check_symmetric_averaging_rb_frobenius(d, "P", "R", B, Q(-1)),
              "symmetric averaging Rota-Baxter Frobenius of weight -1");

    Tensor2<Q> r = r_from_R(d.op("R"), B);
    c.require(r == cat.tensor("r"), "r = e*1 (x) e1 + e*2 (x) e2");
    c.require(R_from_r(r, B) == d.op("R"), "R recovered from r and B");
    d.set_op("Q", adjoint_wrt_form(d.op("P"), B));
    c.require(d.op("Q") == cat.op("Q"), "P-hat = proj_{A*}");

    auto cls = classify_r(d, r, Setting::comm);
    c.require(cls.verdict == "factorizable", "classification factorizable (got " + cls.verdict + ")");
    Comult<Q> delta = delta_r(d, r);
    c.require(delta == cat.comult("delta"), "Delta_r has exactly the two listed images");
    for (std::size_t k = 0; k < 4; ++k) {
        bool listed = k >= 2;
        c.require(listed != delta[k].is_zero(), "Delta_r(" + entry_name(k, 2) + ") zero pattern");
    }
    c.require(check_averaging_bialgebra(d, delta), "averaging bialgebra");

    auto fac = factorization_map(d, r, Setting::comm);
    c.require(fac.report, "factorization of the double");
    c.require(is_invertible(fac.psi), "psi is a linear isomorphism");
    c.detail("Delta_r(e*1) = e*1(x)e*1, Delta_r(e*2) = e*1(x)e*2 + e*2(x)e*1, zero on e1, e2");
    c.seconds = seconds_since(t0);
    c.require(c.seconds < 1.0, "runtime under 1 s");
    c.instances = 1;
    return c;
}

Criterion example_6_29() {
    auto t0 = steady::now();
    Criterion c{2, "ex_6_29 transfer"};
    auto a = catalog_example<Q>("ex_3_25");
    auto ex = catalog_example<Q>("ex_6_29");
    const Tensor2<Q>& r = a.tensor("r");
    auto tq = transfer_quasitriangular(a, r);
    c.require(tq.report, "transfer preconditions");
    const auto& tl = tq.sapp.mult(names::tri_l);
    const auto& tr = tq.sapp.mult(names::tri_r);
    c.require(tl == ex.mult(names::tri_l), "<| table matches the reference table");
    c.require(tq.vartheta == ex.comult("vartheta"), "vartheta_r matches the reference table");
    c.require(tq.theta.is_zero(), "theta_r = 0");
    c.require(tr == ex.mult(names::tri_r), "|> table matches the independently derived table");

    const auto& reference = ex.mult("tri_r_reference");
    std::size_t differing = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto got = tr.basis_product(i, j), shown = reference.basis_product(i, j);
            if (got == shown) continue;
            ++differing;
            c.findings.push_back(entry_name(i, 2) + " |> " + entry_name(j, 2) + ": reference " + vector_text(shown, 2) +
                                 ", derived " + vector_text(got, 2));
        }
    c.detail("|> entries differing from the reference table: " + std::to_string(differing));
    Bundle<Q> pr(4);
    pr.set_mult(names::tri_r, reference);
    pr.set_mult(names::tri_l, ex.mult(names::tri_l));
    auto pr_rep = check_suite(pr, suites::sapp<Q>());
    if (!pr_rep.pass)
        c.findings.push_back("the reference |> table fails the SAPP suite at " + pr_rep.first->equation);

    c.require(check_suite(tq.sapp, suites::sapp<Q>()), "derived SAPP passes the SAPP suite");
    c.require(sa_tensor(tq.sapp, r).is_zero(), "SA(r) = 0");
    c.require(check_sapp_bialgebra(tq.sapp, tq.vartheta, tq.theta), "SAPP bialgebra");
    Bundle<Q> qrb = quadratic_rb_sapp_from_comm(a, a.form("B"));
    c.require(same_sapp(qrb, tq.sapp), "quadratic Rota-Baxter SAPP has the transferred tables");
    c.require(check_quadratic_rb_sapp(qrb, "R", a.form("B"), Q(-1)), "quadratic Rota-Baxter SAPP of weight -1");
    c.seconds = seconds_since(t0);
    c.require(c.seconds < 1.0, "runtime under 1 s");
    c.instances = 1;
    return c;
}

Criterion equivalence_battery() {
    auto t0 = steady::now();
    Criterion c{3, "YBE <=> O-operator equivalence battery"};
    std::uint64_t total = 0;

    {
        auto vals = field_values<F2>();
        auto comm = admissible_bundles<F2>(comm_algebras_upto2<F2>(vals), [&](std::size_t n) {
            return all_maps<F2>(n, vals);
        });
        Tally tc, ts;
        search_all(comm, Target::aaybe, vals, tc, c, "F2");
        search_all(all_sapps_f2(), Target::sapp_ybe, vals, ts, c, "F2");
        c.detail(tally_line("F2 AAYBE", tc));
        c.detail(tally_line("F2 SAPP-YBE", ts));
        total += tc.candidates + ts.candidates;
    }
    {
        auto vals = field_values<F3>();
        auto comm = admissible_bundles<F3>(comm_algebras_upto2<F3>(vals), [&](std::size_t n) {
            return all_maps<F3>(n, vals);
        });
        Tally tc, ts;
        search_all(comm, Target::aaybe, vals, tc, c, "F3");
        auto sapps = sapp_algebras<F3>(1, vals);
        for (auto& b : sapps_from(comm))
            if (b.dim == 2) sapps.push_back(b);
        search_all(sapps, Target::sapp_ybe, vals, ts, c, "F3");
        c.detail(tally_line("F3 AAYBE", tc));
        c.detail(tally_line("F3 SAPP-YBE", ts));
        total += tc.candidates + ts.candidates;
    }
    {
        auto vals = field_values<Q>();
        std::vector<Q> op_vals{Q(0), Q(1)};
        auto comm = admissible_bundles<Q>(rational_comm_algebras(), [&](std::size_t n) {
            return all_maps<Q>(n, op_vals);
        });
        Tally tc, ts;
        search_all(comm, Target::aaybe, vals, tc, c, "Q");
        search_all(sapps_from(comm), Target::sapp_ybe, vals, ts, c, "Q");
        c.detail(tally_line("Q-grid AAYBE", tc));
        c.detail(tally_line("Q-grid SAPP-YBE", ts));
        total += tc.candidates + ts.candidates;
    }
    c.instances = total;
    c.require(total >= 10000, "at least 1e4 candidates");
    c.seconds = seconds_since(t0);
    c.require(c.seconds < 300.0, "runtime under 5 min");
    return c;
}

Criterion constructive_implications() {
    auto t0 = steady::now();
    Criterion c{4, "Constructive implications on the corpus"};
    std::size_t n_perm = 0, n_bialg = 0, n_sapp = 0, n_skew = 0, n_double = 0;

    // averaging => perm
    auto perm_check = [&]<class K>(const Bundle<K>& b, const std::string& what) {
        c.require(check_suite(perm_from_averaging(b), suites::perm<K>()), what);
        ++n_perm;
    };
    {
        auto vals = field_values<F2>();
        for (const auto& m : comm_algebras_upto2<F2>(vals))
            for (const auto& P : all_maps<F2>(m.dim(), vals)) {
                Bundle<F2> b(m.dim());
                b.set_mult(names::dot, m);
                b.set_op("P", P);
                if (check_suite(b, suites::averaging<F2>(names::dot, "P")).pass) perm_check(b, "F2 averaging => perm");
            }
    }
    perm_check(catalog_example<Q>("ex_3_25"), "ex_3_25 averaging => perm");

    // quasi-triangular comm data => averaging bialgebra => SAPP bialgebra; doubles
    auto qt = quasi_triangular_f2();
    std::size_t iff_mismatch = 0;
    for (const auto& inst : qt) {
        const auto& b = inst.bundle;
        Comult<F2> delta = delta_r(b, inst.r);
        auto bia = check_averaging_bialgebra(b, delta);
        c.require(bia, "AAYBE + invariance => averaging bialgebra");
        if (bia.pass != check_r_bialgebra_conditions_comm(b, inst.r).pass) ++iff_mismatch;
        ++n_bialg;
        try {
            auto tq = transfer_quasitriangular(b, inst.r);
            c.require(check_sapp_bialgebra(tq.sapp, tq.vartheta, tq.theta), "averaging bialgebra => SAPP bialgebra");
            ++n_sapp;
            Bundle<F2> dual(b.dim);
            dual.set_mult(names::tri_r, dual_multiplication(tq.vartheta));
            dual.set_mult(names::tri_l, dual_multiplication(tq.theta));
            auto md = sapp_manin_double(plain_sapp(tq.sapp), dual);
            auto [cr, ccls] = canonical_r_on_double(md, Setting::sapp);
            c.require(ccls.verdict == "factorizable", "canonical r on the SAPP double is factorizable");
            ++n_double;
        } catch (const TransferMismatch& e) {
            c.require(false, std::string("transfer mismatch: ") + e.what());
        }
        auto dbl = comm_double(b, dual_multiplication(delta));
        auto [cr, ccls] = canonical_r_on_double(dbl, Setting::comm);
        c.require(ccls.verdict == "factorizable", "canonical r on the commutative double is factorizable");
        ++n_double;
    }
    c.require(iff_mismatch == 0, "bialgebra axioms <=> r-conditions on every quasi-triangular instance");

    // skew solutions from O-operators of weight 0 are triangular
    {
        auto vals = field_values<F2>();
        auto comm = admissible_bundles<F2>(comm_assoc_algebras<F2>(2, vals), [&](std::size_t n) {
            return all_maps<F2>(n, vals);
        });
        auto maps = all_maps<F2>(2, vals);
        for (std::size_t i = 0; i < comm.size(); i += 7) {
            auto rep = adjoint_comm_rep(comm[i]);
            for (const auto& T : maps) {
                OOperator<F2> op{T, F2(0)};
                if (!check_comm_ooperator(rep, op).pass) continue;
                auto sk = skew_solution_from_comm_ooperator(rep, op);
                c.require(classify_r(sk.bundle, sk.r, Setting::comm).verdict == "triangular",
                          "commutative O-operator => triangular");
                ++n_skew;
            }
        }
        for (const auto& b : all_sapps_f2()) {
            if (b.dim != 2) continue;
            auto rep = adjoint_sapp_rep(b);
            for (const auto& T : maps) {
                OOperator<F2> op{T, F2(0)};
                if (!check_sapp_ooperator(rep, op).pass) continue;
                auto sk = skew_solution_from_sapp_ooperator(rep, op);
                c.require(classify_r(sk.bundle, sk.r, Setting::sapp).verdict == "triangular",
                          "SAPP O-operator => triangular");
                ++n_skew;
            }
        }
    }
    {
        auto a = catalog_example<Q>("ex_3_25");
        auto [r, cls] = canonical_r_on_double(comm_double(a, Mult<Q>(4)), Setting::comm);
        c.require(cls.verdict == "factorizable", "canonical r on the double of ex_3_25 is factorizable");
        ++n_double;
    }

    // open-question probes
    {
        auto vals = field_values<F2>();
        auto comm = admissible_bundles<F2>(comm_algebras_upto2<F2>(vals), [&](std::size_t n) {
            return all_maps<F2>(n, vals);
        });
        std::uint64_t weak = 0, strong = 0, weak_only = 0;
        for (const auto& b : comm) {
            std::uint64_t count = checked_power(2, b.dim * b.dim, search_limit);
            for (std::uint64_t k = 0; k < count; ++k) {
                auto r = candidate_matrix(k, b.dim, b.dim, vals);
                auto rc = check_r_bialgebra_conditions_comm(b, r);
                bool w = !rc.failed("cocomm_r") && !rc.failed("coassoc_r");
                bool s = aybe_tensor(b, r).is_zero() && comm_invariance_check(b, Tensor2<F2>(r + tau(r))).pass;
                weak += w;
                strong += s;
                weak_only += w && !s;
                c.require(!s || w, "A(r) = 0 and invariance imply cocomm_r and coassoc_r");
            }
        }
        c.detail("cocomm_r and coassoc_r hold for " + std::to_string(weak) + " F2 candidates, A(r)=0 with invariance for " +
                 std::to_string(strong) + "; strictly weaker on " + std::to_string(weak_only));
        Bundle<Q> w(1);
        Mult<Q> e(1);
        e(0, 0, 0) = Q(1);
        w.set_mult(names::dot, e);
        w.set_op("P", Matrix<Q>::identity(1));
        w.set_op("Q", Matrix<Q>::identity(1));
        Tensor2<Q> r(1, 1);
        r(0, 0) = Q(1);
        auto rc = check_r_bialgebra_conditions_comm(w, r);
        bool witness = !rc.failed("cocomm_r") && !rc.failed("coassoc_r") && !aybe_tensor(w, r).is_zero();
        if (witness)
            c.findings.push_back("cocomm_r and coassoc_r is strictly weaker than A(r)=0 with invariance: e.e = e, r = e(x)e over Q");

        std::size_t reps = 0, ok_l = 0, ok_dual = 0;
        auto sapps = all_sapps_f2();
        for (const auto& b : sapps) {
            auto o = circ_of_sapp(b);
            auto L = detail::lefts(o), Ll = detail::lefts(b.mult(names::tri_l));
            ok_l += check_perm_rep(o, L, detail::sum_maps(L, Ll), b.dim).pass;
            ok_dual += check_perm_rep(o, detail::transposed(L), detail::negated(detail::transposed(Ll)), b.dim).pass;
            ++reps;
        }
        auto ex = catalog_example<Q>("ex_6_29");
        auto o = circ_of_sapp(ex);
        auto L = detail::lefts(o), Ll = detail::lefts(ex.mult(names::tri_l));
        bool ex_ok = check_perm_rep(o, L, detail::sum_maps(L, Ll), 4).pass &&
                     check_perm_rep(o, detail::transposed(L), detail::negated(detail::transposed(Ll)), 4).pass;
        c.detail("(L_o, L_o + L_<|, A) is a perm representation on " + std::to_string(ok_l) + "/" +
                 std::to_string(reps) + " F2 SAPPs; (L*_o, -L*_<|, A*) on " + std::to_string(ok_dual) + "/" +
                 std::to_string(reps) + "; ex_6_29 " + verdict(ex_ok));
        c.require(ok_l == reps && ok_dual == reps && ex_ok, "perm representations from SAPPs");
    }

    c.detail("averaging => perm: " + std::to_string(n_perm));
    c.detail("quasi-triangular => averaging bialgebra: " + std::to_string(n_bialg));
    c.detail("averaging bialgebra => SAPP bialgebra: " + std::to_string(n_sapp));
    c.detail("O-operator => triangular: " + std::to_string(n_skew));
    c.detail("canonical double r factorizable: " + std::to_string(n_double));
    c.instances = n_perm + n_bialg + n_sapp + n_skew + n_double;
    c.require(c.instances >= 200, "at least 200 instances");
    c.seconds = seconds_since(t0);
    return c;
}

namespace {

template <class K>
void round_trip(Criterion& c, const Bundle<K>& b, const Tensor2<K>& r, Setting s, const std::string& what,
                std::size_t& count) {
    auto to = to_rb(b, r, s);
    c.require(to.report, what + ": factorizable -> Rota-Baxter");
    c.require(correspondence_round_trip(b, to.R, to.B, s), what + ": round trip");
    auto back = to_bialgebra(b, to.R, to.B, s);
    c.require(back.r == r, what + ": r recovered exactly");
    auto fac = factorization_map(b, r, s);
    c.require(fac.report, what + ": factorization");
    ++count;
}

}  // namespace

Criterion round_trips() {
    auto t0 = steady::now();
    Criterion c{5, "Round-trip identities"};
    std::size_t n = 0;
    auto a = catalog_example<Q>("ex_3_25");
    round_trip(c, a, a.tensor("r"), Setting::comm, "ex_3_25", n);
    Bundle<Q> s = quadratic_rb_sapp_from_comm(a, a.form("B"));
    round_trip(c, s, a.tensor("r"), Setting::sapp, "ex_6_29", n);

    for (const auto& inst : quasi_triangular_f2()) {
        if (inst.cls.verdict == "factorizable")
            round_trip(c, inst.bundle, inst.r, Setting::comm, "F2 factorizable comm", n);
        Comult<F2> delta = delta_r(inst.bundle, inst.r);
        auto dbl = comm_double(inst.bundle, dual_multiplication(delta));
        round_trip(c, dbl.total, canonical_r<F2>(inst.bundle.dim), Setting::comm, "F2 commutative double", n);
    }
    for (const auto& inst : quasi_triangular_sapp_f2())
        if (inst.cls.verdict == "factorizable")
            round_trip(c, inst.bundle, inst.r, Setting::sapp, "F2 factorizable SAPP", n);
    {
        auto vals = field_values<F3>();
        auto maps = all_maps<F3>(2, vals);
        for (const auto& m : comm_assoc_algebras<F3>(2, vals))
            for (const auto& R : maps) {
                Bundle<F3> base(2);
                base.set_mult(names::dot, m);
                base.set_op("R", R);
                if (!check_suite(base, suites::rota_baxter<F3>(names::dot, "R", F3(-1))).pass) continue;
                Bundle<F3> d = rb_frobenius_double(base, "R", F3(-1));
                d.set_op("P", projection<F3>(2, 2, true));
                const auto& B = d.form("B");
                d.set_op("Q", adjoint_wrt_form(d.op("P"), B));
                Tensor2<F3> r = r_from_R(d.op("R"), B);
                round_trip(c, d, r, Setting::comm, "F3 Rota-Baxter double", n);
                round_trip(c, quadratic_rb_sapp_from_comm(d, B), r, Setting::sapp, "F3 quadratic Rota-Baxter SAPP", n);
            }
    }
    c.instances = n;
    c.detail("factorizable instances checked: " + std::to_string(n));
    c.seconds = seconds_since(t0);
    return c;
}

namespace {

struct Control {
    std::string suite;
    std::size_t failing = 0;
    io::ojson reports = io::ojson::array();
};

template <class K>
Control control(const std::string& label, const Bundle<K>& base, const IdentitySuite<K>& suite,
                const MutationScope& scope, Criterion& c, std::uint64_t seed) {
    Control out{label};
    c.require(check_suite(base, suite), label + " base instance passes");
    auto fails = failing_mutations(base, scope, [&](const Bundle<K>& b) { return check_suite(b, suite); }, 3, seed);
    for (const auto& [m, rep] : fails) {
        bool tuple = rep.first && !rep.first->tuple.empty();
        c.require(tuple, label + " mutation reports a counterexample tuple");
        auto j = io::report_json(rep);
        j["mutation"] = describe(m);
        out.reports.push_back(j);
    }
    out.failing = fails.size();
    c.require(out.failing >= 3, label + ": three failing mutations");
    return out;
}

Bundle<Q> rational_zinbiel() {
    Bundle<Q> z(2);
    Mult<Q> st(2);
    st(0, 0, 1) = Q(1);
    z.set_mult(names::star, st);
    z.set_op("P", Matrix<Q>::identity(2));
    z.set_op("Q", Matrix<Q>::identity(2));
    return z;
}

io::ojson control_document(Criterion& c) {
    io::ojson doc = io::ojson::array();
    auto a = catalog_example<Q>("ex_3_25");
    auto ex = catalog_example<Q>("ex_6_29");
    auto perm = perm_from_averaging(a);
    auto z = rational_zinbiel();
    auto pre = presapp_from_zinbiel(z);
    auto pp = pre_perm_of_pre_sapp(pre);
    std::vector<Control> cs;
    cs.push_back(control("COMM_ASSOC", a, suites::comm_assoc<Q>(), mults_only({names::dot}), c, 1));
    cs.push_back(control("PERM", perm, suites::perm<Q>(), mults_only({names::circ}), c, 2));
    cs.push_back(control("ZINBIEL", z, suites::zinbiel<Q>(), mults_only({names::star}), c, 3));
    cs.push_back(control("SAPP", ex, suites::sapp<Q>(), mults_only({names::tri_r, names::tri_l}), c, 4));
    cs.push_back(control("PRE_PERM", pp, suites::pre_perm<Q>(), mults_only({names::succ, names::prec}), c, 5));
    cs.push_back(control("PRE_SAPP", pre, suites::pre_sapp<Q>(),
                         mults_only({names::frown, names::smile, names::diamond}), c, 6));
    cs.push_back(control("AVERAGING", a, suites::averaging<Q>(names::dot, "P"), {{}, {"P"}, {}, {}, {}}, c, 7));
    cs.push_back(control("ADMISSIBLE_PAIR", a, suites::admissible_pair<Q>("P", "Q"), {{}, {"Q"}, {}, {}, {}}, c, 8));
    cs.push_back(control("ADMISSIBLE_ZINBIEL", z, suites::admissible_zinbiel<Q>("P", "Q"), {{}, {"Q"}, {}, {}, {}},
                         c, 9));
    cs.push_back(control("ROTA_BAXTER", a, suites::rota_baxter<Q>(names::dot, "R", Q(-1)), {{}, {"R"}, {}, {}, {}},
                         c, 10));
    cs.push_back(control("ROTA_BAXTER_SAPP", ex, suites::rota_baxter_sapp<Q>("R", Q(-1)), {{}, {"R"}, {}, {}, {}},
                         c, 11));
    cs.push_back(control("COMMUTE", a, suites::commute<Q>("P", "R"), {{}, {"R"}, {}, {}, {}}, c, 12));
    cs.push_back(control("ADMISSIBLE_AVERAGING_COMM", a, suites::admissible_averaging_comm<Q>(),
                         {{names::dot}, {"P", "Q"}, {}, {}, {}}, c, 13));
    for (const auto& x : cs) {
        c.detail(x.suite + ": " + std::to_string(x.failing) + " failing mutations");
        doc.push_back({{"suite", x.suite}, {"mutations", x.reports}});
    }

    // coalgebra side: mutated theta of ex_6_29
    auto bad = plan_mutations(ex, 50, 14, MutationScope{{}, {}, {}, {}, {"theta"}});
    std::size_t co_fail = 0;
    for (const auto& m : bad) {
        auto b = perturb(ex, m);
        auto rep = check_sapp_bialgebra(b, b.comult("vartheta"), b.comult("theta"));
        if (rep.pass) continue;
        ++co_fail;
        if (co_fail <= 3) {
            auto j = io::report_json(rep);
            j["mutation"] = describe(m);
            doc.push_back({{"suite", "SAPP_BIALGEBRA"}, {"mutations", io::ojson::array({j})}});
        }
    }
    c.require(co_fail >= 3, "SAPP_BIALGEBRA: three failing theta mutations");

    // a search catalog, for determinism
    Bundle<F2> small(2);
    small.set_mult(names::dot, detail::ex_3_25_base_dot<F2>());
    small.set_op("P", Matrix<F2>::identity(2));
    small.set_op("Q", Matrix<F2>::identity(2));
    auto res = exhaust_ybe(small, Target::aaybe);
    io::ojson sols = io::ojson::array();
    for (const auto& s : res.solutions)
        sols.push_back({{"r", io::tensor_entries_json(s.r)}, {"classification", io::classification_json(s.classification)}});
    doc.push_back({{"search", "ex_3_25_base over f2"}, {"solutions", sols}});
    return doc;
}

}  // namespace

Criterion negative_controls() {
    auto t0 = steady::now();
    Criterion c{6, "Negative controls and report determinism"};
    Criterion scratch;
    std::string first = control_document(c).dump();
    std::string second = control_document(scratch).dump();
    c.require(first == second, "report bytes identical across two runs");
    c.detail("report digest " + hex64(fnv1a(first)) + ", " + std::to_string(first.size()) + " bytes");
    c.instances = 14;
    c.seconds = seconds_since(t0);
    return c;
}

Criterion zinbiel_square() {
    auto t0 = steady::now();
    Criterion c{1, "Zinbiel square: comm route vs pre-SAPP route"};
    std::size_t n = 0;
    auto check = [&]<class K>(const Bundle<K>& z) {
        std::size_t d = z.dim;
        OOperator<K> id{Matrix<K>::identity(d), K(0)};
        auto com = subadjacent_comm(z);
        CommRep<K> rep{com, d, detail::lefts(z.mult(names::star)), z.op("P"), z.op("Q"), std::nullopt};
        c.require(check_comm_ooperator(rep, id), "id is an O-operator of the commutative side");
        auto sk = skew_solution_from_comm_ooperator(rep, id);
        c.require(classify_r(sk.bundle, sk.r, Setting::comm).verdict == "triangular", "triangular comm bialgebra");
        auto tq = transfer_quasitriangular(sk.bundle, sk.r);
        auto pre = presapp_from_zinbiel(z);
        c.require(same_sapp(subadjacent_sapp(pre), sapp_from_admissible(com)), "sub-adjacent SAPPs agree");
        auto prep = presapp_rep(pre);
        c.require(check_sapp_ooperator(prep, id), "id is an O-operator of the SAPP side");
        auto sks = skew_solution_from_sapp_ooperator(prep, id);
        c.require(classify_r(sks.bundle, sks.r, Setting::sapp).verdict == "triangular", "triangular SAPP bialgebra");
        auto cm = sapp_comults_from_r(sks.bundle, sks.r);
        c.require(same_sapp(tq.sapp, sks.bundle) && tq.vartheta == cm.vartheta && tq.theta == cm.theta,
                  "both routes give the same SAPP bialgebra");
        ++n;
    };
    auto run = [&](auto tag) {
        using K = decltype(tag);
        auto vals = field_values<K>();
        auto maps = all_maps<K>(2, vals);
        for (const auto& st : algebras_satisfying<K>(2, vals, names::star, suites::zinbiel<K>()))
            for (const auto& P : maps) {
                Bundle<K> z(2);
                z.set_mult(names::star, st);
                z.set_op("P", P);
                if (!check_suite(z, suites::averaging<K>(names::star, "P")).pass) continue;
                for (const auto& Qop : maps) {
                    z.set_op("Q", Qop);
                    if (check_suite(z, suites::admissible_zinbiel<K>("P", "Q")).pass) check(z);
                }
            }
    };
    run(F2{});
    run(F3{});
    check(rational_zinbiel());
    c.instances = n;
    c.detail("instances: " + std::to_string(n));
    c.seconds = seconds_since(t0);
    return c;
}

Criterion rota_baxter_square() {
    auto t0 = steady::now();
    Criterion c{2, "Rota-Baxter square: comm bialgebra route vs quadratic Rota-Baxter SAPP route"};
    std::size_t n = 0;
    auto check = [&]<class K>(const Bundle<K>& b, K lambda) {
        const auto& B = b.form("B");
        c.require(check_symmetric_averaging_rb_frobenius(b, "P", "R", B, lambda), "symmetric averaging RB Frobenius");
        Bundle<K> q = b;
        q.set_op("Q", adjoint_wrt_form(b.op("P"), B));
        Tensor2<K> r = r_from_R(b.op("R"), B);
        std::string want = lambda.is_zero() ? "triangular" : "factorizable";
        c.require(classify_r(q, r, Setting::comm).verdict == want, "comm classification " + want);
        auto tq = transfer_quasitriangular(q, r);
        Bundle<K> s = quadratic_rb_sapp_from_comm(b, B);
        c.require(check_quadratic_rb_sapp(s, "R", B, lambda), "quadratic Rota-Baxter SAPP");
        c.require(classify_r(s, r, Setting::sapp).verdict == want, "SAPP classification " + want);
        auto cm = sapp_comults_from_r(s, r);
        c.require(same_sapp(tq.sapp, s) && tq.vartheta == cm.vartheta && tq.theta == cm.theta,
                  "both routes give the same SAPP bialgebra");
        ++n;
    };
    auto run = [&](auto tag) {
        using K = decltype(tag);
        auto vals = field_values<K>();
        auto maps = all_maps<K>(2, vals);
        for (long lam : {0L, -1L})
            for (const auto& m : comm_assoc_algebras<K>(2, vals))
                for (const auto& R : maps) {
                    Bundle<K> a(2);
                    a.set_mult(names::dot, m);
                    a.set_op("R", R);
                    if (!check_suite(a, suites::rota_baxter<K>(names::dot, "R", K(lam))).pass) continue;
                    Bundle<K> d = rb_frobenius_double(a, "R", K(lam));
                    for (const auto& P : {projection<K>(2, 2, true), Matrix<K>::identity(4), LinearMap<K>(4, 4)}) {
                        d.set_op("P", P);
                        check(d, K(lam));
                    }
                }
    };
    run(F2{});
    run(F3{});
    check(catalog_example<Q>("ex_3_25"), Q(-1));
    c.instances = n;
    c.detail("instances: " + std::to_string(n));
    c.seconds = seconds_since(t0);
    return c;
}

Run run_all() {
    Run run;
    run.criteria.push_back(example_3_25());
    run.criteria.push_back(example_6_29());
    run.criteria.push_back(equivalence_battery());
    run.criteria.push_back(constructive_implications());
    run.criteria.push_back(round_trips());
    run.criteria.push_back(negative_controls());
    run.diagrams.push_back(zinbiel_square());
    run.diagrams.push_back(rota_baxter_square());
    return run;
}

namespace {

io::ojson criterion_json(const Criterion& c, bool timings) {
    io::ojson o;
    o["id"] = c.id;
    o["title"] = c.title;
    o["verdict"] = verdict(c.pass);
    o["instances"] = c.instances;
    o["details"] = c.details;
    o["findings"] = c.findings;
    io::ojson f = io::ojson::array();
    for (const auto& r : c.failures) f.push_back(io::report_json(r));
    o["failures"] = f;
    if (timings) o["seconds"] = c.seconds;
    return o;
}

}  // namespace

io::ojson run_json(const Run& run, bool timings) {
    io::ojson o;
    o["verdict"] = verdict(run.pass());
    o["criteria"] = io::ojson::array();
    for (const auto& c : run.criteria) o["criteria"].push_back(criterion_json(c, timings));
    o["diagrams"] = io::ojson::array();
    for (const auto& d : run.diagrams) o["diagrams"].push_back(criterion_json(d, timings));
    return o;
}

std::string summary_line(const Criterion& c) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << verdict(c.pass) << "  " << c.id << ". " << c.title << "  [" << c.instances << " instances, " << c.seconds
      << " s]";
    return s.str();
}

}  // namespace sapp::acceptance
