#pragma once

#include <string>

#include "sapp/coalgebra.hpp"

namespace sapp {

struct TransferMismatch : Error {
    TransferMismatch(const std::string& which, std::vector<ResidualEntry> a, std::vector<ResidualEntry> b)
        : Error("transfer routes disagree on " + which), route_coproduct(std::move(a)), route_tensor(std::move(b)) {}
    std::vector<ResidualEntry> route_coproduct;
    std::vector<ResidualEntry> route_tensor;
};

// A(r) = sum u_i u_j (x) v_i (x) v_j - u_i (x) u_j v_i (x) v_j + u_i (x) u_j (x) v_i v_j
template <class K>
Tensor3<K> aybe_tensor(const Mult<K>& dot, const Tensor2<K>& r) {
    std::size_t n = dot.dim();
    if (r.rows() != n || r.cols() != n) throw DimensionMismatch("aybe_tensor: r has wrong shape");
    Tensor3<K> t(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const K& rab = r(a, b);
            if (rab.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const K& rcd = r(c, d);
                    if (rcd.is_zero()) continue;
                    K w = rab * rcd;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!dot(a, c, k).is_zero()) t(k, b, d) += w * dot(a, c, k);
                        if (!dot(c, b, k).is_zero()) t(a, k, d) -= w * dot(c, b, k);
                        if (!dot(b, d, k).is_zero()) t(a, c, k) += w * dot(b, d, k);
                    }
                }
        }
    return t;
}

template <class K>
Tensor3<K> aybe_tensor(const Bundle<K>& a, const Tensor2<K>& r) {
    return aybe_tensor(a.mult(names::dot), r);
}

template <class K>
CheckReport aaybe_check(const Bundle<K>& a, const Tensor2<K>& r, const std::string& p = "P",
                        const std::string& q = "Q") {
    CheckReport rep("AAYBE");
    expect_zero(rep, "AYBE", {}, aybe_tensor(a, r));
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    auto id = Matrix<K>::identity(a.dim);
    expect_zero(rep, "AAYBE1", {}, apply_map_tensor(P, id, r) - apply_map_tensor(id, Q, r));
    expect_zero(rep, "AAYBE2", {}, apply_map_tensor(Q, id, r) - apply_map_tensor(id, P, r));
    return rep;
}

// (id (x) L(x) - L(x) (x) id) s
template <class K>
Tensor2<K> comm_defect(const Mult<K>& dot, std::size_t x, const Tensor2<K>& s) {
    auto L = dot.left(x);
    return s * L.transpose() - L * s;
}

template <class K>
CheckReport comm_invariance_check(const Bundle<K>& a, const Tensor2<K>& s) {
    CheckReport rep("COMM_INVARIANCE");
    const auto& dot = a.mult(names::dot);
    for (std::size_t x = 0; x < a.dim; ++x)
        if (!expect_zero(rep, "invariance", {x}, comm_defect(dot, x, s))) break;
    return rep;
}

// Delta_r(x) = (id (x) L(x) - L(x) (x) id) r
template <class K>
Comult<K> delta_r(const Bundle<K>& a, const Tensor2<K>& r) {
    const auto& dot = a.mult(names::dot);
    Comult<K> d(a.dim);
    for (std::size_t x = 0; x < a.dim; ++x) d[x] = comm_defect(dot, x, r);
    return d;
}

template <class K>
CheckReport check_r_bialgebra_conditions_comm(const Bundle<K>& a, const Tensor2<K>& r, const std::string& p = "P",
                                              const std::string& q = "Q") {
    CheckReport rep("R_BIALGEBRA_COMM");
    const auto& dot = a.mult(names::dot);
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    Tensor2<K> s = r + tau(r);
    for (std::size_t x = 0; x < n && !rep.failed("cocomm_r"); ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto inner = comm_defect(dot, y, s);
            auto Lx = dot.left(x);
            auto res = apply_map_tensor(Lx, id, inner) - apply_map_tensor(id, Lx, inner);
            if (!expect_zero(rep, "cocomm_r", {x, y}, res)) break;
        }
    Tensor3<K> at = aybe_tensor(dot, r);
    for (std::size_t x = 0; x < n; ++x) {
        auto Lx = dot.left(x);
        auto res = apply_map_tensor(id, id, Lx, at) - apply_map_tensor(Lx, id, id, at);
        if (!expect_zero(rep, "coassoc_r", {x}, res)) break;
    }
    Tensor2<K> qp = apply_map_tensor(Q, id, r) - apply_map_tensor(id, P, r);
    Tensor2<K> pq = apply_map_tensor(P, id, r) - apply_map_tensor(id, Q, r);
    for (std::size_t x = 0; x < n; ++x) {
        auto Lx = dot.left(x);
        auto QLx = Q * Lx;
        auto PLx = P * Lx;
        auto LQx = dot.left(Q.column(x));
        auto LPx = dot.left(P.column(x));
        auto c1 = apply_map_tensor(id, QLx - LQx, qp) + apply_map_tensor(QLx, id, pq);
        auto c2 = apply_map_tensor(id, PLx - LPx, qp) + apply_map_tensor(QLx, id, qp);
        auto c3 = apply_map_tensor(id, PLx, qp) + apply_map_tensor(QLx - LPx, id, qp);
        if (!rep.failed("coao1")) expect_zero(rep, "coao1", {x}, c1);
        if (!rep.failed("coao2")) expect_zero(rep, "coao2", {x}, c2);
        if (!rep.failed("coao3")) expect_zero(rep, "coao3", {x}, c3);
    }
    return rep;
}

// SA(r) = sum u_i o u_j (x) v_i (x) v_j + u_i (x) v_i <| u_j (x) v_j + u_i (x) u_j (x) v_j o v_i
template <class K>
Tensor3<K> sa_tensor(const Mult<K>& circ, const Mult<K>& tl, const Tensor2<K>& r) {
    std::size_t n = circ.dim();
    if (r.rows() != n || r.cols() != n) throw DimensionMismatch("sa_tensor: r has wrong shape");
    Tensor3<K> t(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const K& rab = r(a, b);
            if (rab.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const K& rcd = r(c, d);
                    if (rcd.is_zero()) continue;
                    K w = rab * rcd;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!circ(a, c, k).is_zero()) t(k, b, d) += w * circ(a, c, k);
                        if (!tl(b, c, k).is_zero()) t(a, k, d) += w * tl(b, c, k);
                        if (!circ(d, b, k).is_zero()) t(a, c, k) += w * circ(d, b, k);
                    }
                }
        }
    return t;
}

template <class K>
Tensor3<K> sa_tensor(const Bundle<K>& a, const Tensor2<K>& r) {
    return sa_tensor(circ_of_sapp(a), a.mult(names::tri_l), r);
}

// f(x) = id (x) R_o(x) + L_<|(x) (x) id,  g(x) = L_o(x) (x) id - id (x) L_o(x)
template <class K>
struct SappActions {
    Mult<K> circ;
    Mult<K> tl;
    explicit SappActions(const Bundle<K>& a) : circ(circ_of_sapp(a)), tl(a.mult(names::tri_l)) {}

    Tensor2<K> f(const Vec<K>& x, const Tensor2<K>& s) const {
        return s * circ.right(x).transpose() + tl.left(x) * s;
    }
    Tensor2<K> g(const Vec<K>& x, const Tensor2<K>& s) const {
        auto L = circ.left(x);
        return L * s - s * L.transpose();
    }
    Tensor2<K> f(std::size_t x, const Tensor2<K>& s) const { return f(basis_vector<K>(circ.dim(), x), s); }
    Tensor2<K> g(std::size_t x, const Tensor2<K>& s) const { return g(basis_vector<K>(circ.dim(), x), s); }
};

template <class K>
CheckReport sapp_invariance_check(const Bundle<K>& a, const Tensor2<K>& s) {
    CheckReport rep("SAPP_INVARIANCE");
    SappActions<K> act(a);
    for (std::size_t x = 0; x < a.dim; ++x)
        if (!expect_zero(rep, "f_invariance", {x}, act.f(x, s))) break;
    for (std::size_t x = 0; x < a.dim; ++x)
        if (!expect_zero(rep, "g_invariance", {x}, act.g(x, s))) break;
    return rep;
}

template <class K>
struct SappComults {
    Comult<K> eta, theta, vartheta;
};

template <class K>
SappComults<K> sapp_comults_from_r(const Bundle<K>& a, const Tensor2<K>& r) {
    SappActions<K> act(a);
    SappComults<K> out{Comult<K>(a.dim), Comult<K>(a.dim), Comult<K>(a.dim)};
    for (std::size_t x = 0; x < a.dim; ++x) {
        out.eta[x] = act.f(x, r);
        out.theta[x] = act.g(x, r);
        out.vartheta[x] = out.eta[x] - out.theta[x];
    }
    return out;
}

template <class K>
CheckReport check_r_bialgebra_conditions_sapp(const Bundle<K>& a, const Tensor2<K>& r) {
    CheckReport rep("R_BIALGEBRA_SAPP");
    SappActions<K> act(a);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    Tensor2<K> s = r + tau(r);
    Tensor3<K> sa = sa_tensor(act.circ, act.tl, r);
    Tensor3<K> tsa = tau12(sa);
    // S = sum_j f(u_j) s (x) v_j and its slot-swapped variant.
    Tensor3<K> S(n), St(n);
    for (std::size_t a0 = 0; a0 < n; ++a0) {
        auto fs = act.f(a0, s);
        for (std::size_t b = 0; b < n; ++b) {
            if (r(a0, b).is_zero()) continue;
            auto eb = basis_vector<K>(n, b);
            S += outer(fs, eb) * r(a0, b);
            St += outer(tau(fs), eb) * r(a0, b);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        auto Rox = act.circ.right(x);
        auto Lox = act.circ.left(x);
        auto Ltx = act.tl.left(x);
        auto co2 = apply_map_tensor(id, id, Rox, S - tsa) - apply_map_tensor(Ltx, id, id, sa);
        Tensor3<K> extra(n);
        auto fxs = act.f(x, s);
        for (std::size_t a0 = 0; a0 < n; ++a0)
            for (std::size_t b = 0; b < n; ++b) {
                if (r(a0, b).is_zero()) continue;
                auto t = outer(fxs, basis_vector<K>(n, b));
                extra += apply_map_tensor(id, act.tl.left(a0), id, t) * r(a0, b);
            }
        auto base3 = sa - St;
        auto co3 = apply_map_tensor(id, id, Rox, base3) + apply_map_tensor(Ltx, id, id, base3) + extra;
        auto co4 = apply_map_tensor(Ltx, id, id, tsa - S) + apply_map_tensor(id, id, Lox, tsa - S);
        auto co5 = apply_map_tensor(Lox + Ltx, id, id, tsa - S);
        if (!rep.failed("pro:co2")) expect_zero(rep, "pro:co2", {x}, co2);
        if (!rep.failed("pro:co3")) expect_zero(rep, "pro:co3", {x}, co3);
        if (!rep.failed("pro:co1")) expect_zero(rep, "pro:co1", {x}, act.g(x, s));
        if (!rep.failed("pro:co4")) expect_zero(rep, "pro:co4", {x}, co4);
        if (!rep.failed("pro:co5")) expect_zero(rep, "pro:co5", {x}, co5);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto mp4 = act.tl.left(y) * tau(act.f(x, s));
            if (!rep.failed("pro:mp4")) expect_zero(rep, "pro:mp4", {x, y}, mp4);
            auto mp5 = act.f(act.tl.basis_product(x, y), s);
            if (!rep.failed("pro:mp5")) expect_zero(rep, "pro:mp5", {x, y}, mp5);
        }
    return rep;
}

enum class Setting { comm, sapp };

inline const char* setting_name(Setting s) { return s == Setting::comm ? "comm" : "sapp"; }

struct RClassification {
    bool is_skew = false;
    bool symmetric_part_invariant = false;
    bool ybe_holds = false;
    bool operator_conditions_hold = false;
    bool sharp_sym_bijective = false;
    std::string verdict = "none";
};

template <class K>
RClassification classify_r(const Bundle<K>& a, const Tensor2<K>& r, Setting setting) {
    RClassification c;
    Tensor2<K> s = r + tau(r);
    c.is_skew = s.is_zero();
    c.sharp_sym_bijective = is_invertible(sharp(s));
    if (setting == Setting::comm) {
        c.symmetric_part_invariant = comm_invariance_check(a, s).pass;
        c.ybe_holds = aybe_tensor(a, r).is_zero();
        if (a.has_op("P") && a.has_op("Q")) {
            auto rep = aaybe_check(a, r);
            c.operator_conditions_hold = !rep.failed("AAYBE1") && !rep.failed("AAYBE2");
        } else {
            c.operator_conditions_hold = true;
        }
    } else {
        c.symmetric_part_invariant = sapp_invariance_check(a, s).pass;
        c.ybe_holds = sa_tensor(a, r).is_zero();
        c.operator_conditions_hold = true;
    }
    if (c.ybe_holds && c.operator_conditions_hold && c.symmetric_part_invariant) {
        if (c.is_skew)
            c.verdict = "triangular";
        else if (c.sharp_sym_bijective)
            c.verdict = "factorizable";
        else
            c.verdict = "quasi-triangular";
    }
    return c;
}

template <class K>
struct TransferResult {
    Bundle<K> sapp;
    Comult<K> vartheta, theta;
    CheckReport report;
};

// Averaging bialgebra (A, ., Delta_r, P, Q) -> SAPP bialgebra, computed along
// both routes: from Delta and from r directly.
template <class K>
TransferResult<K> transfer_quasitriangular(const Bundle<K>& a, const Tensor2<K>& r, const std::string& p = "P",
                                           const std::string& q = "Q") {
    Bundle<K> sp = sapp_from_admissible(a, p, q);
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    Comult<K> d = delta_r(a, r);
    Comult<K> vt(n), th(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto dpx = d(P.column(x));
        vt[x] = apply_map_tensor(Q, id, d[x]) + dpx;
        th[x] = -dpx;
    }
    auto viar = sapp_comults_from_r(sp, r);
    TransferResult<K> out{sp, vt, th, CheckReport("TRANSFER")};
    out.report.absorb(sapp_invariance_check(sp, r + tau(r)));
    expect_zero(out.report, "SAPP-YBE", {}, sa_tensor(sp, r));
    for (std::size_t x = 0; x < n; ++x) {
        if (vt[x] != viar.vartheta[x])
            throw TransferMismatch("vartheta(e_" + std::to_string(x + 1) + ")", residual_of(vt[x]),
                                   residual_of(viar.vartheta[x]));
        if (th[x] != viar.theta[x])
            throw TransferMismatch("theta(e_" + std::to_string(x + 1) + ")", residual_of(th[x]),
                                   residual_of(viar.theta[x]));
    }
    return out;
}

// Linear duals of eta_r, vartheta_r, theta_r written through r^sharp.
template <class K>
struct DualMults {
    Mult<K> circ, tri_r, tri_l;
};

template <class K>
DualMults<K> dual_mults_from_r(const Bundle<K>& a, const Tensor2<K>& r) {
    std::size_t n = a.dim;
    Mult<K> o = circ_of_sapp(a);
    const auto& tr = a.mult(names::tri_r);
    const auto& tl = a.mult(names::tri_l);
    auto rs = sharp(r);
    auto trs = sharp(tau(r));
    DualMults<K> out{Mult<K>(n), Mult<K>(n), Mult<K>(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ai = basis_vector<K>(n, i), bj = basis_vector<K>(n, j);
            auto ra = rs.column(i);
            auto trb = trs.column(j);
            auto c = o.left(ra).transpose().apply(bj) + tl.left(trb).transpose().apply(ai);
            auto t = (o.left(ra) + o.right(ra)).transpose().apply(bj) - tr.right(trb).transpose().apply(ai);
            auto l = o.right(trb).transpose().apply(ai) - o.right(ra).transpose().apply(bj);
            for (std::size_t k = 0; k < n; ++k) {
                out.circ(i, j, k) = c[k];
                out.tri_r(i, j, k) = t[k];
                out.tri_l(i, j, k) = l[k];
            }
        }
    return out;
}

template <class K>
CheckReport sharp_homomorphism_check(const Bundle<K>& a, const Tensor2<K>& r) {
    CheckReport rep("SHARP_HOMOMORPHISM");
    std::size_t n = a.dim;
    auto dm = dual_mults_from_r(a, r);
    auto cm = sapp_comults_from_r(a, r);
    // The closed forms must agree with the dualized comultiplications.
    expect_zero(rep, "dual_circ", {}, (dm.circ - dual_multiplication(cm.eta)));
    expect_zero(rep, "dual_tri_r", {}, (dm.tri_r - dual_multiplication(cm.vartheta)));
    expect_zero(rep, "dual_tri_l", {}, (dm.tri_l - dual_multiplication(cm.theta)));
    const auto& tr = a.mult(names::tri_r);
    const auto& tl = a.mult(names::tri_l);
    auto rs = sharp(r);
    auto mrs = sharp(Tensor2<K>(-tau(r)));
    const char* tag[2] = {"homo_r", "homo_minus_tau_r"};
    const LinearMap<K>* maps[2] = {&rs, &mrs};
    for (int m = 0; m < 2; ++m) {
        const auto& T = *maps[m];
        bool bad_r = false, bad_l = false;
        for (std::size_t i = 0; i < n && !(bad_r && bad_l); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto ta = T.column(i), tb = T.column(j);
                if (!bad_r) {
                    auto res = tr(ta, tb) - T.apply(dm.tri_r.basis_product(i, j));
                    bad_r = !expect_zero(rep, std::string(tag[m]) + "_tri_r", {i, j}, res);
                }
                if (!bad_l) {
                    auto res = tl(ta, tb) - T.apply(dm.tri_l.basis_product(i, j));
                    bad_l = !expect_zero(rep, std::string(tag[m]) + "_tri_l", {i, j}, res);
                }
            }
    }
    return rep;
}

}  // namespace sapp
