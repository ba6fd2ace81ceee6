#pragma once

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sapp/oracle.hpp"

namespace sapp::io {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace detail {

// nlohmann::json keeps the last of repeated keys; files must not repeat them.
inline json parse_strict(const std::string& text) {
    std::vector<std::set<std::string>> keys;
    json::parser_callback_t cb = [&keys](int, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::object_start) keys.emplace_back();
        else if (ev == json::parse_event_t::object_end) keys.pop_back();
        else if (ev == json::parse_event_t::key) {
            auto k = parsed.get<std::string>();
            if (!keys.back().insert(k).second) throw ParseError("duplicate key \"" + k + "\"");
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

template <class K>
K scalar_of(const json& v) {
    if (v.is_string()) return K::parse(v.get<std::string>());
    if (v.is_number_integer()) return K::parse(std::to_string(v.get<long long>()));
    throw ParseError("scalar must be a \"p/q\" string or an integer");
}

inline std::size_t index_of(const json& v, std::size_t dim) {
    if (!v.is_number_integer()) throw ParseError("index must be an integer");
    long long i = v.get<long long>();
    if (i < 1 || i > static_cast<long long>(dim))
        throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    return std::size_t(i - 1);
}

inline const json& member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing \"") + key + "\"");
    return *it;
}

inline std::string name_of(const json& obj, std::set<std::string>& seen, const char* section) {
    const auto& n = member(obj, "name");
    if (!n.is_string() || n.get<std::string>().empty()) throw ParseError(std::string(section) + ": bad name");
    auto s = n.get<std::string>();
    if (!seen.insert(s).second) throw ParseError(std::string(section) + ": duplicate name \"" + s + "\"");
    return s;
}

inline void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw ParseError(where + ": unexpected key \"" + it.key() + "\"");
    }
}

// entries: [[i, j, ..., "p/q"], ...] with `arity` 1-based indices each.
template <class K, class Put>
void read_entries(const json& entries, std::size_t arity, std::size_t dim, const std::string& where, Put&& put) {
    if (!entries.is_array()) throw ParseError(where + ": entries must be an array");
    std::set<std::vector<std::size_t>> seen;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != arity + 1) throw ParseError(where + ": entry has wrong length");
        std::vector<std::size_t> ix;
        for (std::size_t a = 0; a < arity; ++a) ix.push_back(index_of(e[a], dim));
        if (!seen.insert(ix).second) throw ParseError(where + ": duplicate entry");
        put(ix, scalar_of<K>(e[arity]));
    }
}

template <class K>
Matrix<K> read_matrix(const json& rows, std::size_t dim, const std::string& where) {
    if (!rows.is_array() || rows.size() != dim) throw ParseError(where + ": matrix needs " + std::to_string(dim) + " rows");
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim) throw ParseError(where + ": ragged matrix row");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = scalar_of<K>(rows[i][j]);
    }
    return m;
}

inline const json& array_member(const json& doc, const char* key) {
    static const json empty = json::array();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    return *it;
}

}  // namespace detail

inline std::string file_field(const std::string& text) {
    json doc = detail::parse_strict(text);
    if (!doc.is_object()) throw ParseError("bundle file must be a JSON object");
    auto it = doc.find("field");
    if (it == doc.end()) return "q";
    if (!it->is_string()) throw ParseError("\"field\" must be a string");
    auto f = it->get<std::string>();
    if (f != "q" && f != "f2" && f != "f3" && f != "f5") throw ParseError("unknown field \"" + f + "\"");
    return f;
}

template <class K>
Bundle<K> parse_bundle(const std::string& text) {
    json doc = detail::parse_strict(text);
    detail::only_keys(doc, {"field", "dim", "mults", "ops", "forms", "tensors", "comults"}, "bundle");
    if (doc.contains("field") && doc["field"] != K::field_name())
        throw ParseError("file field \"" + doc["field"].dump() + "\" does not match " + K::field_name());
    const auto& d = detail::member(doc, "dim");
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64)
        throw ParseError("\"dim\" must be an integer in 1..64");
    std::size_t n = d.get<std::size_t>();
    Bundle<K> b(n);

    std::set<std::string> seen;
    for (const auto& m : detail::array_member(doc, "mults")) {
        detail::only_keys(m, {"name", "entries"}, "mult");
        auto name = detail::name_of(m, seen, "mults");
        Mult<K> mm(n);
        detail::read_entries<K>(detail::member(m, "entries"), 3, n, "mult " + name,
                                [&](const auto& ix, const K& v) { mm(ix[0], ix[1], ix[2]) = v; });
        b.set_mult(name, mm);
    }
    seen.clear();
    for (const auto& o : detail::array_member(doc, "ops")) {
        detail::only_keys(o, {"name", "matrix"}, "op");
        auto name = detail::name_of(o, seen, "ops");
        b.set_op(name, detail::read_matrix<K>(detail::member(o, "matrix"), n, "op " + name));
    }
    seen.clear();
    for (const auto& f : detail::array_member(doc, "forms")) {
        detail::only_keys(f, {"name", "matrix"}, "form");
        auto name = detail::name_of(f, seen, "forms");
        b.set_form(name, detail::read_matrix<K>(detail::member(f, "matrix"), n, "form " + name));
    }
    seen.clear();
    for (const auto& t : detail::array_member(doc, "tensors")) {
        detail::only_keys(t, {"name", "entries"}, "tensor");
        auto name = detail::name_of(t, seen, "tensors");
        Tensor2<K> tt(n, n);
        detail::read_entries<K>(detail::member(t, "entries"), 2, n, "tensor " + name,
                                [&](const auto& ix, const K& v) { tt(ix[0], ix[1]) = v; });
        b.set_tensor(name, tt);
    }
    seen.clear();
    for (const auto& c : detail::array_member(doc, "comults")) {
        detail::only_keys(c, {"name", "entries"}, "comult");
        auto name = detail::name_of(c, seen, "comults");
        Comult<K> cc(n);
        detail::read_entries<K>(detail::member(c, "entries"), 3, n, "comult " + name,
                                [&](const auto& ix, const K& v) { cc[ix[0]](ix[1], ix[2]) = v; });
        b.set_comult(name, cc);
    }
    return b;
}

// Nonzero entries only, names in lexicographic order.
template <class K>
ojson bundle_json(const Bundle<K>& b) {
    std::size_t n = b.dim;
    ojson doc;
    doc["field"] = K::field_name();
    doc["dim"] = n;
    doc["mults"] = ojson::array();
    for (const auto& [name, m] : b.mults) {
        ojson e = ojson::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!m(i, j, k).is_zero()) e.push_back({i + 1, j + 1, k + 1, m(i, j, k).str()});
        doc["mults"].push_back({{"name", name}, {"entries", e}});
    }
    auto matrix = [n](const Matrix<K>& m) {
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < n; ++i) {
            ojson row = ojson::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j).str());
            rows.push_back(row);
        }
        return rows;
    };
    doc["ops"] = ojson::array();
    for (const auto& [name, m] : b.ops) doc["ops"].push_back({{"name", name}, {"matrix", matrix(m)}});
    doc["forms"] = ojson::array();
    for (const auto& [name, m] : b.forms) doc["forms"].push_back({{"name", name}, {"matrix", matrix(m)}});
    doc["tensors"] = ojson::array();
    for (const auto& [name, t] : b.tensors) {
        ojson e = ojson::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!t(i, j).is_zero()) e.push_back({i + 1, j + 1, t(i, j).str()});
        doc["tensors"].push_back({{"name", name}, {"entries", e}});
    }
    doc["comults"] = ojson::array();
    for (const auto& [name, c] : b.comults) {
        ojson e = ojson::array();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!c[k](i, j).is_zero()) e.push_back({k + 1, i + 1, j + 1, c[k](i, j).str()});
        doc["comults"].push_back({{"name", name}, {"entries", e}});
    }
    return doc;
}

namespace detail {

inline void pretty_into(const ojson& v, std::string& out, std::size_t depth) {
    auto flat = [](const ojson& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    std::string pad(2 * depth + 2, ' '), close(2 * depth, ' ');
    if (v.is_object() && !v.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = v.begin(); it != v.end(); ++it, ++i) {
            out += pad + ojson(it.key()).dump() + ": ";
            pretty_into(it.value(), out, depth + 1);
            out += i + 1 < v.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (v.is_array() && !v.empty() && !flat(v)) {
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += pad;
            pretty_into(v[i], out, depth + 1);
            out += i + 1 < v.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (v.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
        out += "]";
    } else {
        out += v.dump();
    }
}

}  // namespace detail

// Two-space indentation with arrays of scalars kept on one line.
inline std::string pretty(const ojson& v) {
    std::string out;
    detail::pretty_into(v, out, 0);
    return out + "\n";
}

template <class K>
std::string serialize_bundle(const Bundle<K>& b) {
    return pretty(bundle_json(b));
}

template <class K>
std::string bundle_digest(const Bundle<K>& b) {
    return hex64(fnv1a(serialize_bundle(b)));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

template <class K>
Bundle<K> load_bundle(const std::string& path) {
    return parse_bundle<K>(read_file(path));
}

// Reports. Indices are shifted to 1-based; times appear only when requested.

inline ojson index_json(const std::vector<std::size_t>& ix) {
    ojson a = ojson::array();
    for (auto i : ix) a.push_back(i + 1);
    return a;
}

inline ojson report_json(const CheckReport& r, std::optional<double> wall_ms = std::nullopt) {
    ojson o;
    o["suite"] = r.suite;
    o["verdict"] = r.pass ? "PASS" : "FAIL";
    if (r.first) {
        ojson v;
        v["equation"] = r.first->equation;
        v["tuple"] = index_json(r.first->tuple);
        ojson res = ojson::array();
        for (const auto& e : r.first->residual) res.push_back({{"index", index_json(e.index)}, {"value", e.value}});
        v["residual"] = res;
        o["counterexample"] = v;
    } else {
        o["counterexample"] = nullptr;
    }
    o["failing"] = r.failing;
    o["notes"] = r.notes;
    if (wall_ms) o["wall_time_ms"] = *wall_ms;
    return o;
}

inline ojson classification_json(const RClassification& c) {
    ojson o;
    o["verdict"] = c.verdict;
    o["is_skew"] = c.is_skew;
    o["symmetric_part_invariant"] = c.symmetric_part_invariant;
    o["ybe_holds"] = c.ybe_holds;
    o["operator_conditions_hold"] = c.operator_conditions_hold;
    o["sharp_sym_bijective"] = c.sharp_sym_bijective;
    return o;
}

template <class K>
ojson tensor_entries_json(const Tensor2<K>& t) {
    ojson e = ojson::array();
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            if (!t(i, j).is_zero()) e.push_back({i + 1, j + 1, t(i, j).str()});
    return e;
}

}  // namespace sapp::io
