// sapp: batch verification over bundle files.
// Exit codes: 0 all checks pass, 1 some check fails, 2 input or usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>

#include "sapp/acceptance.hpp"
#include "sapp/registry.hpp"

namespace fs = std::filesystem;
using namespace sapp;
using io::ojson;

namespace {

struct Options {
    std::string file, out, tensor = "r", setting = "comm", field, construction, example, corpus, op = "R",
                                      weight = "-1";
    std::vector<std::string> suites;
    std::size_t dim = 0;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    bool timings = false;
};

struct UsageError : Error {
    using Error::Error;
};

int emit(const Options& o, const ojson& doc, int code) {
    std::string text = io::pretty(doc);
    if (o.out.empty())
        std::cout << text;
    else
        io::write_file(o.out, text);
    return code;
}

Setting parse_setting(const std::string& s) {
    if (s == "comm") return Setting::comm;
    if (s == "sapp") return Setting::sapp;
    throw UsageError("--setting must be comm or sapp");
}

template <class F>
int dispatch(const std::string& field, F&& f) {
    if (field == "q") return f(Rational{});
    if (field == "f2") return f(F2{});
    if (field == "f3") return f(F3{});
    if (field == "f5") return f(F5{});
    throw UsageError("unknown field \"" + field + "\"");
}

// The file decides the field; --field, when given, must agree.
template <class F>
int with_file(const Options& o, F&& f) {
    std::string text = io::read_file(o.file);
    std::string field = io::file_field(text);
    if (!o.field.empty() && o.field != field)
        throw ParseError("--field " + o.field + " does not match file field " + field);
    return dispatch(field, [&](auto tag) {
        using K = decltype(tag);
        return f(io::parse_bundle<K>(text), K{});
    });
}

template <class K>
void warn(const Bundle<K>& b) {
    for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";
}

ojson header(const std::string& command, const std::string& field) {
    ojson h;
    h["command"] = command;
    h["field"] = field;
    return h;
}

int cmd_check(const Options& o) {
    if (o.suites.empty()) throw UsageError("check needs at least one --suite");
    return with_file(o, [&](const auto& b, auto tag) {
        using K = decltype(tag);
        ojson doc = header("check", K::field_name());
        doc["input_digest"] = io::bundle_digest(b);
        doc["checks"] = ojson::array();
        bool all = true;
        for (const auto& id : o.suites) {
            auto suite = suite_by_id<K>(id);
            auto t0 = std::chrono::steady_clock::now();
            auto rep = check_suite(b, suite);
            std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
            doc["checks"].push_back(io::report_json(rep, o.timings ? std::optional<double>(ms.count()) : std::nullopt));
            all = all && rep.pass;
        }
        doc["verdict"] = all ? "PASS" : "FAIL";
        return emit(o, doc, all ? 0 : 1);
    });
}

int cmd_classify(const Options& o) {
    Setting s = parse_setting(o.setting);
    return with_file(o, [&](const auto& b, auto tag) {
        using K = decltype(tag);
        ojson doc = header("classify", K::field_name());
        doc["input_digest"] = io::bundle_digest(b);
        doc["tensor"] = o.tensor;
        doc["setting"] = setting_name(s);
        const auto& r = b.tensor(o.tensor);
        doc["tensor_digest"] = hex64(fnv1a(io::tensor_entries_json(r).dump()));
        doc["classification"] = io::classification_json(classify_r(b, r, s));
        return emit(o, doc, 0);
    });
}

template <class K>
Bundle<K> plain_sapp(const Bundle<K>& a) {
    Bundle<K> p(a.dim);
    p.set_mult(names::tri_r, a.mult(names::tri_r));
    p.set_mult(names::tri_l, a.mult(names::tri_l));
    return p;
}

template <class K>
Bundle<K> from_double(const DoubleConstruction<K>& d, Setting s) {
    Bundle<K> out = d.total;
    out.set_form("B", d.form);
    out.set_tensor("r", canonical_r_on_double(d, s).first);
    return out;
}

template <class K>
Bundle<K> construct(const std::string& id, const Bundle<K>& b, const Options& o, int& code) {
    auto r = [&] { return b.tensor(o.tensor); };
    if (id == "perm") return perm_from_averaging(b);
    if (id == "sapp") return sapp_from_admissible(b);
    if (id == "circ") return with_circ(b);
    if (id == "subadjacent-comm") return subadjacent_comm(b);
    if (id == "presapp") return presapp_from_zinbiel(b);
    if (id == "subadjacent-sapp") return subadjacent_sapp(b);
    if (id == "pre-perm") return pre_perm_of_pre_sapp(b);
    if (id == "delta") {
        Bundle<K> out = b;
        out.set_comult("delta", delta_r(b, r()));
        return out;
    }
    if (id == "sapp-comults") {
        Bundle<K> out = b;
        auto cm = sapp_comults_from_r(b, r());
        out.set_comult("vartheta", cm.vartheta);
        out.set_comult("theta", cm.theta);
        return out;
    }
    if (id == "double") {
        auto d = comm_double(b, dual_multiplication(delta_r(b, r())));
        if (!d.report.pass) code = 1;
        return from_double(d, Setting::comm);
    }
    if (id == "sapp-double") {
        auto cm = sapp_comults_from_r(b, r());
        Bundle<K> dual(b.dim);
        dual.set_mult(names::tri_r, dual_multiplication(cm.vartheta));
        dual.set_mult(names::tri_l, dual_multiplication(cm.theta));
        auto d = sapp_manin_double(plain_sapp(b), dual);
        if (!d.report.pass) code = 1;
        return from_double(d, Setting::sapp);
    }
    if (id == "transfer") {
        auto t = transfer_quasitriangular(b, r());
        if (!t.report.pass) code = 1;
        Bundle<K> out = t.sapp;
        out.set_tensor("r", r());
        out.set_comult("vartheta", t.vartheta);
        out.set_comult("theta", t.theta);
        return out;
    }
    if (id == "rb-double") return rb_frobenius_double(b, o.op, K::parse(o.weight));
    if (id == "to-rb") {
        auto c = to_rb(b, r(), parse_setting(o.setting));
        if (!c.report.pass) code = 1;
        Bundle<K> out = c.bundle;
        out.set_form("B", c.B);
        return out;
    }
    if (id == "to-bialgebra") {
        Setting s = parse_setting(o.setting);
        auto c = to_bialgebra(b, b.op(o.op), b.form("B"), s);
        if (!c.report.pass) code = 1;
        Bundle<K> out = c.bundle;
        out.set_tensor("r", c.r);
        if (s == Setting::comm) out.set_comult("delta", delta_r(out, c.r));
        return out;
    }
    if (id == "quadratic-rb-sapp") return quadratic_rb_sapp_from_comm(b, b.form("B"));
    throw UsageError("unknown construction \"" + id + "\"");
}

int cmd_construct(const Options& o) {
    return with_file(o, [&](const auto& b, auto) {
        int code = 0;
        auto out = construct(o.construction, b, o, code);
        warn(out);
        std::string text = io::serialize_bundle(out);
        if (o.out.empty())
            std::cout << text;
        else
            io::write_file(o.out, text);
        return code;
    });
}

int cmd_example(const Options& o) {
    std::string id = o.example;
    if (id == "zero" && o.dim > 0) id += std::to_string(o.dim);
    return dispatch(o.field.empty() ? "q" : o.field, [&](auto tag) {
        using K = decltype(tag);
        std::string text = io::serialize_bundle(catalog_example<K>(id));
        if (o.out.empty())
            std::cout << text;
        else
            io::write_file(o.out, text);
        return 0;
    });
}

template <class K>
int search_on(const Bundle<K>& b, const Options& o) {
    Target t = parse_setting(o.setting) == Setting::comm ? Target::aaybe : Target::sapp_ybe;
    auto values = field_values<K>();
    auto res = exhaust_ybe(b, t, values);
    ojson doc = header("search", K::field_name());
    doc["input_digest"] = io::bundle_digest(b);
    doc["target"] = target_name(t);
    doc["dim"] = b.dim;
    ojson vals = ojson::array();
    for (const auto& v : values) vals.push_back(v.str());
    doc["values"] = vals;
    doc["candidates"] = res.candidates;
    doc["invariant_candidates"] = res.invariant_candidates;
    ojson sols = ojson::array();
    for (const auto& s : res.solutions) {
        ojson e;
        e["r"] = io::tensor_entries_json(s.r);
        e["classification"] = s.classification.verdict;
        e["o_operator"] = s.oop ? ojson(*s.oop) : ojson(nullptr);
        sols.push_back(e);
    }
    doc["solution_count"] = res.solutions.size();
    doc["solutions"] = sols;
    ojson viol = ojson::array();
    for (const auto& v : res.equivalence_violations) viol.push_back(io::tensor_entries_json(v));
    doc["equivalence_violations"] = viol;
    doc["report"] = io::report_json(res.report);
    return emit(o, doc, res.report.pass ? 0 : 1);
}

int cmd_search(const Options& o) {
    if (!o.file.empty()) return with_file(o, [&](const auto& b, auto) { return search_on(b, o); });
    if (o.dim == 0) throw UsageError("search needs a bundle file or --dim");
    return dispatch(o.field.empty() ? "q" : o.field, [&](auto tag) {
        using K = decltype(tag);
        return search_on(catalog_example<K>("zero" + std::to_string(o.dim)), o);
    });
}

int cmd_mutate(const Options& o) {
    return with_file(o, [&](const auto& b, auto tag) {
        using K = decltype(tag);
        MutationScope scope;
        for (const auto& [n, m] : b.mults) scope.mults.push_back(n);
        for (const auto& [n, m] : b.ops) scope.ops.push_back(n);
        auto plan = plan_mutations(b, o.count, o.seed, scope);
        Bundle<K> out = b;
        for (const auto& m : plan) {
            out = perturb(out, m);
            std::cerr << "mutation: " << describe(m) << "\n";
        }
        std::string text = io::serialize_bundle(out);
        if (o.out.empty())
            std::cout << text;
        else
            io::write_file(o.out, text);
        return 0;
    });
}

template <class K>
ojson corpus_entry(const Bundle<K>& b, const std::string& path) {
    ojson e;
    e["file"] = fs::path(path).filename().string();
    e["field"] = K::field_name();
    e["digest"] = io::bundle_digest(b);
    e["round_trip"] = io::parse_bundle<K>(io::serialize_bundle(b)) == b;
    ojson cls = ojson::array();
    for (const auto& [name, r] : b.tensors) {
        if (b.has_mult(names::dot))
            cls.push_back({{"tensor", name}, {"setting", "comm"}, {"verdict", classify_r(b, r, Setting::comm).verdict}});
        if (b.has_mult(names::tri_r) && b.has_mult(names::tri_l))
            cls.push_back({{"tensor", name}, {"setting", "sapp"}, {"verdict", classify_r(b, r, Setting::sapp).verdict}});
    }
    e["classifications"] = cls;
    return e;
}

int cmd_acceptance_suite(const Options& o) {
    ojson corpus = ojson::array();
    bool corpus_ok = true;
    if (!o.corpus.empty()) {
        if (!fs::is_directory(o.corpus)) throw ParseError("corpus " + o.corpus + " is not a directory");
        std::vector<std::string> files;
        for (const auto& e : fs::directory_iterator(o.corpus))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
        if (files.empty()) throw ParseError("corpus " + o.corpus + " has no bundle files");
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::string text = io::read_file(f);
            dispatch(io::file_field(text), [&](auto tag) {
                using K = decltype(tag);
                auto entry = corpus_entry(io::parse_bundle<K>(text), f);
                corpus_ok = corpus_ok && entry["round_trip"].template get<bool>();
                corpus.push_back(entry);
                return 0;
            });
        }
    }
    auto run = acceptance::run_all();
    std::ostream& log = o.out.empty() ? std::cerr : std::cout;
    for (const auto& c : run.criteria) log << acceptance::summary_line(c) << "\n";
    for (const auto& d : run.diagrams) log << "diagram " << acceptance::summary_line(d) << "\n";
    for (const auto& c : run.criteria)
        for (const auto& f : c.findings) log << "finding [" << c.id << "]: " << f << "\n";
    ojson doc = acceptance::run_json(run, o.timings);
    {
        auto a = catalog_example<Rational>("ex_3_25");
        const auto& r = a.tensor("r");
        auto t = transfer_quasitriangular(a, r);
        Bundle<Rational> sp = t.sapp;
        sp.set_comult("vartheta", t.vartheta);
        sp.set_comult("theta", t.theta);
        ojson dg;
        dg["ex_3_25"] = io::bundle_digest(a);
        dg["ex_3_25_double"] = io::bundle_digest(from_double(comm_double(a, dual_multiplication(delta_r(a, r))),
                                                             Setting::comm));
        dg["ex_6_29_derived"] = io::bundle_digest(sp);
        doc["digests"] = dg;
        doc["classifications"] = {{"ex_3_25", classify_r(a, r, Setting::comm).verdict},
                                  {"ex_6_29_derived", classify_r(t.sapp, r, Setting::sapp).verdict}};
    }
    if (!o.corpus.empty()) doc["corpus"] = corpus;
    bool ok = run.pass() && corpus_ok;
    doc["verdict"] = ok ? "PASS" : "FAIL";
    return emit(o, doc, ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of averaging commutative and SAPP bialgebra data"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> fields{"q", "f2", "f3", "f5"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Write output to this file");
        sub->add_option("--field", o.field, "Base field")->check(CLI::IsMember(fields));
    };

    auto* check = app.add_subcommand("check", "Run identity suites on a bundle");
    check->add_option("file", o.file)->required();
    check->add_option("--suite", o.suites, "Suite id, optionally ID:arg,...")->required();
    check->add_flag("--timings", o.timings, "Include wall times (breaks byte determinism)");
    common(check);

    auto* classify = app.add_subcommand("classify", "Classify a tensor r");
    classify->add_option("file", o.file)->required();
    classify->add_option("--tensor", o.tensor);
    classify->add_option("--setting", o.setting)->check(CLI::IsMember({"comm", "sapp"}));
    common(classify);

    auto* construct = app.add_subcommand("construct", "Derive a new bundle");
    construct->add_option("file", o.file)->required();
    construct->add_option("construction", o.construction)->required();
    construct->add_option("--tensor", o.tensor);
    construct->add_option("--setting", o.setting)->check(CLI::IsMember({"comm", "sapp"}));
    construct->add_option("--op", o.op, "Rota-Baxter operator name");
    construct->add_option("--weight", o.weight, "Rota-Baxter weight");
    common(construct);

    auto* example = app.add_subcommand("example", "Write a catalog bundle");
    example->add_option("id", o.example)->required();
    example->add_option("--dim", o.dim);
    common(example);

    auto* search = app.add_subcommand("search", "Exhaust YBE candidates over a finite value set");
    search->add_option("file", o.file);
    search->add_option("--setting", o.setting)->check(CLI::IsMember({"comm", "sapp"}));
    search->add_option("--dim", o.dim, "Search the zero algebra of this dimension");
    common(search);

    auto* mutate = app.add_subcommand("mutate", "Apply seeded entry mutations");
    mutate->add_option("file", o.file)->required();
    mutate->add_option("--seed", o.seed);
    mutate->add_option("--count", o.count);
    common(mutate);

    auto* suite_cmd = app.add_subcommand("acceptance", "Run the full acceptance suite");
    suite_cmd->add_option("--corpus", o.corpus, "Directory of bundle files to include");
    suite_cmd->add_flag("--timings", o.timings);
    suite_cmd->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return cmd_check(o);
        if (*classify) return cmd_classify(o);
        if (*construct) return cmd_construct(o);
        if (*example) return cmd_example(o);
        if (*search) return cmd_search(o);
        if (*mutate) return cmd_mutate(o);
        if (*suite_cmd) return cmd_acceptance_suite(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
