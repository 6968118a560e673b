// Command-line front end. Check commands print one line per verdict on stdout
// and write a JSON report to --report; data commands print JSON on stdout.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rb/correlators.hpp"
#include "rb/error.hpp"

using json = nlohmann::ordered_json;
using namespace rb;

namespace {

// Input problems, reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
auto load(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw InputError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("ParseError: ") + e.what());
    }
}

json morphism_json(const Category& C, const Morphism& f) {
    json b = json::object();
    for (const auto& [s, m] : f.blocks) b[std::to_string(s)] = json::parse(matrix_json(m));
    return {{"dom", C.str(f.dom)}, {"cod", C.str(f.cod)}, {"blocks", b}};
}

json column_json(const Matrix& m) {
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) a.push_back(m(i, 0).str());
    return a;
}

struct Options {
    std::string category, algebra, bulk = "1", marking, boundary, word, report;
    int genus = 0, max_genus = 1, max_holes = 4, alpha = -1, beta = -1, cut = -1;
    std::string relations;
    bool coend = false;
};

class Run {
public:
    explicit Run(std::string command) { rep_["command"] = std::move(command); }

    json& extra() { return rep_; }
    void checks(const Report& r) {
        for (const auto& it : r.items) {
            json c = {{"name", it.name}, {"pass", it.pass}};
            if (!it.detail.empty()) c["detail"] = it.detail;
            items_.push_back(c);
            if (!it.pass && !first_) first_ = it;
        }
    }
    void verdict(const std::string& key, bool v) {
        verdicts_[key] = v;
        std::cout << key << ": " << (v ? "true" : "false") << "\n";
        if (!v && !first_) first_ = CheckItem{key, false, ""};
    }

    int finish(const std::string& report_path) {
        bool ok = !first_.has_value();
        json out;
        out["tool"] = "rb";
        out["version"] = RB_VERSION;
        out["conventions"] = {
            {"Lambda sign", "first nonzero coordinate of Lambda_K in hom_basis(1, K) is positive"},
            {"Z-move", "rotates the cyclic order of legs so that the second leg becomes distinguished"},
            {"cuts", "side 0 carries the label X, side 1 carries X^v"},
            {"block basis", "sectors in lexicographic label order over increasing cut ids, last vertex fastest"}};
        for (auto& [k, v] : rep_.items()) out[k] = v;
        out["verdicts"] = verdicts_;
        out["checks"] = items_;
        out["pass"] = ok;
        std::cout << "checks: " << items_.size() << ", " << (ok ? "all pass" : "FAILED") << "\n";
        if (!ok) std::cerr << "first failure: " << first_->name << (first_->detail.empty() ? "" : ": " + first_->detail) << "\n";
        if (!report_path.empty()) {
            std::ofstream f(report_path);
            if (!f) throw InputError("cannot write " + report_path);
            f << out.dump(1) << "\n";
        }
        return ok ? 0 : 1;
    }

private:
    json rep_ = json::object();
    json verdicts_ = json::object();
    json items_ = json::array();
    std::optional<CheckItem> first_;
};

std::shared_ptr<const Category> category(const Options& o) {
    if (o.category.empty()) throw InputError("--category is required");
    return load([&] { return load_category(o.category); });
}

std::shared_ptr<const Coend> coend(const Options& o) {
    auto C = category(o);
    return build_coend(C);
}

std::vector<int> signs(const std::string& s) {
    std::vector<int> e;
    for (char c : s) {
        if (c == '+') e.push_back(1);
        else if (c == '-') e.push_back(-1);
        else throw InputError("--boundary takes a string of '+' (outgoing) and '-' (incoming)");
    }
    return e;
}

Marking marking(const Options& o) {
    if (!o.marking.empty()) {
        std::string text = read_file(o.marking);
        return load([&] { return marking_from_json(text); });
    }
    auto e = signs(o.boundary);
    return load([&] { return standard_marking(static_cast<int>(e.size()), e, o.genus); });
}

FrobeniusData algebra(const Options& o, std::shared_ptr<const Category> C) {
    if (o.algebra.empty()) throw InputError("--algebra is required");
    return load([&] { return load_algebra(std::move(C), o.algebra); });
}

std::vector<int> relation_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) {
        for (int r = 1; r <= 13; ++r) out.push_back(r);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("--relations takes a comma-separated list of numbers 1..13");
        }
    }
    return out;
}

json dump_coend(const Coend& K) {
    const Category& C = *K.cat;
    json j;
    json sum = json::array();
    for (const auto& t : K.K.terms) sum.push_back(C.str(t));
    j["summands"] = sum;
    j["normalized"] = K.normalized;
    j["modular"] = K.modular;
    if (!K.normalization_note.empty()) j["normalization note"] = K.normalization_note;
    j["zeta"] = K.zeta.str();
    j["lambda"] = K.lambda.str();
    j["eps"] = morphism_json(C, K.eps);
    j["m"] = morphism_json(C, K.m);
    j["Lambda"] = morphism_json(C, K.Lambda);
    j["Q"] = morphism_json(C, K.Q);
    j["T"] = morphism_json(C, K.T);
    j["S"] = morphism_json(C, K.S);
    j["apo_inv"] = morphism_json(C, K.apo_inv);
    return j;
}

json block_basis_json(const BlockContext& ctx, const BlockSpace& bs) {
    const Category& C = ctx.cat();
    json secs = json::array();
    for (const auto& s : bs.sectors) {
        json lab = json::object();
        for (auto [c, l] : s.label) lab["c" + std::to_string(c)] = C.label_name(l);
        json vs = json::array();
        for (const auto* h : s.vertex) vs.push_back({{"W", C.str(h->W)}, {"dim", h->dim()}});
        secs.push_back({{"labels", lab}, {"offset", s.offset}, {"dim", s.dim}, {"vertices", vs}});
    }
    return {{"dim", bs.dim}, {"sectors", secs}};
}

int run(const std::string& cmd, const std::string& sub, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto timing = [&] {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "time: " << std::fixed << std::setprecision(2) << s << " s\n";
    };
    Run r(sub.empty() ? cmd : cmd + " " + sub);
    int code = 0;

    if (cmd == "check-category") {
        auto C = category(o);
        r.extra()["category"] = C->name();
        Report a = C->check_axioms();
        r.checks(a);
        r.verdict("axioms", a.ok());
        if (o.coend) {
            auto K = build_coend(C);
            Report k = check_coend(*K);
            r.checks(k);
            r.verdict("coend", k.ok());
        }
        code = r.finish(o.report);
    } else if (cmd == "dump-coend") {
        auto K = coend(o);
        json j = dump_coend(*K);
        std::cout << j.dump(1) << "\n";
        if (!o.report.empty()) {
            std::ofstream f(o.report);
            f << j.dump(1) << "\n";
        }
    } else if (cmd == "blocks") {
        auto K = coend(o);
        Object F = load([&] { return K->cat->parse_object(o.bulk); });
        BlockContext ctx(K, F);
        if (sub == "dim") {
            Marking M = marking(o);
            std::cout << block_basis_json(ctx, block_space(ctx, M)).dump(1) << "\n";
        } else if (sub == "move-matrix") {
            Marking M = marking(o);
            MoveWord w = load([&] { return parse_word(o.word); });
            Matrix m = word_matrix(ctx, M, w);
            Marking N = apply_word(M, w);
            json j = {{"source", json::parse(to_json(M))},
                      {"target", json::parse(to_json(N))},
                      {"matrix", json::parse(matrix_json(m))}};
            std::cout << j.dump(1) << "\n";
        } else {
            Report rep = check_relations(ctx, relation_list(o.relations));
            r.checks(rep);
            r.verdict("relations", rep.ok());
            code = r.finish(o.report);
        }
    } else if (cmd == "frobenius") {
        auto K = coend(o);
        FrobeniusData A = algebra(o, K->cat);
        if (sub == "check") {
            Report rep = check_axioms(A);
            r.checks(rep);
            r.verdict("frobenius", rep.ok());
        } else {
            ModularCheck mc = check_modular(A, *K);
            r.checks(mc.report);
            r.extra()["residual"] = morphism_json(*K->cat, mc.residual);
            r.verdict("s_invariant", mc.s_invariant);
            r.verdict("modular", mc.modular);
        }
        code = r.finish(o.report);
    } else if (cmd == "correlator") {
        auto K = coend(o);
        CorrelatorSystem S(algebra(o, K->cat), K);
        if (sub == "build") {
            Marking M = marking(o);
            Matrix u = S.cut_and_sew(M);
            json j = {{"marking", json::parse(to_json(M))},
                      {"basis", block_basis_json(S.blocks(), block_space(S.blocks(), M))},
                      {"correlator", column_json(u)}};
            std::cout << j.dump(1) << "\n";
        } else if (sub == "check") {
            ConsistencyOptions opt;
            opt.max_genus = o.max_genus;
            opt.max_holes = o.max_holes;
            Report rep = check_consistency(S, opt);
            r.checks(rep);
            r.extra()["scope"] = {{"max_genus", o.max_genus}, {"max_holes", o.max_holes}};
            r.verdict("consistent", rep.ok());
            code = r.finish(o.report);
        } else {
            Report rep = verify_roundtrip(S);
            r.checks(rep);
            r.verdict("roundtrip", rep.ok());
            code = r.finish(o.report);
        }
    } else if (cmd == "marking") {
        Marking M = marking(o);
        if (sub == "apply") M = load([&] { return apply_word(M, parse_word(o.word)); });
        if (sub == "sew") M = load([&] { return sew_marking(M, o.alpha, o.beta, o.cut); });
        std::cout << to_json(normalize(M).marking) << "\n";
    }
    timing();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ribbon categories, modular functors and consistent correlator systems"};
    app.require_subcommand(1);
    Options o;
    std::string sub;

    auto cat_opt = [&](CLI::App* a) { a->add_option("--category", o.category, "category JSON file"); };
    auto alg_opt = [&](CLI::App* a) { a->add_option("--algebra", o.algebra, "algebra JSON file")->required(); };
    auto surf_opt = [&](CLI::App* a) {
        a->add_option("--marking", o.marking, "marking JSON file");
        a->add_option("--boundary", o.boundary, "standard marking: one '+' (out) or '-' (in) per circle");
        a->add_option("--genus", o.genus, "standard marking genus")->check(CLI::NonNegativeNumber);
    };
    auto report_opt = [&](CLI::App* a) { a->add_option("--report", o.report, "write the JSON report here"); };

    auto* cc = app.add_subcommand("check-category", "pentagon, hexagon, ribbon and backend axioms");
    cc->add_option("file", o.category, "category JSON file");
    cat_opt(cc);
    cc->add_flag("--coend", o.coend, "also check the coend identities");
    report_opt(cc);

    auto* dc = app.add_subcommand("dump-coend", "summands and structure morphisms of K as JSON");
    dc->add_option("file", o.category, "category JSON file");
    cat_opt(dc);
    report_opt(dc);

    auto* bl = app.add_subcommand("blocks", "pinned block spaces");
    bl->require_subcommand(1);
    for (auto [name, help] : {std::pair{"dim", "block space dimension and basis"},
                              std::pair{"move-matrix", "matrix of a move word"},
                              std::pair{"check-relations", "relation suite W1-W13"}}) {
        auto* s = bl->add_subcommand(name, help);
        cat_opt(s);
        s->add_option("--F", o.bulk, "bulk object, e.g. \"1+e\"");
        if (std::string(name) != "check-relations") surf_opt(s);
        if (std::string(name) == "move-matrix") s->add_option("--word", o.word, "moves, e.g. \"Z@v0 A@c0\"")->required();
        if (std::string(name) == "check-relations") {
            s->add_option("--relations", o.relations, "comma-separated relation numbers (default all)");
            report_opt(s);
        }
    }

    auto* fr = app.add_subcommand("frobenius", "Frobenius algebra checks");
    fr->require_subcommand(1);
    for (auto name : {"check", "modular"}) {
        auto* s = fr->add_subcommand(name, std::string(name) == "check" ? "axioms" : "modular Frobenius algebra");
        cat_opt(s);
        alg_opt(s);
        report_opt(s);
    }

    auto* co = app.add_subcommand("correlator", "correlator systems");
    co->require_subcommand(1);
    for (auto name : {"build", "check", "roundtrip"}) {
        auto* s = co->add_subcommand(name, name);
        cat_opt(s);
        alg_opt(s);
        if (std::string(name) == "build") surf_opt(s);
        if (std::string(name) == "check") {
            s->add_option("--max-genus", o.max_genus)->check(CLI::NonNegativeNumber);
            s->add_option("--max-holes", o.max_holes)->check(CLI::NonNegativeNumber);
        }
        if (std::string(name) != "build") report_opt(s);
    }

    auto* mk = app.add_subcommand("marking", "fine markings");
    mk->require_subcommand(1);
    for (auto name : {"show", "apply", "sew"}) {
        auto* s = mk->add_subcommand(name, name);
        surf_opt(s);
        if (std::string(name) == "apply") s->add_option("--word", o.word)->required();
        if (std::string(name) == "sew") {
            s->add_option("--alpha", o.alpha, "incoming circle")->required();
            s->add_option("--beta", o.beta, "outgoing circle")->required();
            s->add_option("--cut", o.cut, "id of the new cut");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 2;
    }
    CLI::App* top = app.get_subcommands().front();
    if (!top->get_subcommands().empty()) sub = top->get_subcommands().front()->get_name();
    try {
        return run(top->get_name(), sub, o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "ParseError" || e.kind() == "FileError" ? 2 : 1;
    }
}
