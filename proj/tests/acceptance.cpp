// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
// The whole evaluation runs twice (the second time single-threaded) and the
// serialized reports of both runs must agree byte for byte.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "rb/correlators.hpp"
#include "rb/error.hpp"
#include "rb/skeletal.hpp"

using namespace rb;

namespace {

std::string path(const std::string& n) { return std::string(RB_DATA_DIR) + "/" + n + ".json"; }

struct Outcome {
    bool pass = true;
    std::string summary;
    std::ostringstream log;  // serialized report, compared across runs

    void require(bool ok, const std::string& what) {
        log << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok && pass) {
            pass = false;
            summary = what;
        }
    }
    void record(const std::string& tag, const Report& r) {
        for (const auto& it : r.items) log << tag << " | " << it.name << " | " << it.pass << " | " << it.detail << "\n";
    }
};

std::string first_failure(const Report& r) {
    const CheckItem* f = r.first_failure();
    return f ? f->name + (f->detail.empty() ? "" : ": " + f->detail) : "";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Coordinates of S (i_b b_b) in the basis i_a b_a over the generators.
Matrix on_characters(const Coend& K, const Morphism& S) {
    const Category& C = *K.cat;
    std::vector<Morphism> chi;
    for (const auto& x : K.generators) chi.push_back(C.compose(K.i(x), C.coev(x)));
    Matrix out(chi.size(), chi.size(), C.order());
    for (size_t b = 0; b < chi.size(); ++b) {
        auto c = C.coordinates(chi, C.compose(S, chi[b]));
        if (!c) fail("Internal", "S_K does not preserve the span of the characters");
        for (size_t a = 0; a < chi.size(); ++a) out(a, b) = (*c)[a];
    }
    return out;
}

void criterion1(Outcome& o) {
    for (const char* n : {"vect", "toric", "fib2", "dz2_hopf", "sweedler_double"}) {
        Report r = load_category(path(n))->check_axioms();
        o.record(n, r);
        o.require(r.ok(), std::string(n) + " axioms " + first_failure(r));
    }
    auto t = std::dynamic_pointer_cast<const SkeletalCategory>(load_category(path("toric")));
    size_t localized = 0, total = 0;
    for (const auto& [k, v] : t->data().R) {
        SkeletalData d = t->data();
        d.R[k] = -v;
        Report r = SkeletalCategory("mutated", t->order(), d).check_axioms();
        const CheckItem* bad = r.first_failure();
        ++total;
        if (bad && !bad->detail.empty()) ++localized;
        o.log << "R mutation " << k[0] << k[1] << k[2] << " | " << (bad ? bad->name + " | " + bad->detail : "none") << "\n";
    }
    o.require(total > 0 && localized == total,
              "R mutations detected with a location: " + std::to_string(localized) + "/" + std::to_string(total));
}

void criterion2(Outcome& o) {
    std::map<std::string, std::shared_ptr<const Coend>> co;
    for (const char* n : {"toric", "dz2_hopf", "sweedler_double"}) {
        auto t0 = std::chrono::steady_clock::now();
        co[n] = build_coend(load_category(path(n)));
        Report r = check_coend(*co[n]);
        double s = seconds_since(t0);
        std::cerr << "  " << n << " coend: " << s << " s\n";
        o.record(n, r);
        for (const char* id : {"(S_K)^2 = apo_K^{-1}", "(S_K T_K)^3 = zeta (S_K)^2"}) {
            bool found = false, ok = false;
            for (const auto& it : r.items)
                if (it.name == id) found = true, ok = it.pass;
            o.require(found && ok, std::string(n) + " " + id);
        }
        if (std::string(n) == "sweedler_double") o.require(s <= 60, "sweedler_double within one minute");
    }
    const Coend& s = *co["toric"];
    const Coend& h = *co["dz2_hopf"];
    bool labels = s.generators.size() == h.generators.size();
    for (size_t a = 0; labels && a < s.generators.size(); ++a)
        labels = s.cat->label_name(static_cast<int>(a)) == h.cat->label_name(static_cast<int>(a));
    o.require(labels && on_characters(s, s.S) == on_characters(h, h.S) && on_characters(s, s.T) == on_characters(h, h.T),
              "skeletal and Hopf S_K, T_K agree on characters");
}

void criterion3(Outcome& o) {
    auto K = build_coend(load_category(path("toric")));
    auto t0 = std::chrono::steady_clock::now();
    for (const char* F : {"1", "1+e"}) {
        BlockContext ctx(K, K->cat->parse_object(F));
        Report r = check_relations(ctx, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
        o.record(std::string("F=") + F, r);
        o.require(r.ok(), std::string("F=") + F + " relations " + first_failure(r));
    }
    o.require(seconds_since(t0) <= 120, "relation suite within two minutes");
}

struct Systems {
    std::shared_ptr<const Coend> toric, vect, fib2;
    std::unique_ptr<CorrelatorSystem> make(const std::shared_ptr<const Coend>& K, const std::string& a) const {
        return std::make_unique<CorrelatorSystem>(load_algebra(K->cat, path(a)), K);
    }
};

void criterion4(Outcome& o, const Systems& s, int threads) {
    ConsistencyOptions opt;
    opt.max_genus = 0;
    opt.threads = threads;
    Report r = check_consistency(*s.make(s.toric, "toric_1e"), opt);
    o.record("1+e", r);
    for (const char* k : {"algebra", "moves", "sewing", "nondegeneracy cylinder is b_F", "nondegeneracy pairing"})
        o.require(passed(r, k), std::string("1+e genus 0 ") + k + " " + first_failure(r));
    Report f = check_consistency(*s.make(s.toric, "toric_1f"), opt);
    o.record("1+f", f);
    o.require(!passed(f, "algebra trivial twist"), "1+f trivial twist obstruction detected");
}

void criterion5(Outcome& o, const Systems& s, const Report& boson, int threads) {
    ConsistencyOptions opt;
    opt.max_holes = 2;
    opt.threads = threads;
    for (const char* a : {"toric_1e", "toric_1m"}) {
        auto S = s.make(s.toric, a);
        ModularCheck mc = check_modular(S->algebra(), *s.toric);
        o.record(a, mc.report);
        o.require(mc.modular, std::string(a) + " modular");
        const Report& r = std::string(a) == "toric_1e" ? boson : check_consistency(*S, opt);
        o.require(passed(r, "S-invariance"), std::string(a) + " genus 1 S-invariance");
    }
    {
        auto S = s.make(s.toric, "toric_unit");
        const Category& C = *s.toric->cat;
        ModularCheck mc = check_modular(S->algebra(), *s.toric);
        o.record("toric_unit", mc.report);
        o.require(!mc.modular, "toric F=1 is not modular");
        o.require(mc.residual == C.sub(s.toric->Lambda, s.toric->i(Object::unit())), "toric F=1 residual is Lambda_K - eta_K");
        Report r = check_consistency(*S, opt);
        o.require(!passed(r, "S-invariance"), "toric F=1 genus 1 S-invariance fails");
    }
    {
        auto S = s.make(s.vect, "vect_unit");
        ModularCheck mc = check_modular(S->algebra(), *s.vect);
        o.record("vect_unit", mc.report);
        o.require(mc.modular, "Vect F=1 modular");
        o.require(passed(check_consistency(*S, opt), "S-invariance"), "Vect F=1 genus 1 S-invariance");
    }
}

void criterion6(Outcome& o, const Report& boson) {
    size_t n = 0;
    for (const auto& it : boson.items)
        if (it.name.rfind("closed formula", 0) == 0) ++n;
    // 31 boundary patterns with p + q <= 4, at genus 0 and 1
    o.require(n == 62, "closed formula surfaces: " + std::to_string(n) + "/62");
    o.require(passed(boson, "closed formula"), "closed formula equals cut-and-sew " + first_failure(boson));
}

void criterion7(Outcome& o, const Systems& s) {
    std::vector<std::pair<std::shared_ptr<const Coend>, std::string>> all = {
        {s.vect, "vect_unit"}, {s.toric, "toric_unit"}, {s.toric, "toric_1e"}, {s.toric, "toric_1m"}, {s.fib2, "fib2_canonical"}};
    for (const auto& [K, a] : all) {
        Report r = verify_roundtrip(*s.make(K, a));
        o.record(a, r);
        o.require(r.ok(), a + " roundtrip " + first_failure(r));
    }
}

std::vector<Outcome> evaluate(int threads) {
    std::vector<Outcome> out(7);
    auto guard = [&](size_t i, const std::function<void(Outcome&)>& f) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            f(out[i]);
        } catch (const Error& e) {
            out[i].require(false, std::string("error: ") + e.what());
        }
        std::cerr << "criterion " << i + 1 << ": " << seconds_since(t0) << " s\n";
    };
    guard(0, criterion1);
    guard(1, criterion2);
    guard(2, criterion3);
    Systems s;
    s.toric = build_coend(load_category(path("toric")));
    s.vect = build_coend(load_category(path("vect")));
    s.fib2 = build_coend(load_category(path("fib2")));
    ConsistencyOptions full;
    full.threads = threads;
    Report boson;
    guard(5, [&](Outcome& o) {
        boson = check_consistency(*s.make(s.toric, "toric_1e"), full);
        o.record("1+e", boson);
        criterion6(o, boson);
    });
    guard(3, [&](Outcome& o) { criterion4(o, s, threads); });
    guard(4, [&](Outcome& o) { criterion5(o, s, boson, threads); });
    guard(6, [&](Outcome& o) { criterion7(o, s); });
    return out;
}

}  // namespace

int main() {
    const char* names[] = {"category axioms and localized R-mutations",
                           "coend identities and backend agreement",
                           "relation suite W1-W13 on toric F in {1, 1+e}",
                           "genus 0 consistency of 1+e, twist obstruction of 1+f",
                           "modular Frobenius algebras and genus 1 S-invariance",
                           "closed formula equals cut-and-sew, g <= 1, p+q <= 4",
                           "round trip of (omega, eps, Phi)",
                           "byte-identical reports across runs"};
    std::vector<Outcome> a = evaluate(default_threads());
    std::cerr << "second run\n";
    std::vector<Outcome> b = evaluate(1);
    bool same = true;
    std::string where;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].log.str() != b[i].log.str()) {
            same = false;
            if (where.empty()) where = "criterion " + std::to_string(i + 1) + " report differs";
        }
    bool all = true;
    for (size_t i = 0; i < 8; ++i) {
        bool ok = i < 7 ? a[i].pass : same;
        std::string why = i < 7 ? a[i].summary : where;
        all = all && ok;
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << names[i]
                  << (ok ? "" : "  [" + why + "]") << "\n";
    }
    return all ? 0 : 1;
}
