#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rb/category.hpp"
#include "rb/error.hpp"
#include "rb/hopf.hpp"
#include "rb/skeletal.hpp"

namespace rb {

using json = nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

Scalar scalar_of(const json& v, int order) {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), order);
    if (v.is_number_integer()) return Scalar::parse(std::to_string(v.get<long>()), order);
    fail("ParseError", "field element must be a string, got " + v.dump());
}

const json& field(const json& j, const std::string& k) {
    if (!j.contains(k)) fail("ParseError", "missing field '" + k + "'");
    return j.at(k);
}

std::shared_ptr<const Category> parse_skeletal(const json& j, const std::string& name, int order) {
    SkeletalData d;
    d.simples = field(j, "simples").get<std::vector<std::string>>();
    int n = static_cast<int>(d.simples.size());
    if (n == 0) fail("ParseError", "no simples");
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[d.simples[i]] = i;
    auto lab = [&](const std::string& s) {
        auto it = idx.find(s);
        if (it == idx.end()) fail("UnknownAtom", "simple '" + s + "' not declared");
        return it->second;
    };
    d.duals.assign(n, -1);
    d.duals[0] = 0;
    for (auto& [k, v] : field(j, "duals").items()) d.duals[lab(k)] = lab(v.get<std::string>());
    for (int i = 0; i < n; ++i)
        if (d.duals[i] < 0) fail("ParseError", "no dual given for " + d.simples[i]);
    d.fusion.assign(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a) {
        d.fusion[0][a] = {a};
        d.fusion[a][0] = {a};
    }
    for (auto& [k, v] : field(j, "fusion").items()) {
        auto ab = split(k, ',');
        if (ab.size() != 2) fail("ParseError", "fusion key '" + k + "'");
        std::vector<int> cs;
        for (const auto& c : v) cs.push_back(lab(c.get<std::string>()));
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
            fail("Unsupported", "fusion multiplicities above one are not supported (" + k + ")");
        d.fusion[lab(ab[0])][lab(ab[1])] = cs;
    }
    if (j.contains("F"))
        for (auto& [k, v] : j.at("F").items()) {
            auto parts = split(k, ';');
            if (parts.size() != 3) fail("ParseError", "F key '" + k + "'");
            auto abc = split(parts[0], ','), ef = split(parts[2], ',');
            if (abc.size() != 3 || ef.size() != 2) fail("ParseError", "F key '" + k + "'");
            d.F[{lab(abc[0]), lab(abc[1]), lab(abc[2]), lab(parts[1]), lab(ef[0]), lab(ef[1])}] = scalar_of(v, order);
        }
    if (j.contains("R"))
        for (auto& [k, v] : j.at("R").items()) {
            auto parts = split(k, ';');
            if (parts.size() != 2) fail("ParseError", "R key '" + k + "'");
            auto ab = split(parts[0], ',');
            if (ab.size() != 2) fail("ParseError", "R key '" + k + "'");
            d.R[{lab(ab[0]), lab(ab[1]), lab(parts[1])}] = scalar_of(v, order);
        }
    d.twist.assign(n, Scalar::one(order));
    d.pivot.assign(n, Scalar::one(order));
    for (auto& [k, v] : field(j, "twist").items()) d.twist[lab(k)] = scalar_of(v, order);
    for (auto& [k, v] : field(j, "pivot").items()) d.pivot[lab(k)] = scalar_of(v, order);
    return std::make_shared<SkeletalCategory>(name, order, std::move(d));
}

std::vector<Scalar> sparse_vec(const json& v, int dim, int order) {
    std::vector<Scalar> out(dim, Scalar::zero(order));
    if (v.is_array()) {
        if (static_cast<int>(v.size()) != dim) fail("ParseError", "vector of wrong length");
        for (int i = 0; i < dim; ++i) out[i] = scalar_of(v[i], order);
    } else {
        for (auto& [k, c] : v.items()) out.at(std::stoi(k)) = scalar_of(c, order);
    }
    return out;
}

std::shared_ptr<const Category> parse_hopf(const json& j, const std::string& name, int order) {
    HopfData d;
    d.dim = field(j, "dim").get<int>();
    int n = d.dim;
    d.mult.assign(n, std::vector<std::vector<std::pair<int, Scalar>>>(n));
    for (auto& [k, v] : field(j, "mult").items()) {
        auto ij = split(k, ',');
        int a = std::stoi(ij.at(0)), b = std::stoi(ij.at(1));
        for (auto& [kk, c] : v.items()) d.mult.at(a).at(b).emplace_back(std::stoi(kk), scalar_of(c, order));
    }
    d.unit = sparse_vec(field(j, "unit"), n, order);
    d.comult.assign(n, {});
    for (auto& [k, v] : field(j, "comult").items())
        for (auto& [kk, c] : v.items()) {
            auto jk = split(kk, ',');
            d.comult.at(std::stoi(k)).emplace_back(std::stoi(jk.at(0)), std::stoi(jk.at(1)), scalar_of(c, order));
        }
    d.counit = sparse_vec(field(j, "counit"), n, order);
    d.antipode.assign(n, std::vector<Scalar>(n, Scalar::zero(order)));
    for (auto& [k, v] : field(j, "antipode").items()) d.antipode.at(std::stoi(k)) = sparse_vec(v, n, order);
    d.R.assign(n, std::vector<Scalar>(n, Scalar::zero(order)));
    for (auto& [k, c] : field(j, "R").items()) {
        auto jk = split(k, ',');
        d.R.at(std::stoi(jk.at(0))).at(std::stoi(jk.at(1))) = scalar_of(c, order);
    }
    d.ribbon = sparse_vec(field(j, "ribbon"), n, order);
    for (const auto& mj : field(j, "modules")) {
        HopfData::Module m;
        m.name = field(mj, "name").get<std::string>();
        m.dim = field(mj, "dim").get<size_t>();
        m.action.assign(n, Matrix(m.dim, m.dim, order));
        for (auto& [k, rows] : field(mj, "action").items()) {
            Matrix& a = m.action.at(std::stoi(k));
            if (rows.size() != m.dim) fail("ParseError", "action matrix of module " + m.name + " has wrong size");
            for (size_t r = 0; r < m.dim; ++r) {
                if (rows[r].size() != m.dim) fail("ParseError", "action matrix of module " + m.name + " has wrong size");
                for (size_t c = 0; c < m.dim; ++c) a(r, c) = scalar_of(rows[r][c], order);
            }
        }
        d.modules.push_back(std::move(m));
    }
    return std::make_shared<HopfCategory>(name, order, std::move(d));
}

}  // namespace

std::shared_ptr<const Category> parse_category(const std::string& text, const std::string& name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("invalid JSON: ") + e.what());
    }
    try {
        int version = field(j, "format_version").get<int>();
        if (version != 1) fail("ParseError", "unsupported format_version " + std::to_string(version));
        int order = field(j, "cyclotomic_order").get<int>();
        if (order < 1) fail("ParseError", "cyclotomic_order must be positive");
        std::string backend = field(j, "backend").get<std::string>();
        if (backend == "skeletal") return parse_skeletal(j, name, order);
        if (backend == "hopf") return parse_hopf(j, name, order);
        fail("ParseError", "unknown backend '" + backend + "'");
    } catch (const json::exception& e) {
        fail("ParseError", std::string("malformed category file: ") + e.what());
    }
}

std::shared_ptr<const Category> load_category(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return parse_category(ss.str(), name);
}

}  // namespace rb
