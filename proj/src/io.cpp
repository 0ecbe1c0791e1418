#include "webkup/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "webkup/dual_canonical.hpp"
#include "webkup/gornik.hpp"
#include "webkup/growth.hpp"

namespace webkup {

namespace {

Json coefficient_json(const BigInt& c) {
    if (c.fits_int64()) return c.to_int64();
    return c.to_string();
}

BigInt coefficient_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw WebError("laurent json: coefficient must be an integer or a decimal string");
}

Json generator_json(int sign, int index, int power) {
    Json g = {{"sign", sign > 0 ? "+" : "-"}, {"index", index}};
    if (power != 1) g["power"] = power;
    return g;
}

Json coords_json(const Coords& c, bool q1) {
    Json out = Json::object();
    for (const auto& [j, p] : c) out[state_to_string(j)] = value_json(p, q1);
    return out;
}

std::string file_key(const std::string& key) {
    if (key.empty()) return "_";
    std::string s;
    for (char c : key) switch (c) {
            case '+': s += 'p'; break;
            case '-': s += 'n'; break;
            default: s += c;
        }
    return s;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back(Json::array({it->exponent, coefficient_json(it->coeff)}));
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw WebError("laurent json: expected an array of [exponent, coefficient] pairs");
    std::vector<LaurentPoly::Term> terms;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw WebError("laurent json: malformed term");
        terms.push_back({t[0].get<int>(), coefficient_from_json(t[1])});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Json value_json(const LaurentPoly& p, bool q1) { return q1 ? coefficient_json(p.at_one()) : to_json(p); }

Json to_json(const LadderWeb& w) {
    Json slices = Json::array();
    for (const Slice& s : w.slices()) slices.push_back(generator_json(s.sign, s.index, s.power));
    return Json{{"bottom_weight", w.bottom()}, {"slices", slices}};
}

LadderWeb ladder_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("bottom_weight") || !j.contains("slices"))
        throw WebError("ladder json: expected bottom_weight and slices");
    GlWeight bottom;
    for (const Json& x : j.at("bottom_weight")) {
        if (!x.is_number_integer()) throw WebError("ladder json: weights must be integers");
        bottom.push_back(x.get<int>());
    }
    std::vector<Slice> slices;
    for (const Json& s : j.at("slices")) {
        if (!s.is_object() || !s.contains("sign") || !s.contains("index")) throw WebError("ladder json: malformed slice");
        const std::string sign = s.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw WebError("ladder json: sign must be \"+\" or \"-\"");
        slices.push_back(Slice{sign == "+" ? 1 : -1, s.at("index").get<int>(), s.value("power", 1)});
    }
    return LadderWeb(std::move(bottom), std::move(slices));
}

LadderWeb read_ladder_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw WebError("cannot open " + path.string());
    try {
        return ladder_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
        throw WebError(path.string() + ": " + e.what());
    }
}

Json to_json(const SchurWord& x) {
    Json out = Json::array();
    for (const Generator& g : x.generators) {
        Json j = {{"sign", g.sign > 0 ? "+" : "-"}, {"index", g.index}, {"power", g.power}};
        out.push_back(j);
    }
    return out;
}

Json to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back(Json::array({r[0], r[1], r[2]}));
    return Json{{"type", t.type}, {"rows", rows}};
}

Json to_json(const ExpansionVector& e, bool q1) {
    Json out = Json::object();
    for (const auto& [j, p] : e.coefficients) out[state_to_string(j)] = value_json(p, q1);
    return out;
}

Json basis_json(const EnhancedSignString& S) {
    Json out = Json::array();
    for (const BasisWeb& b : enumerate_basis(S)) out.push_back(Json{{"key", state_to_string(b.key)}, {"web", to_json(b.web)}});
    return out;
}

Json expansion_matrix_json(const SignString& S, bool q1) {
    BasisMatrix m = basis_matrix(S);
    Json out = Json::object();
    for (std::size_t r = 0; r < m.rows.size(); ++r) out[state_to_string(m.rows[r])] = coords_json(m.entries[r], q1);
    return out;
}

Json dualcan_json(const SignString& S, bool q1) {
    DualCanonicalBasis D = dual_canonical_basis(S);
    KeyMatrix d = web_to_dualcan(D);
    Json vectors = Json::object();
    for (const StateString& J : D.keys) vectors[state_to_string(J)] = coords_json(D.vectors.at(J), q1);
    Json dm = Json::object();
    for (std::size_t r = 0; r < d.size(); ++r) {
        Json row = Json::object();
        for (std::size_t c = 0; c < d.size(); ++c)
            if (!d.entries[r][c].is_zero()) row[state_to_string(d.keys[c])] = value_json(d.entries[r][c], q1);
        dm[state_to_string(d.keys[r])] = row;
    }
    return Json{{"dual_canonical", vectors}, {"d_matrix", dm}};
}

Json blocks_json(const EnhancedSignString& S) {
    BlockDecomposition b = blocks(S);
    Json bl = Json::object();
    for (const auto& [j, n] : b.blocks) bl[state_to_string(j)] = n;
    return Json{{"blocks", bl}, {"sum_of_squares", b.sum_of_squares()}};
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 15u];
    return s;
}

std::filesystem::path Workspace::default_dir() {
    if (const char* d = std::getenv("WEBKUP_CACHE"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "webkup";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "webkup";
    return ".webkup-cache";
}

std::filesystem::path Workspace::path_for(const std::string& kind, const std::string& key) const {
    return dir_ / kind / (file_key(key) + ".json");
}

Json Workspace::artifact(const std::string& kind, const std::string& key, const std::function<Json()>& compute) {
    const auto path = path_for(kind, key);
    if (std::ifstream in(path); in) {
        try {
            Json stored = Json::parse(in);
            if (stored.value("schema", 0) == kSchemaVersion && stored.value("kind", "") == kind &&
                stored.value("key", "") == key && stored.contains("data") &&
                stored.value("hash", "") == content_hash(stored["data"].dump())) {
                ++hits_;
                return stored["data"];
            }
        } catch (const Json::exception&) {
        }
    }
    ++misses_;
    Json data = compute();
    Json record = {{"schema", kSchemaVersion}, {"kind", kind}, {"key", key}, {"hash", content_hash(data.dump())},
                   {"data", data}};
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return data;
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return data;
        out << record.dump(1) << '\n';
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return data;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    return data;
}

}  // namespace webkup
