#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>

#include "json.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/howe.hpp"
#include "webkup/ladder.hpp"
#include "webkup/laurent.hpp"
#include "webkup/tableaux.hpp"

namespace webkup {

using Json = nlohmann::ordered_json;

// [[exponent, coefficient], ...] with exponents descending; coefficients
// outside the int64 range are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
// The Laurent form, or the value at q = 1 when q1 is set.
Json value_json(const LaurentPoly& p, bool q1);

// {"bottom_weight": [...], "slices": [{"sign": "+", "index": i, "power": a}]};
// power is written only when it differs from 1.
Json to_json(const LadderWeb& w);
LadderWeb ladder_from_json(const Json& j);
LadderWeb read_ladder_file(const std::filesystem::path& path);

// [{"sign": "+", "index": i, "power": a}, ...] in written order.
Json to_json(const SchurWord& x);
// {"type": [...], "rows": [[...], ...]}.
Json to_json(const Tableau& t);
// {state string: value} with the largest state first.
Json to_json(const ExpansionVector& e, bool q1);

// Per-sign-string artifacts.
Json basis_json(const EnhancedSignString& S);
Json expansion_matrix_json(const SignString& S, bool q1);
Json dualcan_json(const SignString& S, bool q1);
Json blocks_json(const EnhancedSignString& S);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(const std::string& bytes);

// Directory of versioned JSON artifacts keyed by kind and sign string.
class Workspace {
public:
    static constexpr int kSchemaVersion = 1;

    explicit Workspace(std::filesystem::path dir) : dir_(std::move(dir)) {}
    // $WEBKUP_CACHE, else $XDG_CACHE_HOME/webkup, else ~/.cache/webkup.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(const std::string& kind, const std::string& key) const;
    // The stored artifact if present with the current version and a matching
    // hash; otherwise computes, stores atomically, and returns it.
    Json artifact(const std::string& kind, const std::string& key, const std::function<Json()>& compute);

    std::size_t hits() const noexcept { return hits_; }
    std::size_t misses() const noexcept { return misses_; }

private:
    std::filesystem::path dir_;
    std::size_t hits_ = 0, misses_ = 0;
};

}  // namespace webkup
