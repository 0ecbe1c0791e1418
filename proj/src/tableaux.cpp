#include "webkup/tableaux.hpp"

#include <algorithm>
#include <functional>

#include "webkup/growth.hpp"

namespace webkup {

namespace {

int rows_for(const GlWeight& mu) {
    int d = weight_sum(mu);
    if (d % 3 != 0) throw WebError("tableau: composition size is not a multiple of 3");
    return d / 3;
}

std::array<std::vector<int>, 3> columns_of(const Tableau& T) {
    std::array<std::vector<int>, 3> cols;
    for (const auto& r : T.rows)
        for (int c = 0; c < 3; ++c) cols[c].push_back(r[c]);
    return cols;
}

Tableau from_columns(const std::array<std::vector<int>, 3>& cols, const GlWeight& type) {
    Tableau T;
    T.type = type;
    for (std::size_t r = 0; r < cols[0].size(); ++r) T.rows.push_back({cols[0][r], cols[1][r], cols[2][r]});
    return T;
}

// Fills the rectangle entry by entry: entry i occupies mu_i distinct columns.
// With `semistandard`, each partial filling must stay a left-justified shape.
void fill(int k, const GlWeight& mu, bool semistandard, const std::function<void(const Tableau&)>& visit) {
    std::array<std::vector<int>, 3> cols;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mu.size()) {
            if (cols[0].size() == static_cast<std::size_t>(k) && cols[1].size() == cols[0].size() &&
                cols[2].size() == cols[0].size())
                visit(from_columns(cols, mu));
            return;
        }
        for (unsigned m = 0; m < 8; ++m) {
            if (__builtin_popcount(m) != mu[i]) continue;
            bool ok = true;
            for (int c = 0; c < 3; ++c)
                if ((m >> c & 1) && cols[c].size() >= static_cast<std::size_t>(k)) ok = false;
            if (!ok) continue;
            for (int c = 0; c < 3; ++c)
                if (m >> c & 1) cols[c].push_back(static_cast<int>(i) + 1);
            if (semistandard && !(cols[0].size() >= cols[1].size() && cols[1].size() >= cols[2].size())) ok = false;
            if (ok) rec(i + 1);
            for (int c = 0; c < 3; ++c)
                if (m >> c & 1) cols[c].pop_back();
        }
    };
    rec(0);
}

}  // namespace

bool Tableau::is_column_strict() const {
    for (std::size_t r = 1; r < rows.size(); ++r)
        for (int c = 0; c < 3; ++c)
            if (!(rows[r - 1][c] < rows[r][c])) return false;
    GlWeight count(type.size(), 0);
    for (const auto& r : rows)
        for (int x : r) {
            if (x < 1 || x > static_cast<int>(type.size())) return false;
            ++count[static_cast<std::size_t>(x - 1)];
        }
    return count == type;
}

bool Tableau::is_semistandard() const {
    if (!is_column_strict()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r[0] <= r[1] && r[1] <= r[2]; });
}

StateString hat_state(const StateString& J, const GlWeight& mu) {
    if (J.size() != mu.size()) throw WebError("hat_state: length mismatch");
    StateString out;
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (mu[i] == 1) {
            out.push_back(J[i]);
        } else if (mu[i] == 2) {
            if (J[i] == 1) out.insert(out.end(), {1, 0});
            else if (J[i] == -1) out.insert(out.end(), {0, -1});
            else out.insert(out.end(), {1, -1});
        } else {
            throw WebError("hat_state: composition entries must be 1 or 2");
        }
    }
    return out;
}

bool satisfies_conds(const StateString& J, const GlWeight& mu) {
    int c[3] = {0, 0, 0};
    for (int x : hat_state(J, mu)) ++c[x + 1];
    return c[0] == c[1] && c[1] == c[2];
}

Tableau state_to_tableau(const StateString& J, const GlWeight& mu) {
    if (!satisfies_conds(J, mu)) throw WebError("state_to_tableau: counts of the expanded state differ");
    std::array<std::vector<int>, 3> cols;
    for (std::size_t i = 0; i < J.size(); ++i) {
        int entry = static_cast<int>(i) + 1;
        if (mu[i] == 1) {
            cols[column_of_label(J[i])].push_back(entry);
        } else {
            // The two columns c1 != c2 with c1 + c2 = j.
            int c1 = J[i] == -1 ? 0 : 1;
            int c2 = J[i] == 1 ? 0 : -1;
            cols[column_of_label(c1)].push_back(entry);
            cols[column_of_label(c2)].push_back(entry);
        }
    }
    return from_columns(cols, mu);
}

std::pair<StateString, GlWeight> tableau_to_state(const Tableau& T) {
    if (!T.is_column_strict()) throw WebError("tableau_to_state: tableau is not column strict");
    StateString J(T.type.size(), 0);
    for (const auto& r : T.rows)
        for (int c = 0; c < 3; ++c) J[static_cast<std::size_t>(r[c] - 1)] += label_of_column(c);
    for (std::size_t i = 0; i < J.size(); ++i)
        if (T.type[i] != 1 && T.type[i] != 2) throw WebError("tableau_to_state: type entries must be 1 or 2");
    return {J, T.type};
}

FlowWitness construct_flow(const StateString& J, const GlWeight& mu) {
    if (!satisfies_conds(J, mu)) throw WebError("construct_flow: no flow extends this state string");
    GrowthResult g = grow(sign_string_of_weight(mu), J, GrowthMode::Extended);
    if (!g.terminated) throw std::logic_error("construct_flow: growth did not terminate");
    return {std::move(g.web), std::move(g.flow)};
}

std::uint64_t count_column_strict(int k, const GlWeight& mu) {
    // Only column membership matters, so count subset assignments directly.
    if (weight_sum(mu) != 3 * k) return 0;
    std::uint64_t n = 0;
    fill(k, mu, false, [&](const Tableau&) { ++n; });
    return n;
}

std::uint64_t count_semistandard(int k, const GlWeight& mu) {
    if (weight_sum(mu) != 3 * k) return 0;
    std::uint64_t n = 0;
    fill(k, mu, true, [&](const Tableau&) { ++n; });
    return n;
}

std::vector<Tableau> semistandard_tableaux(int k, const GlWeight& mu) {
    std::vector<Tableau> out;
    if (weight_sum(mu) != 3 * k) return out;
    fill(k, mu, true, [&](const Tableau& T) { out.push_back(T); });
    return out;
}

std::vector<Tableau> column_strict_tableaux(int k, const GlWeight& mu) {
    std::vector<Tableau> out;
    if (weight_sum(mu) != 3 * k) return out;
    fill(k, mu, false, [&](const Tableau& T) { out.push_back(T); });
    return out;
}

Tableau delete_full_entries(const Tableau& T) {
    GlWeight hat_mu;
    std::vector<int> renumber(T.type.size() + 1, 0);
    for (std::size_t i = 0; i < T.type.size(); ++i) {
        if (T.type[i] == 1 || T.type[i] == 2) {
            hat_mu.push_back(T.type[i]);
            renumber[i + 1] = static_cast<int>(hat_mu.size());
        }
    }
    auto cols = columns_of(T);
    for (auto& col : cols) {
        std::vector<int> kept;
        for (int x : col)
            if (renumber[static_cast<std::size_t>(x)] != 0) kept.push_back(renumber[static_cast<std::size_t>(x)]);
        col = std::move(kept);
    }
    return from_columns(cols, hat_mu);
}

Tableau insert_full_entries(const Tableau& That, const GlWeight& mu) {
    std::vector<int> original;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] == 1 || mu[i] == 2) original.push_back(static_cast<int>(i) + 1);
    if (original.size() != That.type.size()) throw WebError("insert_full_entries: composition mismatch");
    auto cols = columns_of(That);
    for (auto& col : cols) {
        for (int& x : col) x = original[static_cast<std::size_t>(x - 1)];
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu[i] == 3) col.push_back(static_cast<int>(i) + 1);
        std::sort(col.begin(), col.end());
    }
    return from_columns(cols, mu);
}

std::uint64_t center_dim(const EnhancedSignString& S) {
    GlWeight mu = weight_of_sign_string(hat(S));
    return count_column_strict(rows_for(mu), mu);
}

}  // namespace webkup
