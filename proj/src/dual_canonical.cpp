#include "webkup/dual_canonical.hpp"

#include <stdexcept>

#include "webkup/evaluate.hpp"
#include "webkup/growth.hpp"

namespace webkup {

namespace {

void axpy(Coords& acc, const Coords& x, const LaurentPoly& c) {
    for (const auto& [j, p] : x) {
        LaurentPoly& slot = acc[j];
        slot += c * p;
        if (slot.is_zero()) acc.erase(j);
    }
}

LaurentPoly lookup(const Coords& c, const StateString& j) {
    auto it = c.find(j);
    return it == c.end() ? LaurentPoly() : it->second;
}

bool has_nonnegative_power(const LaurentPoly& p) { return !p.is_zero() && p.max_exponent() >= 0; }

KeyMatrix zero_matrix(const std::vector<StateString>& keys) {
    KeyMatrix m{keys, {}};
    m.entries.assign(keys.size(), std::vector<LaurentPoly>(keys.size()));
    return m;
}

struct Expansions {
    std::vector<StateString> keys;
    std::vector<Coords> rows;
};

Expansions expansions_of(const SignString& S) {
    Expansions e;
    for (const BasisWeb& b : enumerate_basis(S)) {
        e.keys.push_back(b.key);
        Coords c;
        for (auto& [j, p] : expansion(b.web).coefficients) c[j] = p;
        e.rows.push_back(std::move(c));
    }
    return e;
}

}  // namespace

bool KeyMatrix::is_identity() const {
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c < size(); ++c)
            if (entries[r][c] != LaurentPoly(r == c ? 1 : 0)) return false;
    return true;
}

bool KeyMatrix::is_unitriangular() const {
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c <= r; ++c)
            if (entries[r][c] != LaurentPoly(r == c ? 1 : 0)) return false;
    return true;
}

bool KeyMatrix::is_nonnegative() const {
    for (const auto& row : entries)
        for (const auto& p : row)
            if (!p.is_nonnegative()) return false;
    return true;
}

KeyMatrix operator*(const KeyMatrix& a, const KeyMatrix& b) {
    if (a.keys != b.keys) throw WebError("key matrix: shapes differ");
    KeyMatrix m = zero_matrix(a.keys);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a.entries[r][k].is_zero()) continue;
            for (std::size_t c = 0; c < a.size(); ++c)
                if (!b.entries[k][c].is_zero()) m.entries[r][c] += a.entries[r][k] * b.entries[k][c];
        }
    return m;
}

KeyMatrix bar(const KeyMatrix& m) {
    KeyMatrix out = m;
    for (auto& row : out.entries)
        for (auto& p : row) p = bar(p);
    return out;
}

KeyMatrix unitriangular_inverse(const KeyMatrix& m) {
    if (!m.is_unitriangular()) throw std::logic_error("unitriangular_inverse: matrix is not unitriangular");
    const std::size_t n = m.size();
    KeyMatrix x = zero_matrix(m.keys);
    for (std::size_t r = n; r-- > 0;) {
        x.entries[r][r] = LaurentPoly(1);
        for (std::size_t c = r + 1; c < n; ++c) {
            LaurentPoly s;
            for (std::size_t k = r + 1; k <= c; ++k)
                if (!m.entries[r][k].is_zero() && !x.entries[k][c].is_zero()) s += m.entries[r][k] * x.entries[k][c];
            x.entries[r][c] = -s;
        }
    }
    return x;
}

LaurentPoly BasisMatrix::at(std::size_t row, const StateString& column) const { return lookup(entries.at(row), column); }

bool BasisMatrix::is_unitriangular() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Coords& c = entries[r];
        if (c.empty() || c.begin()->first != rows[r] || c.begin()->second != LaurentPoly(1)) return false;
    }
    return true;
}

bool BasisMatrix::is_nonnegative() const {
    for (const Coords& c : entries)
        for (const auto& [j, p] : c)
            if (!p.is_nonnegative()) return false;
    return true;
}

KeyMatrix BasisMatrix::dominant_block() const {
    KeyMatrix m = zero_matrix(rows);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) m.entries[r][c] = at(r, rows[c]);
    return m;
}

BasisMatrix basis_matrix(const SignString& S) {
    Expansions e = expansions_of(S);
    return BasisMatrix{S, std::move(e.keys), std::move(e.rows)};
}

KeyMatrix bar_on_tensor_coords(const SignString& S) {
    KeyMatrix C = basis_matrix(S).dominant_block();
    return bar(unitriangular_inverse(C)) * C;
}

std::vector<LaurentPoly> apply_bar(const KeyMatrix& B, const std::vector<LaurentPoly>& x) {
    if (x.size() != B.size()) throw WebError("apply_bar: length mismatch");
    std::vector<LaurentPoly> out(B.size());
    for (std::size_t r = 0; r < B.size(); ++r) {
        if (x[r].is_zero()) continue;
        LaurentPoly b = bar(x[r]);
        for (std::size_t c = 0; c < B.size(); ++c)
            if (!B.entries[r][c].is_zero()) out[c] += b * B.entries[r][c];
    }
    return out;
}

bool is_involution(const KeyMatrix& B) { return (bar(B) * B).is_identity(); }

LaurentPoly symmetric_part(const LaurentPoly& p) {
    LaurentPoly f;
    for (const auto& t : p.terms()) {
        if (t.exponent < 0) continue;
        f.add_monomial(t.exponent, t.coeff);
        if (t.exponent > 0) f.add_monomial(-t.exponent, t.coeff);
    }
    return f;
}

DualCanonicalBasis dual_canonical_basis(const SignString& S, CorrectionOrder order) {
    Expansions e = expansions_of(S);
    DualCanonicalBasis D{S, e.keys, {}, {}};
    const std::size_t n = e.keys.size();
    // Keys are in decreasing order, so the smallest comes last.
    for (std::size_t r = n; r-- > 0;) {
        const StateString& J = e.keys[r];
        Coords web{{J, LaurentPoly(1)}};
        Coords tensor = e.rows[r];
        auto correct = [&](std::size_t k) {
            const StateString& K = e.keys[k];
            LaurentPoly p = lookup(tensor, K);
            if (!has_nonnegative_power(p)) return false;
            LaurentPoly f = symmetric_part(p);
            axpy(web, D.web_coords.at(K), -f);
            axpy(tensor, D.vectors.at(K), -f);
            return true;
        };
        if (order == CorrectionOrder::Descending) {
            for (std::size_t k = r + 1; k < n; ++k) correct(k);
        } else {
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t k = n; k-- > r + 1;) changed |= correct(k);
            }
        }
        D.vectors[J] = std::move(tensor);
        D.web_coords[J] = std::move(web);
    }
    return D;
}

KeyMatrix web_to_dualcan(const DualCanonicalBasis& D) {
    KeyMatrix A = zero_matrix(D.keys);
    for (std::size_t r = 0; r < D.keys.size(); ++r)
        for (std::size_t c = 0; c < D.keys.size(); ++c) A.entries[r][c] = lookup(D.web_coords.at(D.keys[r]), D.keys[c]);
    return unitriangular_inverse(A);
}

RelationReport verify_dual_canonical(const SignString& S) {
    RelationReport rep;
    const std::string name = to_string(S);
    DualCanonicalBasis D = dual_canonical_basis(S);
    KeyMatrix B = bar_on_tensor_coords(S);
    rep.record(is_involution(B), "bar involution on " + name);
    for (const StateString& J : D.keys) {
        const Coords& v = D.vectors.at(J);
        std::vector<LaurentPoly> dom;
        for (const StateString& K : D.keys) dom.push_back(lookup(v, K));
        rep.record(apply_bar(B, dom) == dom, "bar invariance of " + state_to_string(J) + " over " + name);
        bool web_symmetric = true;
        for (const auto& [K, p] : D.web_coords.at(J)) web_symmetric &= p.is_bar_invariant();
        rep.record(web_symmetric, "bar-symmetric web coordinates of " + state_to_string(J) + " over " + name);
        bool lower = !v.empty() && v.begin()->first == J && v.begin()->second == LaurentPoly(1);
        for (const auto& [K, p] : v)
            if (K != J) lower &= p.in_negative_part();
        rep.record(lower, "off-leading coefficients of " + state_to_string(J) + " over " + name);
    }
    DualCanonicalBasis alt = dual_canonical_basis(S, CorrectionOrder::AscendingToFixpoint);
    rep.record(alt.vectors == D.vectors && alt.web_coords == D.web_coords, "uniqueness over " + name);
    KeyMatrix d = web_to_dualcan(D);
    rep.record(d.is_unitriangular(), "web to dual canonical is unitriangular over " + name);
    rep.record(d.is_nonnegative(), "web to dual canonical is positive over " + name);
    for (const StateString& J : D.keys)
        for (const StateString& K : D.keys) {
            LaurentPoly f;
            const Coords& a = D.vectors.at(J);
            const Coords& b = D.vectors.at(K);
            for (const auto& [j, p] : a) f += p * lookup(b, j);
            if (J == K) f -= LaurentPoly(1);
            rep.record(f.in_negative_part() || f.is_zero(),
                       "form of " + state_to_string(J) + " and " + state_to_string(K) + " over " + name);
        }
    return rep;
}

CounterexampleSearch find_noncanonical_weight_zero(int max_len, std::optional<std::chrono::seconds> budget,
                                                   const std::function<void(int, std::size_t)>& progress) {
    CounterexampleSearch out;
    auto start = std::chrono::steady_clock::now();
    for (int len = 0; len <= max_len; ++len) {
        for (std::uint32_t m = 0; m < (1u << len); ++m) {
            SignString S;
            int total = 0;
            for (int i = 0; i < len; ++i) {
                bool minus = (m >> i) & 1u;
                S.push_back(minus ? Sign::Minus : Sign::Plus);
                total += minus ? -1 : 1;
            }
            if (total % 3 != 0) continue;
            ++out.sign_strings;
            for (const BasisWeb& b : enumerate_basis(S)) {
                ++out.webs;
                for (const auto& [J, p] : expansion(b.web).coefficients) {
                    if (J == b.key || p.coefficient(0).is_zero()) continue;
                    for (Flow& f : enumerate_flows(b.web, J))
                        if (f.weight == 0) out.found.push_back({S, b.key, b.web, std::move(f)});
                }
            }
        }
        out.frontier = len;
        if (progress) progress(len, out.found.size());
        if (budget && std::chrono::steady_clock::now() - start > *budget) break;
    }
    out.complete = out.frontier == max_len;
    return out;
}

}  // namespace webkup
