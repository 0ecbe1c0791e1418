#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "webkup/flows.hpp"
#include "webkup/ladder.hpp"
#include "webkup/laurent.hpp"
#include "webkup/report.hpp"
#include "webkup/signs.hpp"

namespace webkup {

// Sparse coordinates keyed by state string, largest first.
using Coords = std::map<StateString, LaurentPoly, std::greater<StateString>>;

// Square matrix indexed by the dominant keys of one sign string, in
// decreasing lexicographic order.
struct KeyMatrix {
    std::vector<StateString> keys;
    std::vector<std::vector<LaurentPoly>> entries;

    std::size_t size() const { return keys.size(); }
    bool is_identity() const;
    // Zero below the diagonal (rows before columns in key order) and ones on it.
    bool is_unitriangular() const;
    bool is_nonnegative() const;
    friend KeyMatrix operator*(const KeyMatrix& a, const KeyMatrix& b);
};

KeyMatrix bar(const KeyMatrix& m);
KeyMatrix unitriangular_inverse(const KeyMatrix& m);

// Tensor coordinates of the basis webs: row J lists c(S, J, J') over all J'.
struct BasisMatrix {
    SignString sign;
    std::vector<StateString> rows;
    std::vector<Coords> entries;

    LaurentPoly at(std::size_t row, const StateString& column) const;
    // Leading coefficient 1 at the row key and nothing above it.
    bool is_unitriangular() const;
    bool is_nonnegative() const;
    // The square block on the dominant columns.
    KeyMatrix dominant_block() const;
};

BasisMatrix basis_matrix(const SignString& S);

// The matrix B with psi(x) = bar(x) B on dominant tensor coordinates of the
// invariant space; B = bar(C^{-1}) C for the dominant block C.
KeyMatrix bar_on_tensor_coords(const SignString& S);
// Maps dominant tensor coordinates through psi.
std::vector<LaurentPoly> apply_bar(const KeyMatrix& B, const std::vector<LaurentPoly>& x);
bool is_involution(const KeyMatrix& B);

struct DualCanonicalBasis {
    SignString sign;
    std::vector<StateString> keys;
    // Tensor coordinates of each dual canonical vector.
    std::map<StateString, Coords, std::greater<StateString>> vectors;
    // The same vectors in basis-web coordinates.
    std::map<StateString, Coords, std::greater<StateString>> web_coords;
};

enum class CorrectionOrder {
    // Fix the dominant coordinates from the largest down, once each.
    Descending,
    // Fix them smallest first and repeat until nothing changes.
    AscendingToFixpoint,
};

// The bar-symmetric f with p - f in q^{-1} Z[q^{-1}].
LaurentPoly symmetric_part(const LaurentPoly& p);

DualCanonicalBasis dual_canonical_basis(const SignString& S, CorrectionOrder order = CorrectionOrder::Descending);

// d(S, J_u, J_v) with u = e(J_u) + sum_{J_v < J_u} d e(J_v).
KeyMatrix web_to_dualcan(const DualCanonicalBasis& D);

// Bar invariance, the q^{-1} condition, uniqueness under the alternate
// order, unitriangularity and positivity of d, and the pairwise form.
RelationReport verify_dual_canonical(const SignString& S);

struct NoncanonicalFlow {
    SignString sign;
    StateString key;
    LadderWeb web;
    Flow flow;
};

struct CounterexampleSearch {
    std::vector<NoncanonicalFlow> found;
    // The largest length searched completely.
    int frontier = -1;
    std::size_t sign_strings = 0;
    std::size_t webs = 0;
    bool complete = false;
};

// Every basis web with |S| <= max_len carrying a weight-zero flow other than
// its canonical flow. Stops after the current length once the budget is spent.
CounterexampleSearch find_noncanonical_weight_zero(
    int max_len, std::optional<std::chrono::seconds> budget = std::nullopt,
    const std::function<void(int, std::size_t)>& progress = nullptr);

}  // namespace webkup
