#include "webkup/howe.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "webkup/evaluate.hpp"

namespace webkup {

namespace {

bool in_range(const GlWeight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 3; });
}

// The weight a word reaches when labels are allowed to leave 0..3.
GlWeight formal_target(const SchurWord& x) {
    GlWeight w = x.source;
    for (auto it = x.generators.rbegin(); it != x.generators.rend(); ++it) {
        if (it->index < 1 || it->index >= static_cast<int>(w.size()) || (it->sign != 1 && it->sign != -1) ||
            it->power < 1)
            throw WebError("schur word: generator out of range");
        w[it->index - 1] += it->sign * it->power;
        w[it->index] -= it->sign * it->power;
    }
    return w;
}

using Coords = std::map<StateString, LaurentPoly, std::greater<StateString>>;

Coords to_coords(const StateVector& v, const GlWeight& weight) {
    Coords out;
    for (const auto& [s, c] : v) out[boundary_state(s, weight)] += c;
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

void add_into(StateVector& acc, const StateVector& v, const LaurentPoly& c) {
    for (const auto& [s, p] : v) {
        LaurentPoly& slot = acc[s];
        slot += c * p;
        if (slot.is_zero()) acc.erase(s);
    }
}

bool same_vector(const WebVector& a, const WebVector& b) {
    return a.terms == b.terms && (a.is_zero() || a.weight == b.weight);
}

SchurWord word(const GlWeight& lambda, std::vector<Generator> gens) {
    std::erase_if(gens, [](const Generator& g) { return g.power == 0; });
    return SchurWord{lambda, std::move(gens)};
}

std::string weight_text(const GlWeight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

}  // namespace

std::vector<Slice> SchurWord::slices() const {
    std::vector<Slice> out;
    for (auto it = generators.rbegin(); it != generators.rend(); ++it) out.push_back({it->sign, it->index, it->power});
    return out;
}

std::optional<GlWeight> SchurWord::target() const {
    GlWeight w = source;
    if (!in_range(w)) return std::nullopt;
    for (const Slice& s : slices()) {
        auto next = apply_slice(w, s);
        if (!next) return std::nullopt;
        w = std::move(*next);
    }
    return w;
}

SchurWord SchurWord::from_ladder(const LadderWeb& w) {
    SchurWord x{w.bottom(), {}};
    for (auto it = w.slices().rbegin(); it != w.slices().rend(); ++it) x.generators.push_back({it->sign, it->index, it->power});
    return x;
}

std::string SchurWord::to_string() const {
    std::string s;
    for (const Generator& g : generators) {
        s += "E_{" + std::string(g.sign > 0 ? "+" : "-") + std::to_string(g.index) + "}";
        if (g.power != 1) s += "^{(" + std::to_string(g.power) + ")}";
    }
    return s + "1_" + weight_text(source);
}

LaurentPoly WebVector::at(const StateString& j) const {
    auto it = terms.find(j);
    return it == terms.end() ? LaurentPoly() : it->second;
}

WebVector& WebVector::add_scaled(const WebVector& o, const LaurentPoly& c) {
    if (o.is_zero()) return *this;
    if (is_zero()) weight = o.weight;
    else if (weight != o.weight) throw WebError("web vector: weights differ");
    for (const auto& [j, p] : o.terms) {
        LaurentPoly& slot = terms[j];
        slot += c * p;
        if (slot.is_zero()) terms.erase(j);
    }
    return *this;
}

WebSpace::WebSpace(GlWeight weight) : weight_(std::move(weight)) {
    if (!in_range(weight_)) throw WebError("web space: label out of range");
    basis_ = enumerate_basis(sign_string_of_weight(weight_));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const LadderWeb& w = basis_[k].web;
        StateVector v;
        v[forced_state(w.bottom())] = LaurentPoly(1);
        tensors_.push_back(sweep(w, std::move(v)));
        expansions_.push_back(to_coords(tensors_.back(), weight_));
        index_[basis_[k].key] = k;
    }
}

std::optional<std::size_t> WebSpace::index_of(const StateString& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

WebVector WebSpace::basis_vector(std::size_t k) const {
    WebVector v{weight_, {}};
    v.terms[basis_.at(k).key] = LaurentPoly(1);
    return v;
}

StateVector WebSpace::lift(const WebVector& v) const {
    if (!v.is_zero() && v.weight != weight_) throw WebError("web space: vector over another weight");
    StateVector out;
    for (const auto& [j, c] : v.terms) {
        auto k = index_of(j);
        if (!k) throw WebError("web space: key " + state_to_string(j) + " is not a basis web");
        add_into(out, tensors_[*k], c);
    }
    return out;
}

std::optional<WebVector> WebSpace::reduce(const StateVector& v) const {
    Coords rest = to_coords(v, weight_);
    WebVector out{weight_, {}};
    while (!rest.empty()) {
        auto top = rest.begin();
        auto k = index_of(top->first);
        if (!k) return std::nullopt;
        LaurentPoly c = top->second;
        for (const auto& [j, p] : expansions_[*k]) {
            LaurentPoly& slot = rest[j];
            slot -= c * p;
            if (slot.is_zero()) rest.erase(j);
        }
        out.terms[basis_[*k].key] = c;
    }
    return out;
}

const WebSpace& web_space(const GlWeight& weight) {
    static std::mutex mu;
    static std::map<GlWeight, std::unique_ptr<WebSpace>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(weight);
        if (it != cache.end()) return *it->second;
    }
    auto space = std::make_unique<WebSpace>(weight);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(weight, std::move(space));
    return *it->second;
}

bool operator==(const WebOperator& a, const WebOperator& b) {
    auto nonzero = [](const WebOperator& op) {
        std::size_t n = 0;
        for (const auto& [s, col] : op.columns) n += !col.empty();
        return n;
    };
    if (nonzero(a) == 0 && nonzero(b) == 0) return true;
    if (a.source != b.source || a.target != b.target || nonzero(a) != nonzero(b)) return false;
    for (const auto& [s, col] : a.columns) {
        if (col.empty()) continue;
        auto it = b.columns.find(s);
        if (it == b.columns.end() || it->second != col) return false;
    }
    return true;
}

WebOperator operator_of(const LadderWeb& w) {
    WebOperator op{w.bottom(), w.top(), {}};
    for (PackedState s : all_states(w.bottom())) {
        StateVector v;
        v[s] = LaurentPoly(1);
        v = sweep(w, std::move(v));
        if (!v.empty()) op.columns[s] = std::move(v);
    }
    return op;
}

WebOperator operator_of(const SchurElement& x, const GlWeight& target) {
    if (x.terms.empty()) return WebOperator{};
    WebOperator op{x.terms.front().second.source, target, {}};
    for (const auto& [c, w] : x.terms) {
        if (w.source != op.source) throw WebError("schur element: sources differ");
        auto ladder = phi_ladder(w);
        if (!ladder) continue;
        if (ladder->top() != target) throw WebError("schur element: targets differ");
        for (auto& [s, col] : operator_of(*ladder).columns) add_into(op.columns[s], col, c);
    }
    std::erase_if(op.columns, [](const auto& kv) { return kv.second.empty(); });
    return op;
}

std::optional<LadderWeb> phi_generator(int sign, int i, const GlWeight& lambda) {
    return phi_ladder(SchurWord{lambda, {{sign, i, 1}}});
}

std::optional<LadderWeb> phi_ladder(const SchurWord& x) {
    formal_target(x);
    if (!x.target()) return std::nullopt;
    return LadderWeb(x.source, x.slices());
}

WebVector apply(const SchurWord& x, const WebVector& v) {
    if (!v.is_zero() && v.weight != x.source) throw WebError("apply: vector and word do not compose");
    GlWeight target = formal_target(x);
    WebVector zero{target, {}};
    if (v.is_zero() || !x.target()) return zero;
    StateVector t = web_space(x.source).lift(v);
    for (const Slice& s : x.slices()) t = transfer(t, s);
    auto out = web_space(target).reduce(t);
    if (!out) throw std::logic_error("apply: image of " + x.to_string() + " is not in the web span");
    return *out;
}

WebVector apply(const SchurElement& x, const WebVector& v) {
    WebVector out;
    bool first = true;
    for (const auto& [c, w] : x.terms) {
        WebVector img = apply(w, v);
        if (first) out.weight = img.weight;
        first = false;
        out.add_scaled(img, c);
    }
    return out;
}

WebVector phi_word(const SchurWord& x) {
    if (!std::all_of(x.source.begin(), x.source.end(), [](int l) { return l == 0 || l == 3; }))
        throw WebError("phi_word: source weight must have labels 0 and 3 only");
    return apply(x, web_space(x.source).basis_vector(0));
}

WebVector phi_word(const SchurElement& x) {
    WebVector out;
    for (const auto& [c, w] : x.terms) out.add_scaled(phi_word(w), c);
    return out;
}

WebOperator phi_divided_power(int sign, int i, int a, const GlWeight& lambda) {
    if (a < 1) throw WebError("divided power: exponent must be positive");
    SchurWord x{lambda, std::vector<Generator>(static_cast<std::size_t>(a), Generator{sign, i, 1})};
    GlWeight target = formal_target(x);
    auto ladder = phi_ladder(x);
    if (!ladder) return WebOperator{lambda, target, {}};
    WebOperator op = operator_of(*ladder);
    LaurentPoly f = quantum_factorial(a);
    for (auto& [s, col] : op.columns)
        for (auto& [t, c] : col) c = exact_divide(c, f);
    return op;
}

RelationReport verify_schur_relations_at(const GlWeight& lambda) {
    RelationReport rep;
    const int n = static_cast<int>(lambda.size());
    const WebSpace& space = web_space(lambda);
    auto check = [&](const std::string& name, const SchurElement& lhs, const SchurElement& rhs) {
        for (std::size_t k = 0; k < space.dimension(); ++k) {
            WebVector u = space.basis_vector(k);
            rep.record(same_vector(apply(lhs, u), apply(rhs, u)),
                       name + " at " + weight_text(lambda) + " on " + state_to_string(space.basis()[k].key));
        }
    };
    auto E = [](int sign, int i, int a = 1) { return Generator{sign, i, a}; };
    auto one = [&] { return SchurElement{}.add(1, word(lambda, {})); };

    for (int i = 1; i < n; ++i) {
        const int d = lambda[i - 1] - lambda[i];
        for (int j = 1; j < n; ++j) {
            SchurElement lhs;
            lhs.add(1, word(lambda, {E(1, i), E(-1, j)})).add(-1, word(lambda, {E(-1, j), E(1, i)}));
            SchurElement rhs;
            if (i == j) rhs.add(quantum_int(d), word(lambda, {}));
            check("commutator i=" + std::to_string(i) + " j=" + std::to_string(j), lhs, rhs);
        }
        for (int sign : {1, -1}) {
            for (int a = 1; a <= 3; ++a) {
                WebOperator divided = phi_divided_power(sign, i, a, lambda);
                auto slice = phi_ladder(word(lambda, {E(sign, i, a)}));
                WebOperator direct = slice ? operator_of(*slice) : WebOperator{};
                ++rep.checks;
                if (!(divided == direct))
                    rep.failures.push_back("divided power slice " + std::to_string(sign * i) + "^" + std::to_string(a) +
                                           " at " + weight_text(lambda));
                for (int b = 1; b <= 3; ++b) {
                    SchurElement lhs, rhs;
                    lhs.add(1, word(lambda, {E(sign, i, a), E(sign, i, b)}));
                    rhs.add(quantum_binomial(a + b, a), word(lambda, {E(sign, i, a + b)}));
                    check("divided power product", lhs, rhs);
                }
            }
        }
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                if (a == 0 && b == 0) continue;
                SchurElement lhs2, rhs2, lhs3, rhs3;
                lhs2.add(1, word(lambda, {E(1, i, a), E(-1, i, b)}));
                lhs3.add(1, word(lambda, {E(-1, i, b), E(1, i, a)}));
                for (int j = 0; j <= std::min(a, b); ++j) {
                    rhs2.add(quantum_binomial(a - b + d, j), word(lambda, {E(-1, i, b - j), E(1, i, a - j)}));
                    rhs3.add(quantum_binomial(b - a - d, j), word(lambda, {E(1, i, a - j), E(-1, i, b - j)}));
                }
                check("divided power commutation +-", lhs2, rhs2);
                check("divided power commutation -+", lhs3, rhs3);
            }
        const int l = lambda[i - 1], r = lambda[i];
        if (l == 0 && r > 0) check("adjust (0,a)", SchurElement{}.add(1, word(lambda, {E(-1, i, r), E(1, i, r)})), one());
        if (r == 0 && l > 0) check("adjust (a,0)", SchurElement{}.add(1, word(lambda, {E(1, i, l), E(-1, i, l)})), one());
        if (r == 3 && l < 3)
            check("adjust (a,3)", SchurElement{}.add(1, word(lambda, {E(-1, i, 3 - l), E(1, i, 3 - l)})), one());
        if (l == 3 && r < 3)
            check("adjust (3,a)", SchurElement{}.add(1, word(lambda, {E(1, i, 3 - r), E(-1, i, 3 - r)})), one());
        for (int j = 1; j < n; ++j) {
            if (j == i) continue;
            for (int sign : {1, -1}) {
                SchurElement lhs, rhs;
                if (std::abs(i - j) == 1) {
                    lhs.add(1, word(lambda, {E(sign, i), E(sign, i), E(sign, j)}))
                        .add(-quantum_int(2), word(lambda, {E(sign, i), E(sign, j), E(sign, i)}))
                        .add(1, word(lambda, {E(sign, j), E(sign, i), E(sign, i)}));
                    check("Serre", lhs, rhs);
                } else {
                    lhs.add(1, word(lambda, {E(sign, i), E(sign, j)}));
                    rhs.add(1, word(lambda, {E(sign, j), E(sign, i)}));
                    check("distant commutation", lhs, rhs);
                }
            }
        }
    }
    return rep;
}

RelationReport verify_schur_relations(int n) {
    RelationReport rep;
    for (const GlWeight& lambda : lambda_3(n, n)) rep.merge(verify_schur_relations_at(lambda));
    return rep;
}

RelationReport check_tau_adjunction(const GlWeight& lambda, int i) {
    RelationReport rep;
    if (i < 1 || i >= static_cast<int>(lambda.size())) throw WebError("tau adjunction: index out of range");
    auto up = apply_slice(lambda, Slice{1, i, 1});
    if (!in_range(lambda) || !up) return rep;
    const WebSpace& lower = web_space(lambda);
    const WebSpace& upper = web_space(*up);
    const int shift = -1 - (lambda[i - 1] - lambda[i]);
    for (const BasisWeb& u : lower.basis())
        for (const BasisWeb& v : upper.basis()) {
            LaurentPoly lhs = kuperberg_form(u.web.with_slice(Slice{1, i, 1}), v.web);
            LaurentPoly rhs = kuperberg_form(u.web, v.web.with_slice(Slice{-1, i, 1})).shifted(shift);
            rep.record(lhs == rhs, "tau adjunction at " + weight_text(lambda) + " i=" + std::to_string(i) + " u=" +
                                       state_to_string(u.key) + " v=" + state_to_string(v.key));
        }
    return rep;
}

SchurWord inverse_growth(const StateString& J, const EnhancedSignString& S) {
    GrowthResult g = grow(S, J);
    if (!g.terminated) throw WebError("inverse growth: " + state_to_string(J) + " is not a basis key");
    GlWeight cur = g.web.bottom();
    const int k = static_cast<int>(std::count(cur.begin(), cur.end(), 3));
    if (weight_sum(cur) != static_cast<int>(cur.size()) || 3 * k != static_cast<int>(cur.size()))
        throw WebError("inverse growth: weight of S is not in Lambda(n,n)_3");
    // Bubble the 3s leftward, the leftmost first, recording downward swaps.
    std::vector<Slice> down;
    for (int t = 0; t < k; ++t) {
        int p = t;
        while (cur[p] != 3) ++p;
        for (int r = p - 1; r >= t; --r) {
            std::swap(cur[r], cur[r + 1]);
            down.push_back(Slice{-1, r + 1, 3});
        }
    }
    std::vector<Slice> slices(down.rbegin(), down.rend());
    slices.insert(slices.end(), g.web.slices().begin(), g.web.slices().end());
    return SchurWord::from_ladder(LadderWeb(cur, std::move(slices)));
}

BigInt howe_irrep_dimension(int n) {
    if (n < 0 || n % 3 != 0) throw WebError("howe dimension: n must be a multiple of 3");
    const int k = n / 3;
    BigInt num(1), den(1);
    for (int row = 0; row < k; ++row)
        for (int col = 0; col < 3; ++col) {
            num *= BigInt(n + col - row);
            den *= BigInt((3 - col - 1) + (k - row - 1) + 1);
        }
    return num / den;
}

BigInt invariant_dimension(const SignString& S) {
    using W = std::array<int, 3>;
    std::map<W, BigInt> mult{{W{0, 0, 0}, BigInt(1)}};
    int total = 0;
    for (Sign s : S) {
        const int e = s == Sign::Plus ? 1 : -1;
        total += e;
        std::map<W, BigInt> next;
        for (const auto& [w, m] : mult)
            for (int c = 0; c < 3; ++c) {
                W x = w;
                x[c] += e;
                next[x] += m;
            }
        mult = std::move(next);
    }
    if (total % 3 != 0) return BigInt(0);
    const int c = total / 3;
    const W rho{2, 1, 0};
    std::array<int, 3> perm{0, 1, 2};
    BigInt out(0);
    do {
        int inversions = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b];
        W target;
        for (int a = 0; a < 3; ++a) target[a] = rho[a] - rho[perm[a]] + c;
        auto it = mult.find(target);
        if (it == mult.end()) continue;
        if (inversions % 2) out -= it->second;
        else out += it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace webkup
