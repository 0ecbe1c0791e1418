#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webkup/flows.hpp"
#include "webkup/growth.hpp"
#include "webkup/ladder.hpp"
#include "webkup/laurent.hpp"
#include "webkup/report.hpp"
#include "webkup/signs.hpp"

namespace webkup {

// E_{sign i}^{(power)}.
struct Generator {
    int sign = 1;
    int index = 1;
    int power = 1;
    friend bool operator==(const Generator& a, const Generator& b) {
        return a.sign == b.sign && a.index == b.index && a.power == b.power;
    }
};

// x 1_source with the generators in written order: the rightmost acts first.
struct SchurWord {
    GlWeight source;
    std::vector<Generator> generators;

    // Slices in the order they are stacked, bottom first.
    std::vector<Slice> slices() const;
    // The running weight after every generator, or nullopt once a label leaves 0..3.
    std::optional<GlWeight> target() const;
    static SchurWord from_ladder(const LadderWeb& w);
    std::string to_string() const;
    friend bool operator==(const SchurWord& a, const SchurWord& b) {
        return a.source == b.source && a.generators == b.generators;
    }
};

// A linear combination of words sharing a source weight.
struct SchurElement {
    std::vector<std::pair<LaurentPoly, SchurWord>> terms;
    SchurElement& add(const LaurentPoly& c, SchurWord w) {
        terms.emplace_back(c, std::move(w));
        return *this;
    }
};

// An element of the web space over `weight`, in basis-web coordinates.
struct WebVector {
    GlWeight weight;
    std::map<StateString, LaurentPoly, std::greater<StateString>> terms;

    EnhancedSignString sign() const { return sign_string_of_weight(weight); }
    bool is_zero() const { return terms.empty(); }
    LaurentPoly at(const StateString& j) const;
    WebVector& add_scaled(const WebVector& o, const LaurentPoly& c);
    friend bool operator==(const WebVector& a, const WebVector& b) {
        return a.weight == b.weight && a.terms == b.terms;
    }
};

// The basis webs of one weight together with their tensor coordinates.
class WebSpace {
public:
    explicit WebSpace(GlWeight weight);

    const GlWeight& weight() const noexcept { return weight_; }
    const std::vector<BasisWeb>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    // Tensor coordinates of the top states of basis web k.
    const StateVector& tensor(std::size_t k) const { return tensors_.at(k); }
    std::optional<std::size_t> index_of(const StateString& key) const;

    WebVector basis_vector(std::size_t k) const;
    StateVector lift(const WebVector& v) const;
    // Back-substitution against the unitriangular basis expansions; nullopt if
    // the tensor does not lie in the span of the basis webs.
    std::optional<WebVector> reduce(const StateVector& v) const;

private:
    GlWeight weight_;
    std::vector<BasisWeb> basis_;
    std::vector<StateVector> tensors_;
    std::vector<std::map<StateString, LaurentPoly, std::greater<StateString>>> expansions_;
    std::map<StateString, std::size_t> index_;
};

// Shared cache of web spaces; safe to call from several threads.
const WebSpace& web_space(const GlWeight& weight);

// A linear map between two tensor spaces, column by column over the source states.
struct WebOperator {
    GlWeight source, target;
    std::map<PackedState, StateVector> columns;
    friend bool operator==(const WebOperator& a, const WebOperator& b);
};
WebOperator operator_of(const LadderWeb& w);
// Sum of the operators of the terms; nullopt target weights contribute zero.
WebOperator operator_of(const SchurElement& x, const GlWeight& target);

// The one-slice web of E_{sign i} 1_lambda, or nullopt for the zero operator.
std::optional<LadderWeb> phi_generator(int sign, int i, const GlWeight& lambda);
// The web of a word; nullopt when the word is zero.
std::optional<LadderWeb> phi_ladder(const SchurWord& x);

// Acts on v; v must live over the source weight of x.
WebVector apply(const SchurWord& x, const WebVector& v);
WebVector apply(const SchurElement& x, const WebVector& v);
// Image of a word whose source has only 0 and 3 labels, applied to the empty web.
WebVector phi_word(const SchurWord& x);
WebVector phi_word(const SchurElement& x);

// E^a 1_lambda built from a unit slices, divided exactly by [a]!.
WebOperator phi_divided_power(int sign, int i, int a, const GlWeight& lambda);

// Checks the commutator, divided power, adjustment and Serre relations on
// every basis web of every weight space of Lambda(n,n)_3, and that each
// divided power slice equals E^a / [a]!.
RelationReport verify_schur_relations(int n);
// The relations at one weight.
RelationReport verify_schur_relations_at(const GlWeight& lambda);

// <E_i u, v> = q^{-1-(l_i - l_{i+1})} <u, E_{-i} v> for all basis webs u over
// lambda and v over lambda + alpha_i.
RelationReport check_tau_adjunction(const GlWeight& lambda, int i);

// A word with source (3^k, 0^{2k}) whose image is the basis web with key J over S.
SchurWord inverse_growth(const StateString& J, const EnhancedSignString& S);

// Dimension of the gl_n irreducible with highest weight (3^k), by hook contents.
BigInt howe_irrep_dimension(int n);
// Dimension of the sl3 invariants in the tensor product of V (for +) and V* (for -),
// from weight multiplicities and the Weyl denominator.
BigInt invariant_dimension(const SignString& S);

}  // namespace webkup
