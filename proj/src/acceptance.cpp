#include "webkup/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "webkup/dual_canonical.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/gornik.hpp"
#include "webkup/growth.hpp"
#include "webkup/howe.hpp"
#include "webkup/planar.hpp"
#include "webkup/tableaux.hpp"

namespace webkup {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Sign strings up to the given length whose invariant space can be nonzero.
std::vector<SignString> signs_up_to(std::size_t max_len) {
    std::vector<SignString> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        for (SignString& S : all_sign_strings(n))
            if (weight_sum(weight_of_sign_string(S)) % 3 == 0) out.push_back(std::move(S));
    return out;
}

std::vector<GlWeight> howe_weights() {
    std::vector<GlWeight> out;
    for (int n : {3, 6})
        for (GlWeight& l : lambda_3(n, n)) out.push_back(std::move(l));
    return out;
}

std::string counts(std::size_t checks, std::size_t failures) {
    return std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
}

std::string first_failure(const RelationReport& r) { return r.ok() ? "" : "; first: " + r.failures.front(); }

CriterionResult evaluator_agreement() {
    CriterionResult r{1, "evaluator agreement", false, "", 0};
    auto t0 = Clock::now();
    std::size_t pairs = 0, bad = 0;
    for (const SignString& S : signs_up_to(6)) {
        auto B = enumerate_basis(S);
        for (const BasisWeb& u : B)
            for (const BasisWeb& v : B) {
                PlanarWeb w = close(u.web, v.web);
                ++pairs;
                bad += evaluate_closed_rewrite(w) != evaluate_closed_statesum(w);
            }
    }
    const double t = since(t0);
    r.pass = bad == 0 && t < 120;
    r.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " disagreements, limit 120 s";
    return r;
}

// Level indices of w where strands i, i+1 carry (a, b).
std::vector<std::pair<std::size_t, int>> windows(const LadderWeb& w, int a, int b) {
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t t = 0; t <= w.slices().size(); ++t)
        for (std::size_t i = 0; i + 1 < w.strands(); ++i)
            if (w.level(t)[i] == a && w.level(t)[i + 1] == b) out.emplace_back(t, static_cast<int>(i) + 1);
    return out;
}

LadderWeb insert_at(const LadderWeb& w, std::size_t t, const std::vector<Slice>& window) {
    std::vector<Slice> s(w.slices().begin(), w.slices().begin() + static_cast<std::ptrdiff_t>(t));
    s.insert(s.end(), window.begin(), window.end());
    s.insert(s.end(), w.slices().begin() + static_cast<std::ptrdiff_t>(t), w.slices().end());
    return LadderWeb(w.bottom(), std::move(s));
}

bool has_square_face(const PlanarWeb& w) {
    for (const auto& f : w.interior_faces())
        if (f.size() == 4) return true;
    return false;
}

CriterionResult kuperberg_relations() {
    CriterionResult r{2, "Kuperberg relations", false, "", 0};
    LadderWeb circle({3, 0}, {{-1, 1, 1}, {1, 1, 1}});
    LadderWeb tripod({3, 0, 0}, {{-1, 1, 1}, {-1, 2, 1}, {-1, 1, 1}});
    LadderWeb theta = close_ladder(tripod, tripod);
    bool circle_ok = evaluate_closed_statesum(circle) == quantum_int(3) &&
                     evaluate_closed_rewrite(PlanarWeb::from_ladder(circle)) == quantum_int(3);
    LaurentPoly d = quantum_int(2) * quantum_int(3);
    PlanarWeb tp = PlanarWeb::from_ladder(theta);
    bool theta_ok = evaluate_closed_statesum(theta) == d && evaluate_closed_rewrite(tp) == d &&
                    tp.trivalent_count() == 2;

    // Square windows E_{+i} E_{-i} on (2,1) and E_{-i} E_{+i} on (1,2), each
    // equal to the identity plus the opposite order.
    std::mt19937 rng(20240611);
    std::vector<LadderWeb> pool;
    for (const SignString& S : signs_up_to(6)) {
        auto B = enumerate_basis(S);
        for (const BasisWeb& u : B)
            for (const BasisWeb& v : B) pool.push_back(close_ladder(u.web, v.web));
    }
    int made = 0, good = 0;
    for (int attempt = 0; attempt < 10000 && made < 20; ++attempt) {
        const LadderWeb& w = pool[rng() % pool.size()];
        bool left = rng() % 2 == 0;
        auto sites = left ? windows(w, 2, 1) : windows(w, 1, 2);
        if (sites.empty()) continue;
        auto [t, i] = sites[rng() % sites.size()];
        int s = left ? 1 : -1;
        LadderWeb square = insert_at(w, t, {{-s, i, 1}, {s, i, 1}});
        LadderWeb other = insert_at(w, t, {{s, i, 1}, {-s, i, 1}});
        PlanarWeb sq = PlanarWeb::from_ladder(square);
        if (!has_square_face(sq)) continue;
        ++made;
        LaurentPoly lhs = evaluate_closed_statesum(square);
        bool ok = lhs == evaluate_closed_statesum(w) + evaluate_closed_statesum(other) &&
                  lhs == evaluate_closed_rewrite(sq);
        good += ok;
    }
    r.pass = circle_ok && theta_ok && made == 20 && good == 20;
    r.detail = std::string("circle ") + (circle_ok ? "[3]" : "wrong") + ", theta " + (theta_ok ? "[2][3]" : "wrong") +
               ", square relation " + std::to_string(good) + "/" + std::to_string(made) + " generated webs";
    return r;
}

CriterionResult unitriangularity() {
    CriterionResult r{3, "unitriangularity", false, "", 0};
    std::size_t n = 0, bad = 0;
    for (const SignString& S : signs_up_to(6)) {
        BasisMatrix m = basis_matrix(S);
        ++n;
        bad += !(m.is_unitriangular() && m.is_nonnegative());
    }
    r.pass = bad == 0;
    r.detail = std::to_string(n) + " sign strings, " + std::to_string(bad) + " failures";
    return r;
}

CriterionResult canonical_flow_zero() {
    CriterionResult r{4, "canonical flow weight zero", false, "", 0};
    std::size_t webs = 0, bad = 0;
    for (const SignString& S : signs_up_to(6))
        for (const BasisWeb& b : enumerate_basis(S)) {
            ++webs;
            auto flows = enumerate_flows(b.web, b.key);
            bad += !(flows.size() == 1 && flows[0] == b.canonical_flow && flows[0].weight == 0 &&
                     b.canonical_flow.weight == 0);
        }
    r.pass = bad == 0;
    r.detail = std::to_string(webs) + " basis webs, " + std::to_string(bad) + " failures";
    return r;
}

CriterionResult basis_count() {
    CriterionResult r{5, "basis count oracle", false, "", 0};
    std::size_t n = 0, bad = 0;
    for (std::size_t len = 0; len <= 8; ++len)
        for (const SignString& S : all_sign_strings(len)) {
            ++n;
            bad += BigInt(static_cast<long long>(dominant_states(S).size())) != invariant_dimension(S);
        }
    std::size_t weights = 0, std_bad = 0, total_bad = 0;
    for (int k : {1, 2}) {
        BigInt total(0);
        for (const GlWeight& l : lambda_3(3 * k, 3 * k)) {
            ++weights;
            std::size_t dim = web_space(l).dimension();
            std_bad += count_semistandard(k, l) != dim;
            total += BigInt(static_cast<long long>(dim));
        }
        total_bad += total != howe_irrep_dimension(3 * k);
    }
    r.pass = bad == 0 && std_bad == 0 && total_bad == 0;
    r.detail = std::to_string(n) + " sign strings against invariants (" + std::to_string(bad) + " bad), " +
               std::to_string(weights) + " weights against Std (" + std::to_string(std_bad) +
               " bad), totals 10 and " + howe_irrep_dimension(6).to_string() +
               (total_bad ? " mismatched" : " matched");
    return r;
}

CriterionResult schur_relations() {
    CriterionResult r{6, "Schur relations under phi", false, "", 0};
    auto t0 = Clock::now();
    RelationReport rep = verify_schur_relations(3);
    rep.merge(verify_schur_relations(6));
    const double t = since(t0);
    r.pass = rep.ok() && t < 600;
    r.detail = counts(rep.checks, rep.failures.size()) + " over n = 3, 6, limit 600 s" + first_failure(rep);
    return r;
}

CriterionResult inverse_growth_roundtrip() {
    CriterionResult r{7, "inverse growth roundtrip", false, "", 0};
    std::size_t webs = 0, bad = 0;
    for (const GlWeight& l : howe_weights()) {
        const WebSpace& space = web_space(l);
        for (std::size_t k = 0; k < space.dimension(); ++k) {
            ++webs;
            SchurWord x = inverse_growth(space.basis()[k].key, sign_string_of_weight(l));
            bad += !(phi_word(x) == space.basis_vector(k));
        }
    }
    SchurWord tripod = inverse_growth({1, 0, -1}, parse_enhanced_sign_string("+++"));
    SchurWord expected{{3, 0, 0}, {{-1, 1, 1}, {-1, 2, 1}, {-1, 1, 1}}};
    bool example = tripod == expected;
    r.pass = bad == 0 && example;
    r.detail = std::to_string(webs) + " basis webs, " + std::to_string(bad) + " failures; tripod word " +
               tripod.to_string();
    return r;
}

CriterionResult form_identities() {
    CriterionResult r{8, "form identities", false, "", 0};
    std::size_t pairs = 0, form_bad = 0, bar_bad = 0;
    for (const SignString& S : signs_up_to(6)) {
        auto B = enumerate_basis(S);
        std::vector<ExpansionVector> e;
        for (const BasisWeb& b : B) e.push_back(expansion(b.web));
        for (std::size_t a = 0; a < B.size(); ++a)
            for (std::size_t b = 0; b < B.size(); ++b) {
                ++pairs;
                LaurentPoly value = evaluate_closed_statesum(close_ladder(B[a].web, B[b].web));
                bar_bad += !value.is_bar_invariant();
                form_bad += lusztig_form(B[a].web, B[b].web) != lusztig_form(e[a], e[b]);
                if (a == b) {
                    LaurentPoly s(1);
                    for (const auto& [j, c] : e[a].coefficients)
                        if (j != B[a].key) s += c * c;
                    form_bad += lusztig_form(B[a].web, B[a].web) != s;
                }
            }
    }
    RelationReport tau;
    for (const GlWeight& l : howe_weights())
        for (int i = 1; i < static_cast<int>(l.size()); ++i) tau.merge(check_tau_adjunction(l, i));
    r.pass = form_bad == 0 && bar_bad == 0 && tau.ok();
    r.detail = std::to_string(pairs) + " pairs (" + std::to_string(form_bad) + " form, " + std::to_string(bar_bad) +
               " bar failures), tau " + counts(tau.checks, tau.failures.size()) + first_failure(tau);
    return r;
}

CriterionResult center_dimensions() {
    CriterionResult r{9, "center dimensions", false, "", 0};
    std::size_t n = 0, bad = 0;
    for (const SignString& S : signs_up_to(6)) {
        ++n;
        EnhancedSignString E = enhance(S);
        bad += blocks(E).blocks.size() != center_dim(E);
    }
    auto plus3 = center_dim(parse_enhanced_sign_string("+++"));
    auto pm = center_dim(parse_enhanced_sign_string("+-"));
    r.pass = bad == 0 && plus3 == 6 && pm == 3;
    r.detail = std::to_string(n) + " sign strings, " + std::to_string(bad) + " mismatches; +++ -> " +
               std::to_string(plus3) + ", +- -> " + std::to_string(pm);
    return r;
}

CriterionResult semisimplicity() {
    CriterionResult r{10, "semisimplicity bookkeeping", false, "", 0};
    RelationReport rep;
    for (const SignString& S : signs_up_to(6)) rep.merge(check_gornik_dimension(enhance(S)));
    r.pass = rep.ok();
    r.detail = counts(rep.checks, rep.failures.size()) + first_failure(rep);
    return r;
}

CriterionResult dual_canonical() {
    CriterionResult r{11, "dual canonical basis", false, "", 0};
    RelationReport rep;
    std::size_t nontrivial = 0;
    for (const SignString& S : signs_up_to(6)) {
        rep.merge(verify_dual_canonical(S));
        nontrivial += !web_to_dualcan(dual_canonical_basis(S)).is_identity();
    }
    r.pass = rep.ok();
    r.detail = counts(rep.checks, rep.failures.size()) + ", " + std::to_string(nontrivial) +
               " sign strings with a nontrivial change of basis" + first_failure(rep);
    return r;
}

CriterionResult counterexample_search() {
    CriterionResult r{12, "counterexample search", false, "", 0};
    auto t0 = Clock::now();
    CounterexampleSearch s = find_noncanonical_weight_zero(10, std::chrono::seconds(1800));
    const double t = since(t0);
    bool valid = true;
    for (const NoncanonicalFlow& f : s.found) valid &= f.flow.weight == 0 && f.flow.boundary != f.key;
    r.pass = valid && s.complete && t < 1800;
    std::ostringstream os;
    if (!s.found.empty()) {
        const NoncanonicalFlow& f = s.found.front();
        os << s.found.size() << " instances; first S=" << to_string(f.sign) << " J=" << state_to_string(f.key)
           << " flow boundary " << state_to_string(f.flow.boundary);
    } else {
        os << "inconclusive: no basis web with a non-canonical weight-zero flow for |S| <= " << s.frontier;
    }
    os << " (" << s.sign_strings << " sign strings, " << s.webs << " webs, frontier " << s.frontier << ")";
    r.detail = os.str();
    return r;
}

CriterionResult tableaux_bijections() {
    CriterionResult r{13, "tableaux bijections", false, "", 0};
    std::size_t checks = 0, bad = 0;
    for (const SignString& S : signs_up_to(6)) {
        GlWeight mu = weight_of_sign_string(S);
        if (weight_sum(mu) > 6) continue;
        auto B = enumerate_basis(S);
        std::vector<std::vector<Flow>> flows;
        for (const BasisWeb& b : B) flows.push_back(enumerate_flows(b.web));
        std::size_t valid = 0;
        for (const StateString& J : all_state_strings(S.size())) {
            bool conds = satisfies_conds(J, mu);
            valid += conds;
            bool exists = false;
            for (const auto& fs : flows)
                for (const Flow& f : fs) exists |= f.boundary == J;
            ++checks;
            bad += conds != exists;
            if (!conds) continue;
            Tableau T = state_to_tableau(J, mu);
            ++checks;
            bad += !(T.is_column_strict() && tableau_to_state(T) == std::make_pair(J, mu));
            FlowWitness fw = construct_flow(J, mu);
            ++checks;
            bad += !(fw.flow.boundary == J && PlanarWeb::from_ladder(fw.web).is_non_elliptic());
            if (is_dominant_closed(S, J)) {
                GrowthResult g = growth(S, J);
                ++checks;
                bad += !(fw.web == g.web && fw.flow == g.flow && fw.flow.weight == 0 && T.is_semistandard());
            }
        }
        const int k = weight_sum(mu) / 3;
        ++checks;
        bad += count_column_strict(k, mu) != valid;
    }
    for (const GlWeight& l : howe_weights()) {
        const int k = static_cast<int>(l.size()) / 3;
        for (const Tableau& T : semistandard_tableaux(k, l)) {
            ++checks;
            Tableau That = delete_full_entries(T);
            bad += !(That.is_semistandard() && insert_full_entries(That, l) == T);
        }
    }
    r.pass = bad == 0;
    r.detail = counts(checks, bad);
    return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = evaluator_agreement(); break;
            case 2: r = kuperberg_relations(); break;
            case 3: r = unitriangularity(); break;
            case 4: r = canonical_flow_zero(); break;
            case 5: r = basis_count(); break;
            case 6: r = schur_relations(); break;
            case 7: r = inverse_growth_roundtrip(); break;
            case 8: r = form_identities(); break;
            case 9: r = center_dimensions(); break;
            case 10: r = semisimplicity(); break;
            case 11: r = dual_canonical(); break;
            case 12: r = counterexample_search(); break;
            case 13: r = tableaux_bijections(); break;
            default: throw WebError("no acceptance criterion " + std::to_string(id));
        }
    } catch (const WebError&) {
        throw;
    } catch (const std::exception& e) {
        r = CriterionResult{id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = since(t0);
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run_criterion(id));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
       << r.seconds << " s): " << r.detail;
    return os.str();
}

}  // namespace webkup
