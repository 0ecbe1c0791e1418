#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <optional>

#include "webkup/acceptance.hpp"
#include "webkup/dual_canonical.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/growth.hpp"
#include "webkup/howe.hpp"
#include "webkup/io.hpp"
#include "webkup/planar.hpp"
#include "webkup/render.hpp"
#include "webkup/tableaux.hpp"

namespace webkup {

namespace {

struct Options {
    bool q1 = false;
    bool no_cache = false;
    std::string cache_dir;
    std::string sign, state, file, method = "statesum", flow_state, output;
    int k = 1;
    int max_len = 10;
    int budget = 1800;
    bool canonical = false;
    std::vector<int> only;
};

class Context {
public:
    Context(const Options& o, std::ostream& out) : o_(o), out_(out) {
        if (!o.no_cache) ws_.emplace(o.cache_dir.empty() ? Workspace::default_dir() : std::filesystem::path(o.cache_dir));
    }

    Json cached(const std::string& kind, const std::string& key, const std::function<Json()>& f) {
        return ws_ ? ws_->artifact(kind, key, f) : f();
    }

    void print(const Json& j) { out_ << j.dump(2) << '\n'; }

    const Options& o_;
    std::ostream& out_;
    std::optional<Workspace> ws_;
};

// Sign strings such as "-+" look like options; they are escaped before parsing.
constexpr const char* kSignEscape = "sign:";

bool looks_like_sign_token(const std::string& t) {
    if (t.empty() || t[0] != '-' || t == "-" || t == "--") return false;
    return t.find_first_not_of("o+-x") == std::string::npos;
}

EnhancedSignString sign_arg(std::string s) {
    if (s.rfind(kSignEscape, 0) == 0) s.erase(0, std::char_traits<char>::length(kSignEscape));
    return parse_enhanced_sign_string(s);
}

int cmd_enumerate(Context& c) {
    EnhancedSignString S = sign_arg(c.o_.sign);
    c.print(c.cached("basis", to_string(S), [&] { return basis_json(S); }));
    return 0;
}

int cmd_eval(Context& c) {
    LadderWeb w = read_ladder_file(c.o_.file);
    if (!w.is_closed()) throw WebError("eval: the web is not closed");
    PlanarWeb p = PlanarWeb::from_ladder(w);
    LaurentPoly v;
    if (c.o_.method == "statesum") {
        v = evaluate_closed_statesum(w);
    } else if (c.o_.method == "rewrite") {
        v = evaluate_closed_rewrite(p);
    } else {
        v = evaluate_closed_statesum(w);
        if (v != evaluate_closed_rewrite(p)) {
            c.out_ << "evaluators disagree\n";
            return 1;
        }
    }
    c.out_ << (c.o_.q1 ? v.at_one().to_string() : v.to_string()) << '\n';
    return 0;
}

int cmd_expand(Context& c) {
    LadderWeb w = read_ladder_file(c.o_.file);
    if (!w.bottom_is_empty()) throw WebError("expand: the bottom boundary must be empty");
    c.print(to_json(expansion(w), c.o_.q1));
    return 0;
}

int cmd_dualcan(Context& c) {
    SignString S = hat(sign_arg(c.o_.sign));
    std::string kind = c.o_.q1 ? "dualcan-q1" : "dualcan";
    c.print(c.cached(kind, to_string(S), [&] { return dualcan_json(S, c.o_.q1); }));
    return 0;
}

int cmd_howe_verify(Context& c) {
    const int n = 3 * c.o_.k;
    if (c.o_.k < 1) throw WebError("howe-verify: k must be positive");
    RelationReport rel = verify_schur_relations(n);
    RelationReport tau, round;
    for (const GlWeight& l : lambda_3(n, n)) {
        for (int i = 1; i < n; ++i) tau.merge(check_tau_adjunction(l, i));
        const WebSpace& space = web_space(l);
        for (std::size_t b = 0; b < space.dimension(); ++b) {
            SchurWord x = inverse_growth(space.basis()[b].key, sign_string_of_weight(l));
            round.record(phi_word(x) == space.basis_vector(b), "roundtrip " + state_to_string(space.basis()[b].key));
        }
    }
    auto line = [&](const char* name, const RelationReport& r) {
        c.out_ << (r.ok() ? "PASS " : "FAIL ") << name << ": " << r.summary() << '\n';
    };
    line("schur relations", rel);
    line("tau adjunction", tau);
    line("inverse growth", round);
    return rel.ok() && tau.ok() && round.ok() ? 0 : 1;
}

int cmd_center_dim(Context& c) {
    c.out_ << center_dim(sign_arg(c.o_.sign)) << '\n';
    return 0;
}

int cmd_blocks(Context& c) {
    EnhancedSignString S = sign_arg(c.o_.sign);
    c.print(c.cached("blocks", to_string(S), [&] { return blocks_json(S); }));
    return 0;
}

int cmd_tableau(Context& c) {
    EnhancedSignString S = sign_arg(c.o_.sign);
    StateString J = parse_state_string(c.o_.state);
    GlWeight mu = weight_of_sign_string(S);
    GlWeight mhat = hat_weight(mu);
    Tableau T = state_to_tableau(J, mhat);
    if (mhat.size() != mu.size()) T = insert_full_entries(T, mu);
    c.print(to_json(T));
    return 0;
}

int cmd_inverse_growth(Context& c) {
    c.print(to_json(inverse_growth(parse_state_string(c.o_.state), sign_arg(c.o_.sign))));
    return 0;
}

int cmd_search(Context& c) {
    CounterexampleSearch s = find_noncanonical_weight_zero(c.o_.max_len, std::chrono::seconds(c.o_.budget));
    Json found = Json::array();
    for (const NoncanonicalFlow& f : s.found)
        found.push_back(Json{{"sign", to_string(f.sign)},
                             {"key", state_to_string(f.key)},
                             {"flow_boundary", state_to_string(f.flow.boundary)},
                             {"web", to_json(f.web)}});
    c.print(Json{{"max_len", c.o_.max_len},
                 {"frontier", s.frontier},
                 {"complete", s.complete},
                 {"sign_strings", s.sign_strings},
                 {"webs", s.webs},
                 {"found", found}});
    return 0;
}

int cmd_render(Context& c) {
    LadderWeb w;
    std::optional<Flow> flow;
    if (!c.o_.file.empty()) {
        w = read_ladder_file(c.o_.file);
    } else if (!c.o_.sign.empty() && !c.o_.state.empty()) {
        GrowthResult g = grow(sign_arg(c.o_.sign), parse_state_string(c.o_.state));
        if (!g.terminated) throw WebError("render: the state string is not dominant");
        w = g.web;
        if (c.o_.canonical) flow = g.flow;
    } else {
        throw WebError("render: give a web file or --sign and --key");
    }
    if (!c.o_.flow_state.empty()) {
        auto flows = enumerate_flows(w, parse_state_string(c.o_.flow_state));
        if (flows.empty()) throw WebError("render: no flow extends " + c.o_.flow_state);
        flow = flows.front();
    }
    c.out_ << render_svg(w, flow ? &*flow : nullptr);
    return 0;
}

int cmd_selftest(Context& c) {
    std::vector<int> ids = c.o_.only;
    if (ids.empty())
        for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
    bool ok = true;
    for (int id : ids) {
        CriterionResult r = run_criterion(id);
        ok &= r.pass;
        c.out_ << format_result(r) << std::endl;
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"sl3 web bases, evaluation and skew Howe duality", "webkup"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--q1", o.q1, "Evaluate Laurent outputs at q = 1");
    app.add_flag("--no-cache", o.no_cache, "Do not read or write cached artifacts");
    app.add_option("--cache-dir", o.cache_dir, "Artifact cache directory (default $WEBKUP_CACHE)");

    std::vector<std::pair<CLI::App*, int (*)(Context&)>> commands;
    auto sub = [&](const char* name, const char* help, int (*fn)(Context&)) {
        CLI::App* s = app.add_subcommand(name, help);
        commands.emplace_back(s, fn);
        return s;
    };
    const char* sign_help = "Sign string over o + - x";
    const char* state_help = "State string over 1 0 m";

    sub("enumerate", "List the basis webs of a sign string", cmd_enumerate)->add_option("S", o.sign, sign_help)->required();
    auto* ev = sub("eval", "Evaluate a closed web", cmd_eval);
    ev->add_option("--closed", o.file, "Closed ladder web JSON file")->required();
    ev->add_option("--method", o.method, "statesum, rewrite or both")
        ->check(CLI::IsMember({"statesum", "rewrite", "both"}));
    sub("expand", "Tensor coordinates of a web", cmd_expand)->add_option("web", o.file, "Ladder web JSON file")->required();
    sub("dualcan", "Dual canonical vectors and the change of basis", cmd_dualcan)
        ->add_option("S", o.sign, sign_help)
        ->required();
    sub("howe-verify", "Check the Schur relations, adjunction and inverse growth", cmd_howe_verify)
        ->add_option("--k", o.k, "n = 3k")
        ->required();
    sub("center-dim", "Dimension of the center", cmd_center_dim)->add_option("S", o.sign, sign_help)->required();
    sub("blocks", "Gornik block sizes", cmd_blocks)->add_option("S", o.sign, sign_help)->required();
    auto* tb = sub("tableau", "Column strict tableau of a state string", cmd_tableau);
    tb->add_option("S", o.sign, sign_help)->required();
    tb->add_option("J", o.state, state_help)->required();
    auto* ig = sub("inverse-growth", "Schur word of a basis web", cmd_inverse_growth);
    ig->add_option("S", o.sign, sign_help)->required();
    ig->add_option("J", o.state, state_help)->required();
    auto* sc = sub("search-counterexample", "Search for non-canonical weight-zero flows", cmd_search);
    sc->add_option("--max-len", o.max_len, "Largest sign string length")->check(CLI::Range(0, 20));
    sc->add_option("--budget", o.budget, "Time budget in seconds");
    auto* rd = sub("render", "SVG drawing of a web", cmd_render);
    rd->add_option("web", o.file, "Ladder web JSON file");
    rd->add_option("--sign", o.sign, sign_help);
    rd->add_option("--key", o.state, "Dominant state string of a basis web");
    rd->add_option("--flow", o.flow_state, "Overlay the first flow with this top state");
    rd->add_flag("--canonical", o.canonical, "Overlay the canonical flow of the basis web");
    sub("selftest", "Run the acceptance suite", cmd_selftest)->add_option("--only", o.only, "Criterion ids");

    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        rev.push_back(looks_like_sign_token(*it) ? kSignEscape + *it : *it);
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        Context ctx(o, out);
        for (auto& [s, fn] : commands)
            if (s->parsed()) return fn(ctx);
    } catch (const WebError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace webkup
