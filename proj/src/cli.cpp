#include "bentice/cli.hpp"

#include "bentice/asm.hpp"
#include "bentice/character.hpp"
#include "bentice/identities.hpp"
#include "bentice/relations.hpp"
#include "bentice/state.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace bentice::cli {

using nlohmann::json;

json RunConfig::to_json() const {
    json j = {{"verb", verb}, {"emit", emit}, {"workers", workers}, {"seed", seed},
              {"max_n", max_n}, {"max_cols", max_cols}};
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) j[key] = v;
    };
    put("check", check);
    put("family", family);
    put("lambda", lambda);
    put("mu", mu);
    put("type", type);
    put("scheme", scheme);
    put("variant", variant);
    if (n) j["n"] = *n;
    return j;
}

namespace {

struct Outcome {
    bool pass = true;
    json data;
    std::optional<std::string> text;  // raw output for latex / tikz / count
};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family need_family(const RunConfig& c) {
    if (c.family.empty()) throw InputError("--family is required");
    return parse_family(c.family);
}

StrictPartition need_lambda(const RunConfig& c) {
    if (c.lambda.empty()) throw InputError("--lambda is required");
    return StrictPartition::parse(c.lambda);
}

int rank(const RunConfig& c, int fallback) {
    if (c.n) {
        if (*c.n < 1) throw InputError("--n must be >= 1");
        return *c.n;
    }
    if (!c.lambda.empty()) return StrictPartition::parse(c.lambda).n();
    return fallback;
}

Caps caps_of(const RunConfig& c) {
    Caps caps = Caps::from_env();
    if (c.max_n > 0) caps.max_n = c.max_n;
    if (c.max_cols > 0) caps.max_cols = c.max_cols;
    return caps;
}

WeightScheme scheme_named(const std::string& name, Family f, int n) {
    if (name.empty() || name == "generic") return make_generic(f, n);
    if (name == "deformation") return make_deformation(f, n);
    if (name == "okada") return make_okada(f, n);
    if (name == "character") return make_character(f, n);
    if (name == "tokuyama") {
        if (f != Family::A) throw InputError("tokuyama weights apply to family A only");
        return make_tokuyama(n);
    }
    throw InputError("unknown scheme '" + name + "' (generic, deformation, okada, character, tokuyama)");
}

void require_emit(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (c.emit == a) return;
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw InputError("--emit " + c.emit + " is not available for " + c.verb + " (" + list + ")");
}

Outcome do_enumerate(const RunConfig& c) {
    require_emit(c, {"json", "count", "tikz"});
    Family f = need_family(c);
    auto lambda = need_lambda(c);
    auto caps = caps_of(c);
    check_caps(f, lambda, caps);
    auto spec = build_model(f, lambda);
    auto states = enumerate_states(spec, caps);
    Outcome o;
    o.data["count"] = states.size();
    if (c.emit == "count") {
        o.text = std::to_string(states.size());
    } else if (c.emit == "tikz") {
        std::string all;
        for (auto& s : states) all += state_to_tikz(spec, s) + "\n";
        o.text = all;
    } else {
        o.data["model"] = spec.to_json();
        json arr = json::array();
        for (auto& s : states) arr.push_back(state_to_json(spec, s));
        o.data["states"] = arr;
    }
    return o;
}

Outcome do_partition(const RunConfig& c) {
    require_emit(c, {"json", "latex"});
    Family f = need_family(c);
    auto lambda = need_lambda(c);
    auto caps = caps_of(c);
    auto scheme = scheme_named(c.scheme, f, lambda.n());
    Poly z = partition_function(build_model(f, lambda), scheme, c.workers, caps);
    Outcome o;
    o.data = {{"Z", to_json(z)}, {"latex", to_latex(z)}, {"text", to_text(z)}, {"terms", z.size()}};
    if (c.emit == "latex") o.text = to_latex(z);
    return o;
}

std::vector<int> parse_mu(const std::string& s) {
    std::vector<int> mu;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw InputError("");
            mu.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad weight entry '" + tok + "'");
        }
    }
    if (mu.empty()) throw InputError("empty weight");
    return mu;
}

Outcome do_character(const RunConfig& c) {
    require_emit(c, {"json", "latex"});
    WeylType t;
    RhoKind r;
    if (!c.type.empty()) {
        if (c.type == "A") t = WeylType::A, r = RhoKind::A;
        else if (c.type == "B") t = WeylType::BC, r = RhoKind::B;
        else if (c.type == "C") t = WeylType::BC, r = RhoKind::C;
        else if (c.type == "D") t = WeylType::D, r = RhoKind::D;
        else if (c.type == "BC") t = WeylType::D, r = RhoKind::B;
        else throw InputError("unknown type '" + c.type + "' (A, B, C, D, BC)");
    } else {
        Family f = need_family(c);
        t = family_group(f);
        r = family_rho(f);
    }
    std::vector<int> mu;
    if (!c.mu.empty()) mu = parse_mu(c.mu);
    else if (!c.lambda.empty()) mu = mu_of(StrictPartition::parse(c.lambda));
    else if (c.n) mu.assign(*c.n, 0);
    else throw InputError("one of --mu, --lambda or --n is required");
    if ((int)mu.size() > caps_of(c).max_n) throw CapExceeded("rank exceeds cap");
    Poly chi = weyl_character(t, r, (int)mu.size(), mu);
    Outcome o;
    o.data = {{"chi", to_json(chi)}, {"latex", to_latex(chi)}, {"text", to_text(chi)}, {"mu", mu}};
    if (c.emit == "latex") o.text = to_latex(chi);
    return o;
}

Outcome do_asm(const RunConfig& c) {
    require_emit(c, {"json", "count"});
    Family f = need_family(c);
    auto lambda = need_lambda(c);
    auto caps = caps_of(c);
    auto spec = build_model(f, lambda);
    Outcome o;
    json arr = json::array();
    int valid = 0;
    for (auto& s : enumerate_states(spec, caps)) {
        auto m = state_to_matrix(spec, s);
        auto problems = matrix_problems(m, f);
        if (problems.empty()) ++valid;
        else o.pass = false;
        json e = m.to_json();
        e["problems"] = problems;
        arr.push_back(e);
    }
    o.data = {{"count", arr.size()}, {"valid", valid}, {"matrices", arr}};
    if (c.emit == "count") o.text = std::to_string(arr.size());
    return o;
}

// first two paired indices of a family at rank n
std::pair<int, int> two_indices(Family f, int n) {
    auto idx = paired_indices(f, n);
    if (idx.size() < 2) throw InputError("this check needs two paired rows; raise --n");
    return {idx[0], idx[1]};
}

Outcome verdict_outcome(const Verdict& v) {
    Outcome o;
    o.pass = v.pass;
    o.data = v.to_json();
    return o;
}

Outcome do_verify(const RunConfig& c) {
    require_emit(c, {"json"});
    auto caps = caps_of(c);
    const std::string& k = c.check;
    if (k == "ybe") {
        int n = 2;
        Family f = c.family.empty() ? Family::A : need_family(c);
        auto s = scheme_named(c.scheme, f, std::max(n, rank(c, n)));
        return verdict_outcome(ybe_check(s.row(RowLabel::plain(1)), s.row(RowLabel::plain(2))));
    }
    if (k == "bend") {
        Family f = need_family(c);
        int n = rank(c, f == Family::BC ? 3 : 2);
        auto [j, kk] = two_indices(f, n);
        return verdict_outcome(bend_ybe_check(scheme_named(c.scheme, f, n), j, kk));
    }
    if (k == "caduceus") {
        Family f = need_family(c);
        int n = rank(c, 2);
        return verdict_outcome(caduceus_check(scheme_named(c.scheme, f, n), paired_indices(f, n).back()));
    }
    if (k == "fish") {
        Family f = need_family(c);
        FishVariant v;
        if (!c.variant.empty()) {
            if (c.variant == "B") v = FishVariant::B;
            else if (c.variant == "Cstar_D_no1") v = FishVariant::Cstar_D_no1;
            else if (c.variant == "D_with1") v = FishVariant::D_with1;
            else throw InputError("unknown fish variant (B, Cstar_D_no1, D_with1)");
        } else if (f == Family::B) v = FishVariant::B;
        else if (f == Family::Cstar) v = FishVariant::Cstar_D_no1;
        else if (f == Family::D)
            v = (!c.lambda.empty() && !StrictPartition::parse(c.lambda).contains(1)) ? FishVariant::Cstar_D_no1
                                                                                    : FishVariant::D_with1;
        else throw InputError("fish relations exist for families B, Cstar and D");
        int n = rank(c, 1);
        return verdict_outcome(fish_check(scheme_named(c.scheme, f, n), paired_indices(f, n).back(), v));
    }
    if (k == "jellyfish") {
        Family f = need_family(c);
        JellyfishVariant v;
        if (f == Family::C) v = JellyfishVariant::C;
        else if (f == Family::Bstar) v = JellyfishVariant::Bstar;
        else if (f == Family::BC) v = JellyfishVariant::BC;
        else throw InputError("jellyfish relations exist for families C, Bstar and BC");
        int n = rank(c, f == Family::BC ? 2 : 1);
        return verdict_outcome(jellyfish_check(scheme_named(c.scheme, f, n), paired_indices(f, n).back(), v));
    }
    if (k == "divisibility" || k == "rho") {
        Family f = need_family(c);
        StrictPartition lambda = k == "rho" ? StrictPartition::rho(rank(c, 2)) : need_lambda(c);
        Regime r = c.scheme.empty() ? Regime::generic : parse_regime(c.scheme);
        Outcome o;
        try {
            auto d = divisibility_check(f, lambda, r, c.workers, c.seed, caps);
            auto sym = quotient_symmetry_check(d.quotient, f, lambda.n(), r);
            o.data = {{"divisibility", d.to_json()}, {"symmetry", sym.to_json()}};
            o.pass = d.divisible && sym.pass;
            if (k == "rho") {
                bool one = d.quotient == Poly(1);
                o.data["quotient_is_one"] = one;
                o.pass = o.pass && one;
            }
        } catch (const NotDivisible& e) {
            o.pass = false;
            o.data = {{"error", e.what()}};
        }
        return o;
    }
    if (k == "okada") {
        Family f = need_family(c);
        auto p = okada_product_check(f, rank(c, 2), c.workers, caps);
        return {p.pass, p.to_json(), std::nullopt};
    }
    if (k == "bijection") {
        auto b = bijection_check(rank(c, 2), std::nullopt, caps);
        return {b.pass, b.to_json(), std::nullopt};
    }
    if (k == "character") {
        Family f = need_family(c);
        auto lambda = need_lambda(c);
        auto ch = character_theorem_check(f, lambda, c.workers, caps);
        auto ws = weyl_state_check(f, lambda, caps);
        Outcome o;
        o.pass = ch.pass;
        o.data = {{"theorem", ch.to_json()}, {"weyl_states", ws.to_json()}};
        return o;
    }
    if (k == "tokuyama") {
        auto t = tokuyama_check(need_lambda(c), c.workers, caps);
        Outcome o;
        o.pass = t.pass;
        o.data = t.to_json();
        o.data["Z_at_t_minus_one"] = to_json(at_t_minus_one(t.z));
        return o;
    }
    throw InputError("unknown check '" + k +
                     "' (ybe, bend, fish, jellyfish, caduceus, divisibility, rho, okada, bijection, character, tokuyama)");
}

Outcome dispatch(const RunConfig& c) {
    if (c.workers < 1) throw InputError("--workers must be >= 1");
    if (c.verb == "enumerate") return do_enumerate(c);
    if (c.verb == "partition") return do_partition(c);
    if (c.verb == "verify") return do_verify(c);
    if (c.verb == "asm") return do_asm(c);
    if (c.verb == "character") return do_character(c);
    throw InputError("unknown verb '" + c.verb + "' (enumerate, partition, verify, asm, character)");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    json report = {{"verb", config.verb}, {"inputs", config.to_json()}};
    int code = Exit::ok;
    std::optional<std::string> text;
    try {
        Outcome o = dispatch(config);
        report["verdict"] = o.pass ? "pass" : "fail";
        report["data"] = o.data;
        text = o.text;
        code = o.pass ? Exit::ok : Exit::verification_failed;
    } catch (const CapExceeded& e) {
        report["verdict"] = "cap_exceeded";
        report["data"] = {{"error", e.what()}};
        err << "cap exceeded: " << e.what() << "\n";
        code = Exit::cap_exceeded;
    } catch (const InputError& e) {
        report["verdict"] = "input_error";
        report["data"] = {{"error", e.what()}};
        err << "input error: " << e.what() << "\n";
        code = Exit::input_error;
    } catch (const std::exception& e) {
        report["verdict"] = "internal_error";
        report["data"] = {{"error", e.what()}};
        err << "internal error: " << e.what() << "\n";
        code = Exit::internal;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["elapsed_ms"] = (long long)ms;
    if (text && code == Exit::ok)
        out << *text << "\n";
    else
        out << report.dump(2) << "\n";
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact partition functions and identities for bent six-vertex ice"};
    app.require_subcommand(1);
    RunConfig c;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", c.family, "A, B, Bstar, C, Cstar, D, BC");
        sub->add_option("--lambda", c.lambda, "strict partition, comma separated and decreasing");
        sub->add_option("--n", c.n, "rank");
        sub->add_option("--scheme", c.scheme, "generic, deformation, okada, character, tokuyama");
        sub->add_option("--emit", c.emit, "json, latex, tikz, count");
        sub->add_option("--max-n", c.max_n, "cap on n (default BENTICE_MAX_N or 4)");
        sub->add_option("--max-cols", c.max_cols, "cap on lambda_1 (default BENTICE_MAX_COLS or 8)");
        sub->add_option("--workers", c.workers, "worker threads");
        sub->add_option("--seed", c.seed, "seed for randomized probes");
    };
    auto* en = app.add_subcommand("enumerate", "list admissible states");
    auto* pa = app.add_subcommand("partition", "partition function");
    auto* ve = app.add_subcommand("verify", "run a check");
    auto* as = app.add_subcommand("asm", "sign matrices of the states");
    auto* ch = app.add_subcommand("character", "Weyl character");
    for (auto* s : {en, pa, ve, as, ch}) common(s);
    ve->add_option("check", c.check, "ybe, bend, fish, jellyfish, caduceus, divisibility, rho, okada, bijection, "
                                     "character, tokuyama")
        ->required();
    ve->add_option("--variant", c.variant, "fish variant: B, Cstar_D_no1, D_with1");
    ch->add_option("--type", c.type, "A, B, C, D, BC");
    ch->add_option("--mu", c.mu, "dominant weight, comma separated");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        json report = {{"verb", args.empty() ? "" : args[0]},
                       {"inputs", json::object()},
                       {"verdict", "input_error"},
                       {"data", {{"error", e.what()}}},
                       {"elapsed_ms", 0}};
        out << report.dump(2) << "\n";
        return Exit::input_error;
    }
    for (auto* s : {en, pa, ve, as, ch})
        if (s->parsed()) c.verb = s->get_name();
    return run(c, out, err);
}

}  // namespace bentice::cli
