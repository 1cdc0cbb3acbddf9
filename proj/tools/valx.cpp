// Command-line front end: parse field/valuation/approximation-type/pCs specs,
// run one operation, emit deterministic JSON (default) or plain text.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "valx/extension.hpp"
#include "valx/kaplansky.hpp"
#include "valx/specs.hpp"

using json = nlohmann::json;
using namespace valx;

namespace {

struct Options {
    std::string field;
    std::string valuation;
    std::string v1, v2;
    std::string at;
    std::string pcs;
    std::string poly;
    std::string ratfun;
    long budget = kDefaultBudget;
    long bound = -1;
    bool transcendental = false;
    bool text = false;
};

void emit(const Options& opt, const json& j) {
    if (!opt.text) {
        std::cout << j.dump() << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << " = ";
        if (it->is_string())
            std::cout << it->get<std::string>();
        else
            std::cout << it->dump();
        std::cout << "\n";
    }
}

ValuedField field_of(const Options& opt) {
    if (opt.field.empty()) throw ParseError("--field is required");
    return parse_field(opt.field);
}

ExtensionValuation valuation_of(const Options& opt, const ValuedField& F, const std::string& spec) {
    ExtensionValuation v = parse_valuation(F, spec, opt.budget);
    if (v.kind == ValKind::LimitImmediate) {
        if (opt.transcendental) v.declared_transcendental = true;
        if (opt.bound >= 0) v.degree_bound = opt.bound;
    }
    return v;
}

json run_value(const Options& opt) {
    ValuedField F = field_of(opt);
    ExtensionValuation v = valuation_of(opt, F, opt.valuation);
    GroupValue g;
    if (!opt.ratfun.empty())
        g = value_ratfun(v, parse_ratfun(F, opt.ratfun));
    else if (!opt.poly.empty())
        g = value_poly(v, parse_poly(F, opt.poly));
    else
        throw ParseError("value needs --poly or --ratfun");
    return json{{"value", gv_to_string(g)}};
}

json run_residue(const Options& opt) {
    ValuedField F = field_of(opt);
    ExtensionValuation v = valuation_of(opt, F, opt.valuation);
    RatFun r = !opt.ratfun.empty() ? parse_ratfun(F, opt.ratfun)
                                   : rf_from_poly(F, parse_poly(F, opt.poly));
    return json{{"residue", residue_to_string(F, residue_ratfun(v, r))}};
}

std::string class_string(ExtensionClass c) {
    switch (c) {
    case ExtensionClass::Immediate:
        return "immediate";
    case ExtensionClass::ValueTranscendental:
        return "value-transcendental";
    case ExtensionClass::ResidueTranscendental:
        return "residue-transcendental";
    case ExtensionClass::ValuationAlgebraicDetected:
        return "immediate-or-detected";
    }
    return "?";
}

json run_classify(const Options& opt) {
    ValuedField F = field_of(opt);
    ExtensionValuation v = valuation_of(opt, F, opt.valuation);
    return json{{"class", class_string(classify_extension(v))},
                {"pure", is_pure(v)},
                {"almost_pure", is_almost_pure(v)}};
}

json run_appr(const Options& opt) {
    ValuedField F = field_of(opt);
    ExtensionValuation v = valuation_of(opt, F, opt.valuation);
    return json{{"at", at_to_string(approx_type_of(v))}};
}

json run_realize(const Options& opt) {
    ValuedField F = field_of(opt);
    ApproxType A = parse_at(F, opt.at);
    ExtensionValuation v = realize(A, opt.transcendental,
                                   opt.bound >= 0 ? std::optional<long>(opt.bound) : std::nullopt,
                                   opt.budget);
    return json{{"valuation", valuation_to_string(v)}};
}

json run_pcs_to_at(const Options& opt) {
    ValuedField F = field_of(opt);
    Pcs g = parse_pcs(F, opt.pcs);
    return json{{"at", at_to_string(to_approx_type(g))}};
}

json run_at_to_pcs(const Options& opt) {
    ValuedField F = field_of(opt);
    ApproxType A = parse_at(F, opt.at);
    Pcs g = from_approx_type(A);
    long n = opt.bound >= 0 ? opt.bound : 5;
    json gamma = json::array();
    json terms = json::array();
    for (const GroupValue& v : g->gamma_prefix(n)) gamma.push_back(gv_to_string(v));
    for (long i = 0; i < n; ++i) terms.push_back(element_to_string(F, g->term(i)));
    return json{{"pcs", g->spec_string()}, {"gamma", gamma}, {"terms", terms}};
}

json run_check_fixed(const Options& opt) {
    ValuedField F = field_of(opt);
    ApproxType A = parse_at(F, opt.at);
    FixedReport rep = check_fixed(F, parse_poly(F, opt.poly), A, opt.budget);
    switch (rep.verdict) {
    case FixedVerdict::Fixed:
        return json{{"verdict", "fixed"},
                    {"value", gv_to_string(rep.value)},
                    {"pivot", rep.pivot},
                    {"threshold", rep.threshold}};
    case FixedVerdict::NotFixed:
        return json{{"verdict", "not_fixed"},
                    {"pivot", rep.pivot},
                    {"beta", gv_to_string(rep.pivot_base)},
                    {"threshold", rep.threshold},
                    {"prefix_end", rep.prefix_end},
                    {"witness_degree", rep.witness_degree}};
    case FixedVerdict::Undecided:
        return json{{"verdict", "undecided"}, {"budget", opt.budget}};
    }
    throw ParseError("unreachable");
}

json run_equiv(const Options& opt) {
    ValuedField F = field_of(opt);
    ExtensionValuation v1 = valuation_of(opt, F, opt.v1);
    ExtensionValuation v2 = valuation_of(opt, F, opt.v2);
    EquivResult r = equivalent(v1, v2, opt.budget);
    switch (r.kind) {
    case EquivResult::Kind::Equivalent:
        return json{{"equivalent", true}};
    case EquivResult::Kind::NotEquivalent: {
        json j{{"equivalent", false}};
        if (r.witness) j["witness"] = poly_to_string(F, *r.witness);
        return j;
    }
    case EquivResult::Kind::Undecided:
        return json{{"undecided", true}};
    }
    throw ParseError("unreachable");
}

json run_fragment(const Options& opt) {
    ValuedField F = field_of(opt);
    ApproxType A = parse_at(F, opt.at);
    long n = opt.bound >= 0 ? opt.bound : 3;
    Fragment frag = canonical_fragment(A, n);
    FieldElement a = realize_fragment(A, n);
    json cs = json::array();
    for (const FragmentConstraint& ct : frag.constraints)
        cs.push_back(fragment_constraint_to_string(F, ct));
    return json{{"element", element_to_string(F, a)}, {"constraints", cs}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact valuation extensions on K(x) via approximation types"};
    app.require_subcommand(1);

    Options opt;
    json (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "base field spec: Q@p=2, Fp(t)@p=3, Q(t)");
        sub->add_option("--budget", opt.budget, "sequence prefix budget (default 64)");
        sub->add_option("--bound", opt.bound, "degree bound / fragment size / prefix length");
        sub->add_flag("--transcendental", opt.transcendental,
                      "declare immediate types transcendental");
        sub->add_flag("--text", opt.text, "plain-text output");
        sub->add_flag("--json", "JSON output (default)");
    };
    auto set = [&](CLI::App* sub, json (*h)(const Options&)) {
        add_common(sub);
        sub->callback([&opt, h, &handler] {
            (void)opt;
            handler = h;
        });
        return sub;
    };

    CLI::App* value = set(app.add_subcommand("value", "value of a polynomial or rational function"),
                          run_value);
    value->add_option("--valuation", opt.valuation, "valuation spec");
    value->add_option("--poly", opt.poly, "polynomial in x");
    value->add_option("--ratfun", opt.ratfun, "rational function in x");

    CLI::App* residue = set(app.add_subcommand("residue", "residue of a value-0 element"),
                            run_residue);
    residue->add_option("--valuation", opt.valuation, "valuation spec");
    residue->add_option("--poly", opt.poly, "polynomial in x");
    residue->add_option("--ratfun", opt.ratfun, "rational function in x");

    CLI::App* classify = set(app.add_subcommand("classify", "classification and purity"),
                             run_classify);
    classify->add_option("--valuation", opt.valuation, "valuation spec");

    CLI::App* appr = set(app.add_subcommand("appr", "approximation type of x under a valuation"),
                         run_appr);
    appr->add_option("--valuation", opt.valuation, "valuation spec");

    CLI::App* realize_cmd = set(app.add_subcommand("realize", "realize an approximation type"),
                                run_realize);
    realize_cmd->add_option("--at", opt.at, "approximation-type spec");

    CLI::App* p2a = set(app.add_subcommand("pcs-to-at", "approximation type of a sequence"),
                        run_pcs_to_at);
    p2a->add_option("--pcs", opt.pcs, "pCs spec");

    CLI::App* a2p = set(app.add_subcommand("at-to-pcs", "associated pseudo Cauchy sequence"),
                        run_at_to_pcs);
    a2p->add_option("--at", opt.at, "approximation-type spec");

    CLI::App* cf = set(app.add_subcommand("check-fixed", "fixed-value certificate for a polynomial"),
                       run_check_fixed);
    cf->add_option("--at", opt.at, "approximation-type spec");
    cf->add_option("--poly", opt.poly, "polynomial in x");

    CLI::App* eq = set(app.add_subcommand("equiv", "equivalence of two valuations"), run_equiv);
    eq->add_option("--v1", opt.v1, "first valuation spec");
    eq->add_option("--v2", opt.v2, "second valuation spec");

    CLI::App* frag = set(app.add_subcommand("fragment", "realize a finite fragment"), run_fragment);
    frag->add_option("--at", opt.at, "approximation-type spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        emit(opt, handler(opt));
        return 0;
    } catch (const ParseError& e) {
        std::cout << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
