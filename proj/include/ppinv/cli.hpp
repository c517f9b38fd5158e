#ifndef PPINV_CLI_HPP
#define PPINV_CLI_HPP

// Command-line front end.  run() maps argv to a report on `out`, diagnostics
// on `err`, and an exit status:
//   0  success / affirmative verdict
//   1  mathematical negative (not a PP, criterion fails, methods disagree)
//   2  usage or parse error

#include <ppinv/binom.hpp>
#include <ppinv/cyclotomic.hpp>
#include <ppinv/dickson.hpp>
#include <ppinv/gf.hpp>
#include <ppinv/piecewise.hpp>
#include <ppinv/polyring.hpp>
#include <ppinv/selftest.hpp>
#include <ppinv/text.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace ppinv::cli {

using json = nlohmann::ordered_json;

enum Exit : int { ok = 0, negative = 1, usage = 2 };

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json field_json(const Field& F) {
    json mod = json::array();
    for (auto c : F.modulus()) mod.push_back(c);
    return {{"p", F.characteristic()},
            {"n", F.degree()},
            {"q", F.order()},
            {"modulus", mod},
            {"primitive", F.primitive().index}};
}

inline json poly_json(const Poly& f) {
    json a = json::array();
    for (auto c : f.coeffs()) a.push_back(c.index);
    return a;
}

namespace detail {

inline const char* target_name(CosetTarget t) {
    switch (t) {
    case CosetTarget::c0: return "C0";
    case CosetTarget::c1: return "C1";
    default: return "mixed";
    }
}

inline json behavior_json(const BranchBehavior& b) {
    json br = json::array();
    for (const auto& info : b.branch)
        br.push_back({{"injective", info.injective}, {"zero_free", info.zero_free}, {"target", target_name(info.target)}});
    return {{"branches", br}, {"images_disjoint", b.images_disjoint}};
}

inline bool inverts(const Poly& g, const Poly& f) {
    for (auto c : f.field()->elements())
        if (g.eval(f.eval(c)) != c) return false;
    return true;
}

// Value table x, f(x), finv(f(x)) in index order.
inline void write_csv(std::ostream& out, const Poly& f, const Poly& finv) {
    out << "x,f(x),finv(f(x))\n";
    for (auto c : f.field()->elements()) {
        const Elem y = f.eval(c);
        out << c.index << ',' << y.index << ',' << finv.eval(y).index << '\n';
    }
}

inline void print_report(std::ostream& out, const json& doc, bool as_json) {
    if (as_json) {
        out << doc.dump() << '\n';
        return;
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.value().is_string())
            out << it.key() << ": " << it.value().get<std::string>() << '\n';
        else
            out << it.key() << ": " << it.value().dump() << '\n';
    }
}

struct PolyInput {
    Poly f;
    std::optional<BranchedPP> branches;
};

// Either a single polynomial or two branch polynomials.
inline PolyInput read_map(const FieldPtr& F, const std::string& poly, const std::string& f0, const std::string& f1) {
    if (!poly.empty()) {
        if (!f0.empty() || !f1.empty()) throw UsageError("give either --poly or --f0/--f1, not both");
        return {parse_poly(poly, F), std::nullopt};
    }
    if (f0.empty() || f1.empty()) throw UsageError("need --poly, or both --f0 and --f1");
    BranchedPP bpp(parse_poly(f0, F), parse_poly(f1, F));
    return {branched_to_poly(bpp), bpp};
}

// Inverse through the branch machinery; a polynomial not fixing 0 is shifted
// first and the shift undone afterwards.
inline Poly invert_via_branches(const PolyInput& in) {
    if (in.branches) return invert_branched(*in.branches);
    const FieldPtr& F = in.f.field();
    const Elem c0 = in.f.coeff(0);
    const Poly shifted = in.f - Poly::constant(F, c0);
    const Poly g = invert_branched(as_branched(shifted));
    return compose(g, Poly(F, {F->neg(c0), F->one()}));
}

inline std::optional<Poly> closed_form_for(const Poly& f) {
    const Field& F = *f.field();
    if (F.characteristic() == 3 && F.degree() % 2 == 0 && f == hou_pp(f.field())) return theorem1_inverse(f.field());
    return std::nullopt;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation polynomials over GF(p^n) and their compositional inverses", "ppinv"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 0;
    std::string spec = "3^2";
    app.add_flag("--json", as_json, "Emit a single JSON document");
    app.add_option("--seed", seed, "Seed for sampled suites");

    auto* field_cmd = app.add_subcommand("field", "Construct a field and print its parameters");
    field_cmd->add_option("--spec", spec, "Field p^n or p^n:c0,...,cn")->required();

    // pp
    auto* pp_cmd = app.add_subcommand("pp", "Analyze or invert a permutation polynomial");
    std::string pp_action = "check", poly_text, f0_text, f1_text, method = "all";
    bool csv = false;
    pp_cmd->add_option("action", pp_action, "check | invert")->check(CLI::IsMember({"check", "invert"}));
    pp_cmd->add_option("--spec", spec, "Field")->required();
    pp_cmd->add_option("--poly", poly_text, "Polynomial");
    pp_cmd->add_option("--f0", f0_text, "Branch on the squares");
    pp_cmd->add_option("--f1", f1_text, "Branch on the non-squares");
    pp_cmd->add_option("--method", method, "oracle | theorem2 | closed-form | all")
        ->check(CLI::IsMember({"oracle", "theorem2", "closed-form", "all"}));
    pp_cmd->add_flag("--csv", csv, "Write the value table x,f(x),finv(f(x)) as CSV");

    // dickson
    auto* dk_cmd = app.add_subcommand("dickson", "Dickson and reversed Dickson polynomials");
    std::string kind = "reversed", a_text = "1";
    std::uint64_t index = 1;
    bool invert = false;
    dk_cmd->add_option("--kind", kind, "plain | reversed")->check(CLI::IsMember({"plain", "reversed"}));
    dk_cmd->add_option("--index", index, "Index N >= 1")->required();
    dk_cmd->add_option("--a", a_text, "Parameter a");
    dk_cmd->add_option("--spec", spec, "Field")->required();
    dk_cmd->add_flag("--invert", invert, "Also compute the compositional inverse");

    // cyclo
    auto* cy_cmd = app.add_subcommand("cyclo", "Two-class cyclotomic permutation families");
    std::string cy_action = "check", family = "l5", alpha_t, beta_t, gamma_t, theta_t;
    std::optional<std::uint64_t> t_exp;
    cy_cmd->add_option("action", cy_action, "check | build | invert")
        ->check(CLI::IsMember({"check", "build", "invert"}));
    cy_cmd->add_option("--family", family, "l5 | l6 | l7")->check(CLI::IsMember({"l5", "l6", "l7"}));
    cy_cmd->add_option("--alpha", alpha_t, "alpha")->required();
    cy_cmd->add_option("--beta", beta_t, "beta")->required();
    cy_cmd->add_option("--gamma", gamma_t, "gamma (l5, l7)");
    cy_cmd->add_option("--theta", theta_t, "theta (l5, l6)");
    cy_cmd->add_option("--t", t_exp, "exponent t (l6, l7)");
    cy_cmd->add_option("--spec", spec, "Field")->required();
    cy_cmd->add_option("--method", method, "oracle | theorem2 | closed-form | all")
        ->check(CLI::IsMember({"oracle", "theorem2", "closed-form", "all"}));

    // binom
    auto* bn_cmd = app.add_subcommand("binom", "Binomial coefficients mod p and predicted supports");
    std::string bn_action = "value";
    std::int64_t bm = 0;
    std::uint64_t bk = 0, bp = 3;
    unsigned theorem = 3, bn_n = 1;
    bn_cmd->add_option("action", bn_action, "value | support")->check(CLI::IsMember({"value", "support"}));
    bn_cmd->add_option("--m", bm, "upper index (may be negative)");
    bn_cmd->add_option("--k", bk, "lower index");
    bn_cmd->add_option("--p", bp, "prime");
    bn_cmd->add_option("--theorem", theorem, "3 or 4")->check(CLI::IsMember({3, 4}));
    bn_cmd->add_option("--n", bn_n, "degree n >= 1");

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "Run the verification suite");
    std::string level = "quick";
    st_cmd->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));

    for (auto* sub : {field_cmd, pp_cmd, dk_cmd, cy_cmd, bn_cmd, st_cmd}) {
        sub->add_flag("--json", as_json, "Emit a single JSON document");
        sub->add_option("--seed", seed, "Seed for sampled suites");
    }

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed_args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "ppinv: " << e.what() << '\n';
        return Exit::usage;
    }

    try {
        if (*st_cmd) {
            const auto results = selftest::run_all(level == "full" ? selftest::Level::full : selftest::Level::quick, seed);
            bool all = true;
            json checks = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                checks.push_back(
                    {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
                if (!as_json)
                    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.detail << ")\n";
            }
            if (as_json) out << json{{"command", "selftest"}, {"level", level}, {"pass", all}, {"checks", checks}}.dump() << '\n';
            return all ? Exit::ok : Exit::negative;
        }

        if (*bn_cmd) {
            json doc{{"command", "binom"}, {"action", bn_action}};
            if (bn_action == "value") {
                doc["m"] = bm;
                doc["k"] = bk;
                doc["p"] = bp;
                doc["residue"] = binom_generalized_mod_p(bm, bk, bp);
            } else {
                const auto support = theorem == 3 ? theorem3_support(bn_n) : theorem4_support(bn_n);
                doc["theorem"] = theorem;
                doc["n"] = bn_n;
                doc["support"] = support;
            }
            detail::print_report(out, doc, as_json);
            return Exit::ok;
        }

        const FieldPtr F = parse_field(spec);
        json doc{{"command", app.get_subcommands().front()->get_name()}, {"field", field_json(*F)}};

        if (*field_cmd) {
            doc["spec"] = format_field(*F);
            detail::print_report(out, doc, as_json);
            return Exit::ok;
        }

        if (*pp_cmd) {
            const auto in = detail::read_map(F, poly_text, f0_text, f1_text);
            doc["action"] = pp_action;
            doc["poly"] = poly_json(in.f);
            const Elem c0 = in.f.coeff(0);
            const BranchedPP view = in.branches ? *in.branches : as_branched(in.f - Poly::constant(F, c0));
            const auto behavior = analyze(view);
            const bool pp = is_permutation(in.f);
            doc["is_pp"] = pp;
            doc["case"] = std::string(to_string(behavior.kase));
            doc["behavior"] = detail::behavior_json(behavior);
            if (pp_action == "check" || !pp) {
                detail::print_report(out, doc, as_json);
                return pp ? Exit::ok : Exit::negative;
            }
            std::vector<std::string> wanted =
                method == "all" ? std::vector<std::string>{"oracle", "theorem2", "closed-form"} : std::vector{method};
            json methods = json::object();
            std::optional<Poly> first;
            bool agree = true, verified = true;
            for (const auto& m : wanted) {
                std::optional<Poly> g;
                std::string note;
                try {
                    if (m == "oracle") g = invert_by_interpolation(in.f);
                    else if (m == "theorem2") g = detail::invert_via_branches(in);
                    else {
                        g = detail::closed_form_for(in.f);
                        if (!g) note = "no closed form known for this polynomial";
                    }
                } catch (const std::domain_error& e) {
                    note = e.what();
                }
                if (!g) {
                    if (method != "all") throw UsageError(m + ": " + note);
                    methods[m] = {{"available", false}, {"reason", note}};
                    continue;
                }
                const bool ok_inv = detail::inverts(*g, in.f);
                verified = verified && ok_inv;
                if (first && *first != *g) agree = false;
                if (!first) first = g;
                methods[m] = {{"available", true}, {"inverse", poly_json(*g)}, {"verified", ok_inv}};
            }
            doc["inverse"] = poly_json(*first);
            doc["methods"] = methods;
            doc["agree"] = agree;
            doc["verified"] = verified;
            if (csv) {
                detail::write_csv(out, in.f, *first);
                return agree && verified ? Exit::ok : Exit::negative;
            }
            if (!as_json) doc["inverse_text"] = render_poly(*first);
            detail::print_report(out, doc, as_json);
            return agree && verified ? Exit::ok : Exit::negative;
        }

        if (*dk_cmd) {
            const DicksonSpec ds{index, parse_element(a_text, *F), kind == "reversed"};
            const Poly d = dickson_poly(ds, F);
            doc["kind"] = kind;
            doc["index"] = index;
            doc["a"] = ds.a.index;
            doc["poly"] = poly_json(d);
            if (!as_json) doc["poly_text"] = render_poly(d);
            if (!invert) {
                detail::print_report(out, doc, as_json);
                return Exit::ok;
            }
            const bool pp = is_permutation(d);
            doc["is_pp"] = pp;
            if (!pp) {
                detail::print_report(out, doc, as_json);
                return Exit::negative;
            }
            const bool closed = ds.reversed && ds.a == F->one() && index == F->order() + 5 &&
                                F->characteristic() == 3 && F->degree() % 2 == 0;
            const Poly g = closed ? reversed_dickson_inverse_3n5(F) : invert_by_interpolation(d);
            const bool ok_inv = detail::inverts(g, d);
            doc["method"] = closed ? "closed-form" : "oracle";
            doc["inverse"] = poly_json(g);
            doc["verified"] = ok_inv;
            detail::print_report(out, doc, as_json);
            return ok_inv ? Exit::ok : Exit::negative;
        }

        if (*cy_cmd) {
            FamilyParams prm;
            prm.family = family == "l5" ? Family::l5 : family == "l6" ? Family::l6 : Family::l7;
            prm.field = F;
            prm.alpha = parse_element(alpha_t, *F);
            prm.beta = parse_element(beta_t, *F);
            if (!gamma_t.empty()) prm.gamma = parse_element(gamma_t, *F);
            if (!theta_t.empty()) prm.theta = parse_element(theta_t, *F);
            prm.t = t_exp;
            const auto verdict = criterion(prm);
            doc["family"] = family;
            doc["action"] = cy_action;
            doc["criterion"] = verdict.holds;
            doc["reason"] = verdict.reason;
            const BranchedPP bpp = build_branches(prm);
            const Poly f = branched_to_poly(bpp);
            const bool pp = analyze(bpp).is_pp;
            doc["is_pp"] = pp;
            if (cy_action == "build" || cy_action == "invert") {
                doc["f0"] = poly_json(bpp.f0);
                doc["f1"] = poly_json(bpp.f1);
                doc["poly"] = poly_json(f);
            }
            if (cy_action != "invert" || !verdict.holds) {
                detail::print_report(out, doc, as_json);
                return verdict.holds ? Exit::ok : Exit::negative;
            }
            std::vector<std::string> wanted = method == "all"
                                                  ? std::vector<std::string>{"closed-form", "oracle", "theorem2"}
                                                  : std::vector{method};
            json methods = json::object();
            std::optional<Poly> first;
            bool agree = true, verified = true;
            for (const auto& m : wanted) {
                const Poly g = m == "closed-form" ? closed_form_inverse(prm)
                               : m == "oracle"    ? invert_by_interpolation(f)
                                                  : invert_branched(bpp);
                const bool ok_inv = detail::inverts(g, f);
                verified = verified && ok_inv;
                if (first && *first != g) agree = false;
                if (!first) first = g;
                methods[m] = {{"inverse", poly_json(g)}, {"verified", ok_inv}};
            }
            doc["inverse"] = poly_json(*first);
            doc["methods"] = methods;
            doc["agree"] = agree;
            doc["verified"] = verified;
            if (!as_json) doc["inverse_text"] = render_poly(*first);
            detail::print_report(out, doc, as_json);
            return agree && verified ? Exit::ok : Exit::negative;
        }
    } catch (const std::domain_error& e) {
        err << "ppinv: " << e.what() << '\n';
        return Exit::negative;
    } catch (const std::exception& e) {
        err << "ppinv: " << e.what() << '\n';
        return Exit::usage;
    }
    return Exit::usage;
}

} // namespace ppinv::cli

#endif // PPINV_CLI_HPP
