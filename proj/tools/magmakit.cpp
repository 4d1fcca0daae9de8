// magmakit: command-line front end.
// Exit codes: 0 ok / property holds, 1 property false, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "magmakit/catalog.hpp"
#include "magmakit/config.hpp"
#include "magmakit/error.hpp"
#include "magmakit/identities.hpp"
#include "magmakit/io.hpp"
#include "magmakit/nstructure.hpp"
#include "magmakit/substructure.hpp"
#include "magmakit/verify.hpp"

namespace {

using namespace mk;

constexpr int exit_ok = 0, exit_false = 1, exit_input = 2, exit_cap = 3;

std::string yn(bool b) { return b ? "true" : "false"; }

std::string set_str(const Magma& m, const ElemSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto x : s.elements()) {
        if (!first) out += ',';
        first = false;
        out += m.name(x);
    }
    return out + "}";
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

EnumOptions mode_of(const std::string& s) {
    auto m = parse_enum_mode(s);
    if (!m) throw Error(Errc::parse_error, "bad --mode '" + s + "' (auto, exhaustive or gen:K)");
    return *m;
}

int emit(Report& r, int code, const std::string& out_path = {}) {
    r.summary({{"status", code == exit_ok ? "ok" : "false"}, {"facts", std::to_string(r.facts().size())}});
    if (out_path.empty()) {
        std::cout << r.str();
    } else {
        std::ofstream o(out_path);
        o << r.str();
    }
    return code;
}

// ---- single magma commands

struct GenArgs {
    unsigned n = 0, m = 0, t = 0, u = 0;
    std::string cls, family, prefix, out;
    std::size_t size = 0;
};

int write_table(const Magma& m, const std::string& out) {
    if (out.empty()) {
        std::cout << emit_cayley(m);
    } else {
        std::ofstream o(out);
        if (!o) throw Error(Errc::parse_error, out + ": cannot write");
        o << emit_cayley(m);
    }
    return exit_ok;
}

int cmd_gen_ln(const GenArgs& a) {
    if (auto err = ln_param_error(a.n, a.m)) throw Error(Errc::invalid_params, *err);
    return write_table(ln_loop({a.n, a.m}), a.out);
}

int cmd_gen_zn(const GenArgs& a) {
    ZnParams p{a.n, a.t, a.u, ZnClass::zzero};
    if (a.cls.empty()) {
        p.cls = zn_tightest_class(a.n, a.t, a.u);
    } else {
        auto c = parse_zn_class(a.cls);
        if (!c) throw Error(Errc::parse_error, "unknown class '" + a.cls + "'");
        p.cls = *c;
    }
    if (auto err = zn_param_error(p)) throw Error(Errc::invalid_params, *err);
    return write_table(zn_groupoid(p), a.out);
}

int cmd_gen_std(const GenArgs& a) {
    auto f = parse_family(a.family);
    if (!f) throw Error(Errc::parse_error, "unknown family '" + a.family + "'");
    return write_table(standard({*f, a.size, a.prefix}), a.out);
}

int cmd_classify(const std::string& file) {
    auto m = read_cayley(file);
    auto k = classify(m);
    Report r;
    r.fact({{"order", std::to_string(m.size())}, {"label", std::string(to_string(k.label))}});
    r.fact({{"associative", yn(k.associative)},
            {"commutative", yn(k.commutative)},
            {"latin_square", yn(k.latin_square)},
            {"identity", k.identity ? m.name(*k.identity) : "-"},
            {"has_inverses", yn(k.has_inverses)}});
    std::string li, ri;
    for (auto x : k.left_identities) li += (li.empty() ? "" : ",") + m.name(x);
    for (auto x : k.right_identities) ri += (ri.empty() ? "" : ",") + m.name(x);
    r.fact({{"left_identities", li}, {"right_identities", ri}});
    for (ElementId x = 0; x < m.size(); ++x)
        r.fact({{"element", m.name(x)}, {"order", to_string(element_order(m, x))}});
    return emit(r, exit_ok);
}

int cmd_check(const std::string& file, const std::string& identity) {
    auto id = parse_identity(identity);
    if (!id) throw Error(Errc::parse_error, "unknown identity '" + identity + "'");
    auto m = read_cayley(file);
    auto res = check_identity(m, *id);
    Report r;
    Fields f{{"identity", identity}, {"holds", yn(res.holds)}};
    if (res.counterexample) {
        std::string c;
        for (unsigned i = 0; i < res.arity; ++i) c += (i ? "," : "") + m.name((*res.counterexample)[i]);
        f.emplace_back("counterexample", c);
    }
    if (!res.note.empty()) f.emplace_back("note", res.note);
    r.fact(std::move(f));
    return emit(r, res.holds ? exit_ok : exit_false);
}

int cmd_subs(const std::string& file, const std::string& kind, const std::string& mode) {
    auto role = parse_role(kind);
    if (!role) throw Error(Errc::parse_error, "unknown kind '" + kind + "'");
    auto m = read_cayley(file);
    auto opt = mode_of(mode);
    std::vector<SubMagma> found;
    bool complete = true;
    switch (*role) {
        case Role::left_ideal: found = ideals(m, Side::left); break;
        case Role::right_ideal: found = ideals(m, Side::right); break;
        case Role::ideal: found = ideals(m, Side::two_sided); break;
        case Role::normal: {
            auto label = classify(m).label;
            auto flavor = label == Label::group  ? NormalFlavor::subgroup
                          : label == Label::loop ? NormalFlavor::subloop
                                                 : NormalFlavor::subgroupoid;
            auto nr = normal_substructures(m, flavor, opt);
            found = nr.normal;
            complete = nr.complete;
            break;
        }
        case Role::hyper: {
            auto a = s_analysis(m, opt);
            for (const auto& s : a.hyper) found.push_back(make_sub(m, s));
            complete = a.complete;
            break;
        }
        default: {
            auto e = enumerate_submagmas(m, role, opt);
            found = std::move(e.subs);
            complete = e.complete;
        }
    }
    Report r;
    for (const auto& s : found)
        r.fact({{"sub", set_str(m, s.set)},
                {"size", std::to_string(s.size())},
                {"label", std::string(to_string(s.kind.label))},
                {"proper", yn(s.proper)}});
    r.fact({{"kind", kind}, {"count", std::to_string(found.size())}, {"complete", yn(complete)}});
    return emit(r, found.empty() ? exit_false : exit_ok);
}

int cmd_smarandache(const std::string& file, const std::string& property, const std::string& mode) {
    auto m = read_cayley(file);
    auto a = s_analysis(m, mode_of(mode));
    Report r;
    for (const auto& v : a.verdicts) {
        Fields f{{"property", v.property}, {"strict", yn(v.strict)}, {"permissive", yn(v.permissive)}};
        std::string w;
        for (const auto& s : v.witnesses) w += (w.empty() ? "" : ";") + set_str(m, s);
        f.emplace_back("witnesses", w);
        if (!v.note.empty()) f.emplace_back("note", v.note);
        r.fact(std::move(f));
    }
    r.fact({{"complete", yn(a.complete)}});
    if (property.empty()) return emit(r, exit_ok);
    return emit(r, a.get(property).strict ? exit_ok : exit_false);
}

// ---- N-structure commands

struct NArgs {
    std::string manifest, report = "lagrange,sylow,cauchy,smarandache", require, mode = "auto";
    std::string tuple, element, sub, side = "right";
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

void structure_facts(Report& r, const NStructure& ns) {
    r.fact({{"order", std::to_string(ns.order())},
            {"kind", std::string(to_string(ns.kind()))},
            {"n", std::to_string(ns.size())},
            {"disjoint", yn(ns.disjoint())}});
    for (const auto& c : ns.components())
        r.fact({{"component", c.label},
                {"category", std::string(to_string(category(c.kind)))},
                {"label", std::string(to_string(c.kind.label))},
                {"size", std::to_string(c.magma.size())}});
}

int cmd_nanalyze(const NArgs& a) {
    auto ns = load_manifest(a.manifest);
    auto req = a.require.empty() ? default_requirement(ns) : parse_requirement(a.require, ns.size());
    auto opt = mode_of(a.mode);
    auto wanted = split_list(a.report);
    for (const auto& w : wanted)
        if (w != "lagrange" && w != "sylow" && w != "cauchy" && w != "smarandache" && w != "cosets" &&
            w != "normalizer" && w != "quotient")
            throw Error(Errc::parse_error, "unknown report '" + w + "'");
    auto want = [&](const char* k) { return std::find(wanted.begin(), wanted.end(), k) != wanted.end(); };

    Report r;
    structure_facts(r, ns);
    std::string reqs;
    for (auto q : req) reqs += (reqs.empty() ? "" : ",") + std::string(to_string(q));
    r.fact({{"require", reqs}});

    if (want("lagrange") || want("sylow")) {
        auto ach = achievable_orders(ns, req, opt);
        if (want("lagrange")) {
            auto l = lagrange_analysis(ns, ach);
            std::size_t best = 0;
            std::vector<std::size_t> dividing, other;
            for (const auto& [w, d] : l.subs) {
                (d ? dividing : other).push_back(w.order);
                r.fact({{"sub_order", std::to_string(w.order)},
                        {"divides", yn(d)},
                        {"pseudo_divides", yn(pseudo_divides(ns, w.witness))},
                        {"witness", format_sub(ns, w.witness)}});
                if (d) best = std::max(best, w.order);
            }
            r.fact({{"lagrange", std::string(to_string(l.cls))},
                    {"witness_order", best ? std::to_string(best) : "-"},
                    {"total", std::to_string(ns.order())},
                    {"dividing", join(dividing)},
                    {"non_dividing", join(other)},
                    {"complete", yn(l.complete)}});
        }
        if (want("sylow")) {
            auto s = sylow_analysis(ns, ach);
            for (const auto& f : s.findings)
                r.fact({{"sylow", std::to_string(f.p)},
                        {"exponent", std::to_string(f.exponent)},
                        {"alpha", std::to_string(f.alpha)},
                        {"status", std::string(to_string(f.status))},
                        {"order", std::to_string(f.witness.order)},
                        {"witness", format_sub(ns, f.witness.witness)}});
            r.fact({{"sylow_findings", std::to_string(s.findings.size())}, {"complete", yn(s.complete)}});
        }
    }
    if (!a.tuple.empty()) {
        std::vector<std::size_t> primes;
        for (const auto& p : split_list(a.tuple)) {
            try {
                primes.push_back(std::stoul(p));
            } catch (...) {
                throw Error(Errc::parse_error, "bad prime '" + p + "'");
            }
        }
        auto t = tuple_sylow(ns, primes);
        if (t)
            r.fact({{"tuple_sylow", join(primes)},
                    {"slot_orders", join(t->slot_orders)},
                    {"n_order", std::to_string(t->n_order)},
                    {"witness", format_sub(ns, t->witness)}});
        else
            r.fact({{"tuple_sylow", join(primes)}, {"found", "false"}});
    }
    if (want("cauchy")) {
        auto c = cauchy_analysis(ns);
        std::size_t hits = 0;
        for (const auto& e : c.eligible) {
            const auto& comp = ns.component(e.slot);
            r.fact({{"element", comp.magma.name(e.element)},
                    {"component", comp.label},
                    {"t", std::to_string(e.t)},
                    {"cauchy", yn(e.cauchy)},
                    {"s_cauchy", yn(e.s_cauchy)}});
            hits += e.cauchy;
        }
        r.fact({{"cauchy", std::string(to_string(c.cls))},
                {"eligible", std::to_string(c.eligible.size())},
                {"cauchy_elements", std::to_string(hits)},
                {"ineligible", std::to_string(c.ineligible)}});
    }
    if (want("smarandache")) {
        auto s = smarandache_n_analysis(ns, opt);
        for (const auto& v : s.verdicts) {
            Fields f{{"property", v.property}, {"holds", yn(v.holds)}};
            if (v.witness) {
                f.emplace_back("order", std::to_string(v.witness->n_order()));
                f.emplace_back("witness", format_sub(ns, *v.witness));
            }
            if (!v.note.empty()) f.emplace_back("note", v.note);
            r.fact(std::move(f));
        }
        for (const auto& p : s.inverse_pairs) {
            const auto& m = ns.component(p.slot).magma;
            r.fact({{"s_inverse", m.name(p.x) + "," + m.name(p.y)},
                    {"related", m.name(p.a) + "," + m.name(p.b)},
                    {"component", ns.component(p.slot).label}});
        }
        r.fact({{"s_inverse_pairs", std::to_string(s.inverse_count)}, {"s_conjugates", std::to_string(s.conjugate_count)},
                {"complete", yn(s.complete)}});
    }
    if (want("cosets")) {
        if (a.sub.empty() || a.element.empty()) throw Error(Errc::parse_error, "cosets needs --sub and --element");
        auto h = parse_sub(ns, a.sub);
        auto side = a.side == "left" ? CosetSide::left : CosetSide::right;
        auto c = coset(ns, h, a.element, side);
        SubNStructure as_sub;
        for (auto& s : c.slots) as_sub.slots.emplace_back(s);
        r.fact({{"coset", a.side}, {"element", a.element}, {"slots", format_sub(ns, as_sub)}, {"s_coset", yn(c.s_coset)}});
    }
    if (want("normalizer")) {
        if (a.element.empty()) throw Error(Errc::parse_error, "normalizer needs --element");
        for (const auto& s : normalizer(ns, a.element)) {
            const auto& comp = ns.component(s.slot);
            r.fact({{"normalizer", comp.label},
                    {"set", set_str(comp.magma, s.set)},
                    {"subgroup", yn(s.subgroup)},
                    {"index", std::to_string(s.index_num) + (s.index_den == 1 ? "" : "/" + std::to_string(s.index_den))}});
        }
    }
    if (want("quotient")) {
        if (a.sub.empty()) throw Error(Errc::parse_error, "quotient needs --sub");
        auto q = quotient(ns, parse_sub(ns, a.sub));
        for (const auto& c : q.components())
            r.fact({{"quotient", c.label},
                    {"size", std::to_string(c.magma.size())},
                    {"label", std::string(to_string(c.kind.label))}});
        r.fact({{"quotient_order", std::to_string(q.order())}});
    }
    return emit(r, exit_ok);
}

int cmd_recheck(const std::string& manifest, const std::string& sub, const std::string& require) {
    auto ns = load_manifest(manifest);
    auto req = require.empty() ? default_requirement(ns) : parse_requirement(require, ns.size());
    auto h = parse_sub(ns, sub);
    auto c = check_sub(ns, h, req);
    Report r;
    Fields f{{"valid", yn(c.valid)},
             {"sub_order", std::to_string(c.n_order)},
             {"distinct", std::to_string(c.distinct)},
             {"proper", yn(c.proper)},
             {"nontrivial", yn(c.nontrivial)},
             {"divides", yn(c.n_order && ns.order() % c.n_order == 0)},
             {"pseudo_divides", yn(pseudo_divides(ns, h))}};
    if (!c.valid) f.emplace_back("reason", c.reason);
    r.fact(std::move(f));
    return emit(r, c.valid ? exit_ok : exit_false);
}

int cmd_verify(const std::string& suite, unsigned max_n) {
    auto res = run_suite(suite, max_n);
    std::cout << res.report.str();
    return res.ok() ? exit_ok : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magmakit: finite magmas, loops, groupoids and N-structures"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 ok or property holds, 1 property false, 2 input error, 3 resource cap.\n"
               "MAGMA_MAX_EXHAUSTIVE overrides the exhaustive enumeration cap (default 16).");

    std::function<int()> run;

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "emit a Cayley table");
    gen->require_subcommand(1);
    auto* gln = gen->add_subcommand("ln-loop", "L_n(m) on {e,1..n}");
    gln->add_option("--n", g.n, "odd n > 3")->required();
    gln->add_option("--m", g.m, "m with (m,n) = (m-1,n) = 1")->required();
    gln->add_option("-o,--output", g.out, "write here instead of stdout");
    gln->callback([&] { run = [&] { return cmd_gen_ln(g); }; });
    auto* gzn = gen->add_subcommand("zn", "Z_n(t,u): a*b = ta + ub mod n");
    gzn->add_option("--n", g.n)->required();
    gzn->add_option("--t", g.t)->required();
    gzn->add_option("--u", g.u)->required();
    gzn->add_option("--class", g.cls, "z, zstar, zstarstar or zzero (default: tightest)");
    gzn->add_option("-o,--output", g.out);
    gzn->callback([&] { run = [&] { return cmd_gen_zn(g); }; });
    auto* gstd = gen->add_subcommand("std", "standard family");
    gstd->add_option("--family", g.family,
                     "cyclic, dihedral, symmetric_group, alternating, zn_add, zn_mul, zn_units, full_transformation")
        ->required();
    gstd->add_option("--size", g.size, "family parameter")->required();
    gstd->add_option("--prefix", g.prefix, "prepended to every element name");
    gstd->add_option("-o,--output", g.out);
    gstd->callback([&] { run = [&] { return cmd_gen_std(g); }; });

    std::string file, identity, kind = "subgroupoid", mode = "auto", property;
    auto* cl = app.add_subcommand("classify", "label and element orders");
    cl->add_option("file", file, "Cayley table")->required();
    cl->callback([&] { run = [&] { return cmd_classify(file); }; });

    auto* ck = app.add_subcommand("check", "test an identity; exit 1 with a counterexample when it fails");
    ck->add_option("--identity", identity, "moufang, bol, bruck, wip, left_alternative, right_alternative, alternative, "
                                           "semi_alternative, p_groupoid, idempotent_everywhere, diassociative, "
                                           "power_associative")
        ->required();
    ck->add_option("file", file)->required();
    ck->callback([&] { run = [&] { return cmd_check(file, identity); }; });

    auto* sb = app.add_subcommand("subs", "closed subsets of a kind; exit 1 when none");
    sb->add_option("--kind", kind,
                   "subgroup, subloop, subsemigroup, subgroupoid, left_ideal, right_ideal, ideal, normal, hyper");
    sb->add_option("--mode", mode, "auto, exhaustive or gen:K");
    sb->add_option("file", file)->required();
    sb->callback([&] { run = [&] { return cmd_subs(file, kind, mode); }; });

    auto* sm = app.add_subcommand("smarandache", "Smarandache verdicts; with --property exit 1 when it fails");
    sm->add_option("--property", property, "e.g. s_semigroup, s_groupoid, s_loop, s_simple");
    sm->add_option("--mode", mode);
    sm->add_option("file", file)->required();
    sm->callback([&] { run = [&] { return cmd_smarandache(file, property, mode); }; });

    NArgs na;
    auto* nz = app.add_subcommand("nanalyze", "analyse an N-structure manifest");
    nz->add_option("manifest", na.manifest)->required();
    nz->add_option("--report", na.report, "comma list of lagrange, sylow, cauchy, smarandache, cosets, normalizer, quotient");
    nz->add_option("--require", na.require, "per-slot requirement g, l, s, gr or - (default from component kinds)");
    nz->add_option("--mode", na.mode, "per-component enumeration: auto, exhaustive or gen:K");
    nz->add_option("--tuple-sylow", na.tuple, "one prime per component");
    nz->add_option("--element", na.element, "element for cosets and normalizer");
    nz->add_option("--sub", na.sub, "selection like S3:{S3.123,S3.213};Z11:- (- means empty)");
    nz->add_option("--side", na.side, "coset side, left or right")->check(CLI::IsMember({"left", "right"}));
    nz->callback([&] { run = [&] { return cmd_nanalyze(na); }; });

    std::string rsub, rreq;
    auto* rc = app.add_subcommand("recheck", "re-verify a witness selection from a report");
    rc->add_option("manifest", file)->required();
    rc->add_option("--sub", rsub)->required();
    rc->add_option("--require", rreq);
    rc->callback([&] { run = [&] { return cmd_recheck(file, rsub, rreq); }; });

    std::string suite;
    unsigned max_n = 0;
    auto* vf = app.add_subcommand("verify", "run a theorem suite");
    vf->add_option("--suite", suite, "ln-theorems, zn-theorems or worked-examples")->required();
    vf->add_option("--max-n", max_n, "upper end of the checked range");
    vf->callback([&] { run = [&] { return cmd_verify(suite, max_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "magmakit: " << e.what() << "\n";
        return e.is_cap() ? exit_cap : exit_input;
    } catch (const std::exception& e) {
        std::cerr << "magmakit: " << e.what() << "\n";
        return exit_input;
    }
}
