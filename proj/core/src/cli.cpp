#include "dynatomic/cli.hpp"

#include "dynatomic/cycles.hpp"
#include "dynatomic/deformation.hpp"
#include "dynatomic/mapspec.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace dynatomic {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInconclusive = 3;

struct Request {
    std::string command;
    std::string map_text;
    std::string field_text;
    std::vector<std::string> vars;
    std::string model = "affine";
    long n = 1;
    std::vector<std::string> points; // each a csv of rationals
    int ext_cap = 2;
    std::string t_sequence;          // csv of rationals
    long samples = 20;
    int precision = 30;
    std::uint64_t seed = 0;
    bool pretty = false;
};

std::vector<Rational> parse_point_csv(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty point");
    return out;
}

std::string complex_str(const Complex& z) {
    std::ostringstream os;
    os << z.re.str(20) << (z.im < 0 ? " - " : " + ") << boost::multiprecision::abs(z.im).str(20)
       << "i";
    return os.str();
}

json point_json(const AlgebraicPoint& p) {
    json j;
    switch (p.kind) {
        case AlgebraicPoint::Kind::Rational: {
            json coords = json::array();
            for (const auto& c : p.rational_coords) coords.push_back(to_string(c));
            j["type"] = "rational";
            j["coords"] = coords;
            break;
        }
        case AlgebraicPoint::Kind::Orbit:
            j["type"] = "orbit";
            j["factor"] = qp::to_string(p.orbit_factor, "z");
            j["degree"] = qp::deg(p.orbit_factor);
            break;
        case AlgebraicPoint::Kind::Finite: {
            json coords = json::array();
            for (const auto& c : p.gf_coords) {
                json v = json::array();
                for (auto x : c) v.push_back(x);
                coords.push_back(v);
            }
            j["type"] = "finite-field";
            j["ext_degree"] = p.ext_degree;
            j["coords"] = coords;
            break;
        }
        case AlgebraicPoint::Kind::Infinity:
            j["type"] = "infinity";
            break;
    }
    return j;
}

json cycle_json(const ZeroCycle& cyc) {
    json entries = json::array();
    for (const auto& [p, m] : cyc.entries) {
        json e = point_json(p);
        e["multiplicity"] = m;
        entries.push_back(std::move(e));
    }
    json j;
    j["field"] = cyc.field;
    j["ambient"] = cyc.ambient;
    if (cyc.ext_cap > 0) j["ext_cap"] = cyc.ext_cap;
    j["entries"] = std::move(entries);
    j["total"] = cyc.total();
    return j;
}

std::string poly_str(const Poly& p, const MapSpec& spec) {
    if (p.field().kind() == FieldKind::RationalFunctions && p.nvars() == 1) {
        // Render over Q in (var, t) for byte-stable output.
        Poly biv(Field::Q(), 2);
        for (const auto& [m, c] : p.terms()) {
            const RatFunc& r = c.rat_func();
            if (!r.is_polynomial()) return "(non-polynomial coefficients)";
            for (size_t i = 0; i < r.num.size(); ++i) {
                if (r.num[i] == 0) continue;
                biv.add_term(Monomial{{m.e[0], static_cast<std::int64_t>(i)}},
                             FieldElement::of(r.num[i]));
            }
        }
        return biv.to_string({spec.vars[0], "t"});
    }
    return p.to_string(std::vector<std::string>(spec.vars.begin(),
                                                spec.vars.begin() + p.nvars()));
}

// --- subcommand bodies ------------------------------------------------------

void run_dynatomic(const Request& req, const MapSpec& spec, json& out, int& exit_code) {
    const PolyMap& map = *spec.map;
    DynatomicResult res = dynatomic_poly(map, req.n);
    out["periodic_poly"] = poly_str(res.phi_n_minus_z, spec);
    out["periodic_degree"] = res.phi_n_minus_z.total_degree();
    out["dynatomic_poly"] = poly_str(res.dynatomic, spec);
    out["dynatomic_degree"] = res.dynatomic.total_degree();
    out["division_certificate"] = res.division_certificate;
    if (map.model() == PolyMap::Model::Projective) {
        ProjEngine eng(map);
        out["infinity_multiplicity"] = eng.infinity_mult(req.n);
        out["infinity_formal_multiplicity"] = eng.formal_infinity_mult(req.n);
    }
    if (!res.division_certificate) exit_code = kExitInconclusive;
}

void run_multiplicity(const Request& req, const MapSpec& spec, json& out, int& exit_code) {
    const PolyMap& map = *spec.map;
    if (req.points.empty()) throw std::invalid_argument("--point is required");
    std::vector<Rational> P = parse_point_csv(req.points.front());
    const bool univariate =
        map.model() == PolyMap::Model::Projective || map.dimension() == 1;

    if (univariate) {
        if (P.size() != 1) throw std::invalid_argument("univariate maps take a single coordinate");
        json table;
        for (auto d : divisors(req.n).divisors) {
            table[std::to_string(d)] = multiplicity_at(map, d, P[0]);
        }
        out["engine"] = "root-order";
        out["a"] = multiplicity_at(map, req.n, P[0]);
        out["a_star"] = formal_multiplicity_at(map, req.n, P[0]);
        out["table"] = std::move(table);
        return;
    }

    if (static_cast<int>(P.size()) != map.dimension()) {
        throw std::invalid_argument("point dimension mismatch");
    }
    std::vector<FieldElement> fp;
    for (const auto& c : P) fp.push_back(FieldElement::from_rational(map.field(), c));
    json table;
    bool inconclusive = false;
    for (auto d : divisors(req.n).divisors) {
        ColengthReport r = intersection_multiplicity(map, d, fp);
        if (r.finite()) {
            table[std::to_string(d)] = r.value;
        } else {
            table[std::to_string(d)] =
                r.status == ColengthReport::Status::Degenerate ? "degenerate" : "inconclusive";
            inconclusive = true;
        }
    }
    out["engine"] = "colength";
    out["table"] = std::move(table);
    if (inconclusive) {
        exit_code = kExitInconclusive;
        return;
    }
    ColengthReport a = intersection_multiplicity(map, req.n, fp);
    ColengthReport as = formal_intersection_multiplicity(map, req.n, fp);
    out["a"] = a.value;
    out["a_star"] = as.value;
    out["certified_at_degree"] = a.certified_at_degree;
    out["bound_used"] = a.bound_used;
}

void run_cycle(const Request& req, const MapSpec& spec, json& out, int& exit_code) {
    const PolyMap& map = *spec.map;
    if (map.field().kind() == FieldKind::Finite) {
        ZeroCycle cyc = build_cycle(map, req.n, req.ext_cap);
        ZeroCycle dyn = build_dynatomic_cycle(map, req.n, req.ext_cap);
        auto points = enumerate_periodic(map, req.n, req.ext_cap);
        json moduli;
        const auto& base = map.field().gf();
        for (const auto& pp : points) {
            std::string key = std::to_string(pp.ext_degree);
            if (!moduli.contains(key)) {
                GFPtr ctx = (pp.ext_degree == 1)
                                ? base
                                : GFContext::make(base->p(), base->k() * pp.ext_degree);
                zp::Poly m = ctx->modulus();
                QPoly mq(m.size());
                for (size_t i = 0; i < m.size(); ++i) mq[i] = Rational(static_cast<long>(m[i]));
                moduli[key] = qp::to_string(mq, "u");
            }
        }
        json plist = json::array();
        for (const auto& pp : points) {
            json p = point_json(pp.at_infinity
                                    ? AlgebraicPoint::infinity()
                                    : AlgebraicPoint::finite_field(pp.ext_degree, pp.coords));
            p["minimal_period"] = pp.minimal_period;
            plist.push_back(std::move(p));
        }
        EffectivityReport eff = verify_effectivity(dyn);
        out["extension_moduli"] = std::move(moduli);
        out["points"] = std::move(plist);
        out["cycle"] = cycle_json(cyc);
        out["dynatomic_cycle"] = cycle_json(dyn);
        out["effective"] = eff.effective;
        json viols = json::array();
        for (const auto& [p, m] : eff.violations) {
            json v = point_json(p);
            v["multiplicity"] = m;
            viols.push_back(std::move(v));
        }
        out["violations"] = std::move(viols);
        if (!eff.effective) exit_code = kExitInconclusive;
        return;
    }

    // Over Q.
    if (map.model() == PolyMap::Model::Affine && map.dimension() > 1) {
        if (req.points.empty()) {
            throw std::invalid_argument(
                "multivariate rational cycles need candidate points (--point, repeatable)");
        }
        std::vector<std::vector<Rational>> cands;
        for (const auto& ptext : req.points) cands.push_back(parse_point_csv(ptext));
        ZeroCycle cyc = build_cycle(map, req.n, cands);
        ZeroCycle dyn = build_dynatomic_cycle(map, req.n, cands);
        EffectivityReport eff = verify_effectivity(dyn);
        out["cycle"] = cycle_json(cyc);
        out["dynatomic_cycle"] = cycle_json(dyn);
        out["effective"] = eff.effective;
        if (!eff.effective) exit_code = kExitInconclusive;
        return;
    }
    if (map.model() == PolyMap::Model::Projective) {
        throw std::invalid_argument("cycle over Q supports affine maps (P^1 cycles run over F_q)");
    }
    ZeroCycle cyc = build_cycle(map, req.n);
    ZeroCycle dyn = build_dynatomic_cycle(map, req.n);
    EffectivityReport eff = verify_effectivity(dyn);
    out["cycle"] = cycle_json(cyc);
    out["dynatomic_cycle"] = cycle_json(dyn);
    out["effective"] = eff.effective;
    json viols = json::array();
    for (const auto& [p, m] : eff.violations) {
        json v = point_json(p);
        v["multiplicity"] = m;
        viols.push_back(std::move(v));
    }
    out["violations"] = std::move(viols);
    if (!eff.effective) exit_code = kExitInconclusive;
}

std::vector<Rational> default_t_sequence() {
    std::vector<Rational> out;
    Rational t(1, 1000);
    for (int k = 3; k <= 8; ++k) {
        out.push_back(t);
        t /= 10;
    }
    return out;
}

void run_deform_check(const Request& req, const MapSpec& spec, json& out, int& exit_code) {
    const PolyMap& map = *spec.map;
    if (map.field().kind() != FieldKind::Rationals) {
        throw std::invalid_argument("deform-check runs over Q");
    }
    DeformedMap dmap = deform(map);
    Poly fpoly = deformed_periodic_poly(dmap, req.n);
    out["deformed_periodic_poly"] = poly_str(fpoly, spec);

    ParameterLocus locus = degenerate_parameter_locus(dmap, req.n);
    json locus_json;
    locus_json["squarefree_t_poly"] = qp::to_string(locus.squarefree_t_poly, "t");
    json roots = json::array();
    for (const auto& r : locus.rational_points) roots.push_back(to_string(r));
    locus_json["rational_points"] = std::move(roots);
    locus_json["roots_complete"] = locus.roots_complete;
    out["degenerate_parameter_locus"] = std::move(locus_json);

    out["degree_conservation"] = degree_conservation_check(dmap, req.n);

    SimplicityCheck sc = generic_simplicity_check(dmap, req.n, req.samples, req.seed);
    json scj;
    scj["ok"] = sc.ok;
    scj["samples"] = static_cast<long>(sc.sampled_t.size());
    json ce = json::array();
    for (const auto& c : sc.counterexamples) ce.push_back(to_string(c));
    scj["counterexamples"] = std::move(ce);
    out["generic_simplicity"] = std::move(scj);

    std::vector<Rational> tseq;
    if (req.t_sequence.empty()) {
        tseq = default_t_sequence();
    } else {
        tseq = parse_point_csv(req.t_sequence);
    }
    ClusterReport rep = flat_limit_clusters(dmap, req.n, tseq, req.precision);
    json fl;
    fl["status"] = rep.ok() ? "ok" : "inconclusive";
    if (!rep.diagnostic.empty()) fl["diagnostic"] = rep.diagnostic;
    fl["conservation_ok"] = rep.conservation_ok;
    fl["counts_match"] = rep.counts_match;
    fl["tags_match"] = rep.tags_match;
    fl["residual"] = rep.residual.str(10);
    json clusters = json::array();
    for (const auto& c : rep.clusters) {
        json cj;
        cj["center"] = complex_str(c.center);
        cj["cell_factor"] = qp::to_string(c.cell_factor, spec.vars[0]);
        cj["a_exact"] = c.exact_a;
        cj["a_star_exact"] = c.exact_a_star;
        cj["a_reconstructed"] = c.reconstructed_a;
        cj["a_star_reconstructed"] = c.reconstructed_a_star;
        json tags = json::array();
        for (const auto& m : c.members) tags.push_back(m.period_tag);
        cj["period_tags"] = std::move(tags);
        clusters.push_back(std::move(cj));
    }
    fl["clusters"] = std::move(clusters);
    out["flat_limit"] = std::move(fl);
    if (!rep.ok() || !sc.ok) exit_code = kExitInconclusive;
}

void run_verify(const Request& req, const MapSpec& spec, json& out, int& exit_code) {
    const PolyMap& map = *spec.map;
    json checks = json::array();
    bool all_ok = true;
    auto add_check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        all_ok = all_ok && pass;
    };

    if (map.field().kind() == FieldKind::Rationals && map.model() == PolyMap::Model::Affine &&
        map.dimension() == 1) {
        UniEngineQ eng(to_qpoly(map.coords()[0]));
        bool certs = true;
        for (long d = 1; d <= req.n; ++d) certs = certs && eng.dynatomic(d).certificate;
        add_check("division_certificates_n<=" + std::to_string(req.n), certs);

        std::vector<long> levels;
        for (long d = 1; d <= req.n; ++d) levels.push_back(d);
        auto cells = eng.cells(levels);
        bool effective = true, monotone = true;
        for (const auto& cell : cells) {
            for (long d = 1; d <= req.n; ++d) {
                if (cell.a_star(d) < 0) effective = false;
            }
            if (cell.a.at(1) > 0) {
                for (long d = 2; d <= req.n; ++d) {
                    if (cell.a.at(d) < cell.a.at(1)) monotone = false;
                }
            }
        }
        add_check("dynatomic_effectivity", effective);
        add_check("fixed_point_monotonicity", monotone);

        // Mobius product: prod_{d | n} Phi*_d == phi^n - z up to a constant.
        QPoly prod{Rational(1)};
        for (auto d : divisors(req.n).divisors) prod = qp::mul(prod, eng.dynatomic(d).value);
        QPoly fn = eng.periodic(req.n);
        add_check("mobius_product_identity",
                  qp::make_monic(prod) == qp::make_monic(fn));

        // Colength engine cross-check at rational fixed points.
        bool cross = true;
        long checked = 0;
        for (const auto& cell : cells) {
            if (cell.minimal_period != 1 || qp::deg(cell.factor) != 1) continue;
            Rational P = -cell.factor[0];
            std::vector<FieldElement> fp{FieldElement::of(P)};
            for (long d = 1; d <= std::min<long>(req.n, 3); ++d) {
                ColengthReport r = intersection_multiplicity(map, d, fp);
                if (!r.finite() || r.value != eng.mult_at(d, P)) cross = false;
                ++checked;
            }
        }
        add_check("colength_vs_root_order", cross,
                  std::to_string(checked) + " point-level comparisons");
    } else if (map.field().kind() == FieldKind::Finite) {
        bool certs = true;
        if (map.model() == PolyMap::Model::Affine && map.dimension() == 1) {
            UniEngineGF eng(to_gfpoly(map.coords()[0]));
            for (long d = 1; d <= req.n; ++d) certs = certs && eng.dynatomic(d).certificate;
            add_check("division_certificates_n<=" + std::to_string(req.n), certs);
        }
        bool effective = true;
        ZeroCycle total_dyn = build_cycle(map, req.n, req.ext_cap);
        ZeroCycle sum{total_dyn.field, total_dyn.ambient, total_dyn.ext_cap, {}};
        for (auto d : divisors(req.n).divisors) {
            ZeroCycle dyn = build_dynatomic_cycle(map, d, req.ext_cap);
            if (!verify_effectivity(dyn).effective) effective = false;
            sum.accumulate(dyn, 1);
        }
        add_check("dynatomic_effectivity", effective);
        add_check("mobius_cycle_identity", sum == total_dyn);
    } else {
        throw std::invalid_argument("verify supports univariate maps over Q and maps over F_q");
    }

    out["checks"] = std::move(checks);
    out["all_passed"] = all_ok;
    if (!all_ok) exit_code = kExitInconclusive;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    Request req;

    CLI::App app{"exact dynatomic cycles and local multiplicities"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        sub->add_option("--map", req.map_text, "map expression")->required();
        sub->add_option("--field", req.field_text, "Q | F<p> | F<p>^<k>")->required();
        sub->add_option("--vars", req.vars, "variable names")->delimiter(',');
        sub->add_option("--model", req.model, "affine | P1");
        if (needs_n) sub->add_option("--n", req.n, "period")->required()->check(CLI::PositiveNumber);
        sub->add_flag("--pretty", req.pretty, "indented output");
    };

    CLI::App* dyn = app.add_subcommand("dynatomic", "periodic and dynatomic polynomials");
    add_common(dyn, true);
    CLI::App* mult = app.add_subcommand("multiplicity", "a_P(n) and a*_P(n) at a point");
    add_common(mult, true);
    mult->add_option("--point", req.points, "point coordinates (csv rationals)")->required();
    CLI::App* cyc = app.add_subcommand("cycle", "Phi_n and Phi*_n as zero-cycles");
    add_common(cyc, true);
    cyc->add_option("--ext-cap", req.ext_cap, "extension-degree cap")->check(CLI::PositiveNumber);
    cyc->add_option("--point", req.points, "candidate points (multivariate over Q)");
    CLI::App* def = app.add_subcommand("deform-check", "deformation and flat-limit verification");
    add_common(def, true);
    def->add_option("--t-sequence", req.t_sequence, "csv rationals decreasing to 0");
    def->add_option("--samples", req.samples, "generic-simplicity sample count");
    def->add_option("--precision", req.precision, "decimal digits for root refinement");
    def->add_option("--seed", req.seed, "rng seed");
    CLI::App* ver = app.add_subcommand("verify", "per-map consistency bundle");
    add_common(ver, true);
    ver->add_option("--ext-cap", req.ext_cap, "extension-degree cap")->check(CLI::PositiveNumber);
    ver->add_option("--seed", req.seed, "rng seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        result.doc["command"] = args.empty() ? "" : args[0];
        result.doc["status"] = "error";
        result.doc["diagnostics"] = json::array({std::string("usage: ") + e.what()});
        result.exit_code = kExitUsage;
        result.pretty = req.pretty;
        return result;
    }
    result.pretty = req.pretty;
    for (auto* sub : {dyn, mult, cyc, def, ver}) {
        if (sub->parsed()) req.command = sub->get_name();
    }

    json doc;
    doc["command"] = req.command;
    json input;
    input["map"] = req.map_text;
    input["field"] = req.field_text;
    input["model"] = req.model;
    input["n"] = req.n;
    if (!req.points.empty()) input["points"] = req.points;
    if (req.command == "cycle" || req.command == "verify") input["ext_cap"] = req.ext_cap;
    if (req.command == "deform-check") {
        input["samples"] = req.samples;
        input["precision"] = req.precision;
        input["seed"] = req.seed;
        if (!req.t_sequence.empty()) input["t_sequence"] = req.t_sequence;
    }
    json diagnostics = json::array();
    int exit_code = kExitOk;
    json outputs = json::object();

    try {
        MapSpec spec = parse_map(req.map_text, req.field_text, req.vars, req.model);
        input["vars"] = spec.vars;
        input["canonical_map"] = spec.render();
        if (spec.field.kind() == FieldKind::Finite) {
            zp::Poly m = spec.field.gf()->modulus();
            QPoly mq(m.size());
            for (size_t i = 0; i < m.size(); ++i) mq[i] = Rational(static_cast<long>(m[i]));
            input["field_modulus"] = qp::to_string(mq, "u");
        }
        doc["input"] = input;

        if (req.command == "dynatomic") run_dynatomic(req, spec, outputs, exit_code);
        else if (req.command == "multiplicity") run_multiplicity(req, spec, outputs, exit_code);
        else if (req.command == "cycle") run_cycle(req, spec, outputs, exit_code);
        else if (req.command == "deform-check") run_deform_check(req, spec, outputs, exit_code);
        else if (req.command == "verify") run_verify(req, spec, outputs, exit_code);
    } catch (const DegeneracyError& e) {
        doc["input"] = input;
        diagnostics.push_back(e.what());
        exit_code = kExitDegenerate;
    } catch (const ParseError& e) {
        doc["input"] = input;
        diagnostics.push_back(e.what());
        exit_code = kExitUsage;
    } catch (const std::invalid_argument& e) {
        doc["input"] = input;
        diagnostics.push_back(e.what());
        exit_code = kExitUsage;
    } catch (const std::exception& e) {
        doc["input"] = input;
        diagnostics.push_back(std::string("internal error: ") + e.what());
        exit_code = kExitInconclusive;
    }

    doc["status"] = exit_code == kExitOk            ? "ok"
                    : exit_code == kExitDegenerate  ? "degenerate"
                    : exit_code == kExitInconclusive ? "inconclusive"
                                                     : "error";
    doc["outputs"] = std::move(outputs);
    doc["diagnostics"] = std::move(diagnostics);
    result.doc = std::move(doc);
    result.exit_code = exit_code;
    return result;
}

int run_cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliResult res = run_cli(args);
    if (res.pretty) {
        std::cout << res.doc.dump(2) << "\n";
    } else {
        std::cout << res.doc.dump() << "\n";
    }
    return res.exit_code;
}

} // namespace dynatomic
