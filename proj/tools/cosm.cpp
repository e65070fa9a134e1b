// cosm: batch front end; JSON (default) or text on stdout, errors on stderr
// exit codes: 0 ok, 1 domain error, 2 parse / usage error
#include "platy/bravo.hpp"
#include "platy/groups.hpp"
#include "platy/io.hpp"
#include "platy/metrics.hpp"
#include "platy/tables.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace platy;

namespace {

struct Opts {
    std::string format = "json";
    std::string gram, conorms, input;
    std::string type, params, chirality;
    bool lengths = false, oracle = false;
    int grid = 0;
    int table = 0;
    std::string group;
};

void emit(const Opts& o, const json& j) {
    if (o.format == "text")
        std::cout << render_text(j);
    else
        std::cout << j.dump(2) << "\n";
}

// ---- lattice input: a Gram matrix (2x2 or 3x3) or a conorm list (3 or 7)

struct LatticeInput {
    int dim = 3;
    bool from_gram = false;
    Mat3 gram3;
    std::array<std::array<Q, 2>, 2> gram2;
    Conorms3 c3;
    Conorms2 c2;
};

LatticeInput lattice_input(const Opts& o) {
    json j;
    bool is_gram;
    int given = !o.gram.empty() + !o.conorms.empty() + !o.input.empty();
    if (given != 1) throw DomainError("ParseError", "give exactly one of --gram, --conorms, --input");
    if (!o.input.empty()) {
        json f = read_json_file(o.input);
        if (f.is_object() && f.contains("gram")) {
            j = f["gram"];
            is_gram = true;
        } else if (f.is_object() && f.contains("conorms")) {
            j = f["conorms"];
            is_gram = false;
        } else {
            j = f;
            is_gram = f.is_array() && !f.empty() && f[0].is_array();
        }
    } else if (!o.gram.empty()) {
        j = parse_json_text(o.gram);
        is_gram = true;
    } else {
        j = parse_json_text(o.conorms);
        is_gram = false;
    }
    LatticeInput in;
    in.from_gram = is_gram;
    if (is_gram) {
        auto m = matrix_from_json(j);
        in.dim = static_cast<int>(m.size());
        if (in.dim == 3) {
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) in.gram3[a][b] = m[a][b];
            if (!positive_definite(in.gram3)) throw DomainError("NotPositiveDefinite", "Gram matrix is not positive definite");
        } else {
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) in.gram2[a][b] = m[a][b];
            if (!(m[0][0] > 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0))
                throw DomainError("NotPositiveDefinite", "Gram matrix is not positive definite");
        }
    } else {
        if (!j.is_array() || (j.size() != 3 && j.size() != 7))
            throw DomainError("ParseError", "conorms are a list of 3 (2D) or 7 (3D) values");
        in.dim = j.size() == 3 ? 2 : 3;
        if (in.dim == 3)
            in.c3 = conorms3_from_json(j);
        else
            in.c2 = conorms2_from_json(j);
    }
    return in;
}

json classify2d_json(const Conorms2& r) {
    auto c = classify2d(r);
    json j;
    j["conorm_pattern"] = c.conorm_pattern;
    j["voronoi_type"] = c.voronoi;
    j["delaunay_cell"] = c.delaunay;
    j["lattice_shape"] = c.shape;
    return j;
}

int cmd_reduce(const Opts& o) {
    auto in = lattice_input(o);
    json j;
    j["dimension"] = in.dim;
    if (in.dim == 2) {
        Conorms2 start = in.from_gram ? conorms2_from_gram(in.gram2) : in.c2;
        std::vector<Conorms2> trace;
        Conorms2 r = reduce2(start, &trace);
        j["input_conorms"] = to_json(start);
        json steps = json::array();
        for (auto& s : trace) steps.push_back(to_json(s));
        j["trace"] = steps;
        j["reduced"] = to_json(r);
        j["determinant"] = to_json(determinant2(r));
        j["classification"] = classify2d_json(r);
    } else {
        Conorms3 start = in.from_gram ? putative_conorms(superbase_from_gram(in.gram3)) : in.c3;
        ReduceTrace trace;
        Conorms3 r = reduce3(start, &trace);
        j["order"] = json::array({"p01", "p02", "p03", "p12", "p13", "p23", "q"});
        j["input_conorms"] = to_json(start);
        json steps = json::array();
        for (auto& s : trace.steps) steps.push_back(to_json(s));
        j["trace"] = steps;
        j["reduced"] = to_json(r);
        j["canonical"] = to_json(canonical(r));
        Vonorms3 v = vonorms(r);
        json vj = json::array();
        for (auto& x : v.v) vj.push_back(to_json(x));
        j["vonorms"] = vj;
        j["determinant"] = to_json(determinant(r));
        j["minimal_vonorm"] = to_json(minimal_vonorm(r));
        j["covering_radius_sq"] = to_json(covering_radius_sq(r));
    }
    emit(o, j);
    return 0;
}

int cmd_classify(const Opts& o) {
    auto in = lattice_input(o);
    json j;
    if (in.dim == 2) {
        Conorms2 start = in.from_gram ? conorms2_from_gram(in.gram2) : in.c2;
        j = classify2d_json(reduce2(start));
    } else {
        Conorms3 r = in.from_gram ? conorms_of_gram(in.gram3) : reduce3(in.c3);
        auto b = bravo_class(r);
        j["voronoi_type"] = to_string(b.voronoi);
        j["bravo_letter"] = std::string(1, b.letter);
        j["bravais_name"] = bravais_class(b.letter).name;
        j["symmetry_factor"] = b.symmetry_factor;
        j["point_group_orbifold"] = b.orbifold;
    }
    emit(o, j);
    return 0;
}

// ---- platycosm input

CosmType need_type(const Opts& o) {
    if (o.type.empty()) throw DomainError("ParseError", "--type is required");
    return parse_cosm_type(o.type);
}

Descriptor descriptor_input(const Opts& o) {
    Descriptor d;
    if (!o.input.empty()) {
        if (!o.type.empty() || !o.params.empty()) throw DomainError("ParseError", "--input excludes --type/--params");
        d = descriptor_from_json(read_json_file(o.input));
    } else {
        CosmType t = need_type(o);
        if (o.params.empty()) throw DomainError("ParseError", "--params is required");
        Chirality c = o.chirality.empty() ? Chirality::none : parse_chirality(o.chirality);
        d = parse_descriptor(t, o.params, c);
    }
    if (o.lengths)
        for (auto& [k, v] : d.params) v = v * v;
    validate(d);
    return canonicalize(d);
}

json meta(const Opts& o) {
    json m;
    m["parameters"] = o.lengths ? "lengths (squared on input)" : "squared lengths";
    return m;
}

json homology_json(CosmType t) {
    json h = json::array();
    for (auto& s : homology(t)) h.push_back(s);
    return h;
}

int cmd_info(const Opts& o) {
    CosmType t = need_type(o);
    auto& ti = type_info(t);
    auto& nr = dictionary(t);
    json j;
    j["type"] = ti.tag;
    j["name"] = nr.our_name;
    j["orientable"] = ti.orientable;
    j["metachiral"] = ti.metachiral;
    j["point_group"] = ti.point_group;
    j["point_group_order"] = ti.point_group_order;
    j["index"] = ti.index;
    j["params"] = ti.params;
    auto& p = presentation(t);
    j["presentation"] = {{"generators", p.gens}, {"relators", p.relators}, {"translations", p.translations}};
    j["homology"] = homology_json(t);
    auto& sf = seifert_fibrations(t);
    json fib = json::array();
    for (auto& [m, b] : sf.fibrations) fib.push_back({{"count", m}, {"base", b}});
    j["seifert"] = {{"row", sf.row}, {"fibrations", fib}};
    json basal = json::array(), perp = json::array();
    for (auto& f : surface_families(t)) (f.basal ? basal : perp).push_back(f.text());
    j["surfaces"] = {{"basal", basal}, {"perpendal", perp}};
    j["dictionary"] = {{"other_names", nr.other_names},
                       {"wolf", nr.wolf},
                       {"cdht", nr.cdht},
                       {"international", nr.international},
                       {"generators", nr.generators}};
    auto row = [](std::string r) {
        r.pop_back();
        return r;
    };
    j["table_rows"] = {{"seifert", row(seifert_row(t))},
                       {"surfaces", row(surfaces_row(t))},
                       {"names", row(names_row(t))},
                       {"space_group", row(groups_row(t))}};
    auto bt = platycosm_bravais_types(ti.tag);
    j["bravais"] = {{"patterns", bt.patterns}, {"chains", bt.chains}};
    emit(o, j);
    return 0;
}

int cmd_invariants(const Opts& o) {
    Descriptor d = descriptor_input(o);
    MetricReport r = metric_report(d);
    json j;
    j["meta"] = meta(o);
    j["descriptor"] = to_json(d);
    j["name"] = name(d);
    j["volume_sq"] = to_json(volume_sq(d));
    j["homology"] = homology_json(d.type);
    json rj = to_json(r);
    for (auto& [k, v] : rj.items()) j[k] = v;
    bool ok = true;
    if (o.oracle || o.grid > 0) {
        Q sys = systole_oracle(d);
        OracleConfig cfg;
        cfg.grid = o.grid;
        auto iv = diameter_oracle(d, cfg);
        bool sys_ok = sys == r.systole_sq;
        // exact forms must sit in the interval; bounds can only be too small
        bool dia_ok = r.diameter_sq <= iv.upper && (r.diameter_kind != "exact" || iv.lower <= r.diameter_sq);
        j["oracle"] = {{"systole_sq", to_json(sys)},
                       {"systole_agrees", sys_ok},
                       {"diameter_lower", to_json(iv.lower)},
                       {"diameter_upper", to_json(iv.upper)},
                       {"grid", iv.grid},
                       {"diameter_consistent", dia_ok}};
        ok = sys_ok && dia_ok;
    }
    emit(o, j);
    if (!ok) {
        std::cerr << "OracleMismatch: closed form and oracle disagree for " << name(d) << "\n";
        return 1;
    }
    return 0;
}

int cmd_covers(const Opts& o) {
    Descriptor d = descriptor_input(o);
    json j;
    j["meta"] = meta(o);
    j["base"] = name(d);
    j["volume_sq"] = to_json(volume_sq(d));
    json cs = json::array();
    bool ok = true;
    for (auto& c : double_covers(d)) {
        json e;
        e["signs"] = sign_string(d.type, c.h);
        e["name"] = name(c.table);
        e["descriptor"] = to_json(c.table);
        e["recognized"] = name(c.recognized);
        e["agrees"] = c.agrees;
        e["volume_sq"] = to_json(volume_sq(c.table));
        ok = ok && c.agrees;
        cs.push_back(e);
    }
    j["count"] = cs.size();
    j["covers"] = cs;
    emit(o, j);
    if (!ok) {
        std::cerr << "OracleMismatch: a tabulated cover differs from the recognized kernel\n";
        return 1;
    }
    return 0;
}

int cmd_recognize(const Opts& o) {
    json in;
    if (!o.input.empty() == !o.group.empty()) throw DomainError("ParseError", "give exactly one of --input, --group");
    in = o.input.empty() ? parse_json_text(o.group) : read_json_file(o.input);
    SpaceGroup g = group_from_json(in);
    Descriptor d = recognize(g);
    json j;
    j["descriptor"] = to_json(d);
    j["name"] = name(d);
    j["volume_sq"] = to_json(volume_sq(d));
    j["homology"] = homology_json(d.type);
    emit(o, j);
    return 0;
}

int cmd_dict(const Opts& o) {
    if (o.table) {
        std::string text = render_table(o.table);
        if (o.format == "text") {
            std::cout << text;
        } else {
            json rows = json::array();
            std::istringstream ss(text);
            for (std::string l; std::getline(ss, l);) rows.push_back(l);
            std::cout << json{{"table", o.table}, {"rows", rows}}.dump(2) << "\n";
        }
        return 0;
    }
    if (o.type.empty()) throw DomainError("ParseError", "dict needs --type or --table");
    CosmType t = need_type(o);
    auto& r = dictionary(t);
    json j;
    j["our_name"] = r.our_name;
    j["symbol"] = r.symbol;
    j["other_names"] = r.other_names;
    j["wolf"] = r.wolf;
    j["cdht"] = r.cdht;
    j["international"] = r.international;
    j["generators"] = r.generators;
    emit(o, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on lattices and the ten compact platycosms"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto lattice_opts = [&](CLI::App* s) {
        s->add_option("--gram", o.gram, "Gram matrix as JSON, 2x2 or 3x3");
        s->add_option("--conorms", o.conorms, "conorms as JSON: 3 values, or 7 in order p01 p02 p03 p12 p13 p23 q");
        s->add_option("--input", o.input, "JSON file holding a matrix, a conorm list, or {gram:..} / {conorms:..}");
    };
    auto cosm_opts = [&](CLI::App* s) {
        s->add_option("--type", o.type, "c1 c2 c3 c4 c6 c22 +a1 -a1 +a2 -a2");
        s->add_option("--params", o.params, "e.g. D=1,A=2/3");
        s->add_option("--chirality", o.chirality, "dextral | sinistral (c3 c4 c6)");
        s->add_option("--input", o.input, "descriptor JSON file");
        s->add_flag("--lengths", o.lengths, "parameters are lengths, square them");
    };

    auto* reduce = app.add_subcommand("reduce", "reduce a 2D or 3D lattice to its conorms");
    lattice_opts(reduce);
    auto* classify = app.add_subcommand("classify-lattice", "Voronoi / Bravais / BraVo class");
    lattice_opts(classify);

    auto* info = app.add_subcommand("cosm-info", "catalog data for one platycosm type");
    info->alias("info");
    info->add_option("--type", o.type)->required();

    auto* inv = app.add_subcommand("cosm-invariants", "volume, homology, systole, diameter");
    inv->alias("invariants");
    cosm_opts(inv);
    inv->add_flag("--oracle", o.oracle, "cross-check against the brute-force oracles");
    inv->add_option("--grid", o.grid, "diameter oracle points per naming-lattice edge (implies --oracle)")
        ->check(CLI::Range(1, 160));

    auto* covers = app.add_subcommand("cosm-covers", "double covers");
    covers->alias("covers");
    cosm_opts(covers);

    auto* rec = app.add_subcommand("cosm-recognize", "name a space group given by generators");
    rec->alias("recognize");
    rec->add_option("--input", o.input, "space group JSON file");
    rec->add_option("--group", o.group, "space group JSON, inline");

    auto* dict = app.add_subcommand("dict", "names and notations");
    dict->add_option("--type", o.type);
    dict->add_option("--table", o.table, "1 3 4 11 12 13");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(o);
        if (classify->parsed()) return cmd_classify(o);
        if (info->parsed()) return cmd_info(o);
        if (inv->parsed()) return cmd_invariants(o);
        if (covers->parsed()) return cmd_covers(o);
        if (rec->parsed()) return cmd_recognize(o);
        if (dict->parsed()) return cmd_dict(o);
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return e.code == "ParseError" ? 2 : 1;
    } catch (const json::exception& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
