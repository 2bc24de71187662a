// Command-line front end: every analysis as a reproducible batch command with
// JSON/CSV/DOT output and stable ordering.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kaprekar/equiv.hpp"
#include "kaprekar/verify.hpp"

namespace {

using namespace kaprekar;

constexpr int kMaxDeriveWidth = 11; // entry count grows ~25x per extra parameter

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(errc::bad_argument, "cannot open '" + path + "' for writing");
    os << content;
}

int cmd_step(const std::string& number, int width, int count, int limit, const std::string& format) {
    DigitNumber n = DigitNumber::parse(number, width);
    std::vector<DigitNumber> steps;
    std::string terminal;
    if (limit > 0) {
        // follow the orbit until a value repeats or the limit is reached
        Orbit o = orbit(n, limit);
        steps = o.steps;
        switch (o.terminal) {
        case OrbitEnd::fixed_point: terminal = "fixed point " + o.attractor().str(); break;
        case OrbitEnd::entered_cycle:
            terminal = "cycle of " + std::to_string(o.cycle_length) + " at " + o.attractor().str();
            break;
        case OrbitEnd::truncated: terminal = "truncated after " + std::to_string(limit) + " steps"; break;
        }
    } else {
        DigitNumber cur = n;
        for (int i = 0; i < count; ++i) {
            cur = kaprekar_step(cur);
            steps.push_back(cur);
        }
    }
    if (format == "json") {
        nlohmann::ordered_json sj = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < steps.size(); ++i)
            sj.push_back({{"step", i + 1}, {"value", steps[i].str()}, {"params", params(steps[i]).str()}});
        nlohmann::ordered_json j{{"start", n.str()}, {"width", width}, {"steps", sj}};
        if (!terminal.empty()) j["terminal"] = terminal;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const DigitNumber& s : steps) std::cout << s.str() << "  p=" << params(s).str() << "\n";
    if (!terminal.empty()) std::cout << terminal << "\n";
    return 0;
}

int cmd_params(const std::string& number, int width) {
    std::cout << params(DigitNumber::parse(number, width)).str() << "\n";
    return 0;
}

int cmd_derive(int width, const std::string& format, const std::string& out) {
    if (width > kMaxDeriveWidth)
        fail(errc::bad_argument, "derivation is supported up to width " + std::to_string(kMaxDeriveWidth));
    Catalog cat = derive_k_functions(width);
    if (format == "json") {
        write_out(out, export_catalog_json(cat));
    } else {
        int f1 = 0, f2 = 0, f3 = 0;
        for (const auto& [tag, n] : cat.family_counts) {
            if (tag == "f1") f1 = n;
            else if (tag == "f3") f3 = n;
            else f2 += n;
        }
        std::ostringstream os;
        os << "width " << width << ": " << cat.fns.size() << " functions (full " << f1 << ", zero-tail " << f2
           << ", single-parameter " << f3 << "), " << cat.raw_orderings << " raw orderings\n";
        for (const SymbolicKFn& fn : cat.fns) {
            os << fn.id;
            for (const std::string& a : fn.aliases) os << " [" << a << "]";
            os << ": (";
            for (std::size_t s = 0; s < fn.output.size(); ++s) os << (s ? ", " : "") << fn.output[s].str();
            os << ") on " << fn.feasible.size() << " classes\n";
        }
        write_out(out, os.str());
    }
    return 0;
}

int cmd_graph(int width, const std::string& format, const std::string& out) {
    ClassGraph g = build_graph(width);
    write_out(out, format == "json" ? export_graph_json(g) : export_dot(g));
    return 0;
}

int cmd_cycles(int width, const std::string& format) {
    ClassGraph g = build_graph(width);
    auto cs = cycles(g);
    if (format == "json") {
        nlohmann::ordered_json j{{"width", width}, {"cycles", nlohmann::ordered_json::array()}};
        for (const Cycle& c : cs) {
            nlohmann::ordered_json cj{{"length", c.length()},
                                      {"members", nlohmann::ordered_json::array()},
                                      {"numeric_members", nlohmann::ordered_json::array()}};
            for (const auto& m : c.members) cj["members"].push_back(m.str());
            for (const auto& m : c.numeric_members) cj["numeric_members"].push_back(m.str());
            j["cycles"].push_back(std::move(cj));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const Cycle& c : cs) {
        if (c.length() == 1) {
            std::cout << "constant: " << c.members[0].str() << " = " << c.numeric_members[0].str() << "\n";
            continue;
        }
        std::cout << "cycle of " << c.length() << ":";
        for (const auto& m : c.members) std::cout << " " << m.str();
        std::cout << "\n  numeric:";
        for (const auto& m : c.numeric_members) std::cout << " " << m.str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_constants(int width) {
    auto fps = width <= kMaxDeriveWidth ? solve_fixed_points(width)
                                        : [&] {
                                              std::vector<FixedPoint> out;
                                              for (const ParamVector& a : fixed_params(width))
                                                  out.push_back(FixedPoint{a, apply_f(a), ""});
                                              return out;
                                          }();
    if (fps.empty()) {
        std::cout << "no transformation constants at width " << width << "\n";
        return 0;
    }
    for (const FixedPoint& fp : fps) {
        std::cout << fp.n_e.str() << "  params " << fp.alpha_e.str();
        if (!fp.witness_fn.empty()) std::cout << "  fixed by " << fp.witness_fn;
        std::cout << "\n";
    }
    return 0;
}

int cmd_partition(int width, int order, const std::string& format, const std::string& out) {
    Partition p = partition(width, order);
    if (format == "json") {
        write_out(out, export_partition_json(p));
        return 0;
    }
    std::ostringstream os;
    os << "width " << width << ", order " << order << ": " << p.block_count() << " blocks\n";
    std::vector<ParamVector> classes = enumerate_classes(width);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        os << "block " << b + 1 << ":";
        for (int id : p.blocks[b]) os << " " << classes[static_cast<std::size_t>(id)].str();
        os << "\n";
    }
    write_out(out, os.str());
    return 0;
}

int cmd_stabilize(int width) {
    auto [u, final_p] = stabilize(width);
    std::cout << "stationary from order " << u << " with " << final_p.block_count() << " blocks\n";
    ClassGraph g = build_graph(width);
    std::vector<ParamVector> classes = enumerate_classes(width);
    for (std::size_t c = 0; c < g.components().size(); ++c) {
        const Component& comp = g.components()[c];
        std::set<int> blocks;
        for (int id : comp.nodes) blocks.insert(final_p.block_id[static_cast<std::size_t>(id)]);
        std::cout << (comp.alias.empty() ? "component " + std::to_string(c + 1) : "tree " + comp.alias) << ": "
                  << blocks.size() << " final block" << (blocks.size() == 1 ? "" : "s") << " ("
                  << comp.nodes.size() << " classes, cycle length " << comp.cycle.size() << ")\n";
    }
    return 0;
}

int cmd_group(const std::string& name, int width, const std::string& format, const std::string& out) {
    auto cat = catalog_r2(width);
    ProductTable t = group_classify(equivalence_set(cat, name));
    if (format == "csv") {
        write_out(out, export_table_csv(t));
        return 0;
    }
    std::ostringstream os;
    os << "set " << name << " at width " << width << ": "
       << (t.classification == "klein-four" ? "Klein four-group"
           : t.classification == "Z2"       ? "Z2"
                                            : "no group structure")
       << (t.closed ? "" : " (not closed)") << (t.abelian ? ", abelian" : "") << "\n";
    os << export_table_csv(t);
    write_out(out, os.str());
    return 0;
}

int cmd_equiv(const std::string& m, const std::string& n, int width, int order, bool show_catalog,
              bool run_verify) {
    if (show_catalog) {
        std::cout << export_equiv_catalog_json(catalog_r2(width), width);
        return 0;
    }
    if (run_verify) {
        CatalogReport rep = verify_catalog(width);
        std::cout << "width " << width << ": " << rep.maps_checked << " maps checked, "
                  << rep.unsound.size() << " unsound, " << rep.oracle_pairs << " oracle pairs, "
                  << rep.uncovered.size() << " uncovered\n";
        for (const auto& [id, alpha] : rep.unsound) std::cout << "unsound: " << id << " at " << alpha.str() << "\n";
        for (const UncoveredPair& p : rep.uncovered)
            std::cout << "uncovered: {" << p.a.str() << ", " << p.b.str() << "}\n";
        return rep.sound() && rep.complete() ? 0 : 1;
    }
    if (m.empty() || n.empty()) fail(errc::bad_argument, "equiv needs two numbers (or --catalog / --verify)");
    bool eq = r_equiv(DigitNumber::parse(m, width), DigitNumber::parse(n, width), order);
    std::cout << m << (eq ? " ~ " : " !~ ") << n << " at order " << order << "\n";
    return 0;
}

int cmd_verify_paper() {
    auto results = kaprekar::verify::run_all();
    return kaprekar::verify::print_report(std::cout, results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of the generalized base-10 Kaprekar routine"};
    app.require_subcommand(1);

    std::string number, second, format = "text", out, set_name;
    int width = 0, count = 1, order = 2, limit = 0;
    bool flag_catalog = false, flag_verify = false;

    auto add_width = [&](CLI::App* cmd) {
        cmd->add_option("-w,--width", width, "digit width")->required()->check(CLI::Range(2, 64));
    };

    auto* step = app.add_subcommand("step", "apply the routine repeatedly to a number");
    step->add_option("number", number)->required();
    add_width(step);
    step->add_option("--count", count, "number of steps (default 1)");
    step->add_option("--limit", limit, "follow the orbit until a repeat, up to this many steps");
    step->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* prm = app.add_subcommand("params", "print the parameter tuple of a number");
    prm->add_option("number", number)->required();
    add_width(prm);

    auto* derive = app.add_subcommand("derive", "derive the parametric step functions");
    add_width(derive);
    derive->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    derive->add_option("--out", out, "output file (default stdout)");

    auto* graph = app.add_subcommand("graph", "export the class transformation graph");
    add_width(graph);
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", out);

    auto* cyc = app.add_subcommand("cycles", "list attractor cycles with numeric members");
    add_width(cyc);
    cyc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cst = app.add_subcommand("constants", "list transformation constants");
    add_width(cst);

    auto* part = app.add_subcommand("partition", "equivalence-class partition of the classes");
    add_width(part);
    part->add_option("-r,--order", order, "equivalence order (default 2)");
    part->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    part->add_option("--out", out);

    auto* stab = app.add_subcommand("stabilize", "refine partitions until stationary");
    add_width(stab);

    auto* grp = app.add_subcommand("group", "product table of an equivalence set (I, II, III)");
    grp->add_option("set", set_name)->required()->check(CLI::IsMember({"I", "II", "III"}));
    add_width(grp);
    grp->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    grp->add_option("--out", out);

    auto* eqv = app.add_subcommand("equiv", "check order-r equivalence of two numbers");
    eqv->add_option("m", number);
    eqv->add_option("n", second);
    add_width(eqv);
    eqv->add_option("-r,--order", order, "equivalence order (default 2)");
    eqv->add_flag("--catalog", flag_catalog, "print the built-in order-2 map catalog as JSON");
    eqv->add_flag("--verify", flag_verify, "verify catalog soundness and coverage");

    auto* vp = app.add_subcommand("verify-paper", "run the built-in reference verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (step->parsed()) return cmd_step(number, width, count, limit, format);
        if (prm->parsed()) return cmd_params(number, width);
        if (derive->parsed()) return cmd_derive(width, format, out);
        if (graph->parsed()) return cmd_graph(width, format == "text" ? "dot" : format, out);
        if (cyc->parsed()) return cmd_cycles(width, format);
        if (cst->parsed()) return cmd_constants(width);
        if (part->parsed()) return cmd_partition(width, order, format, out);
        if (stab->parsed()) return cmd_stabilize(width);
        if (grp->parsed()) return cmd_group(set_name, width, format, out);
        if (eqv->parsed()) return cmd_equiv(number, second, width, order, flag_catalog, flag_verify);
        if (vp->parsed()) return cmd_verify_paper();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
