#include "tiercomb/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiercomb/bijection.hpp"
#include "tiercomb/dyck_path.hpp"
#include "tiercomb/json_io.hpp"
#include "tiercomb/path_enumeration.hpp"
#include "tiercomb/render.hpp"
#include "tiercomb/tiered_tree.hpp"
#include "tiercomb/tree_enumeration.hpp"
#include "tiercomb/verification.hpp"

namespace tiercomb {

namespace {

using nlohmann::json;

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Runs `body` with --in/--out resolved to streams (stdin/stdout by default).
int with_io(const std::string& in_path, const std::string& out_path, std::istream& in,
            std::ostream& out, std::ostream& err,
            const std::function<int(std::istream&, std::ostream&)>& body) {
    std::ifstream fin;
    std::istream* inp = &in;
    if (!in_path.empty()) {
        fin.open(in_path);
        if (!fin) {
            err << "cannot open input file: " << in_path << "\n";
            return exit_bad_input;
        }
        inp = &fin;
    }
    std::ofstream fout;
    std::ostream* outp = &out;
    if (!out_path.empty()) {
        fout.open(out_path);
        if (!fout) {
            err << "cannot open output file: " << out_path << "\n";
            return exit_bad_input;
        }
        outp = &fout;
    }
    return body(*inp, *outp);
}

int do_map(std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        try {
            const TieredRootedTree t = tree_from_json(json::parse(line));
            const TreeValidity v = validate_tree(t);
            if (!v.ok) {
                err << "line " << lineno << ": invalid tree: " << v.violations[0].detail << "\n";
                return exit_bad_input;
            }
            const SequencePair d = tree_to_pair(t);
            json o = pair_to_json(d);
            o["x_composition"] = composition_to_json(WeakComposition::counting(d.a));
            o["y_composition"] = composition_to_json(WeakComposition::counting(d.b));
            out << o.dump() << "\n";
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            return exit_bad_input;
        }
    }
    return exit_ok;
}

int do_invert(std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        try {
            const SequencePair d = pair_from_json(json::parse(line));
            const PathValidity v = validate_sequence_pair(d);
            if (!v.ok) {
                err << "line " << lineno << ": invalid sequence pair: " << v.violations[0].detail
                    << "\n";
                return exit_bad_input;
            }
            const TieredRootedTree t = pair_to_tree(d);
            json o = tree_to_json(t);
            o["label_composition"] = composition_to_json(label_composition(t));
            o["level_composition"] = composition_to_json(level_composition(t));
            out << o.dump() << "\n";
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            return exit_bad_input;
        }
    }
    return exit_ok;
}

int do_render(const std::string& format, std::istream& in, std::ostream& out,
              std::ostream& err) {
    std::string line;
    while (std::getline(in, line) && blank(line)) {
    }
    if (blank(line)) {
        err << "render: no input object\n";
        return exit_bad_input;
    }
    try {
        const json j = json::parse(line);
        if (j.is_object() && j.contains("parent")) {
            const TieredRootedTree t = tree_from_json(j);
            const TreeValidity v = validate_tree(t);
            if (!v.ok) {
                err << "invalid tree: " << v.violations[0].detail << "\n";
                return exit_bad_input;
            }
            out << (format == "dot" ? tree_to_dot(t) : tree_to_svg(t));
            return exit_ok;
        }
        LabelledDyckPath2 p;
        if (j.is_object() && j.contains("steps")) {
            p = path_from_json(j);
        } else if (j.is_object() && j.contains("a")) {
            p = from_sequence_pair(pair_from_json(j));
        } else {
            err << "render: object is neither a tree, a path, nor a sequence pair\n";
            return exit_bad_input;
        }
        const PathValidity v = validate_path(p);
        if (!v.ok) {
            err << "invalid path: " << v.violations[0].detail << "\n";
            return exit_bad_input;
        }
        if (format == "dot") {
            err << "render: dot output is defined for trees only\n";
            return exit_usage;
        }
        out << path_to_svg(p);
        return exit_ok;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_bad_input;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"tiered rooted trees, 2-labelled Dyck paths, and their zero-statistic bijection"};
    app.require_subcommand(1);

    struct {
        int n = 0;
        int max_label = 0;
        int max_level = 0;
        bool zero_only = false;
        std::string format = "json";
        std::string poly_format = "text";
        std::string render_format = "svg";
        std::string mode;
        std::string family;
        std::string in_path;
        std::string out_path;
    } o;

    auto add_out = [&o](CLI::App* cmd) {
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    };
    auto add_in = [&o](CLI::App* cmd) {
        cmd->add_option("--in", o.in_path, "input file (default stdin)");
    };

    CLI::App* enum_trees =
        app.add_subcommand("enumerate-trees", "stream every tiered rooted tree of size n");
    enum_trees->add_option("--n", o.n, "number of non-root vertices")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enum_trees->add_option("--max-label", o.max_label, "label bound (default n)")
        ->check(CLI::PositiveNumber);
    enum_trees->add_option("--max-level", o.max_level, "level bound (default n)")
        ->check(CLI::PositiveNumber);
    enum_trees->add_flag("--zero-only", o.zero_only, "inversion-free trees only");
    enum_trees->add_option("--format", o.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    add_out(enum_trees);

    CLI::App* enum_paths =
        app.add_subcommand("enumerate-paths", "stream every 2-labelled Dyck path of size n");
    enum_paths->add_option("--n", o.n, "path size")->required()->check(CLI::NonNegativeNumber);
    enum_paths->add_option("--max-label", o.max_label, "label bound (default n)")
        ->check(CLI::PositiveNumber);
    enum_paths->add_flag("--zero-only", o.zero_only, "area-0 paths only");
    enum_paths->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
    add_out(enum_paths);

    CLI::App* map_cmd = app.add_subcommand(
        "map", "tree JSON lines -> sequence pair JSON lines (with composition audit)");
    add_in(map_cmd);
    add_out(map_cmd);

    CLI::App* invert_cmd = app.add_subcommand(
        "invert", "sequence pair JSON lines -> tree JSON lines (with composition audit)");
    add_in(invert_cmd);
    add_out(invert_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named cross-check");
    verify_cmd->add_option("--mode", o.mode, "q0 | full | symmetry")
        ->required()
        ->check(CLI::IsMember({"q0", "full", "symmetry"}));
    verify_cmd->add_option("--n", o.n, "object size")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", o.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    add_out(verify_cmd);

    CLI::App* poly_cmd =
        app.add_subcommand("poly", "emit a generating polynomial in q, x and y");
    poly_cmd->add_option("--family", o.family, "trees | paths")
        ->required()
        ->check(CLI::IsMember({"trees", "paths"}));
    poly_cmd->add_option("--n", o.n, "object size")->required()->check(CLI::PositiveNumber);
    poly_cmd->add_option("--max-label", o.max_label, "label bound (default n)")
        ->check(CLI::PositiveNumber);
    poly_cmd->add_option("--max-level", o.max_level, "level bound (default n, trees only)")
        ->check(CLI::PositiveNumber);
    poly_cmd->add_flag("--zero-only", o.zero_only, "statistic-0 objects only");
    poly_cmd->add_option("--format", o.poly_format, "text | json")
        ->check(CLI::IsMember({"json", "text"}));
    add_out(poly_cmd);

    CLI::App* render_cmd =
        app.add_subcommand("render", "draw a tree (dot/svg) or a labelled path grid (svg)");
    render_cmd->add_option("--format", o.render_format, "dot | svg")
        ->check(CLI::IsMember({"dot", "svg"}));
    add_in(render_cmd);
    add_out(render_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    if (o.max_label == 0) o.max_label = std::max(o.n, 1);
    if (o.max_level == 0) o.max_level = std::max(o.n, 1);

    try {
        if (enum_trees->parsed()) {
            const bool text = o.format == "text";
            return with_io("", o.out_path, in, out, err,
                           [&](std::istream&, std::ostream& os) {
                               enumerate_trees(o.n, o.max_label, o.max_level,
                                               o.zero_only ? TreeFilter::ZeroInversion
                                                           : TreeFilter::All,
                                               [&os, text](const TieredRootedTree& t) {
                                                   if (text) os << tree_to_text(t) << "\n";
                                                   else os << tree_to_json(t).dump() << "\n";
                                               });
                               return exit_ok;
                           });
        }
        if (enum_paths->parsed()) {
            return with_io("", o.out_path, in, out, err,
                           [&](std::istream&, std::ostream& os) {
                               enumerate_paths(o.n, o.max_label,
                                               o.zero_only ? PathFilter::AreaZero
                                                           : PathFilter::All,
                                               [&os](const LabelledDyckPath2& p) {
                                                   os << path_to_json(p).dump() << "\n";
                                               });
                               return exit_ok;
                           });
        }
        if (map_cmd->parsed()) {
            return with_io(o.in_path, o.out_path, in, out, err,
                           [&err](std::istream& is, std::ostream& os) {
                               return do_map(is, os, err);
                           });
        }
        if (invert_cmd->parsed()) {
            return with_io(o.in_path, o.out_path, in, out, err,
                           [&err](std::istream& is, std::ostream& os) {
                               return do_invert(is, os, err);
                           });
        }
        if (verify_cmd->parsed()) {
            VerificationReport report;
            if (o.mode == "q0") report = verify_q0_theorem(o.n);
            else if (o.mode == "full") report = verify_full_conjecture(o.n);
            else report = verify_symmetry(o.n);
            const int rc = report.pass ? exit_ok : exit_verify_failed;
            const int io_rc = with_io("", o.out_path, in, out, err,
                                      [&](std::istream&, std::ostream& os) {
                                          if (o.format == "text") os << report.to_text();
                                          else os << report.to_json().dump() << "\n";
                                          return exit_ok;
                                      });
            return io_rc == exit_ok ? rc : io_rc;
        }
        if (poly_cmd->parsed()) {
            const GenPolynomial p =
                o.family == "trees"
                    ? tree_polynomial(o.n, o.max_label, o.max_level, o.zero_only)
                    : path_polynomial(o.n, o.max_label, o.zero_only);
            return with_io("", o.out_path, in, out, err,
                           [&](std::istream&, std::ostream& os) {
                               if (o.poly_format == "json") {
                                   os << polynomial_to_json(p).dump() << "\n";
                               } else {
                                   os << p.to_text();
                               }
                               return exit_ok;
                           });
        }
        if (render_cmd->parsed()) {
            return with_io(o.in_path, o.out_path, in, out, err,
                           [&](std::istream& is, std::ostream& os) {
                               return do_render(o.render_format, is, os, err);
                           });
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_usage;
}

}  // namespace tiercomb
