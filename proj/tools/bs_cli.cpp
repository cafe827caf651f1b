#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bs/bounds.hpp"
#include "bs/decompose.hpp"
#include "bs/facets.hpp"
#include "bs/json_io.hpp"
#include "bs/pairing.hpp"
#include "bs/pure.hpp"
#include "bs/render.hpp"
#include "bs/supernatural.hpp"

using namespace bs;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    std::string mode = "both"; // json|text|both
    bool json() const { return mode != "text"; }
    bool text() const { return mode != "json"; }
};

void emit(const Output& out, const json& j, const std::string& text) {
    if (out.json()) std::cout << j.dump(2) << '\n';
    if (out.text()) std::cout << text;
}

std::pair<long, long> parse_window(const std::vector<long>& w, const char* what) {
    if (w.size() != 2 || w[0] > w[1])
        throw ParseError(std::string(what) + " must be two integers lo,hi with lo <= hi");
    return {w[0], w[1]};
}

json bounds_pair_json(const char* a, const Rational& x, const char* b, const Rational& y) {
    return {{a, format_rational(x)}, {b, format_rational(y)}};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Boij-Soderberg tables: pure/supernatural decompositions, "
                 "facet functionals, and multiplicity/slope bounds"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--output", out.mode, "Report format")
        ->check(CLI::IsMember({"json", "text", "both"}))
        ->capture_default_str();

    // pure
    auto* cmd_pure = app.add_subcommand("pure", "Primitive pure Betti table of a degree sequence");
    std::vector<long> degrees;
    int opt_n = -1;
    bool generators = false;
    cmd_pure->add_option("--degrees", degrees, "Strictly increasing degree sequence")
        ->required()->delimiter(',');
    cmd_pure->add_option("--n", opt_n, "Number of variables (defaults to length - 1)");
    cmd_pure->add_flag("--generators", generators,
                       "Also report the existence-construction generator count");

    // supernatural
    auto* cmd_sup = app.add_subcommand("supernatural",
                                       "Supernatural cohomology table of a root sequence");
    std::vector<long> roots, window;
    std::string rank_str;
    long monad_a = 0;
    cmd_sup->add_option("--roots", roots, "Strictly decreasing root sequence")
        ->required()->delimiter(',');
    cmd_sup->add_option("--rank", rank_str, "Rank (defaults to the gcd rank bound)");
    cmd_sup->add_option("--window", window, "Twist window lo,hi")->required()->delimiter(',');
    auto* monad_opt = cmd_sup->add_option("--monad", monad_a,
                                          "Truncate row m as the regularity-a monad table");
    // rank-bounds
    auto* cmd_rank = app.add_subcommand("rank-bounds", "Rank bounds of a root sequence");
    cmd_rank->add_option("--roots", roots, "Strictly decreasing root sequence")
        ->required()->delimiter(',');

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "Greedy chain decomposition");
    std::string kind, input_path;
    bool strict_window = false;
    cmd_dec->add_option("kind", kind, "betti | cohomology")
        ->required()->check(CLI::IsMember({"betti", "cohomology"}));
    cmd_dec->add_option("input", input_path, "Table JSON path or -")->required();
    cmd_dec->add_flag("--strict-window", strict_window,
                      "Fail rather than extrapolate when a window is too narrow "
                      "(the exact algorithm already guarantees this)");

    // pair
    auto* cmd_pair = app.add_subcommand("pair", "Pair a Betti table with a cohomology table");
    std::string betti_path, coh_path;
    long cutoff = 0;
    int tau = 0;
    cmd_pair->add_option("betti", betti_path, "Betti table JSON path or -")->required();
    cmd_pair->add_option("cohomology", coh_path, "Cohomology table JSON path or -")->required();
    auto* cut_opt = cmd_pair->add_option("--cutoff", cutoff, "Modified-pairing cutoff");
    auto* tau_opt = cmd_pair->add_option("--tau", tau, "Modified-pairing tau");
    cut_opt->needs(tau_opt);
    tau_opt->needs(cut_opt);

    // functional
    auto* cmd_fn = app.add_subcommand("functional", "Materialize a pairing functional");
    std::string side;
    std::vector<long> rows;
    long fn_cutoff = 0;
    int fn_tau = 0, fn_n = -1;
    bool unmodified = false;
    cmd_fn->add_option("--side", side, "betti | cohomology")
        ->required()->check(CLI::IsMember({"betti", "cohomology"}));
    cmd_fn->add_option("--input", input_path,
                       "Cohomology table JSON (betti side)");
    cmd_fn->add_option("--degrees", degrees, "Degree sequence (cohomology side)")
        ->delimiter(',');
    cmd_fn->add_option("--cutoff", fn_cutoff, "Cutoff degree");
    cmd_fn->add_option("--tau", fn_tau, "Index tau");
    cmd_fn->add_option("--n", fn_n, "Number of columns (betti side)");
    cmd_fn->add_option("--rows", rows, "Display-row window lo,hi (betti side)")
        ->delimiter(',');
    cmd_fn->add_flag("--unmodified", unmodified, "Materialize the unmodified pairing");

    // facet
    auto* cmd_facet = app.add_subcommand("facet", "Facet equation of the cone");
    std::string facet_side = "betti", method = "chain";
    int facet_tau = 0, facet_index = 0;
    bool lower = false;
    cmd_facet->add_option("--degrees", degrees, "Degree sequence with f_{tau+1} = f_tau + 2")
        ->delimiter(',');
    cmd_facet->add_option("--tau", facet_tau, "Facet position");
    cmd_facet->add_option("--rows", rows, "Display-row window lo,hi")->delimiter(',');
    cmd_facet->add_option("--side", facet_side, "betti | cohomology")
        ->check(CLI::IsMember({"betti", "cohomology"}));
    cmd_facet->add_option("--method", method, "chain | supernatural | both")
        ->check(CLI::IsMember({"chain", "supernatural", "both"}));
    cmd_facet->add_flag("--lower", lower, "Lower facet equation instead of the upper one");
    cmd_facet->add_option("--roots", roots, "Root sequence (cohomology side)")->delimiter(',');
    cmd_facet->add_option("--index", facet_index, "Perturbed root index, 1-based "
                                                  "(cohomology side)");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Multiplicity, slope, and strand bounds");
    std::string bound_kind;
    int codim = 0, strand_p = 1, strand_c = 1;
    bool normalized = false;
    cmd_bounds->add_option("kind", bound_kind, "multiplicity | slope | strand")
        ->required()->check(CLI::IsMember({"multiplicity", "slope", "strand"}));
    cmd_bounds->add_option("input", input_path, "Table JSON path or -")->required();
    cmd_bounds->add_option("--codim", codim, "Codimension c");
    cmd_bounds->add_flag("--normalized", normalized, "Divide by beta_{0,0}");
    cmd_bounds->add_option("--p", strand_p, "Strand index p");
    cmd_bounds->add_option("--c", strand_c, "Codimension for the strand bound");

    // validate
    auto* cmd_val = app.add_subcommand("validate", "Diagnostics for a table file");
    cmd_val->add_option("input", input_path, "Table JSON path or -")->required();

    for (auto* sub : app.get_subcommands(
             [](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*cmd_pure) {
        int n = opt_n >= 0 ? opt_n : (int)degrees.size() - 1;
        BettiTable t = hk_pure_table(degrees, n);
        json j = to_json(t);
        std::ostringstream text;
        text << render_betti(t);
        if (generators) {
            Int g = construction_generators(degrees);
            j["generators"] = g.get_str();
            text << "generators: " << g.get_str() << '\n';
        }
        emit(out, j, text.str());
        return 0;
    }

    if (*cmd_sup) {
        auto [lo, hi] = parse_window(window, "--window");
        Rational rank = rank_str.empty() ? Rational(rank_gcd_bound(roots))
                                         : parse_rational(rank_str);
        CohomologyTable t = *monad_opt ? monad_table(roots, rank, monad_a, lo, hi)
                                       : supernatural_table(roots, rank, lo, hi);
        emit(out, to_json(t), render_cohomology(t));
        return 0;
    }

    if (*cmd_rank) {
        json j = {{"roots", roots},
                  {"gcd_bound", rank_gcd_bound(roots).get_str()},
                  {"literal_bound", literal_rank_bound(roots).get_str()},
                  {"multinomial", multinomial_rank(roots).get_str()},
                  {"schur", schur_rank(roots).get_str()}};
        std::ostringstream text;
        text << "roots:       " << sequence_to_string(roots) << '\n'
             << "gcd bound:   " << j["gcd_bound"].get<std::string>() << '\n'
             << "literal:     " << j["literal_bound"].get<std::string>() << '\n'
             << "multinomial: " << j["multinomial"].get<std::string>() << '\n'
             << "schur:       " << j["schur"].get<std::string>() << '\n';
        emit(out, j, text.str());
        return 0;
    }

    if (*cmd_dec) {
        json input = parse_json_text(read_input(input_path));
        std::ostringstream text;
        json j;
        if (kind == "betti") {
            BettiDecomposition dec = decompose_betti(betti_from_json(input));
            j = to_json(dec);
            for (const auto& p : dec.parts) {
                text << format_rational(p.coeff) << " * pure"
                     << sequence_to_string(p.skeleton) << "  zeroed:";
                for (auto [i, d] : p.zeroed) text << " (" << i << "," << d << ")";
                text << '\n';
            }
        } else {
            CohomologyDecomposition dec = decompose_cohomology(cohomology_from_json(input));
            j = to_json(dec);
            for (const auto& p : dec.parts)
                text << format_rational(p.coeff) << " * supernatural"
                     << sequence_to_string(p.skeleton) << '\n';
        }
        emit(out, j, text.str());
        return 0;
    }

    if (*cmd_pair) {
        BettiTable b = betti_from_json(parse_json_text(read_input(betti_path)));
        CohomologyTable c = cohomology_from_json(parse_json_text(read_input(coh_path)));
        Rational v = *cut_opt ? pair_modified(b, c, cutoff, tau) : pair(b, c);
        emit(out, json{{"value", format_rational(v)}}, format_rational(v) + "\n");
        return 0;
    }

    if (*cmd_fn) {
        Functional fn;
        if (side == "betti") {
            if (input_path.empty() || fn_n < 0 || rows.size() != 2)
                throw ParseError("betti side needs --input, --n, and --rows");
            auto [rlo, rhi] = parse_window(rows, "--rows");
            CohomologyTable c = cohomology_from_json(parse_json_text(read_input(input_path)));
            fn = unmodified ? betti_functional_unmodified(c, fn_n, rlo, rhi)
                            : betti_functional(c, fn_cutoff, fn_tau, fn_n, rlo, rhi);
        } else {
            if (degrees.empty()) throw ParseError("cohomology side needs --degrees");
            fn = unmodified ? cohomology_functional_unmodified(degrees)
                            : cohomology_functional(degrees, fn_cutoff, fn_tau);
        }
        emit(out, to_json(fn), render_functional(fn));
        return 0;
    }

    if (*cmd_facet) {
        Functional fn;
        if (facet_side == "cohomology") {
            if (roots.empty()) throw ParseError("cohomology side needs --roots and --index");
            fn = cohomology_facet(roots, facet_index);
        } else {
            if (degrees.empty() || rows.size() != 2)
                throw ParseError("betti side needs --degrees, --tau, and --rows");
            auto [rlo, rhi] = parse_window(rows, "--rows");
            if (lower) {
                if (method != "chain")
                    throw ParseError("the supernatural construction covers upper "
                                     "equations only");
                fn = lower_facet_equation(degrees, facet_tau, rlo, rhi);
            } else if (method == "chain") {
                fn = upper_facet_equation(degrees, facet_tau, rlo, rhi);
            } else {
                // supernatural or both: facet_from_supernatural cross-checks
                // against the chain construction and throws on mismatch.
                fn = facet_from_supernatural(degrees, facet_tau, rlo, rhi);
            }
        }
        emit(out, to_json(fn), render_functional(fn));
        return 0;
    }

    if (*cmd_bounds) {
        json input = parse_json_text(read_input(input_path));
        if (bound_kind == "multiplicity") {
            BettiTable b = betti_from_json(input);
            auto [lo2, hi2] = multiplicity_bounds(b, codim, normalized);
            json j = bounds_pair_json("lower", lo2, "upper", hi2);
            std::ostringstream text;
            text << "lower: " << format_rational(lo2) << '\n'
                 << "upper: " << format_rational(hi2) << '\n';
            if (hk_moments_check(b, codim)) {
                Rational e = multiplicity(b, codim);
                if (normalized) e /= b.get(0, 0);
                j["multiplicity"] = format_rational(e);
                text << "multiplicity: " << format_rational(e) << '\n';
            }
            emit(out, j, text.str());
        } else if (bound_kind == "slope") {
            SlopeBounds s = slope_bounds(cohomology_from_json(input));
            json j = {{"lower", format_rational(s.lower)},
                      {"mu", format_rational(s.mu)},
                      {"upper", format_rational(s.upper)}};
            std::ostringstream text;
            text << "lower: " << format_rational(s.lower) << '\n'
                 << "mu:    " << format_rational(s.mu) << '\n'
                 << "upper: " << format_rational(s.upper) << '\n';
            emit(out, j, text.str());
        } else {
            BettiTable b = betti_from_json(input);
            Rational bound = strand_bound(strand_p, strand_c);
            bool ok = strand_check(b, strand_p, strand_c);
            json j = {{"bound", format_rational(bound)}, {"holds", ok}};
            std::ostringstream text;
            text << "bound: " << format_rational(bound) << '\n'
                 << "holds: " << (ok ? "yes" : "no") << '\n';
            emit(out, j, text.str());
        }
        return 0;
    }

    if (*cmd_val) {
        json input = parse_json_text(read_input(input_path));
        Diagnostics diag;
        std::string what;
        if (input.contains("entries")) {
            diag = validate_betti(betti_from_json(input));
            what = "betti";
        } else if (input.contains("values")) {
            diag = validate_cohomology(cohomology_from_json(input));
            what = "cohomology";
        } else {
            throw ParseError("input is neither a Betti nor a cohomology table");
        }
        json j = {{"kind", what}, {"ok", diag.ok}, {"issues", diag.issues}};
        std::ostringstream text;
        text << what << ": " << (diag.ok ? "ok" : "invalid") << '\n';
        for (const auto& issue : diag.issues) text << "  - " << issue << '\n';
        emit(out, j, text.str());
        return diag.ok ? 0 : 1;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json err = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << '\n';
        return e.cli_exit();
    } catch (const std::exception& e) {
        json err = {{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << '\n';
        return 1;
    }
}
