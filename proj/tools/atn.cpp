// atn: alpha trace norms of digraphs - CLI front end.
//
// Exit codes: 0 success, 2 input/usage error, 3 numerical error,
// 4 violation of a verified claim.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atn/digraph_io.hpp"
#include "atn/errors.hpp"
#include "atn/families.hpp"
#include "atn/reports_io.hpp"
#include "atn/spectra.hpp"
#include "atn/variation.hpp"
#include "atn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

struct Options {
    std::string command;
    std::string file;
    std::string family;
    int n = 0;
    double alpha = 0.0;
    std::string alphas;  // comma-separated; empty = default grid
    double tol = atn::kDefaultCompareTol;
    std::string format = "table";
    std::string out;
    int jobs = 0;  // 0 = all cores (sweeps)
    bool force = false;
    bool dedupe = false;
    bool arc_check = false;
    bool cycle_directed = false;
    std::vector<int> arc;
    int vertex = -1;
    bool has_vertex = false;
    std::string input;  // undirected graph for `families dump symmetric`
};

atn::AlphaGrid parse_grid(const std::string& alphas) {
    if (alphas.empty()) return atn::AlphaGrid::default_grid();
    std::vector<double> values;
    std::stringstream ss(alphas);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad alpha '" + item + "'");
        values.push_back(v);
    }
    return atn::AlphaGrid::from_values(std::move(values));
}

// Writes to --out when given, else stdout.
void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + opt.out + "'");
    f << text;
}

int cmd_trace_norm(const Options& opt) {
    atn::Digraph d = atn::read_digraph_file(opt.file);
    emit(opt, atn::format_scalar12(atn::trace_norm(d, opt.alpha)) + "\n");
    return kExitOk;
}

int cmd_spectrum(const Options& opt) {
    atn::Digraph d = atn::read_digraph_file(opt.file);
    auto spectrum = atn::singular_values(atn::alpha_matrix(d, opt.alpha));
    std::string line;
    for (const auto& [value, mult] : atn::group_multiplicities(spectrum.values)) {
        if (!line.empty()) line += ", ";
        line += atn::format_sig12(value) + "[" + std::to_string(mult) + "]";
    }
    emit(opt, line + "\n");
    return kExitOk;
}

std::string deletion_report_text(const atn::DeletionReport& r) {
    std::ostringstream out;
    out << "kind:               " << atn::deletion_kind_name(r.kind);
    if (r.kind == atn::DeletionKind::arc)
        out << " (" << r.arc.first << "," << r.arc.second << ")";
    else
        out << " " << r.vertex;
    out << "\nalpha:              " << atn::format_sig12(r.alpha)
        << "\nnorm_before:        " << atn::format_scalar12(r.norm_before)
        << "\nnorm_after:         " << atn::format_scalar12(r.norm_after)
        << "\nbound:              " << atn::format_scalar12(r.bound)
        << "\nslack:              " << atn::format_sig12(r.slack)
        << "\nequality predicted: " << (r.equality_predicted ? "yes" : "no")
        << "\nequality observed:  " << (r.equality_observed ? "yes" : "no") << "\n";
    return out.str();
}

int cmd_delete(const Options& opt) {
    atn::Digraph d = atn::read_digraph_file(opt.file);
    atn::DeletionReport report;
    if (!opt.arc.empty()) {
        report = atn::arc_deletion_report(d, opt.arc[0], opt.arc[1], opt.alpha, opt.tol);
    } else {
        if (!opt.has_vertex) throw std::invalid_argument("need --arc U V or --vertex U");
        if (d.is_leaf(opt.vertex))
            report = atn::leaf_deletion_report(d, opt.vertex, opt.alpha, opt.tol);
        else if (d.is_nonleaf(opt.vertex))
            report = atn::nonleaf_deletion_report(d, opt.vertex, opt.alpha, opt.tol);
        else
            throw std::invalid_argument("vertex " + std::to_string(opt.vertex) +
                                        " is isolated; no deletion bound applies");
    }
    if (opt.format == "json")
        emit(opt, atn::deletion_report_json(report).dump(2) + "\n");
    else
        emit(opt, deletion_report_text(report));
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    atn::Digraph d = atn::read_digraph_file(opt.file);
    auto table = atn::alpha_sweep(d, parse_grid(opt.alphas));
    std::string text;
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (auto [a, v] : table) arr.push_back({{"alpha", a}, {"trace_norm", v}});
        text = arr.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = "alpha,trace_norm\n";
        for (auto [a, v] : table)
            text += atn::format_double(a) + "," + atn::format_double(v) + "\n";
    } else {
        for (auto [a, v] : table)
            text += atn::format_sig12(a) + "\t" + atn::format_scalar12(v) + "\n";
    }
    emit(opt, text);
    return kExitOk;
}

std::string extremal_table(const std::vector<atn::ExtremalReport>& reports) {
    std::ostringstream out;
    out << "family      n  alpha  max_trace_norm   paper_bound      attained  unique  classes\n";
    for (const auto& r : reports) {
        char buf[192];
        std::snprintf(buf, sizeof(buf), "%-10s %2d  %-5g  %-15.12g  %-15.12g  %-8s  %-6s  %zu\n",
                      atn::family_name(r.family.family), r.family.n, r.alpha, r.max_trace_norm,
                      r.paper_bound, r.bound_attained ? "yes" : "no",
                      r.unique_maximizer ? "yes" : "no", r.maximizers.size());
        out << buf;
    }
    return out.str();
}

int cmd_verify(const Options& opt) {
    const atn::AlphaGrid grid = parse_grid(opt.alphas);
    std::vector<atn::ExtremalReport> reports;
    std::vector<atn::ArcViolation> arc_violations;

    if (opt.family == "trees") {
        if (opt.n > 7 && !opt.force)
            throw std::invalid_argument("verify trees guarded at n <= 7 (use --force)");
        reports = atn::extremal_trees(opt.n, grid, opt.tol, opt.jobs, opt.force);
        if (opt.arc_check)
            arc_violations = atn::verify_arc_deletion_bound(atn::oriented_trees(opt.n, opt.force),
                                                            grid, opt.tol, opt.jobs);
    } else if (opt.family == "unicyclic") {
        if (opt.n > 6 && !opt.force)
            throw std::invalid_argument("verify unicyclic guarded at n <= 6 (use --force)");
        reports = atn::extremal_unicyclic(opt.n, grid, opt.tol, opt.jobs, opt.force,
                                          opt.cycle_directed);
        if (opt.arc_check)
            arc_violations = atn::verify_arc_deletion_bound(
                atn::unicyclic_digraphs(opt.n, opt.force), grid, opt.tol, opt.jobs);
    } else {
        throw std::invalid_argument("unknown family '" + opt.family + "' (trees|unicyclic)");
    }

    const auto claim_violations = atn::check_extremal_claims(reports, opt.tol);

    if (opt.format == "csv") {
        emit(opt, atn::extremal_csv(reports));
    } else if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["reports"] = atn::extremal_json(reports);
        doc["claim_violations"] = nlohmann::ordered_json::array();
        for (const auto& v : claim_violations)
            doc["claim_violations"].push_back(atn::claim_violation_json(v));
        doc["arc_violations"] = nlohmann::ordered_json::array();
        for (const auto& v : arc_violations)
            doc["arc_violations"].push_back(atn::violation_json(v));
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, extremal_table(reports));
    }

    for (const auto& v : claim_violations)
        std::cerr << "claim violation: " << atn::family_name(v.family.family) << " n=" << v.family.n
                  << " alpha=" << atn::format_sig12(v.alpha) << ": " << v.what << "\n";
    for (const auto& v : arc_violations)
        std::cerr << "arc violation: alpha=" << atn::format_sig12(v.alpha) << " arc=("
                  << v.arc.first << "," << v.arc.second << ") slack=" << atn::format_sig12(v.slack)
                  << " " << v.reason << "\n";
    return claim_violations.empty() && arc_violations.empty() ? kExitOk : kExitViolation;
}

int cmd_families_dump(const Options& opt) {
    std::vector<atn::Digraph> out;
    if (opt.family == "path") {
        out.push_back(atn::directed_path(opt.n));
    } else if (opt.family == "cycle") {
        out.push_back(atn::directed_cycle(opt.n, opt.force));
    } else if (opt.family == "trees") {
        auto e = atn::oriented_trees(opt.n, opt.force);
        if (opt.dedupe) {
            out = atn::isomorphism_classes(e);
        } else {
            out.reserve(e.size());
            atn::for_each(e, [&](const atn::Digraph& d) { out.push_back(d); });
        }
    } else if (opt.family == "unicyclic") {
        auto e = atn::unicyclic_digraphs(opt.n, opt.force);
        if (opt.dedupe) {
            out = atn::isomorphism_classes(e);
        } else {
            out.reserve(e.size());
            atn::for_each(e, [&](const atn::Digraph& d) { out.push_back(d); });
        }
    } else if (opt.family == "symmetric") {
        if (opt.input.empty())
            throw std::invalid_argument("families dump symmetric needs --input GRAPH_FILE");
        std::ifstream in(opt.input);
        if (!in) throw std::invalid_argument("cannot open '" + opt.input + "'");
        auto [n, edges] = atn::parse_undirected_graph(in);
        out.push_back(atn::symmetric_digraph(n, edges));
    } else {
        throw std::invalid_argument("unknown family '" + opt.family +
                                    "' (path|cycle|trees|unicyclic|symmetric)");
    }
    std::ostringstream text;
    atn::write_digraph_stream(text, out);
    emit(opt, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"alpha trace norms of digraphs: spectra, deletion bounds, extremal sweeps"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opt.tol, "comparison tolerance");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--out", opt.out, "write output to this file");
    };

    auto* tn = app.add_subcommand("trace-norm", "alpha trace norm of a digraph file");
    tn->add_option("file", opt.file, "digraph file")->required();
    tn->add_option("--alpha", opt.alpha, "alpha in [0,1)")->required();
    add_common(tn);

    auto* sp = app.add_subcommand("spectrum", "alpha singular values with multiplicities");
    sp->add_option("file", opt.file, "digraph file")->required();
    sp->add_option("--alpha", opt.alpha, "alpha in [0,1)")->required();
    add_common(sp);

    auto* del = app.add_subcommand("delete", "deletion variation report for an arc or vertex");
    del->add_option("file", opt.file, "digraph file")->required();
    del->add_option("--alpha", opt.alpha, "alpha in [0,1)")->required();
    auto* arc_opt = del->add_option("--arc", opt.arc, "arc u v")->expected(2);
    auto* vert_opt = del->add_option("--vertex", opt.vertex, "vertex u");
    arc_opt->excludes(vert_opt);
    add_common(del);

    auto* sw = app.add_subcommand("sweep", "trace norm over an alpha grid");
    sw->add_option("file", opt.file, "digraph file")->required();
    sw->add_option("--alphas", opt.alphas, "comma-separated alphas (default 0,0.1,...,0.9)");
    add_common(sw);

    auto* ver = app.add_subcommand("verify", "exhaustive extremal sweep over a family");
    ver->add_option("family", opt.family, "trees|unicyclic")->required();
    ver->add_option("n", opt.n, "order")->required();
    ver->add_option("--alphas", opt.alphas, "comma-separated alphas (default 0,0.1,...,0.9)");
    ver->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
    ver->add_flag("--force", opt.force, "override enumeration guards");
    ver->add_flag("--arc-check", opt.arc_check, "also check the arc-deletion bound on every member");
    ver->add_flag("--cycle-directed", opt.cycle_directed,
                  "unicyclic only: restrict to consistently directed cycles");
    add_common(ver);

    auto* fam = app.add_subcommand("families", "family generators");
    auto* dump = fam->add_subcommand("dump", "write family members in the digraph text format");
    dump->add_option("family", opt.family, "path|cycle|trees|unicyclic|symmetric")->required();
    dump->add_option("n", opt.n, "order");
    dump->add_flag("--dedupe", opt.dedupe, "one representative per isomorphism class");
    dump->add_flag("--force", opt.force, "override enumeration guards");
    dump->add_option("--input", opt.input, "undirected graph file (symmetric family)");
    add_common(dump);
    fam->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }
    opt.has_vertex = vert_opt->count() > 0;

    try {
        if (tn->parsed()) return cmd_trace_norm(opt);
        if (sp->parsed()) return cmd_spectrum(opt);
        if (del->parsed()) return cmd_delete(opt);
        if (sw->parsed()) return cmd_sweep(opt);
        if (ver->parsed()) return cmd_verify(opt);
        if (fam->parsed()) return cmd_families_dump(opt);
    } catch (const atn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const atn::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
