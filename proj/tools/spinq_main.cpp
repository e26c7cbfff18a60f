#include <spinq/spinq.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace spinq;

constexpr int exit_ok = 0;
constexpr int exit_parse = 1;  // malformed input files or labels
constexpr int exit_domain = 2; // valid syntax, invalid mathematical object
constexpr int exit_verify = 3; // a checked identity failed

void emit(const Report& r, bool json_mode) {
    if (json_mode)
        std::cout << r.data.dump(2) << "\n";
    else
        std::cout << r.text;
}

SpincClass resolve_sigma(const HomologyGroup& g, const std::string& text) {
    IntVector v = parse_spinc_label(text);
    if (v.size() != g.presentation().size())
        throw UnknownSigma("Spin^c label '" + text + "' does not name a structure: expected " +
                           std::to_string(g.presentation().size()) + " coordinates");
    return spinc_normalize(g, v);
}

struct Options {
    std::string file;
    std::string encoding = "chern";
    std::string sigma;
    std::string companion;
    std::string fixture;
    bool json = false;
    double tolerance = 1e-6;
};

int run_analyze(const Options& opt) {
    PresentationFile pf = parse_presentation_path(opt.file);
    HomologyGroup g = homology_of(pf.to_presentation());
    emit(report_analyze(pf, g), opt.json);
    return exit_ok;
}

int run_spinc(const Options& opt) {
    PresentationFile pf = parse_presentation_path(opt.file);
    HomologyGroup g = homology_of(pf.to_presentation());
    emit(report_spinc(pf, g, opt.encoding), opt.json);
    return exit_ok;
}

int run_quad(const Options& opt) {
    PresentationFile pf = parse_presentation_path(opt.file);
    HomologyGroup g = homology_of(pf.to_presentation());
    SpincClass sigma = resolve_sigma(g, opt.sigma);
    QuadraticFunction phi = phi_from_chern(g, sigma.rep);
    GaussData gd = gauss(phi, opt.tolerance);
    emit(report_quad(pf, g, sigma, phi, gd), opt.json);
    return exit_ok;
}

int run_verify(const Options& opt) {
    PresentationFile pf = parse_presentation_path(opt.file);
    HomologyGroup g = homology_of(pf.to_presentation());
    if (g.matrix().is_diagonal()) {
        TheoremReport tr = verify_theorem_split(g);
        emit(report_verify(pf, tr), opt.json);
        return tr.all_pass ? exit_ok : exit_verify;
    }
    if (opt.companion.empty())
        throw NotAlgebraicallySplit(
            "the linking matrix is not diagonal; the charge description of q is defined for "
            "split presentations only.  Supply an isometric diagonal presentation with "
            "--split-companion.");
    PresentationFile cpf = parse_presentation_path(opt.companion);
    HomologyGroup cg = homology_of(cpf.to_presentation());
    if (!cg.matrix().is_diagonal())
        throw NotAlgebraicallySplit("companion presentation is not diagonal");
    Isometry iso = match_presentations(g, cg);
    TheoremReport tr = verify_theorem_split(cg);
    emit(report_verify_companion(pf, g, cpf, iso, tr), opt.json);
    return tr.all_pass ? exit_ok : exit_verify;
}

int run_torsion(const Options& opt) {
    PresentationFile pf = parse_presentation_path(opt.file);
    HomologyGroup g = homology_of(pf.to_presentation());
    std::vector<TorsionBlock> blocks = pf.torsion_blocks;
    if (!opt.fixture.empty()) {
        PresentationFile fx = parse_presentation_path(opt.fixture);
        if (fx.matrix != pf.matrix)
            throw Error("fixture file presents a different linking matrix");
        blocks.insert(blocks.end(), fx.torsion_blocks.begin(), fx.torsion_blocks.end());
    }
    std::vector<TorsionTable> tables;
    tables.reserve(blocks.size());
    for (const TorsionBlock& b : blocks)
        tables.push_back(make_torsion_table(g, resolve_sigma(g, b.label), b.values));
    FamilyReport fr = c_invariant(tables, opt.tolerance);
    emit(report_torsion(pf, g, fr), opt.json);
    return fr.ok ? exit_ok : exit_verify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linking pairings, Spin^c structures and torsion constants of surgery "
                 "presentations"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "presentation file")->required();
        cmd->add_flag("--json", opt.json, "emit the machine-readable report");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "homology and the linking pairing");
    add_common(analyze);

    CLI::App* spinc_cmd = app.add_subcommand("spinc", "enumerate Spin^c structures");
    add_common(spinc_cmd);
    spinc_cmd->add_option("--encoding", opt.encoding, "listing order: chern or charge")
        ->check(CLI::IsMember({"chern", "charge"}));

    CLI::App* quad = app.add_subcommand("quad", "quadratic function and Gauss sum for one "
                                                "structure");
    add_common(quad);
    quad->add_option("--sigma", opt.sigma, "Spin^c structure, e.g. s=7 or 6,4")->required();
    quad->add_option("--tolerance", opt.tolerance, "Gauss reconstruction tolerance");

    CLI::App* verify = app.add_subcommand("verify", "check q == phi for every structure");
    add_common(verify);
    verify->add_option("--split-companion", opt.companion,
                       "diagonal presentation isometric to the input");

    CLI::App* torsion = app.add_subcommand("torsion", "ingest torsion tables, compute c(M)");
    add_common(torsion);
    torsion->add_option("--fixture", opt.fixture, "extra file with torsion blocks");
    torsion->add_option("--tolerance", opt.tolerance, "Gauss reconstruction tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(spinc_cmd)) return run_spinc(opt);
        if (app.got_subcommand(quad)) return run_quad(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(torsion)) return run_torsion(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const AxiomViolation& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const InconsistentFamily& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const NoMatch& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const DegenerateFunction& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return exit_ok;
}
