#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "curvegraph/config_io.hpp"
#include "curvegraph/spectral.hpp"
#include "curvegraph/sweep.hpp"

namespace {

using namespace curvegraph;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_lower(const std::string& group, int genus, int punctures, const std::string& format) {
    LowerBoundRecord rec = lower_bound(group_kind_from_name(group), genus, punctures);
    if (format == "json")
        emit(to_json(rec));
    else
        std::cout << render_text(rec);
    return 0;
}

int run_certify(const std::string& path, long long max_j, const std::string& mode,
                const std::string& format, bool trace) {
    ConfigDocument doc = load_config(path);
    if (doc.seed.empty()) throw StructuralError(path + ": no seed named in the file");
    if (doc.witness.empty()) throw StructuralError(path + ": no witness named in the file");
    UpperBoundCertificate cert = certify_upper(doc.config, doc.word, doc.seed, doc.witness, max_j,
                                               certify_mode_from_name(mode));
    if (format == "json")
        emit(to_json(cert));
    else
        std::cout << render_text(cert, trace);
    return 0;
}

int run_dilatation(const std::string& path, double tol, long long max_iters,
                   const std::string& format) {
    ConfigDocument doc = load_config(path);
    SpectralResult res = dilatation(word_matrix(doc.config, doc.word), tol, max_iters);
    if (format == "json")
        emit(to_json(res));
    else
        std::cout << render_text(res);
    return 0;
}

int run_sweep_cmd(const std::string& family, int from, int to, const std::string& csv_path,
                  double tol, bool force) {
    SweepOptions opts;
    opts.tol = tol;
    opts.force = force;
    std::vector<SweepRow> rows = run_sweep(group_kind_from_name(family), from, to, opts);
    write_sweep_csv(rows, csv_path);
    std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
    return 0;
}

int run_family(const std::string& family, int parameter, const std::string& output) {
    GroupKind kind = group_kind_from_name(family);
    if (kind == GroupKind::pmod)
        throw PreconditionError("no generated family for pmod");
    FamilyInstance inst =
        kind == GroupKind::torelli ? torelli_family(parameter) : purebraid_family(parameter);
    save_config(inst, output);
    std::cout << "wrote " << group_kind_name(kind) << " family at parameter " << parameter
              << " (claimed j = " << inst.claimed_j << ", claimed bound "
              << inst.claimed_bound.str() << ") to " << output << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified bounds on curve-graph translation lengths of multitwist words"};
    app.require_subcommand(1);

    std::string group, format = "text", mode = "boolean", config_path, csv_path, output_path;
    std::string family;
    int genus = 0, punctures = 0, from = 0, to = 0, parameter = 0;
    long long max_j = 256, max_iters = 1000000;
    double tol = 1e-12;
    bool trace = false, force = false;

    CLI::App* lower = app.add_subcommand("lower", "certified lower bound for a group");
    lower->add_option("--group", group, "torelli, purebraid, or pmod")->required();
    lower->add_option("--genus", genus, "genus g");
    lower->add_option("--punctures", punctures, "puncture count n");
    lower->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* certify = app.add_subcommand("certify", "upper-bound certificate from a config file");
    certify->add_option("config", config_path, "configuration file")->required();
    certify->add_option("--max-j", max_j, "iteration cap");
    certify->add_option("--mode", mode)->check(CLI::IsMember({"boolean", "exact"}));
    certify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    certify->add_flag("--trace", trace, "print per-iteration supports");

    CLI::App* dil = app.add_subcommand("dilatation", "Perron root of the word matrix");
    dil->add_option("config", config_path, "configuration file")->required();
    dil->add_option("--tol", tol, "residual tolerance");
    dil->add_option("--max-iters", max_iters, "iteration cap");
    dil->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "bounds across a parameter range, to CSV");
    sweep->add_option("--family", family, "torelli or purebraid")
        ->required()
        ->check(CLI::IsMember({"torelli", "purebraid"}));
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--csv", csv_path, "output path")->required();
    sweep->add_option("--tol", tol, "dilatation tolerance");
    sweep->add_flag("--force", force, "allow parameters above 200");

    CLI::App* fam = app.add_subcommand("family", "emit a generated family as a config file");
    fam->add_option("--family", family, "torelli or purebraid")
        ->required()
        ->check(CLI::IsMember({"torelli", "purebraid"}));
    fam->add_option("--parameter", parameter, "g or n")->required();
    fam->add_option("--output", output_path, "config file to write")->required();

    try {
        app.parse(argc, argv);
        if (lower->parsed()) return run_lower(group, genus, punctures, format);
        if (certify->parsed()) return run_certify(config_path, max_j, mode, format, trace);
        if (dil->parsed()) return run_dilatation(config_path, tol, max_iters, format);
        if (sweep->parsed()) return run_sweep_cmd(family, from, to, csv_path, tol, force);
        if (fam->parsed()) return run_family(family, parameter, output_path);
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const curvegraph::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const curvegraph::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const curvegraph::EmptyCertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const curvegraph::SpectralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const curvegraph::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
