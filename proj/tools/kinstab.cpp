#include "kinstab/errors.hpp"
#include "kinstab/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitStable = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kinstab::BadParameters("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string preset;
    std::string scenario_path;
    long long n = -1, m = -1;
    bool json = false;
    bool assert_unstable = false;
    bool allow_boundary = false;
    std::string family;
    std::string output;
};

kinstab::Report load_and_run(const Options& opt) {
    if (!opt.preset.empty())
        return kinstab::run_preset(opt.preset, opt.n, opt.m, opt.allow_boundary);
    if (opt.scenario_path.empty())
        throw kinstab::BadParameters("pass a scenario file or --preset");
    kinstab::Scenario s = kinstab::parse_scenario(read_file(opt.scenario_path), opt.scenario_path);
    return kinstab::run_scenario(s);
}

void parse_range(const std::string& text, long long& lo, long long& hi) {
    size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, colon));
            hi = std::stoll(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw kinstab::BadParameters("range must be N or LO:HI, got \"" + text + "\"");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-instability certificates for del Pezzo hypersurfaces in weighted P^3"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* report = app.add_subcommand("report", "run one scenario or preset and print the report");
    report->add_option("scenario", opt.scenario_path, "scenario JSON file");
    report->add_option("--preset", opt.preset, "preset name (s9, s27, s45, fam-6n9, fam-11nm, fam-3n4)");
    report->add_option("--n", opt.n, "family parameter n");
    report->add_option("--m", opt.m, "family parameter m");
    report->add_flag("--json", opt.json, "emit the JSON report instead of text");
    report->add_flag("--assert-unstable", opt.assert_unstable,
                     "exit 3 unless the verdict is NotKSemistable");
    report->add_flag("--allow-boundary", opt.allow_boundary, "allow n = m in fam-11nm");

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep and print a table");
    std::string n_range = "0:10", m_range = "0:10";
    sweep->add_option("--family", opt.family, "fam-6n9, fam-11nm or fam-3n4")->required();
    sweep->add_option("--n", n_range, "n range as N or LO:HI (default 0:10)");
    sweep->add_option("--m", m_range, "m range as N or LO:HI (default 0:10)");
    sweep->add_flag("--json", opt.json, "emit JSON rows instead of CSV");
    sweep->add_flag("--allow-boundary", opt.allow_boundary, "include n = m rows in fam-11nm");

    CLI::App* exp = app.add_subcommand("export-preset", "write a preset as a scenario JSON file");
    exp->add_option("--preset", opt.preset, "preset name")->required();
    exp->add_option("--n", opt.n, "family parameter n");
    exp->add_option("--m", opt.m, "family parameter m");
    exp->add_flag("--allow-boundary", opt.allow_boundary, "allow n = m in fam-11nm");
    exp->add_option("-o,--output", opt.output, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (report->parsed()) {
            kinstab::Report rep = load_and_run(opt);
            std::cout << (opt.json ? kinstab::report_to_json(rep) : kinstab::report_to_text(rep));
            if (opt.assert_unstable && rep.verdict != kinstab::Verdict::NotKSemistable)
                return kExitStable;
            return kExitOk;
        }
        if (sweep->parsed()) {
            long long n_lo, n_hi, m_lo, m_hi;
            parse_range(n_range, n_lo, n_hi);
            parse_range(m_range, m_lo, m_hi);
            kinstab::SweepTable table =
                kinstab::sweep(opt.family, n_lo, n_hi, m_lo, m_hi, opt.allow_boundary);
            std::cout << (opt.json ? kinstab::sweep_to_json(table) : kinstab::sweep_to_csv(table));
            return kExitOk;
        }
        if (exp->parsed()) {
            kinstab::Scenario s = kinstab::make_preset(opt.preset, opt.n, opt.m, opt.allow_boundary);
            std::string text = kinstab::scenario_to_json(s);
            if (opt.output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(opt.output, std::ios::binary);
                if (!out) throw kinstab::BadParameters("cannot write " + opt.output);
                out << text;
            }
            return kExitOk;
        }
    } catch (const kinstab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
