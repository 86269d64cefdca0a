#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "casimir/report.hpp"

using namespace casimir;

namespace {

Json load(const std::string& path) {
    if (auto j = group_shorthand(path); j && !std::ifstream(path)) return *j;
    std::ifstream f(path);
    if (!f) fail(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

int write_out(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Frobenius-divisibility toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(CASIMIR_VERSION));

    AnalyzeOptions opts;
    std::string input, format = "text", out;
    long prime = 0;
    int conductor = 0;
    bool no_parallel = false;
    auto* an = app.add_subcommand("analyze", "verify an algebra or Hopf algebra and run divisibility checks");
    an->add_option("input", input, "JSON file or a group shorthand such as S3, D(S3), dual(S3)")->required();
    an->add_option("--check", opts.check, "fd, zhu, class-equation, schneider or all")
        ->check(CLI::IsMember({"fd", "zhu", "class-equation", "schneider", "all"}));
    an->add_option("--lambda", opts.lambda, "Frobenius form")->check(CLI::IsMember({"regular", "delta-one", "custom"}));
    an->add_option("--conductor", conductor, "work over Q(zeta_N)")->check(CLI::PositiveNumber);
    an->add_option("--prime", prime, "use this prime for the modular stage")->check(CLI::PositiveNumber);
    an->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    an->add_option("--out", out, "write the report here instead of stdout");
    an->add_flag("--no-parallel", no_parallel, "run every kernel serially");
    an->add_flag("--timing", opts.timing, "record per-stage wall time (breaks byte-identical reports)");
    an->add_option("--seed", opts.seed, "seed for randomized searches");

    std::string group, as = "group-algebra";
    auto* bd = app.add_subcommand("build", "emit the canonical JSON of kG, (kG)* or D(G)");
    bd->add_option("--group", group, "named group or a JSON file holding {\"table\": ...}")->required();
    bd->add_option("--as", as, "construction")->check(CLI::IsMember({"group-algebra", "dual", "double"}));
    bd->add_option("--conductor", conductor, "override the default conductor (exponent of G)");
    bd->add_option("--out", out, "output path");

    std::string report_path;
    auto* rp = app.add_subcommand("replay", "re-check the certificates stored in a JSON report");
    rp->add_option("report", report_path, "JSON report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*an) {
            opts.parallel = !no_parallel;
            if (prime) opts.prime = prime;
            if (conductor) opts.conductor = conductor;
            AnalyzeResult r;
            try {
                r = analyze(load(input), opts);
            } catch (const Error& e) {
                r.report = Json{{"status", "invalid-input"}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
                r.exit_code = exit_code_for(e.kind());
            }
            std::string text = format == "json" ? r.report.dump(2) + "\n" : render_text(r.report);
            if (int c = write_out(text, out)) return c;
            if (!r.exit_code) return 0;
            if ((format == "json" || !out.empty()) && r.report.contains("error")) std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
            return r.exit_code;
        }
        if (*bd) {
            Json spec{{"as", as}};
            if (std::ifstream f(group); f)
                spec["group"] = Json::parse(f);
            else
                spec["group"] = group;
            std::optional<int> n;
            if (conductor) n = conductor;
            Input in = parse_input(spec, n);
            return write_out(input_json(in).dump(2) + "\n", out);
        }
        if (*rp) {
            std::ifstream f(report_path);
            if (!f) fail(ErrorKind::InvalidInput, "cannot open " + report_path);
            Verification v = replay_report(Json::parse(f));
            std::cout << (v.passed() ? "replay: all certificates re-verified\n" : "replay failed: " + v.summary() + "\n");
            return v.passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const Json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
