#include "sltk/cli.hpp"

#include "commands.hpp"
#include "sltk/error.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

namespace sltk::cli {

namespace {

constexpr std::string_view kSubcommands[] = {"spectrum", "stability", "lawlor", "planes",
                                             "consum",   "t2cone",    "dims",   "verify"};

enum class Level { Error = 0, Warn, Info, Debug };

Level log_level() {
    const char* v = std::getenv("SLTK_LOG");
    if (!v) return Level::Warn;
    std::string_view s(v);
    if (s == "debug") return Level::Debug;
    if (s == "info") return Level::Info;
    if (s == "error" || s == "quiet") return Level::Error;
    return Level::Warn;
}

void log(std::ostream& err, Level at, const std::string& msg) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (at <= log_level()) err << "[sltk] " << names[static_cast<int>(at)] << ": " << msg << "\n";
}

std::string fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void usage(std::ostream& err) {
    err << "usage: sltk <subcommand> [options]\n\nsubcommands:";
    for (auto s : kSubcommands) err << " " << s;
    err << "\n\nrun 'sltk <subcommand> --help' for the options of one subcommand\n";
}

void error_json(std::ostream& err, const std::string& code, const std::string& message,
                const std::optional<double>& achieved = std::nullopt) {
    Json e{{"code", code}, {"message", message}};
    if (achieved) e["achieved"] = *achieved;
    err << Json{{"error", e}}.dump() << "\n";
}

struct InputSource {
    std::string path;
    std::string text;
};

void add_input_options(CLI::App* sub, InputSource& src) {
    sub->add_option("-i,--input", src.path, "JSON input file ('-' for standard input)");
    sub->add_option("--json", src.text, "JSON input given inline");
}

bool has_input(const InputSource& src) { return !src.path.empty() || !src.text.empty(); }

Json read_input(const InputSource& src, std::istream& in) {
    std::string text;
    if (!src.text.empty()) {
        text = src.text;
    } else if (!src.path.empty() && src.path != "-") {
        std::ifstream f(src.path);
        if (!f) throw InputError("cannot open input file '" + src.path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what(), "malformed-json");
    }
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    if (argc < 2) {
        usage(err);
        return kExitUsage;
    }
    {
        int at = 1;
        while (at < argc && (std::string_view(argv[at]) == "--record" || std::string_view(argv[at]) == "--pretty")) ++at;
        if (at == argc) {
            usage(err);
            return kExitUsage;
        }
        std::string_view first(argv[at]);
        bool known = first == "-h" || first == "--help" || first == "--version";
        for (auto s : kSubcommands) known = known || first == s;
        if (!known) {
            err << "unknown subcommand '" << first << "'\n";
            usage(err);
            return kExitUsage;
        }
    }

    CLI::App app{"Special Lagrangian cone and desingularization toolkit", "sltk"};
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();
    bool record = false, pretty = false;
    app.add_flag("--record", record, "Wrap the output in a run record with an input digest");
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    SpectrumArgs sa;
    auto* spec = app.add_subcommand("spectrum", "Laplace spectrum of the Harvey-Lawson torus link");
    spec->add_option("--m", sa.m, "Complex dimension m >= 3")->required();
    spec->add_option("--cutoff", sa.cutoff, "Largest eigenvalue to enumerate (-1 means 2m)");
    spec->add_option("--delta", sa.deltas, "Evaluate N_Sigma at these rationals");
    spec->add_flag("--exponents", sa.exponents, "List the exponent set D_Sigma");
    spec->add_flag("--serial", sa.serial, "Use the single-threaded reference kernel");

    int stabM = 3;
    InputSource stabIn;
    auto* stab = app.add_subcommand("stability", "Stability index of the Harvey-Lawson cone, or of a link given by a table");
    auto* stabMOpt = stab->add_option("--m", stabM, "Complex dimension m >= 3");
    add_input_options(stab, stabIn);

    LawlorArgs la;
    InputSource lawIn;
    bool skipVerify = false;
    auto* law = app.add_subcommand("lawlor", "Lawlor neck parameters (a) <-> (phi, A) and SL residuals");
    add_input_options(law, lawIn);
    law->add_option("--tol", la.tol, "Quadrature tolerance per angle");
    law->add_option("--samples", la.samples, "Sample points for the SL check");
    law->add_option("--step", la.h, "Finite-difference step for the SL check");
    law->add_option("--seed", la.seed, "Seed for the sample points");
    law->add_flag("--skip-verify", skipVerify, "Do not run the SL residual check");

    double planeTol = planes::kTransverseTol;
    bool reconstruct = false;
    InputSource planeIn;
    auto* pl = app.add_subcommand("planes", "Characteristic angles and type of a pair of SL planes");
    add_input_options(pl, planeIn);
    pl->add_option("--tol", planeTol, "Transversality tolerance on eigenvalues of M M^T");
    pl->add_flag("--reconstruct", reconstruct, "Also build B in SU(m) taking the pair to normal form");

    InputSource conIn;
    auto* con = app.add_subcommand("consum", "Connected-sum feasibility and balanced areas");
    add_input_options(con, conIn);

    InputSource t2In;
    auto* t2 = app.add_subcommand("t2cone", "Gluing calculus for the stable T^2-cone");
    add_input_options(t2, t2In);

    InputSource dimIn;
    auto* dm = app.add_subcommand("dims", "Moduli dimensions and index from a topology profile");
    add_input_options(dm, dimIn);

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "Run the golden suites");
    ver->add_option("--suite", suite, "table1, t2examples, lawlor, planes, consum or all")
        ->check(CLI::IsMember({"table1", "t2examples", "lawlor", "planes", "consum", "all"}));

    const auto started = std::chrono::steady_clock::now();
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::Success& e) {
            return app.exit(e, out, err);
        } catch (const CLI::ParseError& e) {
            throw InputError(e.what(), "usage");
        }

        std::string name;
        Json options = Json::object();
        Json input = nullptr;
        Json result;
        if (*spec) {
            name = "spectrum";
            options = {{"m", sa.m}, {"cutoff", sa.cutoff}, {"delta", sa.deltas}, {"exponents", sa.exponents}};
            result = run_spectrum(sa);
        } else if (*stab) {
            name = "stability";
            if (has_input(stabIn)) {
                input = read_input(stabIn, in);
                result = run_stability_table(input);
            } else {
                if (stabMOpt->count() == 0) throw InputError("stability needs --m or a link table as input");
                options = {{"m", stabM}};
                result = run_stability(stabM);
            }
        } else if (*law) {
            name = "lawlor";
            la.verify = !skipVerify;
            options = {{"tol", la.tol}, {"samples", la.samples}, {"h", la.h}, {"seed", la.seed}, {"verify", la.verify}};
            input = read_input(lawIn, in);
            result = run_lawlor(input, la);
        } else if (*pl) {
            name = "planes";
            options = {{"tol", planeTol}, {"reconstruct", reconstruct}};
            input = read_input(planeIn, in);
            result = run_planes(input, planeTol, reconstruct);
        } else if (*con) {
            name = "consum";
            input = read_input(conIn, in);
            result = run_consum(input);
        } else if (*t2) {
            name = "t2cone";
            input = read_input(t2In, in);
            result = run_t2cone(input);
        } else if (*dm) {
            name = "dims";
            input = read_input(dimIn, in);
            result = run_dims(input);
        } else {
            name = "verify";
            options = {{"suite", suite}};
            result = run_verify(suite);
        }

        const Json canonical{{"subcommand", name}, {"options", options}, {"input", input}};
        const std::string digest = "fnv1a64:" + fnv1a64(canonical.dump());
        log(err, Level::Debug, "input digest " + digest);
        Json doc = record ? Json{{"subcommand", name}, {"inputDigest", digest}, {"output", result}, {"toolVersion", kToolVersion}}
                          : result;
        out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
        log(err, Level::Info,
            name + " finished in " +
                std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()) + " s");

        if (name == "verify" && !result["pass"].get<bool>()) return kExitCheckFailed;
        return kExitOk;
    } catch (const InputError& e) {
        error_json(err, e.code(), e.what());
        return kExitInput;
    } catch (const Json::exception& e) {
        error_json(err, "input", e.what());
        return kExitInput;
    } catch (const NumericError& e) {
        error_json(err, "numeric", e.what(), e.achieved());
        return kExitNumeric;
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return kExitInternal;
    }
}

}  // namespace sltk::cli
