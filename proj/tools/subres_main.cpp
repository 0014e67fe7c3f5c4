// Command-line front end: exact subresultant computation (sres), Sylvester
// double-sum evaluation (sylv), and the randomized identity harness (verify).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "subres/subres.hpp"

namespace {

using subres::json;

bool color_enabled() {
    const char* env = std::getenv("SUBRES_COLOR");
    if (env != nullptr && std::string(env) == "0") return false;
    return isatty(fileno(stdout)) != 0;
}

std::string colorize(const std::string& text, bool good) {
    if (!color_enabled()) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

json parse_json_text(const std::string& text) { return json::parse(text); }

struct SresArgs {
    std::string f_text, g_text, input_path;
    int d = -1;
    bool chain = false;
    bool json_output = false;
    bool dump_matrix = false;
    bool d_given = false;
};

int run_sres(const SresArgs& args) {
    subres::Poly f, g;
    if (!args.input_path.empty()) {
        const json doc = load_json_file(args.input_path);
        if (!doc.contains("f") || !doc.contains("g"))
            throw std::invalid_argument("input file must contain \"f\" and \"g\" coefficient arrays");
        f = subres::poly_from_json(doc["f"]);
        g = subres::poly_from_json(doc["g"]);
    } else {
        if (args.f_text.empty() || args.g_text.empty())
            throw std::invalid_argument("sres needs --f and --g (or --input)");
        f = subres::poly_from_json(parse_json_text(args.f_text));
        g = subres::poly_from_json(parse_json_text(args.g_text));
    }

    if (args.chain) {
        json out = json::object();
        for (const auto& [d, p] : subres::sres_chain(f, g))
            out[std::to_string(d)] = args.json_output ? subres::poly_to_json(p) : json(p.str());
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (!args.d_given) throw std::invalid_argument("sres needs --d or --chain");
    if (args.dump_matrix) {
        std::cout << subres::matrix_to_json(subres::sres_def_matrix(f, g, args.d)).dump() << "\n";
        return 0;
    }
    const subres::Poly s = subres::sres_def(f, g, args.d);
    if (args.json_output)
        std::cout << subres::poly_to_json(s).dump() << "\n";
    else
        std::cout << s.str() << "\n";
    return 0;
}

struct SylvArgs {
    std::string a_text, b_text, input_path;
    int p = 0, q = 0;
    bool raw = false;
    bool json_output = false;
};

int run_sylv(const SylvArgs& args) {
    subres::RootList a, b;
    if (!args.input_path.empty()) {
        const json doc = load_json_file(args.input_path);
        if (!doc.contains("A") || !doc.contains("B"))
            throw std::invalid_argument("input file must contain \"A\" and \"B\" root arrays");
        a = subres::roots_from_json(doc["A"]);
        b = subres::roots_from_json(doc["B"]);
    } else {
        if (args.a_text.empty() || args.b_text.empty())
            throw std::invalid_argument("sylv needs --roots-a and --roots-b (or --input)");
        a = subres::roots_from_json(parse_json_text(args.a_text));
        b = subres::roots_from_json(parse_json_text(args.b_text));
    }

    const subres::Poly result = args.raw ? subres::double_sum(a, b, args.p, args.q)
                                         : subres::sres_sylvester(a, b, args.p, args.q);
    if (args.json_output)
        std::cout << subres::poly_to_json(result).dump() << "\n";
    else
        std::cout << result.str() << "\n";
    return 0;
}

struct VerifyArgs {
    int trials = 20;
    int max_deg = 4;
    uint64_t seed = 42;
    int root_bound = 10;
    bool json_output = false;
};

int run_verify(const VerifyArgs& args) {
    subres::HarnessOptions opts;
    opts.trials = args.trials;
    opts.max_deg = args.max_deg;
    opts.seed = args.seed;
    opts.root_bound = args.root_bound;
    const auto reports = subres::run_harness(opts);

    int passed = 0;
    for (const auto& r : reports)
        if (r.all_pass()) ++passed;
    const bool all_pass = passed == args.trials;

    if (args.json_output) {
        json out;
        out["trials"] = args.trials;
        out["passed"] = passed;
        out["all_pass"] = all_pass;
        json rs = json::array();
        for (const auto& r : reports) rs.push_back(subres::report_to_json(r));
        out["reports"] = std::move(rs);
        std::cout << out.dump() << "\n";
    } else {
        const std::string line =
            std::to_string(passed) + "/" + std::to_string(args.trials) + " instances passed";
        std::cout << colorize(line, all_pass) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact univariate subresultants via Sylvester sums"};
    app.require_subcommand(1);

    SresArgs sres_args;
    CLI::App* sres = app.add_subcommand("sres", "subresultant of two coefficient lists");
    auto* opt_f = sres->add_option("--f", sres_args.f_text, "f as a JSON coefficient array, ascending powers");
    auto* opt_g = sres->add_option("--g", sres_args.g_text, "g as a JSON coefficient array, ascending powers");
    auto* opt_in = sres->add_option("--input", sres_args.input_path, "JSON file with {\"f\":[...],\"g\":[...]}");
    auto* opt_d = sres->add_option("--d", sres_args.d, "subresultant index");
    auto* opt_chain = sres->add_flag("--chain", sres_args.chain, "all admissible indices as a JSON object");
    sres->add_flag("--json", sres_args.json_output, "emit coefficient arrays instead of readable text");
    auto* opt_dump = sres->add_flag("--dump-matrix", sres_args.dump_matrix, "print the defining matrix as JSON and exit");
    opt_in->excludes(opt_f)->excludes(opt_g);
    opt_chain->excludes(opt_d)->excludes(opt_dump);

    SylvArgs sylv_args;
    CLI::App* sylv = app.add_subcommand("sylv", "Sylvester double sum over two root lists");
    auto* opt_a = sylv->add_option("--roots-a", sylv_args.a_text, "roots of f as a JSON array");
    auto* opt_b = sylv->add_option("--roots-b", sylv_args.b_text, "roots of g as a JSON array");
    auto* opt_in2 = sylv->add_option("--input", sylv_args.input_path, "JSON file with {\"A\":[...],\"B\":[...]}");
    sylv->add_option("--p", sylv_args.p, "size of the A-sublists")->required();
    sylv->add_option("--q", sylv_args.q, "size of the B-sublists")->required();
    sylv->add_flag("--raw", sylv_args.raw, "emit the unscaled double sum");
    sylv->add_flag("--json", sylv_args.json_output, "emit a coefficient array");
    opt_in2->excludes(opt_a)->excludes(opt_b);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "cross-check all identities on random instances");
    verify->add_option("--trials", verify_args.trials, "number of instances")->check(CLI::PositiveNumber);
    verify->add_option("--max-deg", verify_args.max_deg, "degrees drawn from [1, max-deg]")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed, "harness seed");
    verify->add_option("--root-bound", verify_args.root_bound, "numerator/denominator bound")->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_args.json_output, "emit the full per-check report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    sres_args.d_given = opt_d->count() > 0;
    try {
        if (sres->parsed()) return run_sres(sres_args);
        if (sylv->parsed()) return run_sylv(sylv_args);
        return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
