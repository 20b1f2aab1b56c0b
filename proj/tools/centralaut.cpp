// centralaut: exact automorphism machinery for finite p-groups.
//
// Subcommands: aut-order, count-restricted, extend, verify-conjecture,
// selftest. Exit codes: 0 success, 2 invalid input, 3 failed check.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "centralaut/commands.hpp"

using namespace centralaut;

namespace {

void emit(const RunReport& report, bool as_json) {
    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
}

std::vector<std::uint32_t> parse_exponents(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(cell)));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact automorphism machinery for finite p-groups"};
    app.require_subcommand(1);
    app.fallthrough();  // --json/--jobs/--brute-bound may follow the subcommand

    CommonOptions common;
    if (const char* env = std::getenv("CENTRALAUT_BRUTE_BOUND"))
        common.brute_bound = std::strtoull(env, nullptr, 10);
    app.add_flag("--json", common.json, "emit the run report as JSON");
    app.add_option("--jobs", common.jobs, "worker threads for the brute-force search");
    app.add_option("--brute-bound", common.brute_bound,
                   "largest group order the brute-force oracle accepts");

    AutOrderArgs aut_args;
    std::string aut_exponents;
    auto* aut = app.add_subcommand("aut-order", "automorphism group order of an abelian p-group");
    aut->add_option("--p", aut_args.p, "prime")->required();
    aut->add_option("--exponents", aut_exponents, "comma-separated exponents e_1,...,e_n")
        ->required();
    aut->add_flag("--verify-bruteforce", aut_args.verify_bruteforce,
                  "cross-check against enumeration and the table oracle");

    CountRestrictedArgs count_args;
    std::string count_exponents;
    auto* count = app.add_subcommand("count-restricted",
                                     "count center automorphisms that lift to the whole group");
    count->add_option("--p", count_args.p, "prime")->required();
    count->add_option("--exponents", count_exponents, "comma-separated exponents")->required();
    count->add_flag("--enumerate", count_args.enumerate, "cross-check by enumeration");

    ExtendArgs extend_args;
    std::string theta_text;
    auto* extend = app.add_subcommand("extend", "lift center automorphisms of an extension");
    extend->add_option("source", extend_args.source,
                       "extension JSON file, inline JSON, or builtin:<name>")
        ->required();
    extend->add_option("--theta", theta_text, "matrix for theta, rows separated by ';'");
    extend->add_flag("--all", extend_args.all, "lift the whole family");
    extend->add_option("--exhaustion-bound", extend_args.exhaustion_bound,
                       "largest |G| for exhaustive whole-group checks");
    extend->add_option("--sample-pairs", extend_args.sample_pairs,
                       "random pairs for sampled homomorphism checks");

    VerifyConjectureArgs verify_args;
    std::uint64_t verify_p = 0;
    auto* verify = app.add_subcommand("verify-conjecture",
                                      "check |G| divides |Aut(G)| on a multiplication table");
    verify->add_option("source", verify_args.source, "table JSON file or builtin:<name>")
        ->required();
    verify->add_option("--p", verify_p, "prime (inferred from the order when omitted)");

    SelftestArgs selftest_args;
    std::string scale_text = "small";
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--scale", scale_text, "small or full")
        ->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    if (common.brute_bound > 750)
        std::cerr << "note: brute bound " << common.brute_bound
                  << " exceeds 750; automorphism searches may take a long time\n";

    RunReport report;
    int code = kExitInput;
    if (aut->parsed()) {
        aut_args.exponents = parse_exponents(aut_exponents);
        code = run_aut_order(aut_args, common, report);
    } else if (count->parsed()) {
        count_args.exponents = parse_exponents(count_exponents);
        code = run_count_restricted(count_args, common, report);
    } else if (extend->parsed()) {
        if (!theta_text.empty()) extend_args.theta = theta_text;
        code = run_extend(extend_args, common, report);
    } else if (verify->parsed()) {
        if (verify->count("--p") > 0) verify_args.p = verify_p;
        code = run_verify_conjecture(verify_args, common, report);
    } else if (selftest->parsed()) {
        selftest_args.scale = scale_text == "full" ? Scale::full : Scale::small;
        code = run_selftest(selftest_args, common, report);
    }
    emit(report, common.json);
    return code;
}
