#include "centralaut/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "centralaut/builtins.hpp"
#include "centralaut/error.hpp"
#include "centralaut/json_io.hpp"
#include "centralaut/oracle.hpp"

namespace centralaut {

namespace {

int exit_code_for(errc code) {
    switch (code) {
        case errc::hypothesis_violation:
        case errc::not_liftable:
        case errc::not_p_central:
        case errc::precondition_not_checked:
        case errc::homomorphism_check_failed:
        case errc::cocycle_identity_failed:
        case errc::not_normalized:
        case errc::division_impossible:
        case errc::odd_prime_required:
            return kExitCheckFailed;
        default:
            return kExitInput;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Wraps a command body with error->report translation and timing.
template <typename Body>
int guarded(RunReport& report, Body body) {
    Timer timer;
    int code = kExitOk;
    try {
        code = body();
    } catch (const Error& e) {
        report.add_fail("error", e.what());
        code = exit_code_for(e.code());
    } catch (const std::exception& e) {
        report.add_fail("error", e.what());
        code = kExitInput;
    }
    report.timing_ms = timer.ms();
    if (code == kExitOk && !report.all_passed()) code = kExitCheckFailed;
    return code;
}

json load_json_source(const std::string& source) {
    if (!source.empty() && (source.front() == '{' || source.front() == '['))
        return json::parse(source);
    std::ifstream in(source);
    if (!in) fail(errc::invalid_input, "cannot open '" + source + "'");
    json j;
    in >> j;
    return j;
}

CentralExtensionGroup load_extension(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return make_builtin_extension(source.substr(8));
    return extension_from_json(load_json_source(source));
}

TableGroup load_table(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return make_builtin_table(source.substr(8));
    return table_from_json(load_json_source(source));
}

std::vector<Int> parse_matrix_text(const std::string& text, std::size_t n) {
    std::vector<Int> entries;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t"));
            cell.erase(cell.find_last_not_of(" \t") + 1);
            if (cell.empty()) continue;
            entries.emplace_back(cell);
        }
    }
    if (entries.size() != n * n)
        fail(errc::dimension_mismatch, "expected " + std::to_string(n * n) + " matrix entries, got " +
                                           std::to_string(entries.size()));
    return entries;
}

} // namespace

int run_aut_order(const AutOrderArgs& args, const CommonOptions& common, RunReport& report) {
    report.command = "aut-order";
    return guarded(report, [&]() {
        AbelianPGroup g(args.p, args.exponents);
        report.inputs["group"] = group_to_json(g);
        report.inputs["verify_bruteforce"] = args.verify_bruteforce;
        Int order = aut_order(g);
        report.results["aut_order"] = order.str();
        report.results["aut_order_factored"] = factored_by_prime(order, g.p());
        report.results["group_order"] = g.order().str();
        if (args.verify_bruteforce) {
            if (!g.order_fits(common.brute_bound)) {
                report.add_skip("bruteforce_agreement",
                                "group order exceeds brute bound " +
                                    std::to_string(common.brute_bound));
            } else if (order > Int(kSweepAutBudget)) {
                report.add_skip("bruteforce_agreement",
                                "automorphism count " + order.str() +
                                    " exceeds enumeration budget " +
                                    std::to_string(kSweepAutBudget));
            } else {
                TableGroup t = table_from_abelian(g, common.brute_bound);
                Int counted = brute_aut_count(t, {common.brute_bound, common.jobs});
                if (counted == order)
                    report.add_pass("bruteforce_agreement", counted.str() + " automorphisms");
                else
                    report.add_fail("bruteforce_agreement", "formula " + order.str() +
                                                                ", bruteforce " + counted.str());
            }
            if (endo_class_count(g) <= Int(kDefaultEnumerationBound)) {
                std::uint64_t count = 0;
                enumerate_autos(g, [&](const EndoMatrix&) { ++count; });
                if (Int(count) == order)
                    report.add_pass("enumeration_agreement", std::to_string(count) + " classes");
                else
                    report.add_fail("enumeration_agreement",
                                    "formula " + order.str() + ", enumeration " +
                                        std::to_string(count));
            } else {
                report.add_skip("enumeration_agreement",
                                "endomorphism class count " + endo_class_count(g).str() +
                                    " exceeds the enumeration bound");
            }
        }
        return kExitOk;
    });
}

int run_count_restricted(const CountRestrictedArgs& args, const CommonOptions& common,
                         RunReport& report) {
    report.command = "count-restricted";
    (void)common;
    return guarded(report, [&]() {
        AbelianPGroup g(args.p, args.exponents);
        report.inputs["group"] = group_to_json(g);
        report.inputs["enumerate"] = args.enumerate;
        Int count = liftable_count(g);
        report.results["liftable_count"] = count.str();
        report.results["liftable_count_factored"] = factored_by_prime(count, g.p());
        if (g.rank() >= 3 && g.exponent(0) >= 3) {
            Int bound = liftable_count_lower_bound(g);
            report.results["lower_bound"] = bound.str();
            report.results["lower_bound_factored"] = factored_by_prime(bound, g.p());
            if (count >= bound)
                report.add_pass("count_dominates_bound", count.str() + " >= " + bound.str());
            else
                report.add_fail("count_dominates_bound", count.str() + " < " + bound.str());
        }
        if (args.enumerate) {
            if (count > Int(kDefaultEnumerationBound)) {
                report.add_skip("enumeration_agreement",
                                "liftable count " + count.str() + " exceeds the enumeration bound");
            } else {
                std::uint64_t n = 0;
                enumerate_liftable(g, [&](const EndoMatrix&) { ++n; });
                if (Int(n) == count)
                    report.add_pass("enumeration_agreement", std::to_string(n) + " matrices");
                else
                    report.add_fail("enumeration_agreement",
                                    "formula " + count.str() + ", enumeration " + std::to_string(n));
            }
        }
        return kExitOk;
    });
}

int run_extend(const ExtendArgs& args, const CommonOptions& common, RunReport& report) {
    report.command = "extend";
    (void)common;
    return guarded(report, [&]() {
        CentralExtensionGroup g = load_extension(args.source);
        report.inputs["extension"] = extension_to_json(g);
        report.inputs["exhaustion_bound"] = args.exhaustion_bound;
        report.results["group_order"] = g.order().str();
        report.results["center_order"] = g.z().order().str();

        // hypothesis battery, reported before any lifting
        bool small = g.order_fits(args.exhaustion_bound);
        const char* mode = small ? "exhaustive" : "structural";
        bool pc = small ? is_p_central(g, args.exhaustion_bound) : p_central_structural(g);
        bool pa = small ? is_p2_abelian(g, args.exhaustion_bound) : p2_abelian_structural(g);
        bool cz = center_equals_center_factor(g);
        report.results["check_mode"] = mode;
        (pc ? report.add_pass("p_central", mode) : report.add_fail("p_central", mode));
        (pa ? report.add_pass("p2_abelian", mode) : report.add_fail("p2_abelian", mode));
        (cz ? report.add_pass("center_equals_central_factor", "")
            : report.add_fail("center_equals_central_factor", "center is larger"));
        if (!pc || !pa || !cz) return kExitCheckFailed;

        // inner-automorphism list for the non-inner verdicts, when the group
        // is small enough to tabulate
        std::optional<ExtensionTable> table;
        std::optional<CenterInner> inner;
        if (g.order_fits(std::min<std::uint64_t>(common.brute_bound, args.exhaustion_bound))) {
            table = table_from_extension(g, common.brute_bound);
            inner = center_and_inner(table->table, common.brute_bound);
        }
        auto non_inner_verdict = [&](const LiftedAutomorphism& gamma, const std::string& tag) {
            if (gamma.is_identity()) {
                report.add_skip(tag + "_non_inner", "identity lift is inner by definition");
                return;
            }
            if (!inner.has_value()) {
                report.add_skip(tag + "_non_inner",
                                "group too large to tabulate the inner automorphisms");
                return;
            }
            GroupMap map = map_from_lift(g, gamma);
            bool is_inner =
                std::find(inner->inner.begin(), inner->inner.end(), map) != inner->inner.end();
            if (is_inner)
                report.add_fail(tag + "_non_inner", "lift coincides with a conjugation map");
            else
                report.add_pass(tag + "_non_inner", "");
        };

        auto report_member = [&](const LiftedAutomorphism& gamma, const std::string& tag) {
            LiftReport lr = extend_center_automorphism(g, gamma.theta, args.exhaustion_bound,
                                                       args.sample_pairs);
            report.add_pass(tag + "_homomorphism",
                            std::string(lr.exhaustive ? "exhaustive" : "sampled") + ", " +
                                std::to_string(lr.pairs_checked) + " pairs");
            report.add_pass(tag + "_identity_on_quotient", "by construction");
            non_inner_verdict(gamma, tag);
        };

        if (args.all) {
            auto family = lift_family(g);
            report.results["family_size"] = std::to_string(family.size());
            json members = json::array();
            for (const auto& gamma : family) members.push_back(lift_to_json(g, gamma));
            report.results["family"] = members;
            bool closed = true;
            for (const auto& a : family) {
                for (const auto& b : family) {
                    LiftedAutomorphism ab = compose(g, a, b);
                    if (std::find(family.begin(), family.end(), ab) == family.end()) {
                        closed = false;
                        break;
                    }
                }
                if (!closed) break;
            }
            (closed ? report.add_pass("family_closed_under_composition", "")
                    : report.add_fail("family_closed_under_composition", ""));
            bool star = true;
            for (const auto& gamma : family)
                star = star && lift_identity_holds(g, gamma.theta, gamma.chi);
            (star ? report.add_pass("lift_identity", "all members")
                  : report.add_fail("lift_identity", "some member violates it"));
            for (std::size_t i = 0; i < family.size(); ++i)
                non_inner_verdict(family[i], "member" + std::to_string(i));
        } else if (args.theta.has_value()) {
            EndoMatrix theta =
                canonicalize(g.z(), parse_matrix_text(*args.theta, g.z().rank()));
            report.inputs["theta"] = matrix_to_json(theta);
            LiftReport lr =
                extend_center_automorphism(g, theta, args.exhaustion_bound, args.sample_pairs);
            report.results["lift"] = lift_to_json(g, lr.automorphism);
            report.add_pass("lift_identity", "");
            report_member(lr.automorphism, "lift");
        } else {
            fail(errc::invalid_input, "pass --theta <matrix> or --all");
        }
        return kExitOk;
    });
}

int run_verify_conjecture(const VerifyConjectureArgs& args, const CommonOptions& common,
                          RunReport& report) {
    report.command = "verify-conjecture";
    return guarded(report, [&]() {
        TableGroup t = load_table(args.source);
        report.inputs["source"] = args.source;
        report.inputs["order"] = t.order();
        std::uint64_t p;
        if (args.p.has_value()) {
            p = *args.p;
        } else {
            p = 2;
            while (t.order() % p != 0) ++p;
        }
        report.inputs["p"] = p;
        ConjectureVerdict v = conjecture_verdict(t, p, common.brute_bound);
        report.results["order"] = v.group_order.str();
        report.results["aut_order"] = v.aut_order.str();
        report.results["aut_order_factored"] = factored_by_prime(v.aut_order, Int(p));
        report.results["applicable"] = v.applicable;
        report.results["holds"] = v.holds;
        if (!v.applicable) {
            report.add_skip("divisibility", "not applicable: " + v.reason);
            return kExitOk;
        }
        if (v.holds) {
            report.add_pass("divisibility",
                            v.group_order.str() + " divides " + v.aut_order.str());
            return kExitOk;
        }
        report.add_fail("divisibility",
                        v.group_order.str() + " does not divide " + v.aut_order.str());
        return kExitCheckFailed;
    });
}

int run_selftest(const SelftestArgs& args, const CommonOptions& common, RunReport& report) {
    report.command = "selftest";
    return guarded(report, [&]() {
        report.inputs["scale"] = args.scale == Scale::full ? "full" : "small";
        auto results = run_acceptance(args.scale, common.jobs);
        bool all = true;
        for (const auto& r : results) {
            std::string name = "criterion " + std::to_string(r.number) + ": " + r.name;
            if (r.passed)
                report.add_pass(name, r.detail);
            else
                report.add_fail(name, r.detail);
            all = all && r.passed;
        }
        return all ? kExitOk : kExitCheckFailed;
    });
}

} // namespace centralaut
