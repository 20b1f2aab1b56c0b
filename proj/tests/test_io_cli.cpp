#include <doctest.h>

#include <nlohmann/json.hpp>

#include "centralaut/builtins.hpp"
#include "centralaut/commands.hpp"
#include "centralaut/error.hpp"
#include "centralaut/json_io.hpp"

using namespace centralaut;

TEST_CASE("group descriptor round trip") {
    AbelianPGroup g(3, {1, 2, 2});
    AbelianPGroup back = group_from_json(group_to_json(g));
    CHECK(back.same_group(g));
    CHECK_THROWS_AS(group_from_json(json::parse(R"({"p": 4, "exponents": [1]})")), Error);
    CHECK_THROWS_AS(group_from_json(json::parse(R"({"p": 3})")), Error);
}

TEST_CASE("matrix round trip and big entries") {
    AbelianPGroup g(3, {2, 3});
    EndoMatrix m = canonicalize(g, {Int(4), Int(8), Int(9), Int(22)});
    EndoMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back == m);

    CHECK(int_from_json(int_to_json(Int("123456789012345678901234567890"))) ==
          Int("123456789012345678901234567890"));
    CHECK(int_to_json(Int("123456789012345678901234567890")).is_string());
    CHECK(int_to_json(Int(42)).is_number());
}

TEST_CASE("extension JSON: bilinear input and table round trip") {
    json j = json::parse(R"({
        "p": 3,
        "q": {"type": "elementary", "rank": 2},
        "z": {"p": 3, "exponents": [3]},
        "cocycle": {"type": "bilinear", "scale": 9, "matrix": [[0, 0], [1, 0]]}
    })");
    CentralExtensionGroup g = extension_from_json(j);
    CHECK(g.order() == Int(243));

    CentralExtensionGroup ref = make_builtin_extension("extA");
    for (std::uint32_t x = 0; x < 9; ++x)
        for (std::uint32_t y = 0; y < 9; ++y) CHECK(g.mu(x, y) == ref.mu(x, y));

    CentralExtensionGroup back = extension_from_json(extension_to_json(g));
    CHECK(back.order() == g.order());
    for (std::uint32_t x = 0; x < 9; ++x)
        for (std::uint32_t y = 0; y < 9; ++y) CHECK(back.mu(x, y) == g.mu(x, y));

    // scale not divisible by p^{e-1} cannot satisfy the cocycle identity
    json badscale = j;
    badscale["cocycle"]["scale"] = 3;
    CHECK_THROWS_AS(extension_from_json(badscale), Error);
}

TEST_CASE("extension JSON: cyclic and trivial quotients") {
    CentralExtensionGroup cyc = extension_from_json(json::parse(R"({
        "q": {"type": "cyclic", "order": 4},
        "z": {"p": 2, "exponents": [2]},
        "cocycle": {"type": "zero"}
    })"));
    CHECK(cyc.order() == Int(16));
    GElem a = cyc.transversal(1), b = cyc.transversal(3);
    CHECK(cyc.mul(a, b) == cyc.mul(b, a));

    CentralExtensionGroup triv = extension_from_json(json::parse(R"({
        "q": {"type": "trivial"},
        "z": {"p": 5, "exponents": [1, 2]},
        "cocycle": {"type": "zero"}
    })"));
    CHECK(triv.order() == Int(125));
    CHECK(center_equals_center_factor(triv));
}

TEST_CASE("table JSON round trip") {
    TableGroup t = quaternion8_table();
    TableGroup back = table_from_json(table_to_json(t));
    CHECK(back.order() == t.order());
    CHECK(back.raw_table() == t.raw_table());
}

TEST_CASE("aut-order command") {
    CommonOptions common;
    {
        RunReport report;
        AutOrderArgs args{3, {1, 1}, true};
        CHECK(run_aut_order(args, common, report) == kExitOk);
        CHECK(report.results["aut_order"] == "48");
        CHECK(report.all_passed());
    }
    {
        RunReport report;
        AutOrderArgs args{5, {2}, false};
        CHECK(run_aut_order(args, common, report) == kExitOk);
        CHECK(report.results["aut_order"] == "20");
    }
    {
        RunReport report;
        AutOrderArgs args{4, {1}, false};
        CHECK(run_aut_order(args, common, report) == kExitInput);
    }
}

TEST_CASE("count-restricted command") {
    CommonOptions common;
    {
        RunReport report;
        CountRestrictedArgs args{3, {3, 3, 3}, true};
        CHECK(run_count_restricted(args, common, report) == kExitOk);
        CHECK(report.results["liftable_count"] == "19683");
        CHECK(report.results["lower_bound"] == "19683");
    }
    {
        RunReport report;
        CountRestrictedArgs args{3, {2, 2}, true};
        CHECK(run_count_restricted(args, common, report) == kExitOk);
        CHECK(report.results["liftable_count"] == "1");
    }
    {
        RunReport report;
        CountRestrictedArgs args{3, {1, 1}, false};
        CHECK(run_count_restricted(args, common, report) == kExitInput);
    }
}

TEST_CASE("extend command") {
    CommonOptions common;
    {
        RunReport report;
        ExtendArgs args;
        args.source = "builtin:extA";
        args.all = true;
        CHECK(run_extend(args, common, report) == kExitOk);
        CHECK(report.results["family_size"] == "3");
        CHECK(report.all_passed());
    }
    {
        RunReport report;
        ExtendArgs args;
        args.source = "builtin:extB";
        args.theta = std::string("10");
        CHECK(run_extend(args, common, report) == kExitOk);
    }
    {
        // a theta violating the congruences is rejected loudly
        RunReport report;
        ExtendArgs args;
        args.source = "builtin:extA";
        args.theta = std::string("4");
        CHECK(run_extend(args, common, report) == kExitCheckFailed);
    }
    {
        // p = 2 extension: lifting refuses
        RunReport report;
        ExtendArgs args;
        args.source = "builtin:q8ext";
        args.all = true;
        CHECK(run_extend(args, common, report) == kExitCheckFailed);
    }
}

TEST_CASE("extend report inputs reproduce the run") {
    CommonOptions common;
    RunReport first;
    ExtendArgs args;
    args.source = "builtin:extA";
    args.all = true;
    REQUIRE(run_extend(args, common, first) == kExitOk);

    // feed the echoed inputs back in as an inline JSON source
    RunReport second;
    ExtendArgs again;
    again.source = first.inputs["extension"].dump();
    again.all = true;
    REQUIRE(run_extend(again, common, second) == kExitOk);
    CHECK(first.results == second.results);
    CHECK(first.to_json(false) == second.to_json(false));
}

TEST_CASE("verify-conjecture command") {
    CommonOptions common;
    {
        RunReport report;
        VerifyConjectureArgs args{"builtin:heisenberg27", {}};
        CHECK(run_verify_conjecture(args, common, report) == kExitOk);
        CHECK(report.results["holds"] == true);
    }
    {
        RunReport report;
        VerifyConjectureArgs args{"builtin:cyclic27", {}};
        CHECK(run_verify_conjecture(args, common, report) == kExitOk);
        CHECK(report.results["applicable"] == false);
    }
    {
        RunReport report;
        VerifyConjectureArgs args{"builtin:q8", std::uint64_t(2)};
        CHECK(run_verify_conjecture(args, common, report) == kExitOk);
        CHECK(report.results["aut_order"] == "24");
    }
    {
        RunReport report;
        VerifyConjectureArgs args{"builtin:nosuch", {}};
        CHECK(run_verify_conjecture(args, common, report) == kExitInput);
    }
}

TEST_CASE("reports are byte-stable modulo timing") {
    CommonOptions common;
    RunReport a, b;
    AutOrderArgs args{3, {1, 2}, true};
    run_aut_order(args, common, a);
    run_aut_order(args, common, b);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(a.to_json(false)["results"]["aut_order"] == "108");
}
