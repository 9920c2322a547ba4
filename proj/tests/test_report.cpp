#include <doctest.h>

#include "seifert/error.hpp"
#include "seifert/report.hpp"

using namespace seifert;

namespace {

bool no_json_numbers(const Json& j) {
    if (j.is_number()) return false;
    if (j.is_object() || j.is_array()) {
        for (const auto& v : j) {
            if (!no_json_numbers(v)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("report json schema") {
    const auto rep = build_structure_report({1, 2, 1, Sign::plus, 1});
    const Json j = to_json(rep);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"diagram", "homology", "input", "invariants", "spin_c", "verdicts"});
    CHECK(no_json_numbers(j));
    CHECK(j["invariants"]["d3_contact"] == "1/3");
    CHECK(j["invariants"]["d3_canonical"] == "-8/3");
    CHECK(j["invariants"]["gap"] == "3");
    CHECK(j["verdicts"]["tight"] == true);
    CHECK(j["verdicts"]["fillable"] == "not fillable (proved)");
    CHECK(j["verdicts"]["lattice_obstruction"]["status"] == "certified");
    CHECK(j["homology"]["mu_order"] == "3");
    CHECK(rep.all_checks_pass());
}

TEST_CASE("report json is byte-identical across runs") {
    for (const FamilyParams& p : {FamilyParams{1, 2, 7, Sign::plus, 3}, FamilyParams{2, 6, 4, Sign::minus, -4},
                                  FamilyParams{3, 6, 5, Sign::plus, 5}}) {
        const std::string a = to_json(build_structure_report(p)).dump(2);
        const std::string b = to_json(build_structure_report(p)).dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("report values") {
    auto rep = build_structure_report({1, 2, 7, Sign::plus, 3});
    REQUIRE(rep.c1);
    CHECK(rep.c1->c1_order == 5);
    CHECK(rep.mu_order == 15);

    rep = build_structure_report({2, 4, 1, Sign::plus, 1});
    CHECK(rep.fill.gap == Rational(5));
    CHECK_FALSE(rep.obstruction);
    CHECK(rep.all_checks_pass());

    rep = build_structure_report({1, 3, 2, Sign::minus, 0});
    CHECK_FALSE(rep.c1);
    CHECK(rep.offset.offset == 3);
    CHECK(rep.all_checks_pass());
    const Json j = to_json(rep);
    CHECK(j["verdicts"]["lattice_obstruction"]["status"] == "not applicable (n > 2g)");

    CHECK_THROWS_AS(build_structure_report({1, 2, 1, Sign::plus, -1}), Error);
    CHECK_THROWS_AS(build_structure_report({1, 1, 1, Sign::plus, 1}), Error);
}

TEST_CASE("family choice realizes the requested rotation") {
    for (long g = 1; g <= 2; ++g) {
        for (long n = 2 * g; n <= 2 * g + 2; ++n) {
            for (long alpha = 1; alpha <= 7; ++alpha) {
                for (Sign s : {Sign::plus, Sign::minus}) {
                    for (long r = -alpha; r <= alpha; r += 2) {
                        if ((s == Sign::plus && r == -alpha) || (s == Sign::minus && r == alpha)) continue;
                        const FamilyParams p{g, n, alpha, s, r};
                        const auto rep = build_structure_report(p);
                        CHECK(rep.choice.rotation == r);
                        CHECK(rep.all_checks_pass());
                        const auto choices = enumerate_choices(rep.diagram);
                        CHECK(std::find(choices.begin(), choices.end(), rep.choice) != choices.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("ranges") {
    auto r = parse_range("1..3");
    CHECK(r.lo == 1);
    CHECK(r.hi == 3);
    r = parse_range("4");
    CHECK(r.lo == 4);
    CHECK(r.hi == 4);
    r = parse_range("-2..-1");
    CHECK(r.lo == -2);
    CHECK(parse_range("5..1").empty());
    CHECK_THROWS_AS(parse_range("1..x"), Error);
    CHECK_THROWS_AS(parse_range(""), Error);
}

TEST_CASE("sweep") {
    SweepOptions o;
    o.g = {1, 2};
    o.alpha = {1, 6};
    auto s = run_sweep(o);
    CHECK(s.total_failed() == 0);
    CHECK(s.total_checked() > 0);
    for (const char* name : {"mu_order", "omega_red_identity", "gap_law", "moy_verdict", "moy_sandwich"}) {
        REQUIRE(s.checks.count(name));
        CHECK(s.checks[name].checked > 0);
    }
    CHECK(no_json_numbers(to_json(s)));

    o.alpha = {5, 1};
    s = run_sweep(o);
    CHECK(s.total_checked() == 0);

    o.alpha = {1, 10};
    o.mu_only = true;
    s = run_sweep(o);
    CHECK(s.checks.size() == 1);
    CHECK(s.total_failed() == 0);
}

TEST_CASE("obstruction and witness json") {
    const Json o = to_json(nonfillability_obstruction(1));
    CHECK(no_json_numbers(o));
    const Json w = to_json(distinct_witness(1, 2));
    CHECK(no_json_numbers(w));
    CHECK(w["alpha"] == "7");
}
