#include <doctest.h>

#include <set>

#include "hgc/verify.hpp"

using namespace hgc;

TEST_CASE("registry entries are well formed")
{
	const auto& reg = check_registry();
	REQUIRE(reg.size() > 40);
	std::set<std::string> ids;
	for (const auto& c : reg) {
		CHECK(ids.insert(c.id).second);
		CHECK_FALSE(c.summary.empty());
		CHECK_FALSE(c.guard.empty());
		CHECK_FALSE(c.modulus.empty());
		CHECK_FALSE(c.variants.empty());
		CHECK(find_check(c.id).summary == c.summary);
	}
	for (const char* id : {"thm1.2", "thm1.4.1", "thm1.7", "lemma4.2", "zeta3", "psi", "conj1.3"})
		CHECK(ids.count(id) == 1);
	CHECK_THROWS_AS(find_check("no-such-check"), std::invalid_argument);
	CHECK_THROWS_AS(run_check("no-such-check", 13), std::invalid_argument);
	CHECK_FALSE(find_check("conj1.3").proven);
	CHECK(find_check("thm1.2").prime_powers);
}

TEST_CASE("single checks")
{
	const auto r = run_check("thm1.4.1", 13);
	CHECK(r.status == CheckStatus::pass);
	CHECK(r.guard_satisfied);
	const auto s = run_check("eq1.1", 5);
	CHECK(s.status == CheckStatus::skipped);
	CHECK_FALSE(s.guard_satisfied);
	const auto c = run_check("conj1.3", 7, Json{{"n", 3}});
	CHECK((c.status == CheckStatus::report_only_pass || c.status == CheckStatus::report_only_fail));
	CHECK(run_check("thm1.2", 9, Json{{"n", 2}}).status == CheckStatus::pass);
	CHECK(run_check("thm1.7", 9).status == CheckStatus::skipped);
	CHECK(run_check("psi", 29).status == CheckStatus::pass);
	CHECK(run_check("gk-product", 31, Json{{"n", 3}, {"j", 2}, {"r", 3}}).status == CheckStatus::pass);
}

TEST_CASE("lambda zero is reported, not asserted")
{
	const auto r = run_check("thm1.2-zero", 7, Json{{"n", 2}});
	CHECK(r.status == CheckStatus::report_only_fail);
	CHECK_FALSE(find_check("thm1.2-zero").proven);
}

TEST_CASE("status names")
{
	CHECK(to_string(CheckStatus::pass) == "PASS");
	CHECK(to_string(CheckStatus::fail) == "FAIL");
	CHECK(to_string(CheckStatus::skipped) == "SKIPPED");
	CHECK(to_string(CheckStatus::report_only_pass) == "REPORT-ONLY-PASS");
	CHECK(to_string(CheckStatus::report_only_fail) == "REPORT-ONLY-FAIL");
}

TEST_CASE("sweeps are deterministic")
{
	const std::vector<std::string> ids{"thm1.4.1", "eq1.1", "lemma2.1", "thm1.2"};
	const std::vector<std::uint64_t> qs{5, 7, 9, 13, 17};
	const auto a = sweep(ids, qs, {1, false});
	const auto b = sweep(ids, qs, {3, false});
	REQUIRE(a.size() == b.size());
	CHECK(sweep_to_json(a, "x").dump() == sweep_to_json(b, "x").dump());
	CHECK_FALSE(has_proven_failure(a));
	// Ordered by id, then variant, then q.
	CHECK(a.front().check == "thm1.4.1");
	CHECK(a.back().check == "thm1.2");
	CHECK(a[1].q == 7);
}

TEST_CASE("empty sweep")
{
	const auto r = sweep({}, {5, 7});
	CHECK(r.empty());
	const Json j = sweep_to_json(r, "hgc sweep");
	CHECK(j["reports"].empty());
	CHECK(j["summary"]["PASS"] == 0);
	CHECK_FALSE(has_proven_failure(r));
}

TEST_CASE("report serialization")
{
	const auto r = run_check("thm1.4.1", 13);
	const Json j = to_json(r);
	std::vector<std::string> keys;
	for (const auto& [k, v] : j.items())
		keys.push_back(k);
	CHECK(keys == std::vector<std::string>{"check", "q", "params", "guard", "guard_satisfied", "modulus", "status",
					  "lhs", "rhs", "note", "millis"});
	CHECK(j["millis"].is_null());
	CHECK(j["status"] == "PASS");
	const Json s = sweep_to_json({r}, "hgc sweep --ids thm1.4.1");
	CHECK(s["invocation"] == "hgc sweep --ids thm1.4.1");
	CHECK(s["summary"]["PASS"] == 1);
	CHECK(s["reports"].size() == 1);
	auto timed = sweep({"thm1.4.1"}, {13}, {1, true});
	CHECK(to_json(timed.front(), true)["millis"].is_number());

	CHECK(to_json(Int(-7)) == Json(-7));
	CHECK(to_json(CycInt::constant(3, 4)).dump() == R"({"m":3,"coeffs":[4,0]})");
	CHECK(to_json(CycInt::zeta(3, 2)).dump() == R"({"m":3,"coeffs":[-1,-1]})");
}
