#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgc/cyclotomic.hpp"
#include "hgc/padic_int.hpp"

namespace hgc {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped, report_only_pass, report_only_fail };

std::string to_string(CheckStatus s);

struct CheckReport
{
	std::string check;
	std::uint64_t q = 0;
	Json params = Json::object();
	std::string guard;
	bool guard_satisfied = false;
	std::string modulus;
	CheckStatus status = CheckStatus::skipped;
	Json lhs;
	Json rhs;
	std::string note;
	std::optional<double> millis;
};

/// Static description of a registry entry.
struct CheckInfo
{
	std::string id;
	std::string summary;
	std::string guard;
	std::string modulus;
	/// Proven results abort a sweep on failure; conjectures only report.
	bool proven = true;
	/// Whether q may be a proper prime power.
	bool prime_powers = false;
	/// Parameter sets run by default; an empty object means a single run.
	std::vector<Json> variants;
};

const std::vector<CheckInfo>& check_registry();
/// Throws std::invalid_argument for an unknown id.
const CheckInfo& find_check(const std::string& id);

/// Runs one check at q with the given parameters (a registry variant, or
/// an empty object for the entry's first variant).
CheckReport run_check(const std::string& id, std::uint64_t q, const Json& params = Json::object());

struct SweepOptions
{
	unsigned jobs = 1;
	bool timings = false;
};

/// Runs every variant of every id at every q. The result is ordered by id
/// (in the given order), then variant, then q, independently of jobs.
std::vector<CheckReport> sweep(const std::vector<std::string>& ids, const std::vector<std::uint64_t>& qs,
	const SweepOptions& options = {});

bool has_proven_failure(const std::vector<CheckReport>& reports);

Json to_json(const CycInt& v);
Json to_json(const CycRat& v);
Json to_json(const PadicInt& v);
Json to_json(const Rat& v);
Json to_json(const Int& v);
Json to_json(const CheckReport& r, bool timings = false);
/// Aggregate report with the invocation string and status counts.
Json sweep_to_json(const std::vector<CheckReport>& reports, const std::string& invocation, bool timings = false);

} // namespace hgc
