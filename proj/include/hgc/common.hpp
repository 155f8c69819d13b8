#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hgc {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a computation would exceed a configured size cap.
class ResourceCapError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
	return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
	std::uint64_t result = 1 % m;
	base %= m;
	while (exp > 0) {
		if (exp & 1)
			result = mulmod(result, base, m);
		base = mulmod(base, base, m);
		exp >>= 1;
	}
	return result;
}

/// Reduces a signed value into [0, m).
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t m)
{
	const std::int64_t r = a % static_cast<std::int64_t>(m);
	return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Trial-division factorization as (prime, multiplicity) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// If n = p^e with p prime, returns (p, e); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

std::string to_string(const Rat& x);
Rat parse_rational(const std::string& text);

} // namespace hgc
