#include "hgc/common.hpp"

#include <cctype>

namespace hgc {

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
	std::uint64_t r = 1;
	for (unsigned i = 0; i < exp; ++i) {
		if (base != 0 && r > UINT64_MAX / base)
			throw std::overflow_error("integer power overflows 64 bits");
		r *= base;
	}
	return r;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
		if (n % p == 0)
			return n == p;
	}
	std::uint64_t d = n - 1;
	unsigned s = 0;
	while ((d & 1) == 0) {
		d >>= 1;
		++s;
	}
	// These bases are deterministic for all n < 2^64.
	for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
		std::uint64_t x = powmod(a, d, n);
		if (x == 1 || x == n - 1)
			continue;
		bool composite = true;
		for (unsigned i = 1; i < s; ++i) {
			x = mulmod(x, x, n);
			if (x == n - 1) {
				composite = false;
				break;
			}
		}
		if (composite)
			return false;
	}
	return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
	std::vector<std::pair<std::uint64_t, unsigned>> out;
	for (std::uint64_t d = 2; d * d <= n; ++d) {
		if (n % d != 0)
			continue;
		unsigned k = 0;
		while (n % d == 0) {
			n /= d;
			++k;
		}
		out.emplace_back(d, k);
	}
	if (n > 1)
		out.emplace_back(n, 1);
	return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n)
{
	if (n < 2)
		return {0, 0};
	const auto f = factorize(n);
	if (f.size() != 1)
		return {0, 0};
	return f.front();
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
	std::vector<std::uint64_t> out;
	for (std::uint64_t n = lo; n <= hi; ++n)
		if (is_prime(n))
			out.push_back(n);
	return out;
}

std::string to_string(const Rat& x)
{
	return x.get_str();
}

Rat parse_rational(const std::string& text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s += c;
	if (s.empty())
		throw std::invalid_argument("empty rational");
	Rat r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("malformed rational: " + text);
	if (r.get_den() == 0)
		throw std::invalid_argument("zero denominator: " + text);
	r.canonicalize();
	return r;
}

} // namespace hgc
