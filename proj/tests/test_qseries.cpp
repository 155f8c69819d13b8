#include <doctest.h>

#include <cmath>
#include <random>

#include "hgc/padic.hpp"
#include "hgc/qseries.hpp"

using namespace hgc;

namespace {

/// Term-by-term sum of a terminating series, stopping at the first zero term.
Rat series_oracle(const std::vector<Rat>& up, const std::vector<Rat>& lo, const Rat& z)
{
	Rat sum = 0, term = 1;
	for (unsigned long k = 0; term != 0; ++k) {
		sum += term;
		for (const auto& a : up)
			term *= a + k;
		for (const auto& b : lo)
			term /= b + k;
		term *= z;
		term /= k + 1;
	}
	return sum;
}

Rat poch(const Rat& a, unsigned long n)
{
	Rat r = 1;
	for (unsigned long i = 0; i < n; ++i)
		r *= a + i;
	return r;
}

long double pfq_float(const std::vector<long double>& up, const std::vector<long double>& lo, std::size_t terms)
{
	long double sum = 0, term = 1;
	for (std::size_t k = 0; k < terms && term != 0; ++k) {
		sum += term;
		for (auto a : up)
			term *= a + k;
		for (auto b : lo)
			term /= b + k;
		term /= k + 1;
	}
	return sum;
}

/// Euler's pentagonal series for prod (1 - q^m), truncated after n.
std::vector<long> pentagonal(std::size_t n)
{
	std::vector<long> c(n + 1, 0);
	for (long k = -100; k <= 100; ++k) {
		const long e = k * (3 * k - 1) / 2;
		if (e >= 0 && static_cast<std::size_t>(e) <= n)
			c[e] += (k % 2 == 0) ? 1 : -1;
	}
	return c;
}

std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b)
{
	std::vector<long> r(a.size(), 0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; i + j < a.size(); ++j)
			r[i + j] += a[i] * b[j];
	return r;
}

std::vector<long> dilate(const std::vector<long>& a, std::size_t d)
{
	std::vector<long> r(a.size(), 0);
	for (std::size_t i = 0; i * d < a.size(); ++i)
		r[i * d] = a[i];
	return r;
}

} // namespace

TEST_CASE("terminating series")
{
	CHECK(terminating_hgs({Rat(-2), Rat(2), Rat(2)}, {Rat(1), Rat(1)}, Rat(1)) == 2);
	CHECK(terminating_hgs({Rat(0)}, {}, Rat(5)) == 1);
	CHECK_THROWS(terminating_hgs({Rat(1, 2)}, {Rat(1)}, Rat(1)));
	std::mt19937 rng(3);
	std::uniform_int_distribution<long> num(-12, 12), den(1, 7), n(0, 6);
	for (int trial = 0; trial < 100; ++trial) {
		std::vector<Rat> up{Rat(-n(rng))}, lo;
		for (int i = 0; i < 2; ++i) {
			up.emplace_back(num(rng), den(rng));
			Rat b(num(rng), den(rng));
			b.canonicalize();
			if (b.get_den() == 1 && b <= 0)
				b += 20;
			lo.push_back(b);
		}
		for (auto& r : up)
			r.canonicalize();
		Rat z(num(rng), den(rng));
		z.canonicalize();
		CHECK(terminating_hgs(up, lo, z) == series_oracle(up, lo, z));
	}
}

TEST_CASE("identity names")
{
	for (auto id : {ClassicalIdentity::kummer, ClassicalIdentity::karlsson_minton, ClassicalIdentity::dougall,
			 ClassicalIdentity::whipple})
		CHECK(parse_classical_identity(to_string(id)) == id);
	CHECK_THROWS(parse_classical_identity("gauss"));
}

TEST_CASE("Kummer")
{
	const auto c = check_kummer(Rat(1, 2), Rat(-2));
	CHECK(c.lhs == Rat(4, 3));
	CHECK(c.rhs == Rat(4, 3));
	CHECK(c.equal);
	for (long n = 1; n <= 6; ++n)
		for (const Rat& a : {Rat(1, 3), Rat(5, 7), Rat(-9, 4)}) {
			const Rat b(-n);
			const auto k = check_kummer(a, b);
			CHECK(k.lhs == series_oracle({a, b}, {a - b + 1}, Rat(-1)));
			CHECK(k.rhs == poch(a + 1, n) / poch(a / 2 + 1, n));
			CHECK(k.equal);
		}
	CHECK_THROWS(check_kummer(Rat(1, 2), Rat(1, 2)));
}

TEST_CASE("Karlsson-Minton")
{
	const auto c = check_karlsson_minton({Rat(1, 2)}, {1});
	CHECK(c.lhs == -2);
	CHECK(c.equal);
	const std::vector<Rat> b{Rat(1, 3), Rat(7, 5)};
	const std::vector<std::uint64_t> m{2, 1};
	const auto k = check_karlsson_minton(b, m);
	CHECK(k.lhs == series_oracle({Rat(-3), Rat(7, 3), Rat(12, 5)}, b, Rat(1)));
	CHECK(k.rhs == Rat(-6) / (poch(Rat(1, 3), 2) * poch(Rat(7, 5), 1)));
	CHECK(k.equal);
}

TEST_CASE("Dougall")
{
	const auto c = check_dougall(Rat(1, 4), Rat(5, 8), Rat(1, 8), Rat(1, 4), 1);
	CHECK(c.equal);
	const Rat a(1, 4), b(5, 8), cc(1, 8), d(1, 4);
	const Rat e = 2 * a + 2 - b - cc - d;
	CHECK(c.lhs == series_oracle({a, a / 2 + 1, b, cc, d, e, Rat(-1)},
						{a / 2, 1 + a - b, 1 + a - cc, 1 + a - d, 1 + a - e, a + 2}, Rat(1)));
}

TEST_CASE("Whipple transformation")
{
	const auto c = check_whipple(Rat(1, 3), Rat(2, 7), Rat(1, 5), Rat(3, 4), 1);
	CHECK(c.equal);
	for (unsigned n = 1; n <= 4; ++n)
		CHECK(check_whipple(Rat(7, 3), Rat(-1, 6), Rat(2, 9), Rat(5, 11), n).equal);
}

TEST_CASE("Whipple transformation in Gamma form, numerically")
{
	// 5F4 non-terminating on the left; the 4F3 terminates through 1 + a/2 - b = -1.
	const long double a = 3, b = 3.5L, c = 0.2L, d = 0.3L, e = 0.1L;
	const long double lhs = pfq_float({a, b, c, d, e}, {1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e}, 20000);
	const long double gam = std::tgamma(1 + a - c) * std::tgamma(1 + a - d) * std::tgamma(1 + a - e) *
		std::tgamma(1 + a - c - d - e) /
		(std::tgamma(1 + a) * std::tgamma(1 + a - d - e) * std::tgamma(1 + a - c - d) * std::tgamma(1 + a - c - e));
	const long double rhs = gam * pfq_float({1 + a / 2 - b, c, d, e}, {1 + a / 2, c + d + e - a, 1 + a - b}, 10);
	CHECK(std::fabs(lhs - rhs) < 1e-9L * std::fabs(rhs));
}

TEST_CASE("series arithmetic")
{
	RatSeries s = RatSeries::one(6);
	s.mul_one_minus(2);
	CHECK(s.coeffs() == std::vector<Int>{1, 0, -1, 0, 0, 0, 0});
	const RatSeries t = s * s;
	CHECK(t.coeffs() == std::vector<Int>{1, 0, -2, 0, 1, 0, 0});
}

TEST_CASE("eta product coefficients")
{
	const std::size_t n = 400;
	const auto e = pentagonal(n);
	auto e4 = mul(mul(e, e), mul(e, e));
	const auto prod = mul(dilate(e4, 2), dilate(e4, 4));
	const auto coeffs = eta_product_coeffs(n);
	REQUIRE(coeffs.size() == n + 1);
	CHECK(coeffs[0] == 0);
	for (std::size_t i = 1; i <= n; ++i)
		REQUIRE(coeffs[i] == prod[i - 1]);
	CHECK(coeffs[1] == 1);
	CHECK(coeffs[2] == 0);
	CHECK(coeffs[3] == -4);
	CHECK(coeffs[5] == -2);
	// Multiplicative at coprime indices and Hecke at primes.
	CHECK(coeffs[15] == coeffs[3] * coeffs[5]);
	CHECK(coeffs[21] == coeffs[3] * coeffs[7]);
	CHECK(coeffs[9] == coeffs[3] * coeffs[3] - 27 * coeffs[1]);
	CHECK(coeffs[25] == coeffs[5] * coeffs[5] - 125 * coeffs[1]);
}
