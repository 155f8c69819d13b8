#include <doctest.h>

#include <cmath>

#include "hgc/qseries.hpp"
#include "hgc/varieties.hpp"

using namespace hgc;

namespace {

/// Counts (x_1, ..., x_{n-1}, y) on the curve by looping over every coordinate.
std::uint64_t count_naive(const FieldCtx& f, unsigned n, FieldCtx::Elem lambda)
{
	const std::uint64_t q = f.q();
	std::vector<FieldCtx::Elem> x(n - 1, 0);
	std::uint64_t total = 0;
	while (true) {
		FieldCtx::Elem prod = 1, rest = 1, factors = 1;
		for (std::size_t i = 0; i < x.size(); ++i) {
			prod = f.mul(prod, x[i]);
			factors = f.mul(factors, f.sub(1, x[i]));
			if (i > 0)
				rest = f.mul(rest, x[i]);
		}
		const FieldCtx::Elem rhs =
			f.mul(f.mul(f.pow(prod, n - 1), factors), f.sub(x[0], f.mul(lambda, rest)));
		for (FieldCtx::Elem y = 0; y < q; ++y)
			if (f.pow(y, n) == rhs)
				++total;
		std::size_t i = 0;
		while (i < x.size() && x[i] == q - 1)
			x[i++] = 0;
		if (i == x.size())
			break;
		++x[i];
	}
	return total;
}

/// -J(chi, chi^2) for the quartic residue character modulo a + b i, with i = -a/b mod p.
GaussianInt quartic_oracle(std::uint64_t p, long a, long b)
{
	const std::uint64_t i_mod = mulmod(mod_floor(-a, p), powmod(mod_floor(b, p), p - 2, p), p);
	auto chi = [&](std::uint64_t x) {
		const std::uint64_t v = powmod(x, (p - 1) / 4, p);
		std::uint64_t w = 1;
		for (int k = 0; k < 4; ++k, w = mulmod(w, i_mod, p))
			if (w == v)
				return k;
		return -1;
	};
	static const long re[4] = {1, 0, -1, 0}, im[4] = {0, 1, 0, -1};
	long sr = 0, si = 0;
	for (std::uint64_t x = 2; x < p; ++x) {
		const int k = (chi(x) + 2 * chi(p + 1 - x)) % 4;
		sr += re[k];
		si += im[k];
	}
	return {Int(-sr), Int(-si)};
}

} // namespace

TEST_CASE("brute-force counts match a naive count")
{
	for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{7, 2}, {7, 3}, {13, 3}, {5, 4}, {9, 2}, {9, 4}, {25, 3}}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		for (FieldCtx::Elem lambda = 0; lambda < q; ++lambda) {
			const auto c = count_affine_brute(f, n, lambda);
			REQUIRE(c.affine_count == Int(static_cast<unsigned long>(count_naive(*f, n, lambda))));
			CHECK(c.count_with_infinity() == c.affine_count + 1);
		}
	}
}

TEST_CASE("threaded brute force agrees")
{
	const auto f = FieldCtx::create(13);
	BruteOptions o;
	o.threads = 3;
	for (FieldCtx::Elem lambda : {0u, 1u, 5u})
		CHECK(count_affine_brute(f, 3, lambda, o).affine_count == count_affine_brute(f, 3, lambda).affine_count);
	BruteOptions tiny;
	tiny.max_points = 100;
	CHECK_THROWS_AS(count_affine_brute(f, 4, 1, tiny), ResourceCapError);
	CHECK_THROWS_AS(count_affine_brute(f, 5, 1), std::invalid_argument);
}

TEST_CASE("hypergeometric counts match brute force for nonzero lambda")
{
	for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
			 {5, 2}, {7, 2}, {9, 2}, {7, 3}, {13, 3}, {19, 3}, {5, 4}, {13, 4}, {25, 3}, {9, 4}}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		const auto all = count_via_hgf_all(f, n);
		REQUIRE(all.size() == q);
		for (FieldCtx::Elem lambda = 1; lambda < q; ++lambda) {
			const auto brute = count_affine_brute(f, n, lambda);
			CHECK(all[lambda].affine_count == brute.affine_count);
			CHECK(count_via_hgf(f, n, lambda).affine_count == brute.affine_count);
		}
	}
}

TEST_CASE("Legendre traces")
{
	for (std::uint64_t p : {5, 7, 11, 13, 17, 101}) {
		const auto f = FieldCtx::create(p);
		for (FieldCtx::Elem lambda = 2; lambda < p; ++lambda) {
			const long a = legendre_trace(f, lambda);
			CHECK(static_cast<double>(a * a) <= 4.0 * static_cast<double>(p));
			// y^2 = x(1-x)(x-lambda) has p - a affine points.
			std::uint64_t points = 0;
			for (std::uint64_t x = 0; x < p; ++x) {
				const std::uint64_t v = mulmod(mulmod(x, (1 + p - x) % p, p), (x + p - lambda) % p, p);
				for (std::uint64_t y = 0; y < p; ++y)
					if (mulmod(y, y, p) == v)
						++points;
			}
			CHECK(static_cast<long>(points) == static_cast<long>(p) - a);
		}
	}
}

TEST_CASE("zeta function counts match brute force over extensions")
{
	for (auto [p, n, s_max] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
			 {7, 3, 3}, {13, 3, 2}, {5, 4, 2}, {13, 4, 1}}) {
		const ZetaSpec z = zeta_build(p, n);
		for (unsigned s = 1; s <= s_max; ++s) {
			const auto f = FieldCtx::create(p, s);
			CHECK(z.count(s) == count_affine_brute(f, n, 1).count_with_infinity());
		}
		if (n == 4) {
			CHECK(zeta_poly_equal(zeta_poly_mul(z.numerator_of(true), z.numerator_of(false)), z.numerator()));
			CHECK(zeta_poly_equal(zeta_poly_mul(z.denominator_of(true), z.denominator_of(false)), z.denominator()));
			const auto coeffs = eta_product_coeffs(p);
			CHECK(z.ap == coeffs[p]);
		}
	}
	CHECK_THROWS(zeta_build(11, 3));
}

TEST_CASE("zeta polynomial arithmetic")
{
	const ZetaPoly a{CycInt::constant(1, 1), CycInt::zeta(3)};
	const ZetaPoly b{CycInt::constant(1, 1), CycInt::zeta(3, 2)};
	const ZetaPoly ab = zeta_poly_mul(a, b);
	// (1 + w T)(1 + w^2 T) = 1 - T + T^2
	CHECK(zeta_poly_equal(ab, {CycInt::constant(1, 1), CycInt::constant(1, -1), CycInt::constant(1, 1)}));
	CHECK_FALSE(zeta_poly_equal(a, b));
}

TEST_CASE("Hecke character values")
{
	CHECK(hecke_chi1(Int(2), Int(4)) == GaussianInt{0, 0});
	const HeckePsi h13 = hecke_psi(13);
	CHECK(h13.psi == GaussianInt{3, -2});
	for (std::uint64_t p : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}) {
		const HeckePsi h = hecke_psi(p);
		CHECK(h.psi.norm() == Int(static_cast<unsigned long>(p)));
		CHECK(h.alpha.norm() == Int(static_cast<unsigned long>(p)));
		CHECK(h.psi == h.minus_jacobi);
		CHECK_FALSE(h.normalization.empty());
		const GaussianInt j = quartic_minus_jacobi(p, h.alpha.re, h.alpha.im);
		CHECK(j == quartic_oracle(p, h.alpha.re.get_si(), h.alpha.im.get_si()));
	}
	CHECK_THROWS(hecke_psi(7));
}
