#include <doctest.h>

#include "hgc/finite_field.hpp"

using namespace hgc;

namespace {

std::uint64_t order_by_powering(const FieldCtx& f, FieldCtx::Elem x)
{
	FieldCtx::Elem y = x;
	std::uint64_t k = 1;
	while (y != 1) {
		y = f.mul(y, x);
		++k;
	}
	return k;
}

/// Brute-force Teichmuller lift: the t = x mod p with t^(p-1) = 1 mod p^r.
std::uint64_t teichmuller_search(std::int64_t x, std::uint64_t p, unsigned r)
{
	const std::uint64_t mod = ipow(p, r);
	const std::uint64_t x0 = mod_floor(x, p);
	if (x0 == 0)
		return 0;
	for (std::uint64_t t = x0; t < mod; t += p)
		if (powmod(t, p - 1, mod) == 1)
			return t;
	return mod;
}

} // namespace

TEST_CASE("prime field generators are the smallest primitive roots")
{
	CHECK(FieldCtx::create(5)->generator() == 2);
	CHECK(FieldCtx::create(7)->generator() == 3);
	CHECK(FieldCtx::create(13)->generator() == 2);
	for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
		const auto f = FieldCtx::create(p);
		CHECK(order_by_powering(*f, f->generator()) == p - 1);
		for (FieldCtx::Elem g = 2; g < f->generator(); ++g)
			CHECK(order_by_powering(*f, g) < p - 1);
	}
}

TEST_CASE("explicit modulus x^2 + 2 over F_5")
{
	// 3 is not a square mod 5, so x^2 + 2 has no root.
	for (std::uint64_t x = 0; x < 5; ++x)
		CHECK((x * x + 2) % 5 != 0);
	const auto f = FieldCtx::create(5, 2, Poly{2, 0, 1});
	CHECK(f->q() == 25);
	CHECK(order_by_powering(*f, f->generator()) == 24);
	CHECK_THROWS(FieldCtx::create(5, 2, Poly{1, 0, 1}));
}

TEST_CASE("invalid field parameters are rejected")
{
	CHECK_THROWS(FieldCtx::create(2));
	CHECK_THROWS(FieldCtx::create(15));
	CHECK_THROWS_AS(FieldCtx::create(3, 13), ResourceCapError);
}

TEST_CASE("default moduli are irreducible")
{
	for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}, {5, 3}, {3, 4}}) {
		const auto f = FieldCtx::create(p, e);
		CHECK(poly::is_irreducible(f->modulus(), p));
		CHECK(f->modulus().size() == e + 1);
	}
	// Exhaustive root check for the quadratic ones.
	for (std::uint64_t p : {3, 5, 7, 11}) {
		const Poly m = poly::smallest_irreducible(p, 2);
		for (std::uint64_t x = 0; x < p; ++x)
			CHECK((m[0] + m[1] * x + x * x) % p != 0);
	}
}

TEST_CASE("discrete logarithms invert exponentiation")
{
	const auto f7 = FieldCtx::create(7);
	CHECK(f7->dlog(2) == 2);
	CHECK(f7->dlog(3) == 1);
	CHECK(f7->dlog(1) == 0);
	CHECK_THROWS_AS(f7->dlog(0), std::domain_error);
	for (std::uint64_t q : {7, 25, 27, 49, 81, 121, 169, 343, 1331, 2401, 6561}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		FieldCtx::Elem y = 1;
		for (std::uint64_t t = 0; t + 1 < q; ++t) {
			REQUIRE(f->dlog(y) == t);
			y = f->mul(y, f->generator());
		}
		CHECK(y == 1);
	}
}

TEST_CASE("field arithmetic axioms on small fields")
{
	for (std::uint64_t q : {9, 25, 27}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		for (FieldCtx::Elem a = 0; a < q; ++a) {
			CHECK(f->add(a, f->neg(a)) == 0);
			if (a != 0)
				CHECK(f->mul(a, f->inv(a)) == 1);
			for (FieldCtx::Elem b = 0; b < q; b += 3) {
				CHECK(f->add(a, b) == f->add(b, a));
				CHECK(f->mul(a, b) == f->mul(b, a));
				CHECK(f->mul(a, f->add(b, 1)) == f->add(f->mul(a, b), a));
			}
		}
	}
}

TEST_CASE("Frobenius has order e")
{
	for (std::uint64_t q : {25, 27, 81, 343, 2401}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		for (FieldCtx::Elem x = 0; x < q; ++x) {
			FieldCtx::Elem y = x;
			for (unsigned i = 0; i < e; ++i)
				y = f->frobenius(y);
			REQUIRE(y == x);
		}
	}
}

TEST_CASE("trace and norm")
{
	const auto f7 = FieldCtx::create(7);
	for (FieldCtx::Elem x = 0; x < 7; ++x) {
		CHECK(f7->trace(x) == x);
		CHECK(f7->norm(x) == x);
	}
	const auto f25 = FieldCtx::create(5, 2, Poly{2, 0, 1});
	// The class of x is a root of x^2 + 2, whose roots sum to 0.
	CHECK(f25->trace(5) == 0);
	CHECK(f25->norm(5) == 2);
	CHECK(f25->trace(0) == 0);
	CHECK(f25->norm(0) == 0);
	for (FieldCtx::Elem x = 0; x < 25; ++x) {
		const auto y = f25->frobenius(x);
		CHECK(f25->trace(x) == f25->add(x, y));
		CHECK(f25->norm(x) == f25->mul(x, y));
		CHECK(trace_and_norm(*f25, x) == std::pair<std::uint64_t, std::uint64_t>{f25->trace(x), f25->norm(x)});
	}
}

TEST_CASE("Teichmuller lifts")
{
	CHECK(teichmuller(1, 7, 3).residue() == 1);
	CHECK(teichmuller(2, 5, 2).residue() == 7);
	CHECK(teichmuller(0, 11, 2).residue() == 0);
	for (std::uint64_t p : {3, 5, 7, 11, 13})
		for (unsigned r = 1; r <= 3; ++r)
			for (std::int64_t x = -3; x < static_cast<std::int64_t>(p) + 2; ++x) {
				const PadicInt t = teichmuller(x, p, r);
				CHECK(t.residue() == teichmuller_search(x, p, r));
				if (r > 1)
					CHECK(t.reduce(r - 1) == teichmuller(x, p, r - 1));
			}
}
