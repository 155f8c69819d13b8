#include <doctest.h>

#include <map>

#include "hgc/charsum.hpp"

using namespace hgc;

namespace {

CycInt jacobi_brute(const Character& a, const Character& b)
{
	const FieldCtx& f = *a.ctx;
	CycInt s(static_cast<unsigned>(f.order()));
	for (FieldCtx::Elem x = 0; x < f.q(); ++x)
		s += a.value(x) * b.value(f.sub(1, x));
	return s;
}

CycRat cr(long v)
{
	return CycRat(CycInt::constant(1, v));
}

/// Direct evaluation of the normalized function as a sum over characters of
/// products of Gauss sums, using 1/g(D) = D(-1) g(conj D) / q and 1/g(eps) = -1.
CycRat starred_oracle(const std::vector<Character>& up, const std::vector<Character>& lo, FieldCtx::Elem x)
{
	const FieldPtr& ctx = up.front().ctx;
	const std::uint64_t m = ctx->order();
	const std::size_t n = lo.size();
	std::map<std::uint64_t, CycInt> gs;
	auto g = [&](const Character& c) -> const CycInt& {
		auto it = gs.find(c.k);
		if (it == gs.end())
			it = gs.emplace(c.k, gauss_sum(c)).first;
		return it->second;
	};
	auto inv_g = [&](const Character& c) {
		if (c.is_trivial())
			return cr(-1);
		return CycRat(g(c.conj()) * Int(c.at_minus_one()), Int(static_cast<unsigned long>(ctx->q())));
	};
	CycRat total = cr(0);
	if (x == 0)
		return total;
	for (std::uint64_t k = 0; k < m; ++k) {
		const Character chi{ctx, k};
		CycRat term = CycRat(chi.value(x));
		for (const auto& a : up)
			term *= CycRat(g(a * chi)) * inv_g(a);
		for (const auto& b : lo)
			term *= CycRat(g((b * chi).conj())) * inv_g(b.conj());
		term *= CycRat(g(chi.conj()));
		if ((n + 1) % 2 == 1 && chi.at_minus_one() < 0)
			term = -term;
		total += term;
	}
	return total * CycRat(CycInt::constant(1, 1), Int(static_cast<unsigned long>(m)));
}

/// Greene's function as q/(q-1) sum_chi C(A_0 chi, chi) prod C(A_i chi, B_i chi) chi(x).
CycRat greene_oracle(const std::vector<Character>& up, const std::vector<Character>& lo, FieldCtx::Elem x)
{
	const FieldPtr& ctx = up.front().ctx;
	const std::uint64_t m = ctx->order();
	CycRat total = cr(0);
	for (std::uint64_t k = 0; k < m; ++k) {
		const Character chi{ctx, k};
		CycRat term = greene_binom(up[0] * chi, chi) * CycRat(chi.value(x));
		for (std::size_t i = 0; i < lo.size(); ++i)
			term *= greene_binom(up[i + 1] * chi, lo[i] * chi);
		total += term;
	}
	return total * CycRat(CycInt::constant(1, static_cast<long>(ctx->q())), Int(static_cast<unsigned long>(m)));
}

/// 2F1(A, B; C | x) = eps(x) BC(-1)/q sum_y B(y) conj(B)C(1-y) conj(A)(1-xy).
CycRat greene_2f1_integral(const Character& a, const Character& b, const Character& c, FieldCtx::Elem x)
{
	const FieldCtx& f = *a.ctx;
	CycInt s(static_cast<unsigned>(f.order()));
	if (x == 0)
		return CycRat(s);
	for (FieldCtx::Elem y = 0; y < f.q(); ++y)
		s += b.value(y) * (b.conj() * c).value(f.sub(1, y)) * a.conj().value(f.sub(1, f.mul(x, y)));
	return CycRat(s * Int((b * c).at_minus_one()), Int(static_cast<unsigned long>(f.q())));
}

} // namespace

TEST_CASE("characters")
{
	const auto f = FieldCtx::create(13);
	const Character eta3 = character_of_order(f, 3);
	CHECK(eta3.k == 4);
	CHECK(eta3.order() == 3);
	CHECK(eta3.pow(3).is_trivial());
	CHECK(eta3.conj() == character_of_order(f, 3, 2));
	CHECK(character_of_order(f, 2).at_minus_one() == 1);
	CHECK_THROWS_AS(character_of_order(f, 5), std::invalid_argument);
	CHECK(eta3.value(0).is_zero());
	for (FieldCtx::Elem x = 1; x < 13; ++x)
		for (FieldCtx::Elem y = 1; y < 13; ++y)
			CHECK(eta3.value(f->mul(x, y)) == eta3.value(x) * eta3.value(y));
	// chi(-1) = (-1)^k
	for (std::uint64_t k = 0; k < 12; ++k) {
		const Character chi{f, k};
		CHECK(chi.value(12) == CycInt::constant(12, chi.at_minus_one()));
	}
}

TEST_CASE("Jacobi sums agree with direct summation")
{
	for (std::uint64_t q : {5, 7, 9, 13, 25}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		for (std::uint64_t a = 0; a < q - 1; ++a)
			for (std::uint64_t b = 0; b < q - 1; ++b) {
				const Character A{f, a}, B{f, b};
				REQUIRE(jacobi_sum(A, B) == jacobi_brute(A, B));
			}
	}
}

TEST_CASE("Jacobi sum identities")
{
	for (std::uint64_t q : {7, 11, 13, 17, 27}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		const Character eps = trivial_character(f);
		CHECK(jacobi_sum(eps, eps) == CycInt::constant(1, static_cast<long>(q) - 2));
		JacobiCache cache(f);
		for (std::uint64_t a = 1; a < q - 1; ++a) {
			const Character A{f, a};
			CHECK(jacobi_sum(A, A.conj()) == CycInt::constant(1, -A.at_minus_one()));
			CHECK(jacobi_sum(A, eps) == CycInt::constant(1, -1));
			for (std::uint64_t b = 1; b < q - 1; ++b) {
				const Character B{f, b};
				if ((A * B).is_trivial())
					continue;
				const CycInt j = jacobi_sum(A, B);
				CHECK(j * j.bar() == CycInt::constant(1, static_cast<long>(q)));
				CHECK(cache.get(A, B) == j);
			}
		}
	}
}

TEST_CASE("Gauss sums")
{
	for (std::uint64_t q : {5, 7, 9, 13}) {
		const auto [p, e] = prime_power(q);
		const auto f = FieldCtx::create(p, e);
		CHECK(gauss_sum(trivial_character(f)) == CycInt::constant(1, -1));
		for (std::uint64_t a = 1; a < q - 1; ++a) {
			const Character A{f, a};
			const CycInt g = gauss_sum(A);
			CHECK(g.order() == p * (q - 1));
			CHECK(g * gauss_sum(A.conj()) == CycInt::constant(1, A.at_minus_one() * static_cast<long>(q)));
			for (std::uint64_t b = 1; b < q - 1; ++b) {
				const Character B{f, b};
				if ((A * B).is_trivial())
					continue;
				CHECK(g * gauss_sum(B) == jacobi_sum(A, B) * gauss_sum(A * B));
			}
		}
	}
}

TEST_CASE("Gauss quotients match explicit Gauss-sum products")
{
	const auto f = FieldCtx::create(13);
	const Character e3 = character_of_order(f, 3), e4 = character_of_order(f, 4), e6 = character_of_order(f, 6);
	const std::vector<std::pair<std::vector<Character>, std::vector<Character>>> cases = {
		{{e3, e3, e3}, {}},
		{{e4, e4}, {character_of_order(f, 2)}},
		{{e6, e3}, {character_of_order(f, 2)}},
		{{e3}, {e3}},
		{{e4, e6, e6.pow(5)}, {e4}},
	};
	for (const auto& [num, den] : cases) {
		CycRat direct = cr(1);
		for (const auto& c : num)
			direct *= CycRat(gauss_sum(c));
		for (const auto& c : den) {
			const CycInt g = gauss_sum(c);
			// g(c)^{-1} = c(-1) g(conj c) / q for nontrivial c
			direct *= CycRat(gauss_sum(c.conj()) * Int(c.at_minus_one()), Int(13));
			CHECK(g * gauss_sum(c.conj()) == CycInt::constant(1, c.at_minus_one() * 13));
		}
		CHECK(gauss_quotient(num, den) == direct);
	}
}

TEST_CASE("binomial coefficients")
{
	const auto f = FieldCtx::create(7);
	const Character eps = trivial_character(f);
	// C(A, B) = B(-1) J(A, conj B) / q
	CHECK(greene_binom(eps, eps) == CycRat(CycInt::constant(1, 5), Int(7)));
	for (std::uint64_t a = 1; a < 6; ++a) {
		const Character A{f, a};
		CHECK(greene_binom(A, eps) == CycRat(CycInt::constant(1, -1), Int(7)));
		CHECK(greene_binom(A, A) == CycRat(CycInt::constant(1, -1), Int(7)));
	}
}

TEST_CASE("Greene's function matches its binomial expansion")
{
	for (std::uint64_t q : {7, 13}) {
		const auto f = FieldCtx::create(q);
		const Character e3 = character_of_order(f, 3), e2 = character_of_order(f, 2);
		const Character eps = trivial_character(f);
		const std::vector<std::pair<std::vector<Character>, std::vector<Character>>> cases = {
			{{e2, e2}, {eps}},
			{{e3, e3.conj()}, {eps}},
			{{e3, e3, e3}, {eps, eps}},
			{{e2, e3, e3.conj()}, {e3, eps}},
		};
		for (const auto& [up, lo] : cases) {
			const auto table = greene_hgf_table(up, lo);
			CHECK(table[0].is_zero());
			for (FieldCtx::Elem x = 0; x < q; ++x) {
				CHECK(table[x] == greene_oracle(up, lo, x));
				CHECK(greene_hgf(up, lo, x) == table[x]);
			}
		}
	}
}

TEST_CASE("Greene 2F1 matches its one-variable sum")
{
	const auto f = FieldCtx::create(13);
	for (std::uint64_t a = 0; a < 12; a += 1)
		for (std::uint64_t b = 0; b < 12; b += 5)
			for (std::uint64_t c = 0; c < 12; c += 4) {
				const Character A{f, a}, B{f, b}, C{f, c};
				for (FieldCtx::Elem x : {1u, 2u, 5u, 12u})
					REQUIRE(greene_hgf({A, B}, {C}, x) == greene_2f1_integral(A, B, C, x));
			}
}

TEST_CASE("normalized function matches the Gauss-sum definition")
{
	for (std::uint64_t q : {7, 13}) {
		const auto f = FieldCtx::create(q);
		const Character e3 = character_of_order(f, 3), e2 = character_of_order(f, 2);
		const Character e6 = character_of_order(f, 6), eps = trivial_character(f);
		const std::vector<std::pair<std::vector<Character>, std::vector<Character>>> cases = {
			{{e3, e3.conj()}, {eps}},
			{{e2, e2}, {eps}},
			{{e3, e3, e3}, {eps, eps}},
			{{e6, e6.conj(), e2}, {e3, eps}},
		};
		for (const auto& [up, lo] : cases) {
			const auto table = mccarthy_starred_table(up, lo);
			for (FieldCtx::Elem x = 0; x < q; ++x) {
				REQUIRE(table[x] == starred_oracle(up, lo, x));
				CHECK(mccarthy_starred(up, lo, x) == table[x]);
			}
		}
	}
}

TEST_CASE("Hasse-Davenport lift to F_49")
{
	const auto f7 = FieldCtx::create(7);
	const auto f49 = FieldCtx::create(7, 2);
	for (auto [n, j] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 1}, {3, 2}, {6, 1}, {2, 1}}) {
		const Character a = character_of_order(f7, n, j);
		const Character b = character_of_order(f7, n, 1);
		if ((a * b).is_trivial())
			continue;
		const Character A = norm_lift(a, f49), B = norm_lift(b, f49);
		for (FieldCtx::Elem x = 1; x < 49; ++x)
			REQUIRE(A.value(x) == a.value(static_cast<FieldCtx::Elem>(f49->norm(x))));
		CHECK(jacobi_sum(A, B) == hasse_davenport_lift(jacobi_sum(a, b), 2));
	}
}
