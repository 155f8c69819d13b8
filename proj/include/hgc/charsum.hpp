#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hgc/cyclotomic.hpp"
#include "hgc/finite_field.hpp"

namespace hgc {

/// The multiplicative character x -> zeta_{q-1}^{k dlog x} of F_q, with value 0 at 0.
struct Character
{
	FieldPtr ctx;
	std::uint64_t k = 0;

	std::uint64_t modulus() const { return ctx->order(); }
	bool is_trivial() const { return k == 0; }
	std::uint64_t order() const;
	/// Value at -1, which is (-1)^k.
	int at_minus_one() const { return (k % 2 == 0) ? 1 : -1; }
	/// Exponent of zeta_{q-1} in chi(x); x must be nonzero.
	std::uint64_t exponent_at(FieldCtx::Elem x) const;
	CycInt value(FieldCtx::Elem x) const;

	Character operator*(const Character& o) const;
	Character conj() const;
	Character pow(std::int64_t e) const;
	bool operator==(const Character& o) const { return ctx == o.ctx && k == o.k; }
	bool operator!=(const Character& o) const { return !(*this == o); }
};

Character trivial_character(const FieldPtr& ctx);
/// The character with exponent j(q-1)/n; j = 1 gives eta_n(x) = x^((q-1)/n) under
/// the Teichmuller embedding. Throws std::invalid_argument unless n | q-1.
Character character_of_order(const FieldPtr& ctx, std::uint64_t n, std::uint64_t j = 1);

/// J(A, B) = sum_x A(x) B(1-x), in Z[zeta_{q-1}].
CycInt jacobi_sum(const Character& a, const Character& b);
/// g(chi) = sum_x chi(x) zeta_p^{Tr x}, in Z[zeta_{p(q-1)}].
CycInt gauss_sum(const Character& chi);
/// B(-1) J(A, conj B) / q.
CycRat greene_binom(const Character& a, const Character& b);

/// Memo of Jacobi sums over one field, keyed by exponent pair.
class JacobiCache
{
public:
	explicit JacobiCache(FieldPtr ctx) : ctx_(std::move(ctx)) {}
	const CycInt& get(std::uint64_t a, std::uint64_t b);
	const CycInt& get(const Character& a, const Character& b) { return get(a.k, b.k); }

private:
	FieldPtr ctx_;
	std::map<std::pair<std::uint64_t, std::uint64_t>, CycInt> cache_;
};

/// A product of Gauss sums prod g(num) / prod g(den) whose characters multiply to
/// the trivial character. Evaluated in Z[zeta_{q-1}] by folding pairs of Gauss
/// sums into Jacobi sums, after replacing 1/g(D) by D(-1) g(conj D) / q.
CycRat gauss_quotient(const std::vector<Character>& num, const std::vector<Character>& den,
	JacobiCache* cache = nullptr);

/// Greene's function with upper A_0..A_n and lower B_1..B_n.
CycRat greene_hgf(const std::vector<Character>& upper, const std::vector<Character>& lower, FieldCtx::Elem x);
/// Greene's function at every x in F_q, indexed by encoding.
std::vector<CycRat> greene_hgf_table(const std::vector<Character>& upper, const std::vector<Character>& lower);

/// McCarthy's normalized function, with upper A_0..A_n and lower B_1..B_n.
CycRat mccarthy_starred(const std::vector<Character>& upper, const std::vector<Character>& lower, FieldCtx::Elem x);
std::vector<CycRat> mccarthy_starred_table(const std::vector<Character>& upper, const std::vector<Character>& lower);

/// sum over x in F_q^{n-1} of eta_n^k(f(x)) for the defining polynomial f of C_{n,lambda},
/// with eta_n = character_of_order(ctx, n, 1). Cost O(q^{n-1}).
CycInt charsum_direct(const FieldPtr& ctx, unsigned n, unsigned k, FieldCtx::Elem lambda);

/// (-1)^{s-1} J^s: the Jacobi sum of the norm-composed characters over F_{p^s}.
CycInt hasse_davenport_lift(const CycInt& j, unsigned s);
/// chi composed with the norm from ext down to the prime field of chi.
Character norm_lift(const Character& chi, const FieldPtr& ext);

} // namespace hgc
