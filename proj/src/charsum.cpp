#include "hgc/charsum.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hgc {

namespace {

void require_same_field(const Character& a, const Character& b)
{
	if (a.ctx != b.ctx)
		throw std::invalid_argument("characters belong to different fields");
}

void require_arity(const std::vector<Character>& upper, const std::vector<Character>& lower)
{
	if (upper.empty() || upper.size() != lower.size() + 1)
		throw std::invalid_argument("hypergeometric arity mismatch: need |upper| = |lower| + 1");
	for (const auto& c : upper)
		require_same_field(c, upper.front());
	for (const auto& c : lower)
		require_same_field(c, upper.front());
}

Int int_pow(std::uint64_t base, unsigned e)
{
	Int r;
	mpz_ui_pow_ui(r.get_mpz_t(), base, e);
	return r;
}

/// Sums coeff_c * zeta^{c t} over c, where coeffs are indexed by character exponent.
CycInt twist_sum(const std::vector<CycInt>& coeffs, std::uint64_t t, unsigned m)
{
	std::vector<Int> acc(m, 0);
	for (std::size_t c = 0; c < coeffs.size(); ++c) {
		const auto& v = coeffs[c].coeffs();
		const std::uint64_t shift = mulmod(c, t, m);
		for (unsigned s = 0; s < m; ++s) {
			if (v[s] == 0)
				continue;
			std::uint64_t pos = s + shift;
			if (pos >= m)
				pos -= m;
			acc[pos] += v[s];
		}
	}
	CycInt out(m);
	for (unsigned s = 0; s < m; ++s)
		out.add_term(s, acc[s]);
	return out;
}

/// Product of Gauss sums folded into Jacobi sums; returns the numerator and the
/// power of q in the denominator.
std::pair<CycInt, unsigned> gauss_quotient_parts(const std::vector<Character>& num,
	const std::vector<Character>& den, JacobiCache& cache)
{
	if (num.empty() && den.empty())
		return {CycInt::constant(1, 1), 0};
	const FieldPtr& ctx = num.empty() ? den.front().ctx : num.front().ctx;
	const unsigned m = static_cast<unsigned>(ctx->order());
	std::vector<Character> chars = num;
	long sign = 1;
	unsigned qpow = 0;
	for (const auto& d : den) {
		if (d.is_trivial()) {
			chars.push_back(d);
		} else {
			chars.push_back(d.conj());
			sign *= d.at_minus_one();
			++qpow;
		}
	}
	std::uint64_t total = 0;
	for (const auto& c : chars)
		total = (total + c.k) % m;
	if (total != 0)
		throw std::invalid_argument("Gauss sum quotient has nontrivial total character");

	CycInt c = CycInt::constant(m, sign);
	Character state = chars.front();
	for (std::size_t i = 1; i < chars.size(); ++i) {
		const Character& b = chars[i];
		const Character prod = state * b;
		if (state.is_trivial() && b.is_trivial()) {
			c = -c;
		} else if (prod.is_trivial()) {
			c *= Int(static_cast<long>(-state.at_minus_one()) * static_cast<long>(ctx->q()));
		} else {
			c *= cache.get(state, b);
		}
		state = prod;
	}
	// state is trivial and g(eps) = -1.
	return {-c, qpow};
}

} // namespace

std::uint64_t Character::order() const
{
	const std::uint64_t m = modulus();
	return m / std::gcd(k, m);
}

std::uint64_t Character::exponent_at(FieldCtx::Elem x) const
{
	return mulmod(k, ctx->dlog(x), modulus());
}

CycInt Character::value(FieldCtx::Elem x) const
{
	const unsigned m = static_cast<unsigned>(modulus());
	if (x == 0)
		return CycInt(m);
	return CycInt::zeta(m, static_cast<std::int64_t>(exponent_at(x)));
}

Character Character::operator*(const Character& o) const
{
	require_same_field(*this, o);
	return {ctx, (k + o.k) % modulus()};
}

Character Character::conj() const
{
	return {ctx, k == 0 ? 0 : modulus() - k};
}

Character Character::pow(std::int64_t e) const
{
	const std::uint64_t m = modulus();
	return {ctx, mulmod(k, mod_floor(e, m), m)};
}

Character trivial_character(const FieldPtr& ctx)
{
	return {ctx, 0};
}

Character character_of_order(const FieldPtr& ctx, std::uint64_t n, std::uint64_t j)
{
	const std::uint64_t m = ctx->order();
	if (n == 0 || m % n != 0)
		throw std::invalid_argument("no character of order " + std::to_string(n) + " on F_" + std::to_string(ctx->q()));
	return {ctx, mulmod(j % n, m / n, m)};
}

CycInt jacobi_sum(const Character& a, const Character& b)
{
	require_same_field(a, b);
	const FieldCtx& f = *a.ctx;
	const std::uint64_t m = f.order();
	std::vector<long> counts(m, 0);
	for (std::uint64_t t = 1; t < m; ++t) {
		const std::int64_t l = f.log_one_minus_exp(t);
		if (l < 0)
			continue;
		const std::uint64_t e = (mulmod(a.k, t, m) + mulmod(b.k, static_cast<std::uint64_t>(l), m)) % m;
		++counts[e];
	}
	CycInt j(static_cast<unsigned>(m));
	for (std::uint64_t e = 0; e < m; ++e)
		if (counts[e] != 0)
			j.add_term(e, counts[e]);
	return j;
}

CycInt gauss_sum(const Character& chi)
{
	const FieldCtx& f = *chi.ctx;
	const std::uint64_t p = f.p();
	const std::uint64_t qm1 = f.order();
	const std::uint64_t m = p * qm1;
	std::vector<long> counts(m, 0);
	for (std::uint64_t t = 0; t < qm1; ++t) {
		const FieldCtx::Elem x = f.exp(t);
		const std::uint64_t e = (mulmod(p, mulmod(chi.k, t, qm1), m) + mulmod(qm1, f.trace(x), m)) % m;
		++counts[e];
	}
	CycInt g(static_cast<unsigned>(m));
	for (std::uint64_t e = 0; e < m; ++e)
		if (counts[e] != 0)
			g.add_term(e, counts[e]);
	return g;
}

CycRat greene_binom(const Character& a, const Character& b)
{
	CycInt j = jacobi_sum(a, b.conj());
	if (b.at_minus_one() < 0)
		j = -j;
	return CycRat(std::move(j), Int(static_cast<unsigned long>(a.ctx->q())));
}

const CycInt& JacobiCache::get(std::uint64_t a, std::uint64_t b)
{
	const std::uint64_t m = ctx_->order();
	a %= m;
	b %= m;
	auto key = std::make_pair(std::min(a, b), std::max(a, b));
	auto it = cache_.find(key);
	if (it != cache_.end())
		return it->second;
	return cache_.emplace(key, jacobi_sum(Character{ctx_, key.first}, Character{ctx_, key.second})).first->second;
}

CycRat gauss_quotient(const std::vector<Character>& num, const std::vector<Character>& den, JacobiCache* cache)
{
	if (num.empty() && den.empty())
		return CycRat(CycInt::constant(1, 1));
	const FieldPtr& ctx = num.empty() ? den.front().ctx : num.front().ctx;
	JacobiCache local(ctx);
	auto [c, qpow] = gauss_quotient_parts(num, den, cache ? *cache : local);
	return CycRat(std::move(c), int_pow(ctx->q(), qpow));
}

namespace {

/// Per-character coefficients of Greene's function: prod_i (B_i chi)(-1) J(A_i chi, conj(B_i chi)).
std::vector<CycInt> greene_coefficients(const std::vector<Character>& upper, const std::vector<Character>& lower)
{
	require_arity(upper, lower);
	const FieldPtr& ctx = upper.front().ctx;
	const std::uint64_t m = ctx->order();
	JacobiCache cache(ctx);
	std::vector<CycInt> coeffs;
	coeffs.reserve(m);
	for (std::uint64_t c = 0; c < m; ++c) {
		const Character chi{ctx, c};
		CycInt term = CycInt::constant(static_cast<unsigned>(m), 1);
		int sign = 1;
		for (std::size_t i = 0; i < upper.size(); ++i) {
			const Character bchi = (i == 0 ? chi : lower[i - 1] * chi);
			sign *= bchi.at_minus_one();
			term *= cache.get(upper[i] * chi, bchi.conj());
		}
		coeffs.push_back(sign < 0 ? -term : term);
	}
	return coeffs;
}

std::vector<CycRat> table_from_coefficients(const FieldPtr& ctx, const std::vector<CycInt>& coeffs, const Int& den)
{
	const unsigned m = static_cast<unsigned>(ctx->order());
	std::vector<CycRat> table(ctx->q(), CycRat(CycInt(m), den));
	for (std::uint64_t t = 0; t < m; ++t)
		table[ctx->exp(t)] = CycRat(twist_sum(coeffs, t, m), den);
	return table;
}

CycRat value_from_coefficients(const FieldPtr& ctx, const std::vector<CycInt>& coeffs, const Int& den,
	FieldCtx::Elem x)
{
	const unsigned m = static_cast<unsigned>(ctx->order());
	if (x == 0)
		return CycRat(CycInt(m), den);
	return CycRat(twist_sum(coeffs, ctx->dlog(x), m), den);
}

Int greene_denominator(const FieldPtr& ctx, std::size_t n)
{
	return int_pow(ctx->q(), static_cast<unsigned>(n)) * Int(static_cast<unsigned long>(ctx->order()));
}

/// Per-character coefficients of McCarthy's function, all over q^qpow.
std::vector<CycInt> starred_coefficients(const std::vector<Character>& upper, const std::vector<Character>& lower,
	unsigned& qpow)
{
	require_arity(upper, lower);
	const FieldPtr& ctx = upper.front().ctx;
	const std::uint64_t m = ctx->order();
	const std::size_t n = lower.size();
	JacobiCache cache(ctx);
	std::vector<Character> den;
	for (const auto& a : upper)
		den.push_back(a);
	for (const auto& b : lower)
		den.push_back(b.conj());
	std::vector<CycInt> coeffs;
	coeffs.reserve(m);
	qpow = 0;
	for (std::uint64_t c = 0; c < m; ++c) {
		const Character chi{ctx, c};
		std::vector<Character> num;
		for (const auto& a : upper)
			num.push_back(a * chi);
		for (const auto& b : lower)
			num.push_back((b * chi).conj());
		num.push_back(chi.conj());
		auto [val, qp] = gauss_quotient_parts(num, den, cache);
		qpow = qp;
		if ((n + 1) % 2 == 1 && chi.at_minus_one() < 0)
			val = -val;
		coeffs.push_back(val.lifted(static_cast<unsigned>(m)));
	}
	return coeffs;
}

} // namespace

CycRat greene_hgf(const std::vector<Character>& upper, const std::vector<Character>& lower, FieldCtx::Elem x)
{
	const auto coeffs = greene_coefficients(upper, lower);
	const FieldPtr& ctx = upper.front().ctx;
	return value_from_coefficients(ctx, coeffs, greene_denominator(ctx, lower.size()), x);
}

std::vector<CycRat> greene_hgf_table(const std::vector<Character>& upper, const std::vector<Character>& lower)
{
	const auto coeffs = greene_coefficients(upper, lower);
	const FieldPtr& ctx = upper.front().ctx;
	return table_from_coefficients(ctx, coeffs, greene_denominator(ctx, lower.size()));
}

CycRat mccarthy_starred(const std::vector<Character>& upper, const std::vector<Character>& lower, FieldCtx::Elem x)
{
	unsigned qpow = 0;
	const auto coeffs = starred_coefficients(upper, lower, qpow);
	const FieldPtr& ctx = upper.front().ctx;
	const Int den = int_pow(ctx->q(), qpow) * Int(static_cast<unsigned long>(ctx->order()));
	return value_from_coefficients(ctx, coeffs, den, x);
}

std::vector<CycRat> mccarthy_starred_table(const std::vector<Character>& upper, const std::vector<Character>& lower)
{
	unsigned qpow = 0;
	const auto coeffs = starred_coefficients(upper, lower, qpow);
	const FieldPtr& ctx = upper.front().ctx;
	const Int den = int_pow(ctx->q(), qpow) * Int(static_cast<unsigned long>(ctx->order()));
	return table_from_coefficients(ctx, coeffs, den);
}

CycInt charsum_direct(const FieldPtr& ctx, unsigned n, unsigned k, FieldCtx::Elem lambda)
{
	const FieldCtx& f = *ctx;
	const std::uint64_t m = f.order();
	if (n < 2 || m % n != 0)
		throw std::invalid_argument("charsum_direct needs n >= 2 with n | q-1");
	if (k < 1 || k >= n)
		throw std::invalid_argument("charsum_direct needs 1 <= k < n");
	// Points with some x_i in {0, 1} make f vanish; the rest are indexed by logs in [1, q-2].
	std::vector<long> hist(n, 0);
	const unsigned vars = n - 1;
	std::vector<std::uint64_t> t(vars, 1);
	const std::uint64_t range = m - 1;
	if (range == 0)
		return CycInt(static_cast<unsigned>(m));
	auto weight = [&](std::uint64_t ti) {
		return ((n - 1) * ti + static_cast<std::uint64_t>(f.log_one_minus_exp(ti))) % n;
	};
	while (true) {
		// Outer variables x_2..x_{n-1}.
		std::uint64_t base = 0, plog = 0;
		for (unsigned i = 1; i < vars; ++i) {
			base += weight(t[i]);
			plog += t[i];
		}
		const FieldCtx::Elem lp = f.mul(lambda, f.exp(plog % m));
		for (std::uint64_t t1 = 1; t1 <= range; ++t1) {
			const FieldCtx::Elem x1 = f.exp(t1);
			const FieldCtx::Elem w = f.sub(x1, lp);
			if (w == 0)
				continue;
			const std::uint64_t cls = (base + weight(t1) + f.dlog(w)) % n;
			++hist[cls];
		}
		unsigned i = 1;
		while (i < vars && t[i] == range) {
			t[i] = 1;
			++i;
		}
		if (i >= vars)
			break;
		++t[i];
	}
	CycInt out(static_cast<unsigned>(m));
	const std::uint64_t step = mulmod(k, m / n, m);
	for (unsigned r = 0; r < n; ++r)
		if (hist[r] != 0)
			out.add_term(mulmod(step, r, m), hist[r]);
	return out;
}

CycInt hasse_davenport_lift(const CycInt& j, unsigned s)
{
	if (s == 0)
		throw std::invalid_argument("lift degree must be positive");
	CycInt r = j.pow(s);
	return (s % 2 == 0) ? -r : r;
}

Character norm_lift(const Character& chi, const FieldPtr& ext)
{
	const FieldCtx& base = *chi.ctx;
	if (base.e() != 1 || ext->p() != base.p())
		throw std::invalid_argument("norm lift needs a prime base field of the same characteristic");
	const std::uint64_t big = ext->order();
	const std::uint64_t ng = ext->norm(ext->generator());
	const std::uint64_t l = base.dlog(static_cast<FieldCtx::Elem>(ng));
	const std::uint64_t k = mulmod(mulmod(chi.k, l, base.order()), big / base.order(), big);
	return {ext, k};
}

} // namespace hgc
