#include "hgc/padic.hpp"

#include <stdexcept>
#include <string>

#include "hgc/finite_field.hpp"

namespace hgc {

namespace {

Int modulus_of(std::uint64_t p, unsigned r)
{
	Int m;
	mpz_ui_pow_ui(m.get_mpz_t(), p, r);
	return m;
}

} // namespace

PadicInt padic_from_rational(const Int& num, const Int& den, std::uint64_t p, unsigned r)
{
	Rat x(num, den);
	x.canonicalize();
	return padic_from_rational(x, p, r);
}

PadicInt padic_from_rational(const Rat& x, std::uint64_t p, unsigned r)
{
	const Int m = modulus_of(p, r);
	const Int& den = x.get_den();
	if (den % p == 0)
		throw std::domain_error("negative valuation: denominator " + den.get_str() + " divisible by " + std::to_string(p));
	Int inv;
	mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
	Int v = x.get_num() * inv;
	mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
	return PadicInt(p, r, v.get_ui());
}

PadicInt gamma_p(const PadicInt& x)
{
	const std::uint64_t p = x.p();
	const unsigned r = x.precision();
	const std::uint64_t mod = x.modulus();
	const std::uint64_t n = x.residue();
	if (n == 0)
		return PadicInt(p, r, 1);

	// F(t) = prod_{i=1}^{p-1} (t + i), kept to degree < r.
	std::vector<std::uint64_t> f(r, 0);
	f[0] = 1;
	for (std::uint64_t i = 1; i < p; ++i) {
		for (unsigned d = r; d-- > 0;) {
			std::uint64_t v = mulmod(f[d], i, mod);
			if (d > 0)
				v = (v + f[d - 1]) % mod;
			f[d] = v;
		}
	}

	const std::uint64_t blocks = n / p;
	const std::uint64_t tail = n % p;
	std::uint64_t prod = 1 % mod;
	for (std::uint64_t b = 0; b < blocks; ++b) {
		const std::uint64_t t = mulmod(b, p, mod);
		std::uint64_t acc = 0;
		for (unsigned d = r; d-- > 0;)
			acc = (mulmod(acc, t, mod) + f[d]) % mod;
		prod = mulmod(prod, acc, mod);
	}
	const std::uint64_t base = mulmod(blocks, p, mod);
	for (std::uint64_t i = 1; i < tail; ++i)
		prod = mulmod(prod, (base + i) % mod, mod);
	PadicInt result(p, r, prod);
	return (n % 2 == 1) ? -result : result;
}

PadicInt gamma_p(const Rat& x, std::uint64_t p, unsigned r)
{
	return gamma_p(padic_from_rational(x, p, r));
}

std::uint64_t a0(const Rat& x, std::uint64_t p)
{
	const std::uint64_t v = padic_from_rational(x, p, 1).residue();
	return v == 0 ? p : v;
}

PadicInt rising_factorial_p(const Rat& a, std::uint64_t k, std::uint64_t p, unsigned r)
{
	if (a.get_den() % p == 0)
		throw std::domain_error("negative valuation: rising factorial base not p-integral");
	PadicInt acc = PadicInt::from_int(1, p, r);
	for (std::uint64_t i = 0; i < k; ++i)
		acc *= padic_from_rational(a + Rat(static_cast<unsigned long>(i)), p, r);
	return acc;
}

Rat rising_factorial(const Rat& a, std::uint64_t k)
{
	Rat acc = 1;
	for (std::uint64_t i = 0; i < k; ++i)
		acc *= a + Rat(static_cast<unsigned long>(i));
	return acc;
}

namespace {

/// Calls visit(k, term) for the nonzero terms with k in [start, truncation]. The
/// argument is folded into the term only when z is given.
template <typename Visit>
void for_each_term(const HgsParams& params, const Rat* z, Visit&& visit)
{
	for (const auto& b : params.lower)
		if (b <= 0 && b.get_den() == 1 && -b < Rat(static_cast<unsigned long>(params.truncation)))
			throw std::domain_error("lower parameter " + to_string(b) + " vanishes a denominator within range");
	Rat coeff = params.scale;
	for (std::uint64_t k = 0;; ++k) {
		if (k >= params.start)
			visit(k, coeff);
		if (k == params.truncation)
			break;
		const Rat kk(static_cast<unsigned long>(k));
		for (const auto& a : params.upper)
			coeff *= a + kk;
		for (const auto& b : params.lower)
			coeff /= b + kk;
		coeff /= kk + 1;
		if (z)
			coeff *= *z;
		if (coeff == 0)
			break;
	}
}

} // namespace

PadicInt trunc_hgs_eval(const HgsParams& params, std::uint64_t p, unsigned r)
{
	const Int m = modulus_of(p, r);
	Int acc = 0;
	auto reduce = [&](std::uint64_t k, const Rat& term) {
		if (term == 0)
			return Int(0);
		if (term.get_den() % p == 0)
			throw std::domain_error("series not p-adically integral at term " + std::to_string(k));
		Int inv;
		mpz_invert(inv.get_mpz_t(), term.get_den().get_mpz_t(), m.get_mpz_t());
		Int v = term.get_num() * inv;
		mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
		return v;
	};
	if (const Rat* z = std::get_if<Rat>(&params.argument)) {
		for_each_term(params, z, [&](std::uint64_t k, const Rat& term) {
			acc += reduce(k, term);
		});
	} else {
		const PadicInt& zp = std::get<PadicInt>(params.argument);
		if (zp.p() != p || zp.precision() != r)
			throw std::invalid_argument("series argument precision does not match");
		const Int zi(static_cast<unsigned long>(zp.residue()));
		for_each_term(params, nullptr, [&](std::uint64_t k, const Rat& term) {
			Int zk;
			mpz_powm_ui(zk.get_mpz_t(), zi.get_mpz_t(), k, m.get_mpz_t());
			acc += reduce(k, term) * zk;
		});
	}
	mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
	return PadicInt(p, r, acc.get_ui());
}

Rat trunc_hgs_exact(const HgsParams& params)
{
	const Rat* z = std::get_if<Rat>(&params.argument);
	if (!z)
		throw std::invalid_argument("exact evaluation needs a rational argument");
	Rat acc = 0;
	for_each_term(params, z, [&](std::uint64_t, const Rat& term) { acc += term; });
	acc.canonicalize();
	return acc;
}

std::pair<Rat, Rat> harmonic_sums(std::uint64_t k)
{
	Rat h = 0, odd = 0;
	for (std::uint64_t j = 1; j <= k; ++j) {
		h += Rat(1, static_cast<unsigned long>(j));
		odd += Rat(1, static_cast<unsigned long>(2 * j - 1));
	}
	h.canonicalize();
	odd.canonicalize();
	return {h, odd};
}

PadicInt dwork_ratio(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& argument,
	std::uint64_t p, unsigned s, unsigned r, bool teichmuller_argument)
{
	if (s < 1)
		throw std::invalid_argument("Dwork ratio needs s >= 1");
	HgsParams params;
	params.upper = upper;
	params.lower = lower;
	if (teichmuller_argument) {
		const PadicInt z0 = padic_from_rational(argument, p, r);
		params.argument = teichmuller(static_cast<std::int64_t>(z0.residue() % p), p, r);
	} else {
		params.argument = argument;
	}
	params.truncation = ipow(p, s) - 1;
	const PadicInt num = trunc_hgs_eval(params, p, r);
	params.truncation = ipow(p, s - 1) - 1;
	const PadicInt den = trunc_hgs_eval(params, p, r);
	if (!den.is_unit())
		throw std::domain_error("non-ordinary (unit root undefined)");
	return num / den;
}

} // namespace hgc
