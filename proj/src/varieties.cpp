#include "hgc/varieties.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "hgc/qseries.hpp"

namespace hgc {

namespace {

using Elem = FieldCtx::Elem;

void require_count_args(const FieldCtx& f, unsigned n)
{
	if (n < 2)
		throw std::invalid_argument("n must be at least 2");
	if (f.order() % n != 0)
		throw std::invalid_argument("q = " + std::to_string(f.q()) + " is not 1 mod " + std::to_string(n));
}

} // namespace

CountResult count_affine_brute(const FieldPtr& ctx, unsigned n, Elem lambda, const BruteOptions& options)
{
	const FieldCtx& f = *ctx;
	require_count_args(f, n);
	const std::uint64_t q = f.q();
	const unsigned vars = n - 1;
	const double tuples = std::pow(static_cast<double>(q), static_cast<double>(vars));
	if (tuples > static_cast<double>(options.max_points))
		throw ResourceCapError("brute-force count needs " + std::to_string(static_cast<std::uint64_t>(tuples)) +
			" evaluations, cap is " + std::to_string(options.max_points));

	// roots[v] = #{y : y^n = v}
	std::vector<std::uint32_t> roots(q, 0);
	for (std::uint64_t y = 0; y < q; ++y)
		++roots[f.pow(static_cast<Elem>(y), n)];

	const Elem one = f.from_int(1);
	auto slice = [&](std::uint64_t x1) {
		std::uint64_t total = 0;
		std::vector<Elem> rest(vars > 0 ? vars - 1 : 0, 0);
		while (true) {
			Elem prod = static_cast<Elem>(x1);
			Elem tail = one;
			Elem factors = f.sub(one, static_cast<Elem>(x1));
			for (Elem x : rest) {
				prod = f.mul(prod, x);
				tail = f.mul(tail, x);
				factors = f.mul(factors, f.sub(one, x));
			}
			Elem value = f.mul(f.pow(prod, n - 1), factors);
			value = f.mul(value, f.sub(static_cast<Elem>(x1), f.mul(lambda, tail)));
			total += roots[value];
			std::size_t i = 0;
			while (i < rest.size() && rest[i] == q - 1) {
				rest[i] = 0;
				++i;
			}
			if (i >= rest.size())
				break;
			++rest[i];
		}
		return total;
	};

	std::vector<std::uint64_t> partial(q, 0);
	const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(q)));
	if (workers == 1) {
		for (std::uint64_t x1 = 0; x1 < q; ++x1)
			partial[x1] = slice(x1);
	} else {
		std::vector<std::thread> pool;
		for (unsigned w = 0; w < workers; ++w)
			pool.emplace_back([&, w] {
				for (std::uint64_t x1 = w; x1 < q; x1 += workers)
					partial[x1] = slice(x1);
			});
		for (auto& t : pool)
			t.join();
	}
	CountResult r;
	r.q = q;
	r.n = n;
	r.lambda = lambda;
	r.affine_count = 0;
	for (std::uint64_t v : partial)
		r.affine_count += Int(static_cast<unsigned long>(v));
	return r;
}

namespace {

Int hgf_count_from_sum(const FieldCtx& f, unsigned n, const CycRat& sum)
{
	const auto value = sum.to_rational();
	Int qn = 1;
	for (unsigned i = 0; i + 1 < n; ++i)
		qn *= static_cast<unsigned long>(f.q());
	if (!value)
		throw std::logic_error("hypergeometric point count is not rational");
	const Rat total = *value * Rat(qn);
	if (total.get_den() != 1)
		throw std::logic_error("hypergeometric point count is not an integer");
	// affine = q^{n-1} + q^{n-1} * sum
	return qn + total.get_num();
}

std::vector<std::vector<CycRat>> hgf_tables(const FieldPtr& ctx, unsigned n)
{
	std::vector<std::vector<CycRat>> tables;
	const Character eps = trivial_character(ctx);
	for (unsigned i = 1; i < n; ++i) {
		const Character eta = character_of_order(ctx, n, 1).pow(i);
		tables.push_back(greene_hgf_table(std::vector<Character>(n, eta), std::vector<Character>(n - 1, eps)));
	}
	return tables;
}

} // namespace

CountResult count_via_hgf(const FieldPtr& ctx, unsigned n, Elem lambda)
{
	const FieldCtx& f = *ctx;
	require_count_args(f, n);
	const Character eps = trivial_character(ctx);
	CycRat sum;
	for (unsigned i = 1; i < n; ++i) {
		const Character eta = character_of_order(ctx, n, 1).pow(i);
		sum += greene_hgf(std::vector<Character>(n, eta), std::vector<Character>(n - 1, eps), lambda);
	}
	CountResult r;
	r.q = f.q();
	r.n = n;
	r.lambda = lambda;
	r.affine_count = hgf_count_from_sum(f, n, sum);
	return r;
}

std::vector<CountResult> count_via_hgf_all(const FieldPtr& ctx, unsigned n)
{
	const FieldCtx& f = *ctx;
	require_count_args(f, n);
	const auto tables = hgf_tables(ctx, n);
	std::vector<CountResult> out(f.q());
	for (std::uint64_t x = 0; x < f.q(); ++x) {
		CycRat sum;
		for (const auto& t : tables)
			sum += t[x];
		out[x].q = f.q();
		out[x].n = n;
		out[x].lambda = static_cast<Elem>(x);
		out[x].affine_count = hgf_count_from_sum(f, n, sum);
	}
	return out;
}

long legendre_trace(const FieldPtr& ctx, Elem lambda)
{
	const FieldCtx& f = *ctx;
	if (f.e() != 1)
		throw std::invalid_argument("Legendre trace is defined here over prime fields");
	const std::uint64_t p = f.p();
	if (lambda == 0 || lambda == 1 || lambda >= p)
		throw std::domain_error("singular Legendre parameter " + std::to_string(lambda));
	long sum = 0;
	for (std::uint64_t x = 0; x < p; ++x) {
		const std::uint64_t v = mulmod(mulmod(x, (1 + p - x) % p, p), (x + p - lambda) % p, p);
		if (v == 0)
			continue;
		sum += powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
	}
	const long ap = -sum;
	if (static_cast<double>(ap) * ap > 4.0 * static_cast<double>(p))
		throw std::logic_error("Legendre trace violates the Hasse bound");
	return ap;
}

CycInt ZetaFactor::power_sum(unsigned s) const
{
	const bool linear = c2.is_zero();
	const unsigned m = std::max(c1.order(), c2.order());
	CycInt prev = CycInt::constant(m, linear ? 1 : 2);
	if (s == 0)
		return prev;
	CycInt cur = -c1;
	for (unsigned k = 2; k <= s; ++k) {
		CycInt next = -(c1 * cur) - c2 * prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

Int ZetaSpec::count(unsigned s) const
{
	if (s == 0)
		throw std::invalid_argument("s must be positive");
	CycInt total;
	for (const auto& fct : factors) {
		if (fct.numerator)
			total -= fct.power_sum(s);
		else
			total += fct.power_sum(s);
	}
	const auto v = total.to_integer();
	if (!v)
		throw std::logic_error("zeta power sum is not a rational integer");
	return *v;
}

ZetaPoly zeta_poly_mul(const ZetaPoly& a, const ZetaPoly& b)
{
	if (a.empty() || b.empty())
		return {};
	ZetaPoly r(a.size() + b.size() - 1);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	return r;
}

bool zeta_poly_equal(const ZetaPoly& a, const ZetaPoly& b)
{
	const std::size_t n = std::max(a.size(), b.size());
	for (std::size_t i = 0; i < n; ++i) {
		const CycInt x = i < a.size() ? a[i] : CycInt();
		const CycInt y = i < b.size() ? b[i] : CycInt();
		if (x != y)
			return false;
	}
	return true;
}

namespace {

ZetaPoly factor_poly(const ZetaFactor& f)
{
	ZetaPoly r{CycInt::constant(f.c1.order(), 1), f.c1};
	if (!f.c2.is_zero())
		r.push_back(f.c2);
	return r;
}

ZetaPoly product_where(const ZetaSpec& z, bool numerator, int old_filter)
{
	ZetaPoly r{CycInt::constant(1, 1)};
	for (std::size_t i = 0; i < z.factors.size(); ++i) {
		if (z.factors[i].numerator != numerator)
			continue;
		if (old_filter >= 0) {
			bool is_old = false;
			for (std::size_t j : z.old_part)
				is_old = is_old || j == i;
			if (is_old != (old_filter == 1))
				continue;
		}
		r = zeta_poly_mul(r, factor_poly(z.factors[i]));
	}
	return r;
}

} // namespace

ZetaPoly ZetaSpec::numerator() const { return product_where(*this, true, -1); }
ZetaPoly ZetaSpec::denominator() const { return product_where(*this, false, -1); }
ZetaPoly ZetaSpec::numerator_of(bool old) const { return product_where(*this, true, old ? 1 : 0); }
ZetaPoly ZetaSpec::denominator_of(bool old) const { return product_where(*this, false, old ? 1 : 0); }

ZetaSpec zeta_build(std::uint64_t p, unsigned n)
{
	if (n != 3 && n != 4)
		throw std::invalid_argument("zeta functions are assembled for n = 3 and n = 4 only");
	if (!is_prime(p) || p == 2 || p % n != 1)
		throw std::invalid_argument("p = " + std::to_string(p) + " must be a prime congruent to 1 mod " +
			std::to_string(n));
	const FieldPtr ctx = FieldCtx::create(p);
	const unsigned m = static_cast<unsigned>(p - 1);
	const Int pp(static_cast<unsigned long>(p));
	auto c = [m](const Int& v) { return CycInt::constant(m, v); };
	ZetaSpec z;
	z.p = p;
	z.n = n;
	if (n == 3) {
		const Character e3 = character_of_order(ctx, 3);
		const CycInt a = jacobi_sum(e3, e3);
		const CycInt a2 = a * a;
		z.jacobi = a;
		z.factors = {
			{"1 - T", c(-1), c(0), false},
			{"1 + (a + conj a) T + p T^2", a + a.bar(), c(pp), false},
			{"1 - p^2 T", c(-pp * pp), c(0), false},
			{"1 - (a^2 + conj a^2) T + p^2 T^2", -(a2 + a2.bar()), c(pp * pp), false},
		};
	} else {
		const Character e4 = character_of_order(ctx, 4);
		const CycInt b = jacobi_sum(e4, e4.pow(2));
		const CycInt b2 = b * b;
		const CycInt b3 = b2 * b;
		const Int p3 = pp * pp * pp;
		z.jacobi = b;
		z.ap = eta_product_coeffs(p)[p];
		z.factors = {
			{"1 + (b^3 + conj b^3) T + p^3 T^2", b3 + b3.bar(), c(p3), true},
			{"1 + (b + conj b) p T + p^3 T^2", (b + b.bar()) * pp, c(p3), true},
			{"1 - (b^2 + conj b^2) T + p^2 T^2", -(b2 + b2.bar()), c(pp * pp), true},
			{"1 - a(p) T + p^3 T^2", c(-z.ap), c(p3), true},
			{"1 - p T", c(-pp), c(0), true},
			{"1 - T", c(-1), c(0), false},
			{"1 - p^3 T", c(-p3), c(0), false},
		};
		z.old_part = {3, 4, 5, 6};
	}
	return z;
}

GaussianInt hecke_chi1(const Int& a, const Int& b)
{
	const bool a_even = mpz_even_p(a.get_mpz_t()) != 0;
	const bool b_even = mpz_even_p(b.get_mpz_t()) != 0;
	if (a_even == b_even)
		return {0, 0};
	Int half = a + b - 1;
	mpz_divexact_ui(half.get_mpz_t(), half.get_mpz_t(), 2);
	const int sign = mpz_even_p(half.get_mpz_t()) ? 1 : -1;
	if (a_even)
		return {0, sign};
	return {sign, 0};
}

GaussianInt quartic_minus_jacobi(std::uint64_t p, const Int& a, const Int& b)
{
	if (p % 4 != 1)
		throw std::invalid_argument("quartic characters need p = 1 mod 4");
	const Int pz(static_cast<unsigned long>(p));
	Int bmod = b % pz;
	if (bmod < 0)
		bmod += pz;
	Int binv;
	if (mpz_invert(binv.get_mpz_t(), bmod.get_mpz_t(), pz.get_mpz_t()) == 0)
		throw std::invalid_argument("a + b i does not lie over p");
	Int i0z = -a * binv % pz;
	if (i0z < 0)
		i0z += pz;
	const std::uint64_t i0 = i0z.get_ui();
	if (mulmod(i0, i0, p) != p - 1)
		throw std::invalid_argument("a + b i does not lie over p");
	const std::uint64_t powers[4] = {1, i0, p - 1, p - i0};
	auto index = [&](std::uint64_t x) {
		const std::uint64_t v = powmod(x, (p - 1) / 4, p);
		for (unsigned k = 0; k < 4; ++k)
			if (powers[k] == v)
				return k;
		throw std::logic_error("quartic residue symbol out of range");
	};
	long bucket[4] = {0, 0, 0, 0};
	for (std::uint64_t x = 2; x < p; ++x)
		++bucket[(index(x) + 2 * index(1 + p - x)) % 4];
	// J = sum_k bucket[k] i^k
	GaussianInt j{bucket[0] - bucket[2], bucket[1] - bucket[3]};
	return {-j.re, -j.im};
}

HeckePsi hecke_psi(std::uint64_t p)
{
	if (!is_prime(p) || p % 4 != 1)
		throw std::invalid_argument("p = " + std::to_string(p) + " must be a prime congruent to 1 mod 4");
	std::uint64_t a = 0, b = 0;
	for (std::uint64_t y = 1; y * y < p; ++y) {
		const std::uint64_t rest = p - y * y;
		const auto x = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
		if (x * x == rest) {
			a = x;
			b = y;
			break;
		}
	}
	if (b == 0)
		throw std::logic_error("no representation as a sum of two squares");
	// Candidates in a fixed order: a + b i with a even first, then its conjugates and associates.
	std::uint64_t even = a % 2 == 0 ? a : b;
	std::uint64_t odd = a % 2 == 0 ? b : a;
	const Int E(static_cast<unsigned long>(even)), O(static_cast<unsigned long>(odd));
	const std::vector<std::pair<GaussianInt, std::string>> candidates = {
		{{E, O}, "a + b i with a > 0 even, b > 0 odd"},
		{{E, -O}, "a - b i with a > 0 even, b > 0 odd"},
		{{O, E}, "a + b i with a > 0 odd, b > 0 even"},
		{{O, -E}, "a - b i with a > 0 odd, b > 0 even"},
		{{-E, O}, "-a + b i with a > 0 even, b > 0 odd"},
		{{-E, -O}, "-a - b i with a > 0 even, b > 0 odd"},
		{{-O, E}, "-a + b i with a > 0 odd, b > 0 even"},
		{{-O, -E}, "-a - b i with a > 0 odd, b > 0 even"},
	};
	for (const auto& [alpha, rule] : candidates) {
		HeckePsi h;
		h.p = p;
		h.alpha = alpha;
		h.chi1 = hecke_chi1(alpha.re, alpha.im);
		const int sign = mpz_even_p(alpha.im.get_mpz_t()) ? 1 : -1;
		// (-1)^b (a + b i) chi_1
		h.psi.re = sign * (alpha.re * h.chi1.re - alpha.im * h.chi1.im);
		h.psi.im = sign * (alpha.re * h.chi1.im + alpha.im * h.chi1.re);
		if (h.psi.norm() != Int(static_cast<unsigned long>(p)))
			throw std::logic_error("psi value does not have norm p");
		h.minus_jacobi = quartic_minus_jacobi(p, alpha.re, alpha.im);
		if (h.psi == h.minus_jacobi) {
			h.normalization = rule + "; residue character fixed by i = -a/b mod p";
			return h;
		}
	}
	throw std::logic_error("no associate of the prime above p matches the Jacobi sum");
}

} // namespace hgc
