#include "hgc/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace hgc {

namespace poly {
namespace {

void trim(Poly& a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
	return powmod(a, p - 2, p);
}

Poly mod(Poly a, const Poly& f, std::uint64_t p)
{
	trim(a);
	Poly g = f;
	trim(g);
	const std::size_t dg = g.size() - 1;
	const std::uint64_t lead_inv = inv_mod(g.back(), p);
	while (a.size() > dg) {
		const std::size_t shift = a.size() - 1 - dg;
		const std::uint64_t c = mulmod(a.back(), lead_inv, p);
		for (std::size_t i = 0; i <= dg; ++i)
			a[shift + i] = (a[shift + i] + p - mulmod(c, g[i], p)) % p;
		trim(a);
	}
	return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p)
{
	if (a.empty() || b.empty())
		return {};
	Poly r(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
	trim(r);
	return r;
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p)
{
	return mod(mul(a, b, p), f, p);
}

Poly pow_mod(Poly base, std::uint64_t k, const Poly& f, std::uint64_t p)
{
	Poly r{1};
	base = mod(base, f, p);
	while (k > 0) {
		if (k & 1)
			r = mulmod_poly(r, base, f, p);
		base = mulmod_poly(base, base, f, p);
		k >>= 1;
	}
	return r;
}

Poly sub(Poly a, const Poly& b, std::uint64_t p)
{
	if (a.size() < b.size())
		a.resize(b.size(), 0);
	for (std::size_t i = 0; i < b.size(); ++i)
		a[i] = (a[i] + p - b[i]) % p;
	trim(a);
	return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p)
{
	trim(a);
	trim(b);
	while (!b.empty()) {
		Poly r = mod(a, b, p);
		a = std::move(b);
		b = std::move(r);
	}
	return a;
}

} // namespace

bool is_irreducible(const Poly& f_in, std::uint64_t p)
{
	Poly f = f_in;
	trim(f);
	if (f.size() < 2 || f.back() != 1)
		return false;
	const unsigned e = static_cast<unsigned>(f.size() - 1);
	if (e == 1)
		return true;
	const Poly x{0, 1};
	// x^(p^e) = x mod f
	Poly t = x;
	for (unsigned i = 0; i < e; ++i)
		t = pow_mod(t, p, f, p);
	if (sub(t, x, p).size() != 0)
		return false;
	for (const auto& [ell, mult] : factorize(e)) {
		(void)mult;
		Poly s = x;
		for (unsigned i = 0; i < e / ell; ++i)
			s = pow_mod(s, p, f, p);
		const Poly g = gcd(f, sub(s, x, p), p);
		if (g.size() != 1)
			return false;
	}
	return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned e)
{
	if (e == 1)
		return {0, 1};
	const std::uint64_t count = ipow(p, e);
	for (std::uint64_t code = 0; code < count; ++code) {
		Poly f(e + 1, 0);
		std::uint64_t c = code;
		for (unsigned i = 0; i < e; ++i) {
			f[i] = c % p;
			c /= p;
		}
		f[e] = 1;
		if (is_irreducible(f, p))
			return f;
	}
	throw std::logic_error("no irreducible polynomial found");
}

} // namespace poly

namespace {

Poly decode(std::uint64_t x, std::uint64_t p, unsigned e)
{
	Poly a(e, 0);
	for (unsigned i = 0; i < e; ++i) {
		a[i] = x % p;
		x /= p;
	}
	while (!a.empty() && a.back() == 0)
		a.pop_back();
	return a;
}

std::uint64_t encode(const Poly& a, std::uint64_t p)
{
	std::uint64_t x = 0;
	for (std::size_t i = a.size(); i-- > 0;)
		x = x * p + a[i];
	return x;
}

} // namespace

std::shared_ptr<const FieldCtx> FieldCtx::create(std::uint64_t p, unsigned e, std::optional<Poly> modulus,
	const FieldOptions& options)
{
	if (!is_prime(p))
		throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
	if (p == 2)
		throw std::invalid_argument("characteristic 2 is not supported");
	if (e < 1)
		throw std::invalid_argument("extension degree must be at least 1");
	std::uint64_t q = 1;
	for (unsigned i = 0; i < e; ++i) {
		if (q > options.max_q / p)
			throw ResourceCapError("field size " + std::to_string(p) + "^" + std::to_string(e) +
				" exceeds table cap " + std::to_string(options.max_q));
		q *= p;
	}

	Poly f;
	if (modulus) {
		f = *modulus;
		if (f.size() != e + 1 || f.back() != 1)
			throw std::invalid_argument("modulus must be monic of degree " + std::to_string(e));
		for (auto c : f)
			if (c >= p)
				throw std::invalid_argument("modulus coefficient out of range");
		if (!poly::is_irreducible(f, p))
			throw std::invalid_argument("supplied modulus is reducible");
	} else {
		f = poly::smallest_irreducible(p, e);
	}

	std::shared_ptr<FieldCtx> ctx(new FieldCtx());
	ctx->p_ = p;
	ctx->e_ = e;
	ctx->q_ = q;
	ctx->modulus_ = f;
	ctx->factors_ = factorize(q - 1);

	auto slow_mul = [&](std::uint64_t a, std::uint64_t b) {
		if (e == 1)
			return mulmod(a, b, p);
		return encode(poly::mulmod_poly(decode(a, p, e), decode(b, p, e), f, p), p);
	};
	auto slow_pow = [&](std::uint64_t a, std::uint64_t k) {
		std::uint64_t r = 1;
		while (k > 0) {
			if (k & 1)
				r = slow_mul(r, a);
			a = slow_mul(a, a);
			k >>= 1;
		}
		return r;
	};

	std::uint64_t g = 0;
	for (std::uint64_t cand = 2; cand < q; ++cand) {
		bool ok = true;
		for (const auto& [ell, mult] : ctx->factors_) {
			(void)mult;
			if (slow_pow(cand, (q - 1) / ell) == 1) {
				ok = false;
				break;
			}
		}
		if (ok) {
			g = cand;
			break;
		}
	}
	if (g == 0)
		throw std::logic_error("no generator found");
	ctx->generator_ = static_cast<Elem>(g);

	ctx->exp_.resize(q - 1);
	ctx->log_.assign(q, -1);
	std::uint64_t x = 1;
	for (std::uint64_t t = 0; t < q - 1; ++t) {
		ctx->exp_[t] = static_cast<Elem>(x);
		ctx->log_[x] = static_cast<std::int32_t>(t);
		x = slow_mul(x, g);
	}
	ctx->log_one_minus_.resize(q - 1);
	for (std::uint64_t t = 0; t < q - 1; ++t)
		ctx->log_one_minus_[t] = ctx->log_[ctx->sub(1, ctx->exp_[t])];
	return ctx;
}

FieldCtx::Elem FieldCtx::add(Elem a, Elem b) const
{
	if (e_ == 1) {
		const std::uint64_t s = std::uint64_t(a) + b;
		return static_cast<Elem>(s >= p_ ? s - p_ : s);
	}
	std::uint64_t r = 0, scale = 1;
	std::uint64_t x = a, y = b;
	for (unsigned i = 0; i < e_; ++i) {
		const std::uint64_t d = (x % p_ + y % p_) % p_;
		r += d * scale;
		scale *= p_;
		x /= p_;
		y /= p_;
	}
	return static_cast<Elem>(r);
}

FieldCtx::Elem FieldCtx::sub(Elem a, Elem b) const
{
	if (e_ == 1)
		return static_cast<Elem>(a >= b ? a - b : a + p_ - b);
	std::uint64_t r = 0, scale = 1;
	std::uint64_t x = a, y = b;
	for (unsigned i = 0; i < e_; ++i) {
		const std::uint64_t d = (x % p_ + p_ - y % p_) % p_;
		r += d * scale;
		scale *= p_;
		x /= p_;
		y /= p_;
	}
	return static_cast<Elem>(r);
}

FieldCtx::Elem FieldCtx::mul(Elem a, Elem b) const
{
	if (a == 0 || b == 0)
		return 0;
	return exp_[(std::uint64_t(log_[a]) + std::uint64_t(log_[b])) % (q_ - 1)];
}

FieldCtx::Elem FieldCtx::inv(Elem a) const
{
	if (a == 0)
		throw std::domain_error("inverse of zero");
	return exp_[(q_ - 1 - std::uint64_t(log_[a])) % (q_ - 1)];
}

FieldCtx::Elem FieldCtx::pow(Elem a, std::uint64_t k) const
{
	if (a == 0)
		return k == 0 ? 1 : 0;
	return exp_[mulmod(std::uint64_t(log_[a]), k, q_ - 1)];
}

std::uint64_t FieldCtx::dlog(Elem x) const
{
	if (x == 0 || x >= q_)
		throw std::domain_error("character argument zero");
	return static_cast<std::uint64_t>(log_[x]);
}

std::uint64_t FieldCtx::trace(Elem x) const
{
	Elem acc = 0;
	Elem y = x;
	for (unsigned i = 0; i < e_; ++i) {
		acc = add(acc, y);
		y = frobenius(y);
	}
	return acc;
}

std::uint64_t FieldCtx::norm(Elem x) const
{
	if (x == 0)
		return 0;
	return exp_[mulmod(std::uint64_t(log_[x]), (q_ - 1) / (p_ - 1), q_ - 1)];
}

std::pair<std::uint64_t, std::uint64_t> trace_and_norm(const FieldCtx& ctx, FieldCtx::Elem x)
{
	return {ctx.trace(x), ctx.norm(x)};
}

PadicInt teichmuller(std::int64_t x, std::uint64_t p, unsigned r)
{
	PadicInt t = PadicInt::from_int(x, p, r);
	if (t.residue() % p == 0)
		return PadicInt(p, r, 0);
	for (unsigned i = 0; i < r + 1; ++i) {
		PadicInt next = t.pow(p);
		if (next == t)
			return t;
		t = next;
	}
	return t;
}

} // namespace hgc
