#include "hgc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hgc/finite_field.hpp"

namespace hgc {

namespace {

std::mutex phi_mutex;
std::map<unsigned, std::shared_ptr<const std::vector<Int>>> phi_cache;

std::vector<Int> compute_cyclotomic(unsigned m)
{
	// x^m - 1 divided by Phi_d for every proper divisor d of m.
	std::vector<Int> a(m + 1, 0);
	a[0] = -1;
	a[m] = 1;
	for (unsigned d = 1; d < m; ++d) {
		if (m % d != 0)
			continue;
		const auto phi_d = cyclotomic_polynomial(d);
		const std::size_t dd = phi_d->size() - 1;
		std::vector<Int> quot(a.size() - dd, 0);
		for (std::size_t i = a.size() - 1; i + 1 > dd; --i) {
			const Int c = a[i];
			quot[i - dd] = c;
			if (c != 0)
				for (std::size_t j = 0; j <= dd; ++j)
					a[i - dd + j] -= c * (*phi_d)[j];
			if (i == dd)
				break;
		}
		a = std::move(quot);
	}
	return a;
}

bool fits_small(const std::vector<Int>& v, std::vector<std::int64_t>& out, std::size_t& bits, std::size_t& nonzero)
{
	out.resize(v.size());
	bits = 0;
	nonzero = 0;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (!mpz_fits_slong_p(v[i].get_mpz_t()))
			return false;
		out[i] = v[i].get_si();
		if (out[i] != 0) {
			++nonzero;
			const std::size_t b = mpz_sizeinbase(v[i].get_mpz_t(), 2);
			if (b > bits)
				bits = b;
		}
	}
	return true;
}

Int from_i128(__int128 v)
{
	if (v >= INT64_MIN && v <= INT64_MAX)
		return Int(static_cast<long>(v));
	const bool neg = v < 0;
	unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
	Int r(static_cast<unsigned long>(u >> 64));
	r <<= 64;
	r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
	return neg ? Int(-r) : r;
}

std::size_t bit_length(std::size_t n)
{
	std::size_t b = 0;
	while (n > 0) {
		++b;
		n >>= 1;
	}
	return b;
}

} // namespace

std::shared_ptr<const std::vector<Int>> cyclotomic_polynomial(unsigned m)
{
	if (m == 0)
		throw std::invalid_argument("cyclotomic order must be positive");
	{
		std::lock_guard<std::mutex> lock(phi_mutex);
		auto it = phi_cache.find(m);
		if (it != phi_cache.end())
			return it->second;
	}
	auto value = std::make_shared<const std::vector<Int>>(compute_cyclotomic(m));
	std::lock_guard<std::mutex> lock(phi_mutex);
	auto [it, inserted] = phi_cache.emplace(m, value);
	return it->second;
}

unsigned euler_phi(unsigned m)
{
	unsigned r = m;
	for (const auto& [p, k] : factorize(m)) {
		(void)k;
		r = r / static_cast<unsigned>(p) * static_cast<unsigned>(p - 1);
	}
	return r;
}

CycInt::CycInt(unsigned m) : m_(m), c_(m, 0)
{
	if (m == 0)
		throw std::invalid_argument("cyclotomic order must be positive");
}

CycInt CycInt::constant(unsigned m, const Int& v)
{
	CycInt a(m);
	a.c_[0] = v;
	return a;
}

CycInt CycInt::zeta(unsigned m, std::int64_t t)
{
	CycInt a(m);
	a.c_[mod_floor(t, m)] = 1;
	return a;
}

CycInt CycInt::lifted(unsigned m2) const
{
	if (m2 == m_)
		return *this;
	if (m2 % m_ != 0)
		throw std::invalid_argument("cannot lift Z[zeta_m] to an order not divisible by m");
	CycInt b(m2);
	const unsigned step = m2 / m_;
	for (unsigned t = 0; t < m_; ++t)
		b.c_[t * step] = c_[t];
	return b;
}

CycInt CycInt::conj(std::int64_t t) const
{
	const std::uint64_t tt = mod_floor(t, m_);
	if (std::gcd(tt, std::uint64_t(m_)) != 1 && m_ != 1)
		throw std::invalid_argument("conjugation exponent not coprime to m");
	CycInt b(m_);
	for (unsigned s = 0; s < m_; ++s)
		b.c_[mulmod(tt, s, m_)] += c_[s];
	return b;
}

CycInt CycInt::pow(unsigned k) const
{
	CycInt result = constant(m_, 1);
	CycInt base = *this;
	while (k > 0) {
		if (k & 1)
			result *= base;
		k >>= 1;
		if (k > 0)
			base *= base;
	}
	return result;
}

std::vector<Int> CycInt::reduced() const
{
	const auto phi = cyclotomic_polynomial(m_);
	const std::size_t d = phi->size() - 1;
	std::vector<Int> a = c_;
	for (std::size_t i = a.size(); i-- > d;) {
		if (a[i] == 0)
			continue;
		const Int c = a[i];
		for (std::size_t j = 0; j <= d; ++j)
			if ((*phi)[j] != 0)
				a[i - d + j] -= c * (*phi)[j];
	}
	a.resize(d);
	return a;
}

CycInt CycInt::canonical() const
{
	CycInt b(m_);
	auto r = reduced();
	for (std::size_t i = 0; i < r.size(); ++i)
		b.c_[i] = std::move(r[i]);
	return b;
}

bool CycInt::is_zero() const
{
	for (const auto& c : reduced())
		if (c != 0)
			return false;
	return true;
}

std::optional<Int> CycInt::to_integer() const
{
	const auto r = reduced();
	for (std::size_t i = 1; i < r.size(); ++i)
		if (r[i] != 0)
			return std::nullopt;
	return r.empty() ? Int(0) : r[0];
}

Int CycInt::content() const
{
	Int g = 0;
	for (const auto& c : reduced())
		g = gcd(g, c);
	return g;
}

std::complex<double> CycInt::to_complex() const
{
	std::complex<double> z = 0;
	for (unsigned t = 0; t < m_; ++t) {
		if (c_[t] == 0)
			continue;
		const double angle = 2.0 * std::numbers::pi * t / m_;
		z += c_[t].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
	}
	return z;
}

CycInt CycInt::operator-() const
{
	CycInt b(m_);
	for (unsigned t = 0; t < m_; ++t)
		b.c_[t] = -c_[t];
	return b;
}

CycInt& CycInt::operator+=(const CycInt& o)
{
	if (o.m_ != m_) {
		const unsigned l = std::lcm(m_, o.m_);
		*this = lifted(l);
		return *this += o.lifted(l);
	}
	for (unsigned t = 0; t < m_; ++t)
		c_[t] += o.c_[t];
	return *this;
}

CycInt& CycInt::operator-=(const CycInt& o)
{
	if (o.m_ != m_) {
		const unsigned l = std::lcm(m_, o.m_);
		*this = lifted(l);
		return *this -= o.lifted(l);
	}
	for (unsigned t = 0; t < m_; ++t)
		c_[t] -= o.c_[t];
	return *this;
}

CycInt operator*(const CycInt& a_in, const CycInt& b_in)
{
	if (a_in.m_ != b_in.m_) {
		const unsigned l = std::lcm(a_in.m_, b_in.m_);
		return a_in.lifted(l) * b_in.lifted(l);
	}
	const unsigned m = a_in.m_;
	CycInt r(m);
	std::vector<std::int64_t> a, b;
	std::size_t abits = 0, bbits = 0, anz = 0, bnz = 0;
	if (fits_small(a_in.c_, a, abits, anz) && fits_small(b_in.c_, b, bbits, bnz) &&
		abits + bbits + bit_length(std::min(anz, bnz)) < 126) {
		std::vector<__int128> acc(m, 0);
		for (unsigned i = 0; i < m; ++i) {
			if (a[i] == 0)
				continue;
			const __int128 ai = a[i];
			unsigned k = i;
			for (unsigned j = 0; j < m; ++j) {
				if (b[j] != 0)
					acc[k] += ai * b[j];
				if (++k == m)
					k = 0;
			}
		}
		for (unsigned t = 0; t < m; ++t)
			r.c_[t] = from_i128(acc[t]);
		return r;
	}
	for (unsigned i = 0; i < m; ++i) {
		if (a_in.c_[i] == 0)
			continue;
		for (unsigned j = 0; j < m; ++j) {
			if (b_in.c_[j] == 0)
				continue;
			mpz_addmul(r.c_[(i + j) % m].get_mpz_t(), a_in.c_[i].get_mpz_t(), b_in.c_[j].get_mpz_t());
		}
	}
	return r;
}

CycInt& CycInt::operator*=(const CycInt& o)
{
	*this = *this * o;
	return *this;
}

CycInt& CycInt::operator*=(const Int& k)
{
	for (auto& c : c_)
		c *= k;
	return *this;
}

CycInt& CycInt::divexact(const Int& k)
{
	for (auto& c : c_)
		mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
	return *this;
}

bool operator==(const CycInt& a, const CycInt& b)
{
	return (a - b).is_zero();
}

CycRat::CycRat(CycInt num, Int den) : num_(std::move(num)), den_(std::move(den))
{
	if (den_ == 0)
		throw std::domain_error("zero denominator");
	if (den_ < 0) {
		num_ = -num_;
		den_ = -den_;
	}
}

CycRat CycRat::normalized() const
{
	CycInt n = num_.canonical();
	Int g = gcd(n.content(), den_);
	if (g == 0)
		return CycRat(CycInt(num_.order()), 1);
	if (n.content() == 0)
		return CycRat(n, 1);
	Int d = den_;
	if (g != 1) {
		n.divexact(g);
		mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
	}
	return CycRat(std::move(n), std::move(d));
}

std::optional<Rat> CycRat::to_rational() const
{
	auto v = num_.to_integer();
	if (!v)
		return std::nullopt;
	Rat r(*v, den_);
	r.canonicalize();
	return r;
}

std::complex<double> CycRat::to_complex() const
{
	return num_.to_complex() / den_.get_d();
}

CycRat& CycRat::operator+=(const CycRat& o)
{
	if (den_ == o.den_) {
		num_ += o.num_;
		return *this;
	}
	num_ = num_ * o.den_ + o.num_ * den_;
	den_ *= o.den_;
	return *this;
}

CycRat& CycRat::operator-=(const CycRat& o)
{
	return *this += -o;
}

CycRat& CycRat::operator*=(const CycRat& o)
{
	num_ *= o.num_;
	den_ *= o.den_;
	return *this;
}

bool operator==(const CycRat& a, const CycRat& b)
{
	return a.num_ * b.den_ == b.num_ * a.den_;
}

PadicInt cyc_embed_padic(const CycInt& a, std::uint64_t p, unsigned r, const FieldCtx& ctx)
{
	const unsigned m = a.order();
	if (ctx.e() != 1 || ctx.p() != p)
		throw std::invalid_argument("p-adic embedding needs the prime field F_p");
	if ((p - 1) % m != 0)
		throw std::invalid_argument("embedding requires m | p-1");
	const PadicInt z = teichmuller(static_cast<std::int64_t>(ctx.exp((p - 1) / m)), p, r);
	PadicInt acc(p, r, 0);
	PadicInt zt = PadicInt::from_int(1, p, r);
	for (unsigned t = 0; t < m; ++t) {
		if (a.coeffs()[t] != 0)
			acc += PadicInt::from_mpz(a.coeffs()[t], p, r) * zt;
		zt *= z;
	}
	return acc;
}

PadicInt cyc_embed_padic(const CycRat& a, std::uint64_t p, unsigned r, const FieldCtx& ctx)
{
	const CycRat v = a.normalized();
	Int unit = v.den();
	unsigned k = 0;
	while (mpz_divisible_ui_p(unit.get_mpz_t(), p)) {
		mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(), p);
		++k;
	}
	const PadicInt d = PadicInt::from_mpz(unit, p, r);
	if (k == 0)
		return cyc_embed_padic(v.num(), p, r, ctx) / d;
	// Embed the numerator with k extra digits, then divide out p^k.
	const PadicInt n = cyc_embed_padic(v.num(), p, r + k, ctx);
	if (n.valuation() < k)
		throw std::domain_error("negative valuation: value is not p-integral under the embedding");
	const std::uint64_t pk = ipow(p, k);
	return PadicInt(p, r, (n.residue() / pk) % ipow(p, r)) / d;
}

} // namespace hgc
