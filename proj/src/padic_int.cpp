#include "hgc/padic_int.hpp"

#include <stdexcept>

namespace hgc {

PadicInt::PadicInt(std::uint64_t p, unsigned r, std::uint64_t residue) : p_(p), r_(r)
{
	if (p < 2)
		throw std::invalid_argument("p-adic prime must be at least 2");
	if (r < 1)
		throw std::invalid_argument("p-adic precision must be at least 1");
	std::uint64_t m = 1;
	for (unsigned i = 0; i < r; ++i) {
		if (m > (std::uint64_t(1) << 62) / p)
			throw ResourceCapError("p^r exceeds 2^62");
		m *= p;
	}
	mod_ = m;
	v_ = residue % m;
}

PadicInt PadicInt::from_int(std::int64_t v, std::uint64_t p, unsigned r)
{
	PadicInt x(p, r);
	x.v_ = mod_floor(v, x.mod_);
	return x;
}

PadicInt PadicInt::from_mpz(const Int& v, std::uint64_t p, unsigned r)
{
	PadicInt x(p, r);
	Int m(static_cast<unsigned long>(x.mod_));
	Int t = v % m;
	if (t < 0)
		t += m;
	x.v_ = t.get_ui();
	return x;
}

unsigned PadicInt::valuation() const
{
	if (v_ == 0)
		return r_;
	unsigned k = 0;
	std::uint64_t t = v_;
	while (t % p_ == 0) {
		t /= p_;
		++k;
	}
	return k;
}

PadicInt PadicInt::reduce(unsigned r) const
{
	if (r > r_)
		throw std::invalid_argument("cannot raise p-adic precision");
	return PadicInt(p_, r, v_);
}

PadicInt PadicInt::pow(std::uint64_t k) const
{
	PadicInt x = *this;
	x.v_ = powmod(v_, k, mod_);
	return x;
}

PadicInt PadicInt::inverse() const
{
	if (!is_unit())
		throw std::domain_error("negative valuation: inverse of a non-unit mod " + std::to_string(p_));
	// Euler: v^(phi(p^r) - 1)
	const std::uint64_t phi = mod_ / p_ * (p_ - 1);
	PadicInt x = *this;
	x.v_ = powmod(v_, phi - 1, mod_);
	return x;
}

PadicInt PadicInt::operator-() const
{
	PadicInt x = *this;
	x.v_ = v_ == 0 ? 0 : mod_ - v_;
	return x;
}

void PadicInt::check_compatible(const PadicInt& o) const
{
	if (p_ != o.p_ || r_ != o.r_)
		throw std::invalid_argument("p-adic operands differ in prime or precision");
}

PadicInt& PadicInt::operator+=(const PadicInt& o)
{
	check_compatible(o);
	v_ += o.v_;
	if (v_ >= mod_)
		v_ -= mod_;
	return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o)
{
	check_compatible(o);
	v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + mod_ - o.v_;
	return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o)
{
	check_compatible(o);
	v_ = mulmod(v_, o.v_, mod_);
	return *this;
}

std::int64_t PadicInt::centered() const
{
	return v_ > mod_ / 2 ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(mod_) : static_cast<std::int64_t>(v_);
}

std::string PadicInt::str() const
{
	return std::to_string(v_) + " mod " + std::to_string(p_) + "^" + std::to_string(r_);
}

} // namespace hgc
