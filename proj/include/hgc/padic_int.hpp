#pragma once

#include <cstdint>
#include <string>

#include "hgc/common.hpp"

namespace hgc {

/// An element of Z/p^r Z with explicit prime and precision.
class PadicInt
{
public:
	PadicInt() = default;
	PadicInt(std::uint64_t p, unsigned r, std::uint64_t residue = 0);

	static PadicInt from_int(std::int64_t v, std::uint64_t p, unsigned r);
	static PadicInt from_mpz(const Int& v, std::uint64_t p, unsigned r);

	std::uint64_t p() const { return p_; }
	unsigned precision() const { return r_; }
	std::uint64_t modulus() const { return mod_; }
	std::uint64_t residue() const { return v_; }

	/// p-adic valuation of the residue, capped at the precision.
	unsigned valuation() const;
	bool is_unit() const { return v_ % p_ != 0; }
	bool is_zero() const { return v_ == 0; }

	/// Reduction to a lower precision.
	PadicInt reduce(unsigned r) const;
	PadicInt pow(std::uint64_t k) const;
	/// Multiplicative inverse; throws std::domain_error unless a unit.
	PadicInt inverse() const;

	PadicInt operator-() const;
	PadicInt& operator+=(const PadicInt& o);
	PadicInt& operator-=(const PadicInt& o);
	PadicInt& operator*=(const PadicInt& o);
	PadicInt& operator/=(const PadicInt& o) { return *this *= o.inverse(); }
	friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
	friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
	friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
	friend PadicInt operator/(PadicInt a, const PadicInt& b) { return a /= b; }
	bool operator==(const PadicInt& o) const { return p_ == o.p_ && r_ == o.r_ && v_ == o.v_; }

	/// Residue as a signed representative in (-p^r/2, p^r/2].
	std::int64_t centered() const;
	std::string str() const;

private:
	void check_compatible(const PadicInt& o) const;

	std::uint64_t p_ = 2;
	unsigned r_ = 1;
	std::uint64_t mod_ = 2;
	std::uint64_t v_ = 0;
};

} // namespace hgc
