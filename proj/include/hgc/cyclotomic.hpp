#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hgc/common.hpp"
#include "hgc/padic_int.hpp"

namespace hgc {

class FieldCtx;

/// The m-th cyclotomic polynomial, coefficients constant term first. Cached.
std::shared_ptr<const std::vector<Int>> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// An element of Z[zeta_m], stored as sum c_t zeta_m^t modulo x^m - 1.
///
/// The representation is not unique; equality and serialization go through
/// reduction modulo the m-th cyclotomic polynomial. Operands of different
/// orders are lifted to the lcm of their orders.
class CycInt
{
public:
	CycInt() : m_(1), c_(1) {}
	explicit CycInt(unsigned m);

	static CycInt constant(unsigned m, const Int& v);
	/// zeta_m^t
	static CycInt zeta(unsigned m, std::int64_t t = 1);

	unsigned order() const { return m_; }
	const std::vector<Int>& coeffs() const { return c_; }

	/// c_{t mod m} += delta
	void add_term(std::uint64_t t, long delta) { c_[t % m_] += delta; }
	void add_term(std::uint64_t t, const Int& delta) { c_[t % m_] += delta; }

	/// Same value viewed in Z[zeta_{m2}]; m must divide m2.
	CycInt lifted(unsigned m2) const;
	/// Galois conjugation zeta -> zeta^t; t must be coprime to m.
	CycInt conj(std::int64_t t) const;
	/// Complex conjugation.
	CycInt bar() const { return conj(-1); }
	CycInt pow(unsigned k) const;

	/// Coefficients of the Phi_m-reduced representative (length phi(m)).
	std::vector<Int> reduced() const;
	/// The canonical representative: reduced, padded back to length m.
	CycInt canonical() const;
	bool is_zero() const;
	/// The value as a rational integer, when it is one.
	std::optional<Int> to_integer() const;
	/// gcd of the reduced coefficients.
	Int content() const;
	std::complex<double> to_complex() const;

	CycInt operator-() const;
	CycInt& operator+=(const CycInt& o);
	CycInt& operator-=(const CycInt& o);
	CycInt& operator*=(const CycInt& o);
	CycInt& operator*=(const Int& k);
	/// Exact division of every coefficient; k must divide each.
	CycInt& divexact(const Int& k);
	friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
	friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
	friend CycInt operator*(const CycInt& a, const CycInt& b);
	friend CycInt operator*(CycInt a, const Int& k) { return a *= k; }
	friend CycInt operator*(const Int& k, CycInt a) { return a *= k; }
	friend bool operator==(const CycInt& a, const CycInt& b);
	friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

private:
	unsigned m_;
	std::vector<Int> c_;
};

/// A quotient num / den of a cyclotomic integer by a positive integer.
class CycRat
{
public:
	CycRat() : den_(1) {}
	CycRat(CycInt num, Int den = 1);

	const CycInt& num() const { return num_; }
	const Int& den() const { return den_; }
	unsigned order() const { return num_.order(); }

	/// Canonical form: Phi-reduced numerator, positive denominator coprime to
	/// the numerator content.
	CycRat normalized() const;
	bool is_integral() const { return normalized().den_ == 1; }
	bool is_zero() const { return num_.is_zero(); }
	std::optional<Rat> to_rational() const;
	std::complex<double> to_complex() const;
	CycRat conj(std::int64_t t) const { return CycRat(num_.conj(t), den_); }

	CycRat operator-() const { return CycRat(-num_, den_); }
	CycRat& operator+=(const CycRat& o);
	CycRat& operator-=(const CycRat& o);
	CycRat& operator*=(const CycRat& o);
	friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
	friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
	friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
	friend bool operator==(const CycRat& a, const CycRat& b);
	friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

private:
	CycInt num_;
	Int den_;
};

/// Embeds Z[zeta_m] into Z/p^r by zeta_m -> teichmuller(g^((p-1)/m)), where g is
/// the generator of the prime field ctx. m must divide p - 1.
PadicInt cyc_embed_padic(const CycInt& a, std::uint64_t p, unsigned r, const FieldCtx& ctx);
/// As above for a quotient. Powers of p in the denominator are allowed when the
/// embedded numerator absorbs them; otherwise throws std::domain_error.
PadicInt cyc_embed_padic(const CycRat& a, std::uint64_t p, unsigned r, const FieldCtx& ctx);

} // namespace hgc
