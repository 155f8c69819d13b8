#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/common.hpp"

namespace hgc {

/// Exact value of a terminating series sum_k prod (upper)_k / prod (lower)_k z^k / k!.
/// Some upper parameter must be a nonpositive integer.
Rat terminating_hgs(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& z);

enum class ClassicalIdentity { kummer, karlsson_minton, dougall, whipple };

std::string to_string(ClassicalIdentity id);
ClassicalIdentity parse_classical_identity(const std::string& name);

struct IdentityCheck
{
	Rat lhs;
	Rat rhs;
	bool equal = false;
};

/// Kummer: 2F1(a, b; a-b+1; -1) = (a+1)_{-b} / (a/2+1)_{-b}, for b a negative integer.
IdentityCheck check_kummer(const Rat& a, const Rat& b);
/// Karlsson-Minton with nonnegative integers m_i and lower parameters b_i.
IdentityCheck check_karlsson_minton(const std::vector<Rat>& b, const std::vector<std::uint64_t>& m);
/// Dougall's terminating very-well-poised 7F6; e is fixed by 2a+1 = b+c+d+e-m.
IdentityCheck check_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint64_t m);
/// Whipple's 5F4 to 4F3 transformation with e = -N.
IdentityCheck check_whipple(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint64_t n);

/// Power series with integer coefficients, truncated after index n.
class RatSeries
{
public:
	explicit RatSeries(std::size_t n) : c_(n + 1, 0) {}
	static RatSeries one(std::size_t n);

	std::size_t precision() const { return c_.size() - 1; }
	const Int& operator[](std::size_t i) const { return c_[i]; }
	Int& operator[](std::size_t i) { return c_[i]; }
	const std::vector<Int>& coeffs() const { return c_; }

	RatSeries operator*(const RatSeries& o) const;
	/// Multiplication by (1 - q^step), in place.
	void mul_one_minus(std::size_t step);

private:
	std::vector<Int> c_;
};

/// Coefficients a(0..n) of q prod_{m>=1} (1-q^{2m})^4 (1-q^{4m})^4.
std::vector<Int> eta_product_coeffs(std::size_t n);

} // namespace hgc
