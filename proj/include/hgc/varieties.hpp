#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/charsum.hpp"
#include "hgc/cyclotomic.hpp"
#include "hgc/finite_field.hpp"

namespace hgc {

struct CountResult
{
	std::uint64_t q = 0;
	unsigned n = 0;
	FieldCtx::Elem lambda = 0;
	/// Number of (x_1, ..., x_{n-1}, y) in F_q^n on C_{n,lambda}.
	Int affine_count;
	/// One point at infinity plus the affine count.
	Int count_with_infinity() const { return affine_count + 1; }
};

struct BruteOptions
{
	/// Largest number of (x_1, ..., x_{n-1}) tuples enumerated.
	std::uint64_t max_points = 50'000'000;
	unsigned threads = 1;
};

/// Enumerates F_q^{n-1} and counts the y with y^n = f(x). Throws ResourceCapError past the cap.
CountResult count_affine_brute(const FieldPtr& ctx, unsigned n, FieldCtx::Elem lambda, const BruteOptions& options = {});
/// Point count from the hypergeometric formula; throws std::logic_error if the sum is not integral.
CountResult count_via_hgf(const FieldPtr& ctx, unsigned n, FieldCtx::Elem lambda);
/// count_via_hgf for every lambda in F_q, indexed by encoding.
std::vector<CountResult> count_via_hgf_all(const FieldPtr& ctx, unsigned n);

/// a_p(lambda) = -sum_x eta_2(x(1-x)(x-lambda)) over the prime field; lambda not in {0, 1}.
long legendre_trace(const FieldPtr& ctx, FieldCtx::Elem lambda);

/// A factor 1 + c_1 T + c_2 T^2 (c_2 may be zero) of a zeta function.
struct ZetaFactor
{
	std::string label;
	CycInt c1;
	CycInt c2;
	bool numerator = false;

	/// r_1^s + r_2^s for the reciprocal roots r_i.
	CycInt power_sum(unsigned s) const;
};

/// Polynomial in T with cyclotomic coefficients, constant term first.
using ZetaPoly = std::vector<CycInt>;

struct ZetaSpec
{
	std::uint64_t p = 0;
	unsigned n = 0;
	/// J(eta_3, eta_3) for n = 3, J(eta_4, eta_2) for n = 4.
	CycInt jacobi;
	/// a(p) of the weight 4 eta product (n = 4 only).
	Int ap;
	std::vector<ZetaFactor> factors;
	/// Indices into factors of the old part (n = 4 only); the rest are new.
	std::vector<std::size_t> old_part;

	/// N_s from the logarithmic derivative; throws if the value is not rational.
	Int count(unsigned s) const;
	ZetaPoly numerator() const;
	ZetaPoly denominator() const;
	/// Numerator and denominator of the old and new parts.
	ZetaPoly numerator_of(bool old) const;
	ZetaPoly denominator_of(bool old) const;
};

ZetaSpec zeta_build(std::uint64_t p, unsigned n);

ZetaPoly zeta_poly_mul(const ZetaPoly& a, const ZetaPoly& b);
bool zeta_poly_equal(const ZetaPoly& a, const ZetaPoly& b);

struct GaussianInt
{
	Int re;
	Int im;
	bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
	Int norm() const { return re * re + im * im; }
};

struct HeckePsi
{
	std::uint64_t p = 0;
	/// The generator a + b i of the chosen prime above p.
	GaussianInt alpha;
	GaussianInt chi1;
	GaussianInt psi;
	/// -J(psi_P, psi_P^2) for the quartic residue character mod (alpha).
	GaussianInt minus_jacobi;
	std::string normalization;
};

/// psi(a + b i) = (-1)^b (a + b i) chi_1(a + b i) for the prime above p = 1 mod 4.
HeckePsi hecke_psi(std::uint64_t p);
/// chi_1 of a Gaussian integer; zero when a and b have the same parity.
GaussianInt hecke_chi1(const Int& a, const Int& b);
/// -J(psi_P, psi_P^2) over Z[i]/(a + b i) = F_p.
GaussianInt quartic_minus_jacobi(std::uint64_t p, const Int& a, const Int& b);

} // namespace hgc
