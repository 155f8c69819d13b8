#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hgc/common.hpp"
#include "hgc/padic_int.hpp"

namespace hgc {

/// Polynomial over F_p, constant term first.
using Poly = std::vector<std::uint64_t>;

struct FieldOptions
{
	/// Largest field size for which tables are built.
	std::uint64_t max_q = std::uint64_t(1) << 20;
};

/// A realized finite field F_{p^e}.
///
/// Elements are encoded as integers in [0, q) whose base-p digits are the
/// polynomial coefficients over the modulus (constant term least significant).
/// The context is immutable after construction and may be shared freely.
class FieldCtx
{
public:
	using Elem = std::uint32_t;

	static std::shared_ptr<const FieldCtx> create(std::uint64_t p, unsigned e = 1,
		std::optional<Poly> modulus = std::nullopt, const FieldOptions& options = {});

	std::uint64_t p() const { return p_; }
	unsigned e() const { return e_; }
	std::uint64_t q() const { return q_; }
	/// Order of the multiplicative group, q - 1.
	std::uint64_t order() const { return q_ - 1; }
	const Poly& modulus() const { return modulus_; }
	Elem generator() const { return generator_; }
	const std::vector<std::pair<std::uint64_t, unsigned>>& order_factorization() const { return factors_; }

	Elem add(Elem a, Elem b) const;
	Elem sub(Elem a, Elem b) const;
	Elem neg(Elem a) const { return sub(0, a); }
	Elem mul(Elem a, Elem b) const;
	Elem inv(Elem a) const;
	Elem pow(Elem a, std::uint64_t k) const;
	/// Embeds an integer into the prime subfield.
	Elem from_int(std::int64_t v) const { return static_cast<Elem>(mod_floor(v, p_)); }

	/// Exponent t in [0, q-2] with generator^t = x. Throws std::domain_error for x = 0.
	std::uint64_t dlog(Elem x) const;
	/// Raw table access: dlog or -1 for zero.
	std::int64_t log_or_neg(Elem x) const { return log_[x]; }
	Elem exp(std::uint64_t t) const { return exp_[t % (q_ - 1)]; }
	/// dlog(1 - generator^t), or -1 when generator^t = 1.
	std::int64_t log_one_minus_exp(std::uint64_t t) const { return log_one_minus_[t % (q_ - 1)]; }

	Elem frobenius(Elem x) const { return pow(x, p_); }
	/// Trace to the prime field; the result is an integer in [0, p).
	std::uint64_t trace(Elem x) const;
	/// Norm to the prime field; the result is an integer in [0, p).
	std::uint64_t norm(Elem x) const;

private:
	FieldCtx() = default;

	std::uint64_t p_ = 0;
	unsigned e_ = 0;
	std::uint64_t q_ = 0;
	Poly modulus_;
	Elem generator_ = 0;
	std::vector<std::pair<std::uint64_t, unsigned>> factors_;
	std::vector<std::int32_t> log_;
	std::vector<Elem> exp_;
	std::vector<std::int32_t> log_one_minus_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// A field element together with its context.
struct FqElem
{
	FieldPtr ctx;
	FieldCtx::Elem value = 0;

	FqElem operator+(const FqElem& o) const { return {ctx, ctx->add(value, o.value)}; }
	FqElem operator-(const FqElem& o) const { return {ctx, ctx->sub(value, o.value)}; }
	FqElem operator*(const FqElem& o) const { return {ctx, ctx->mul(value, o.value)}; }
	bool operator==(const FqElem& o) const { return value == o.value; }
};

/// The trace and norm of x to F_p.
std::pair<std::uint64_t, std::uint64_t> trace_and_norm(const FieldCtx& ctx, FieldCtx::Elem x);

/// Teichmuller lift of x mod p to Z/p^r: the unique root of unity congruent
/// to x, found by iterating t -> t^p. Zero maps to zero.
PadicInt teichmuller(std::int64_t x, std::uint64_t p, unsigned r);

namespace poly {

/// Irreducibility over F_p by Rabin's test. The input must be monic.
bool is_irreducible(const Poly& f, std::uint64_t p);

/// Smallest monic irreducible polynomial of degree e over F_p, ordered by
/// the base-p encoding of its lower coefficients.
Poly smallest_irreducible(std::uint64_t p, unsigned e);

} // namespace poly

} // namespace hgc
