#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "hgc/common.hpp"
#include "hgc/padic_int.hpp"

namespace hgc {

/// num / den in Z/p^r. Throws std::domain_error when p divides the reduced denominator.
PadicInt padic_from_rational(const Rat& x, std::uint64_t p, unsigned r);
PadicInt padic_from_rational(const Int& num, const Int& den, std::uint64_t p, unsigned r);

/// Morita's p-adic Gamma at the class of x mod p^r.
PadicInt gamma_p(const PadicInt& x);
PadicInt gamma_p(const Rat& x, std::uint64_t p, unsigned r);

/// Least positive residue of x mod p, with p in place of 0.
std::uint64_t a0(const Rat& x, std::uint64_t p);

/// (a)_k mod p^r.
PadicInt rising_factorial_p(const Rat& a, std::uint64_t k, std::uint64_t p, unsigned r);

/// Exact rising factorial (a)_k.
Rat rising_factorial(const Rat& a, std::uint64_t k);

/// A truncated series  scale * sum_{k=start}^{truncation} prod (upper)_k / prod (lower)_k * z^k / k!.
struct HgsParams
{
	std::vector<Rat> upper;
	std::vector<Rat> lower;
	std::variant<Rat, PadicInt> argument = Rat(1);
	std::uint64_t truncation = 0;
	std::uint64_t start = 0;
	Rat scale = 1;
};

/// Evaluates the truncated series mod p^r. Each term is formed exactly and
/// must be p-integral; otherwise throws std::domain_error naming the term.
PadicInt trunc_hgs_eval(const HgsParams& params, std::uint64_t p, unsigned r);

/// The same series as an exact rational (rational argument only).
Rat trunc_hgs_exact(const HgsParams& params);

/// (H_k, H_k^odd) with H_k^odd = sum_{j<=k} 1/(2j-1).
std::pair<Rat, Rat> harmonic_sums(std::uint64_t k);

/// F_{p^s-1} / F_{p^{s-1}-1} mod p^r for the series with the given parameters.
/// The argument is replaced by its Teichmuller lift when teichmuller_argument is set.
/// Throws std::domain_error when the denominator truncation is not a unit.
PadicInt dwork_ratio(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& argument,
	std::uint64_t p, unsigned s, unsigned r, bool teichmuller_argument = true);

} // namespace hgc
