#include "hgc/qseries.hpp"

#include <stdexcept>

#include "hgc/padic.hpp"

namespace hgc {

namespace {

bool is_nonpositive_integer(const Rat& x)
{
	return x.get_den() == 1 && x <= 0;
}

} // namespace

Rat terminating_hgs(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& z)
{
	bool found = false;
	Int stop = 0;
	for (const auto& a : upper) {
		if (!is_nonpositive_integer(a))
			continue;
		const Int n = -a.get_num();
		if (!found || n < stop)
			stop = n;
		found = true;
	}
	if (!found)
		throw std::invalid_argument("series does not terminate: no nonpositive integer upper parameter");
	if (!stop.fits_ulong_p())
		throw ResourceCapError("termination index too large");
	const std::uint64_t last = stop.get_ui();
	Rat term = 1, acc = 1;
	for (std::uint64_t k = 0; k < last; ++k) {
		const Rat kk(static_cast<unsigned long>(k));
		for (const auto& b : lower) {
			if (b + kk == 0)
				throw std::domain_error("lower parameter " + to_string(b) + " gives a zero denominator at term " +
					std::to_string(k + 1));
		}
		for (const auto& a : upper)
			term *= a + kk;
		for (const auto& b : lower)
			term /= b + kk;
		term *= z;
		term /= kk + 1;
		acc += term;
	}
	acc.canonicalize();
	return acc;
}

std::string to_string(ClassicalIdentity id)
{
	switch (id) {
	case ClassicalIdentity::kummer:
		return "kummer";
	case ClassicalIdentity::karlsson_minton:
		return "karlsson_minton";
	case ClassicalIdentity::dougall:
		return "dougall";
	case ClassicalIdentity::whipple:
		return "whipple";
	}
	return "unknown";
}

ClassicalIdentity parse_classical_identity(const std::string& name)
{
	if (name == "kummer")
		return ClassicalIdentity::kummer;
	if (name == "karlsson_minton" || name == "karlsson-minton")
		return ClassicalIdentity::karlsson_minton;
	if (name == "dougall")
		return ClassicalIdentity::dougall;
	if (name == "whipple")
		return ClassicalIdentity::whipple;
	throw std::invalid_argument("unknown classical identity: " + name);
}

IdentityCheck check_kummer(const Rat& a, const Rat& b)
{
	if (!(b.get_den() == 1 && b < 0))
		throw std::invalid_argument("Kummer instance needs b a negative integer");
	const std::uint64_t n = Int(-b.get_num()).get_ui();
	IdentityCheck r;
	r.lhs = terminating_hgs({a, b}, {a - b + 1}, Rat(-1));
	const Rat den = rising_factorial(a / 2 + 1, n);
	if (den == 0)
		throw std::domain_error("Kummer right side has a zero denominator");
	r.rhs = rising_factorial(a + 1, n) / den;
	r.rhs.canonicalize();
	r.equal = r.lhs == r.rhs;
	return r;
}

IdentityCheck check_karlsson_minton(const std::vector<Rat>& b, const std::vector<std::uint64_t>& m)
{
	if (b.size() != m.size() || b.empty())
		throw std::invalid_argument("Karlsson-Minton instance needs matching b and m lists");
	std::uint64_t total = 0;
	std::vector<Rat> upper{Rat(0)};
	for (std::size_t i = 0; i < b.size(); ++i) {
		total += m[i];
		upper.push_back(b[i] + Rat(static_cast<unsigned long>(m[i])));
	}
	upper[0] = -Rat(static_cast<unsigned long>(total));
	IdentityCheck r;
	r.lhs = terminating_hgs(upper, b, Rat(1));
	Rat rhs = rising_factorial(Rat(1), total);
	for (std::size_t i = 0; i < b.size(); ++i) {
		const Rat d = rising_factorial(b[i], m[i]);
		if (d == 0)
			throw std::domain_error("Karlsson-Minton right side has a zero denominator");
		rhs /= d;
	}
	if (total % 2 == 1)
		rhs = -rhs;
	rhs.canonicalize();
	r.rhs = rhs;
	r.equal = r.lhs == r.rhs;
	return r;
}

IdentityCheck check_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint64_t m)
{
	const Rat mm(static_cast<unsigned long>(m));
	const Rat e = 2 * a + 1 - b - c - d + mm;
	const Rat one(1);
	IdentityCheck r;
	r.lhs = terminating_hgs({a, a / 2 + 1, b, c, d, e, -mm},
		{a / 2, one + a - b, one + a - c, one + a - d, one + a - e, one + a + mm}, Rat(1));
	const Rat num = rising_factorial(one + a, m) * rising_factorial(one + a - b - c, m) *
		rising_factorial(one + a - b - d, m) * rising_factorial(one + a - c - d, m);
	const Rat den = rising_factorial(one + a - b, m) * rising_factorial(one + a - c, m) *
		rising_factorial(one + a - d, m) * rising_factorial(one + a - b - c - d, m);
	if (den == 0)
		throw std::domain_error("Dougall right side has a zero denominator");
	r.rhs = num / den;
	r.rhs.canonicalize();
	r.equal = r.lhs == r.rhs;
	return r;
}

IdentityCheck check_whipple(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint64_t n)
{
	const Rat e = -Rat(static_cast<unsigned long>(n));
	const Rat one(1);
	IdentityCheck r;
	r.lhs = terminating_hgs({a, b, c, d, e}, {one + a - b, one + a - c, one + a - d, one + a - e}, Rat(1));
	const Rat ratio_den = rising_factorial(one + a - c, n) * rising_factorial(one + a - d, n);
	if (ratio_den == 0)
		throw std::domain_error("Whipple right side has a zero denominator");
	const Rat ratio = rising_factorial(one + a, n) * rising_factorial(one + a - c - d, n) / ratio_den;
	const Rat inner = terminating_hgs({one + a / 2 - b, c, d, e}, {one + a / 2, c + d + e - a, one + a - b}, Rat(1));
	r.rhs = ratio * inner;
	r.rhs.canonicalize();
	r.equal = r.lhs == r.rhs;
	return r;
}

RatSeries RatSeries::one(std::size_t n)
{
	RatSeries s(n);
	s.c_[0] = 1;
	return s;
}

RatSeries RatSeries::operator*(const RatSeries& o) const
{
	const std::size_t n = std::min(precision(), o.precision());
	RatSeries r(n);
	for (std::size_t i = 0; i <= n; ++i) {
		if (c_[i] == 0)
			continue;
		for (std::size_t j = 0; i + j <= n; ++j)
			if (o.c_[j] != 0)
				r.c_[i + j] += c_[i] * o.c_[j];
	}
	return r;
}

void RatSeries::mul_one_minus(std::size_t step)
{
	if (step == 0)
		throw std::invalid_argument("step must be positive");
	for (std::size_t i = c_.size(); i-- > step;)
		c_[i] -= c_[i - step];
}

std::vector<Int> eta_product_coeffs(std::size_t n)
{
	if (n < 1)
		throw std::invalid_argument("eta expansion needs precision at least 1");
	// Expand the product to q^{n-1}, then shift by the leading q.
	RatSeries s = RatSeries::one(n - 1);
	for (std::size_t m = 1; 2 * m <= n - 1; ++m) {
		for (int rep = 0; rep < 4; ++rep)
			s.mul_one_minus(2 * m);
		if (4 * m <= n - 1)
			for (int rep = 0; rep < 4; ++rep)
				s.mul_one_minus(4 * m);
	}
	std::vector<Int> a(n + 1, 0);
	for (std::size_t i = 0; i + 1 <= n; ++i)
		a[i + 1] = s[i];
	return a;
}

} // namespace hgc
