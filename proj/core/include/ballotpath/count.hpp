#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballot {

// Exact arithmetic throughout: path counts grow past 64 bits quickly and the
// closed forms accumulate rational intermediates whose total must be integral.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

// A sum that should have reduced to a whole number did not.  Distinct from
// plain domain_error (a rejected argument, e.g. a vanishing denominator) so
// checks can treat "formula refuses the point" and "formula is wrong here"
// differently.
class NonIntegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numerator of an integral rational; throws NonIntegralError otherwise.
Count to_count(const Rational& q, const char* context);

}  // namespace ballot
