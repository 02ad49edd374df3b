#include "ballotpath/count.hpp"

#include <stdexcept>
#include <string>

namespace ballot {

Count to_count(const Rational& q, const char* context) {
    if (!is_integral(q)) {
        throw NonIntegralError(std::string(context) + ": expected an integer, got " +
                               boost::multiprecision::numerator(q).str() + "/" +
                               boost::multiprecision::denominator(q).str());
    }
    return boost::multiprecision::numerator(q);
}

}  // namespace ballot
