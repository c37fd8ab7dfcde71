#include "bisetkit/rational.hpp"

#include "bisetkit/errors.hpp"

namespace bisetkit {

void Rat::normalize() {
    if (den_ == 0)
        throw DimensionMismatch("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0)
        throw DimensionMismatch("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

}  // namespace bisetkit
