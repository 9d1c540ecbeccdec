#include "concord/numeric.hpp"

#include "concord/errors.hpp"

namespace concord {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    return a - floor_div(a, b) * b;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    // extended Euclid on (a mod m, m)
    Int r0 = mod_floor(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw DomainError("mod_inverse: arguments are not coprime");
    return mod_floor(s0, m);
}

Rational sawtooth(const Rational& x) {
    if (den(x) == 1) return Rational(0);
    Int fl = floor_div(num(x), den(x));
    return x - Rational(fl) - Rational(1, 2);
}

bool is_integer(const Rational& x) { return den(x) == 1; }

std::string to_string(const Rational& x) {
    if (is_integer(x)) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

} // namespace concord
