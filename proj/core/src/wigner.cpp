#include "magic/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace magic {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return HalfInt(v);
        }
        int num = std::stoi(text.substr(0, slash), &used);
        if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument(text);
        return from_twice(num);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a half-integer: '" + text + "'");
    }
}

double CouplingValue::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::sqrt(square.convert_to<double>());
}

CouplingValue CouplingValue::operator*(const CouplingValue& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, square * o.square};
}

int parity_sign(int twice_k) {
    if (twice_k % 2 != 0) throw std::logic_error("parity of a half-integer");
    return (twice_k / 2) % 2 == 0 ? 1 : -1;
}

BigInt factorial(int n) {
    if (n < 0) throw std::logic_error("negative factorial");
    // 2j <= 200 keeps every Racah argument below this bound
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(4 * max_twice_j + 2);
        t[0] = 1;
        for (size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<unsigned>(i);
        return t;
    }();
    if (static_cast<size_t>(n) < table.size()) return table[n];
    BigInt r = table.back();
    for (int i = static_cast<int>(table.size()); i <= n; ++i) r *= i;
    return r;
}

namespace {

void check_magnitude(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("negative angular momentum " + j.str());
    if (j.twice() > max_twice_j) throw std::invalid_argument("angular momentum above cap: " + j.str());
}

void check_projection(HalfInt j, HalfInt m) {
    if (((j.twice() - m.twice()) % 2) != 0)
        throw std::invalid_argument("projection " + m.str() + " has wrong parity for j=" + j.str());
}

// factorial of an integer combination given in twice-units
BigInt fac2(int twice) { return factorial(twice / 2); }

// Triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
Rational delta_coeff(HalfInt a, HalfInt b, HalfInt c) {
    int A = a.twice(), B = b.twice(), C = c.twice();
    BigInt num = fac2(A + B - C) * fac2(A - B + C) * fac2(-A + B + C);
    return Rational(num, fac2(A + B + C + 2));
}

CouplingValue from_sum(int phase, const Rational& sum, const Rational& prefactor_sq) {
    if (sum == 0 || prefactor_sq == 0) return {};
    int s = sum > 0 ? phase : -phase;
    return {s, sum * sum * prefactor_sq};
}

}  // namespace

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
    int A = a.twice(), B = b.twice(), C = c.twice();
    if ((A + B + C) % 2 != 0) return false;
    return C >= std::abs(A - B) && C <= A + B;
}

CouplingValue wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    check_magnitude(j1); check_magnitude(j2); check_magnitude(j3);
    check_projection(j1, m1); check_projection(j2, m2); check_projection(j3, m3);

    if (m1.twice() + m2.twice() + m3.twice() != 0) return {};
    if (!triangle(j1, j2, j3)) return {};
    if (std::abs(m1.twice()) > j1.twice() || std::abs(m2.twice()) > j2.twice() ||
        std::abs(m3.twice()) > j3.twice())
        return {};

    const int J1 = j1.twice(), J2 = j2.twice(), J3 = j3.twice();
    const int M1 = m1.twice(), M2 = m2.twice(), M3 = m3.twice();

    // sum over k of (-1)^k / [k! (j3-j2+k+m1)! (j3-j1+k-m2)! (j1+j2-j3-k)! (j1-k-m1)! (j2-k+m2)!]
    int kmin = std::max({0, J2 - J3 - M1, J1 - J3 + M2});
    int kmax = std::min({J1 + J2 - J3, J1 - M1, J2 + M2});
    Rational sum = 0;
    for (int k = kmin; k <= kmax; k += 2) {
        BigInt den = fac2(k) * fac2(J3 - J2 + k + M1) * fac2(J3 - J1 + k - M2) *
                     fac2(J1 + J2 - J3 - k) * fac2(J1 - k - M1) * fac2(J2 - k + M2);
        Rational term(1, den);
        if ((k / 2) % 2) sum -= term; else sum += term;
    }

    Rational pre = delta_coeff(j1, j2, j3) *
                   Rational(fac2(J1 + M1) * fac2(J1 - M1) * fac2(J2 + M2) * fac2(J2 - M2) *
                            fac2(J3 + M3) * fac2(J3 - M3));
    return from_sum(parity_sign(J1 - J2 - M3), sum, pre);
}

CouplingValue wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6}) check_magnitude(j);
    if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) ||
        !triangle(j4, j5, j3))
        return {};

    const int a1 = j1.twice() + j2.twice() + j3.twice();
    const int a2 = j1.twice() + j5.twice() + j6.twice();
    const int a3 = j4.twice() + j2.twice() + j6.twice();
    const int a4 = j4.twice() + j5.twice() + j3.twice();
    const int b1 = j1.twice() + j2.twice() + j4.twice() + j5.twice();
    const int b2 = j2.twice() + j3.twice() + j5.twice() + j6.twice();
    const int b3 = j3.twice() + j1.twice() + j6.twice() + j4.twice();

    int tmin = std::max({a1, a2, a3, a4});
    int tmax = std::min({b1, b2, b3});
    Rational sum = 0;
    for (int t = tmin; t <= tmax; t += 2) {
        BigInt den = fac2(t - a1) * fac2(t - a2) * fac2(t - a3) * fac2(t - a4) * fac2(b1 - t) *
                     fac2(b2 - t) * fac2(b3 - t);
        Rational term(fac2(t + 2), den);
        if ((t / 2) % 2) sum -= term; else sum += term;
    }

    Rational pre = delta_coeff(j1, j2, j3) * delta_coeff(j1, j5, j6) * delta_coeff(j4, j2, j6) *
                   delta_coeff(j4, j5, j3);
    return from_sum(1, sum, pre);
}

}  // namespace magic
