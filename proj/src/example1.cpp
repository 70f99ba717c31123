#include "hexalink/example1.hpp"

namespace hexalink {

namespace {

Line<Rational> line_pm(long long px_n, long long px_d, long long py_n, long long py_d,
                       long long pz_n, long long pz_d, long long mx_n, long long mx_d,
                       long long my_n, long long my_d, long long mz_n, long long mz_d) {
    return Line<Rational>::from_dq(DualQuaternion<Rational>::vectorial(
        {Rational(px_n, px_d), Rational(py_n, py_d), Rational(pz_n, pz_d)},
        {Rational(mx_n, mx_d), Rational(my_n, my_d), Rational(mz_n, mz_d)}));
}

} // namespace

Linkage<Rational> example1_linkage() {
    // h1 = -(7/11) eps i + j                  h4 = (7/11) eps i - j
    // h2 = (2e - 3/5)i - (3/2 e + 4/5)j - e k h5 = (2e - 3/5)i + (3/2 e + 4/5)j + e k
    // h3 = (-2e + 3/5)i + (3/2 e + 4/5)j + 2e k
    // h6 = (-2e + 3/5)i - (3/2 e + 4/5)j - 2e k
    return Linkage<Rational>::from_lines({
        line_pm(0, 1, 1, 1, 0, 1, /*m*/ -7, 11, 0, 1, 0, 1),
        line_pm(-3, 5, -4, 5, 0, 1, /*m*/ 2, 1, -3, 2, -1, 1),
        line_pm(3, 5, 4, 5, 0, 1, /*m*/ -2, 1, 3, 2, 2, 1),
        line_pm(0, 1, -1, 1, 0, 1, /*m*/ 7, 11, 0, 1, 0, 1),
        line_pm(-3, 5, 4, 5, 0, 1, /*m*/ 2, 1, 3, 2, 1, 1),
        line_pm(3, 5, -4, 5, 0, 1, /*m*/ -2, 1, -3, 2, -2, 1),
    });
}

SymConfiguration<Rational> example1_configuration(const Rational& t) {
    return SymConfiguration<Rational>::of(ConfigParam<Rational>::finite(Rational(5, 4) * t),
                                          ConfigParam<Rational>::finite(t),
                                          ConfigParam<Rational>::finite(t));
}

} // namespace hexalink
