#include "twoschur/format.hpp"

namespace twoschur {

long long signed_residue(Residue c, Residue p)
{
    c %= p;
    return 2ULL * c > p ? static_cast<long long>(c) - static_cast<long long>(p) : static_cast<long long>(c);
}

std::string to_text(const AlgebraElement& x)
{
    std::string out;
    const Residue p = x.context().p();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const long long c = signed_residue(x.coeffs()[i], p);
        if (c == 0) continue;
        const bool negative = c < 0;
        const unsigned long long mag = negative ? static_cast<unsigned long long>(-c) : static_cast<unsigned long long>(c);

        std::string term;
        if (i == 0) {
            term = std::to_string(mag);
        } else {
            term = "b(" + std::to_string(i) + ")";
            if (mag != 1) term = std::to_string(mag) + "*" + term;
        }

        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace twoschur
