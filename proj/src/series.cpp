#include "invoser/series.hpp"

namespace invoser {

std::vector<Rational> to_ordinary(const Series& f) {
    std::vector<Rational> out;
    out.reserve(f.coeffs().size());
    for (int n = 0; n <= f.order(); ++n)
        out.push_back(f.coeff(n) / Rational::factorial(static_cast<unsigned>(n)));
    return out;
}

Series from_ordinary(int order, std::span<const Rational> ordinary) {
    if (static_cast<int>(ordinary.size()) != order + 1)
        throw OrderMismatch("ordinary coefficient count does not match order");
    std::vector<Rational> c;
    c.reserve(ordinary.size());
    for (int n = 0; n <= order; ++n)
        c.push_back(ordinary[static_cast<std::size_t>(n)] *
                    Rational::factorial(static_cast<unsigned>(n)));
    return Series(order, std::move(c));
}

std::string series_str(const Series& f) {
    std::string out = "[";
    for (int n = 0; n <= f.order(); ++n) {
        if (n > 0) out += ", ";
        out += f.coeff(n).str();
    }
    out += "]";
    return out;
}

}  // namespace invoser
