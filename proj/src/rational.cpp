#include "treeshuffle/rational.hpp"

#include <cctype>
#include <vector>

namespace treeshuffle {

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits(num) || !digits(den))
        throw InputError("invalid rational \"" + std::string(text) +
                         "\": expected \"p\" or \"p/q\" with decimal digits");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw InputError("invalid rational \"" + std::string(text) + "\": zero denominator");

    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

std::string format_integer(const Integer& n) {
    return n.get_str();
}

Integer factorial(std::size_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer bell_number(std::size_t n) {
    // Bell triangle.
    std::vector<Integer> row{1};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Integer> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (std::size_t j = 0; j < i; ++j) next.push_back(next[j] + row[j]);
        row = std::move(next);
    }
    return row.front();
}

Integer ordered_bell_number(std::size_t n) {
    // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
    std::vector<Integer> a(n + 1);
    a[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Integer sum = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(k));
            sum += binom * a[m - k];
        }
        a[m] = sum;
    }
    return a[n];
}

Integer derangement_number(std::size_t n) {
    if (n == 0) return 1;
    if (n == 1) return 0;
    Integer prev2 = 1, prev1 = 0;
    for (std::size_t m = 2; m <= n; ++m) {
        Integer cur = Integer(static_cast<unsigned long>(m - 1)) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

} // namespace treeshuffle
