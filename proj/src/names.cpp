#include "bisetkit/names.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bisetkit/iso.hpp"
#include "bisetkit/subgroup_data.hpp"

namespace bisetkit {

bool is_abelian(const PermGroup& g) {
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = x + 1; y < g.order(); ++y)
            if (g.mul(static_cast<int>(x), static_cast<int>(y)) != g.mul(static_cast<int>(y), static_cast<int>(x)))
                return false;
    return true;
}

namespace {

std::vector<long long> abelian_invariant_factors(const PermGroup& g) {
    long long n = static_cast<long long>(g.order());
    // primary decomposition per prime from the element-order statistics
    std::map<long long, std::vector<int>> partitions;  // prime -> lambda (sorted desc)
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p)
            continue;
        int vmax = 0;
        long long q = 1;
        while (m % p == 0) {
            m /= p;
            ++vmax;
            q *= p;
        }
        // e_k = log_p #(elements of order dividing p^k)
        std::vector<int> e(static_cast<std::size_t>(vmax) + 1, 0);
        for (int k = 1; k <= vmax; ++k) {
            long long pk = 1;
            for (int t = 0; t < k; ++t)
                pk *= p;
            long long count = 0;
            for (std::size_t x = 0; x < g.order(); ++x)
                if (pk % g.element_order(static_cast<int>(x)) == 0)
                    ++count;
            int ek = 0;
            while (count > 1) {
                count /= p;
                ++ek;
            }
            e[static_cast<std::size_t>(k)] = ek;
        }
        // conjugate-partition recovery: lambda'_k = e_k - e_{k-1}
        std::vector<int> conj;
        for (int k = 1; k <= vmax; ++k)
            conj.push_back(e[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>(k - 1)]);
        std::vector<int> lambda;
        for (int i = 1; i <= (conj.empty() ? 0 : conj[0]); ++i) {
            int parts = 0;
            for (int c : conj)
                if (c >= i)
                    ++parts;
            lambda.push_back(parts);
        }
        std::sort(lambda.rbegin(), lambda.rend());
        partitions[p] = lambda;
    }
    if (m > 1) {
        std::vector<int> e(2, 0);
        long long count = 0;
        for (std::size_t x = 0; x < g.order(); ++x)
            if (m % g.element_order(static_cast<int>(x)) == 0)
                ++count;
        int ek = 0;
        while (count > 1) {
            count /= m;
            ++ek;
        }
        std::vector<int> lambda(static_cast<std::size_t>(ek), 1);
        partitions[m] = lambda;
    }
    std::size_t parts = 0;
    for (auto& [p, lam] : partitions)
        parts = std::max(parts, lam.size());
    std::vector<long long> factors(parts, 1);
    for (auto& [p, lam] : partitions)
        for (std::size_t i = 0; i < lam.size(); ++i) {
            long long pw = 1;
            for (int t = 0; t < lam[i]; ++t)
                pw *= p;
            factors[i] *= pw;
        }
    std::sort(factors.begin(), factors.end());
    return factors;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

std::string group_name(const PermGroup& g) {
    std::size_t n = g.order();
    if (n == 1)
        return "1";
    if (is_abelian(g)) {
        auto factors = abelian_invariant_factors(g);
        if (factors.size() == 2 && factors[0] == 2 && factors[1] == 2)
            return "V4";
        std::ostringstream out;
        for (std::size_t i = 0; i < factors.size(); ++i)
            out << (i ? "x" : "") << "C" << factors[i];
        return out.str();
    }
    // non-abelian catalog, tried in a fixed order
    for (int k = 3; factorial(k) <= static_cast<long long>(n); ++k)
        if (factorial(k) == static_cast<long long>(n) && iso_test(g, *symmetric_group(k)))
            return "S" + std::to_string(k);
    for (int k = 4; factorial(k) / 2 <= static_cast<long long>(n); ++k)
        if (factorial(k) / 2 == static_cast<long long>(n) && iso_test(g, *alternating_group(k)))
            return "A" + std::to_string(k);
    if (n % 2 == 0 && n >= 6 && iso_test(g, *dihedral_group(static_cast<int>(n))))
        return "D" + std::to_string(n);
    if (n == 8 && iso_test(g, *quaternion_group()))
        return "Q8";
    std::ostringstream out;
    out << "G" << n << "h" << std::hex << (hash_int_vector(g.order_multiset()) & 0xffffff);
    return out.str();
}

}  // namespace bisetkit
