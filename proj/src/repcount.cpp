#include "stratquant/repcount.hpp"

#include <stdexcept>

#include "stratquant/fock.hpp"
#include "stratquant/linalg.hpp"
#include "stratquant/rng.hpp"

namespace stratquant {

int DeltaMonomial::level() const {
    int k = 0;
    for (size_t j = 0; j < exponents.size(); ++j) {
        k += (static_cast<int>(j) + 1) * exponents[j];
    }
    return k;
}

namespace {

void enumerate_rec(int s, int pos, int remaining, std::vector<int>& current,
                   std::vector<DeltaMonomial>& out) {
    if (pos == s - 1) {
        int weight = s;
        if (remaining % weight == 0) {
            current[pos] = remaining / weight;
            out.push_back(DeltaMonomial{current});
        }
        return;
    }
    int weight = pos + 1;
    for (int e = remaining / weight; e >= 0; --e) {
        current[pos] = e;
        enumerate_rec(s, pos + 1, remaining - e * weight, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<DeltaMonomial> enumerate_monomials(int s, int k) {
    if (s < 1 || k < 0) {
        throw std::invalid_argument("enumerate_monomials needs s >= 1, k >= 0");
    }
    std::vector<DeltaMonomial> out;
    std::vector<int> current(s, 0);
    enumerate_rec(s, 0, k, current, out);
    return out;
}

WeightTuple delta_weight(const DeltaMonomial& mono, int ell) {
    const int s = static_cast<int>(mono.exponents.size());
    if (ell < s) {
        throw std::invalid_argument("delta_weight needs ell >= s");
    }
    WeightTuple lambda(ell, 0);
    // delta_j has weight (2,..,2,0,..) with j twos
    for (int i = 0; i < s; ++i) {
        int count = 0;
        for (int j = i; j < s; ++j) count += mono.exponents[j];
        lambda[i] = 2 * count;
    }
    return lambda;
}

mpz_class weyl_dim(const WeightTuple& lambda, int ell) {
    if (static_cast<int>(lambda.size()) != ell) {
        throw std::invalid_argument("weight tuple length must equal ell");
    }
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
        if (lambda[i] < lambda[i + 1]) {
            throw std::invalid_argument("weight tuple must be nonincreasing");
        }
    }
    mpz_class num(1), den(1);
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    }
    mpz_class dim, rem;
    mpz_fdiv_qr(dim.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) {
        throw std::logic_error("Weyl dimension did not divide exactly");
    }
    return dim;
}

mpz_class section_dim(int s, int ell, int k) {
    if (s > ell) {
        throw std::invalid_argument("section_dim needs s <= ell");
    }
    mpz_class total(0);
    for (const DeltaMonomial& mono : enumerate_monomials(s, k)) {
        total += weyl_dim(delta_weight(mono, ell), ell);
    }
    return total;
}

mpz_class oracle_dim(int s, int ell, int k, uint64_t seed) {
    if (s < 1 || ell < 1 || k < 0) {
        throw std::invalid_argument("oracle_dim needs s, ell >= 1 and k >= 0");
    }
    std::vector<Poly> monomials = w_monomials(ell, k);
    const int cols = static_cast<int>(monomials.size());
    const int samples = cols + 8;
    SplitMix64 rng(seed);
    const auto wv = w_vars(ell);
    Matrix evaluation(samples, cols);
    for (int row = 0; row < samples; ++row) {
        // random T: ell x s, W = T T^t has rank <= s
        std::vector<std::vector<mpq_class>> t(ell, std::vector<mpq_class>(s));
        for (int j = 0; j < ell; ++j)
            for (int a = 0; a < s; ++a) t[j][a] = rng.rational(4, 3);
        std::vector<Scalar> point;
        point.reserve(wv.size());
        for (int j = 0; j < ell; ++j) {
            for (int kk = j; kk < ell; ++kk) {
                mpq_class acc(0);
                for (int a = 0; a < s; ++a) acc += t[j][a] * t[kk][a];
                point.push_back(Scalar(std::move(acc)));
            }
        }
        for (int col = 0; col < cols; ++col) {
            evaluation(row, col) = monomials[col].eval(point);
        }
    }
    return exact_rank(std::move(evaluation));
}

mpz_class kernel_dim(int s, int ell, int k) {
    if (s < 2) {
        throw std::invalid_argument("kernel_dim needs s >= 2");
    }
    if (s > ell) {
        throw std::invalid_argument("kernel_dim needs s <= ell");
    }
    mpz_class total(0);
    for (const DeltaMonomial& mono : enumerate_monomials(s, k)) {
        if (mono.exponents[size_t(s) - 1] >= 1) {
            total += weyl_dim(delta_weight(mono, ell), ell);
        }
    }
    return total;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace stratquant
