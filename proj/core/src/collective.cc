// Copyright 2026 The detmit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detmit/collective.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "detmit/errors.h"

namespace detmit {

namespace {

constexpr std::size_t kExactBinomialLimit = 60;

double integer_power(double base, std::size_t exponent) {
    double result = 1;
    while (exponent) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace

double SquareMatrix::norm1() const {
    double best = 0;
    for (std::size_t c = 0; c < size_; c++) {
        double sum = 0;
        for (std::size_t r = 0; r < size_; r++) {
            sum += std::abs((*this)(r, c));
        }
        best = std::max(best, sum);
    }
    return best;
}

SquareMatrix multiply(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.size() != b.size()) {
        throw InputError("Matrix sizes differ");
    }
    const std::size_t n = a.size();
    SquareMatrix result(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            double aik = a(i, k);
            for (std::size_t j = 0; j < n; j++) {
                result(i, j) += aik * b(k, j);
            }
        }
    }
    return result;
}

double binomial_coefficient(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    if (n <= kExactBinomialLimit) {
        std::uint64_t c = 1;
        for (std::size_t i = 1; i <= k; i++) {
            c = c * (n - k + i) / i;
        }
        return static_cast<double>(c);
    }
    double log_c = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                   std::lgamma(static_cast<double>(n - k) + 1);
    return std::exp(log_c);
}

double binomial_term(std::size_t n, double p, std::size_t k) {
    if (k > n) {
        return 0;
    }
    if (n <= kExactBinomialLimit) {
        return binomial_coefficient(n, k) * integer_power(p, k) * integer_power(1 - p, n - k);
    }
    // Log space keeps huge coefficients and tiny powers from over/underflowing.
    double q = 1 - p;
    if ((p == 0 && k > 0) || (q == 0 && k < n)) {
        return 0;
    }
    double log_mag = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                     std::lgamma(static_cast<double>(n - k) + 1);
    if (k > 0) {
        log_mag += static_cast<double>(k) * std::log(std::abs(p));
    }
    if (n - k > 0) {
        log_mag += static_cast<double>(n - k) * std::log(std::abs(q));
    }
    bool negative = (p < 0 && (k % 2 == 1)) != (q < 0 && ((n - k) % 2 == 1));
    double mag = std::exp(log_mag);
    return negative ? -mag : mag;
}

SquareMatrix response_matrix(std::size_t num_qubits, double a, double b) {
    const std::size_t n = num_qubits;
    // stay[j][q]: q of the j excited qubits still read 1.
    // rise[m][r]: r of the m unexcited qubits read 1.
    std::vector<std::vector<double>> stay(n + 1), rise(n + 1);
    for (std::size_t m = 0; m <= n; m++) {
        stay[m].resize(m + 1);
        rise[m].resize(m + 1);
        for (std::size_t r = 0; r <= m; r++) {
            stay[m][r] = binomial_term(m, 1 - b, r);
            rise[m][r] = binomial_term(m, a, r);
        }
    }
    SquareMatrix result(n + 1);
    for (std::size_t i = 0; i <= n; i++) {
        for (std::size_t j = 0; j <= n; j++) {
            std::size_t q_lo = i + j > n ? i + j - n : 0;
            std::size_t q_hi = std::min(i, j);
            double sum = 0;
            for (std::size_t q = q_lo; q <= q_hi; q++) {
                sum += stay[j][q] * rise[n - j][i - q];
            }
            result(i, j) = sum;
        }
    }
    return result;
}

CollectiveResponse build_response(std::size_t num_qubits, double p0, double p1) {
    if (num_qubits == 0) {
        throw InputError("Collective response needs n >= 1");
    }
    if (!(p0 >= 0 && p0 <= 1 && p1 >= 0 && p1 <= 1)) {
        throw InputError("Flip probabilities must lie in [0, 1]");
    }
    return CollectiveResponse{num_qubits, p0, p1, response_matrix(num_qubits, p0, p1)};
}

SquareMatrix build_inverse_response(std::size_t num_qubits, double p0, double p1) {
    // Validates n and the rates.
    build_response(num_qubits, p0, p1);
    DetectorModel single({Rates{p0, p1}});
    Rates inv = single.inverse_rates(0);
    return response_matrix(num_qubits, inv.p0, inv.p1);
}

CollectiveUnfolding unfold_collective(std::span<const double> frequencies, double shots, double p0, double p1) {
    if (frequencies.size() < 2) {
        throw InputError("Collective distribution needs at least 2 entries");
    }
    if (!(shots > 0)) {
        throw InputError("Collective counts are empty");
    }
    const std::size_t n = frequencies.size() - 1;
    CollectiveResponse forward = build_response(n, p0, p1);
    SquareMatrix inverse = build_inverse_response(n, p0, p1);

    CollectiveUnfolding result;
    Distribution &d = result.distribution;
    d.shots = shots;
    d.values.assign(n + 1, 0.0);
    d.sigmas.assign(n + 1, 0.0);
    d.clamped.assign(n + 1, false);
    for (std::size_t i = 0; i <= n; i++) {
        double g = 0;
        double second = 0;
        for (std::size_t j = 0; j <= n; j++) {
            double w = inverse(i, j);
            g += w * frequencies[j];
            second += w * w * frequencies[j];
        }
        double radicand = second - g * g;
        if (radicand < 0) {
            d.clamped[i] = true;
            radicand = 0;
        }
        d.values[i] = g;
        d.sigmas[i] = std::sqrt(radicand / shots);
    }
    result.condition_number = forward.matrix.norm1() * inverse.norm1();
    return result;
}

CollectiveUnfolding unfold_collective(const CollectiveCounts &counts, double p0, double p1) {
    const double shots = static_cast<double>(counts.shots());
    std::vector<double> f(counts.counts().size());
    for (std::size_t j = 0; j < f.size(); j++) {
        f[j] = static_cast<double>(counts.counts()[j]) / shots;
    }
    return unfold_collective(f, shots, p0, p1);
}

}  // namespace detmit
