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

#ifndef DETMIT_COLLECTIVE_H
#define DETMIT_COLLECTIVE_H

#include <cstddef>
#include <span>
#include <vector>

#include "detmit/counts.h"
#include "detmit/reconstruct.h"

namespace detmit {

/// Dense row-major square matrix.
class SquareMatrix {
   public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : size_(size), data_(size * size, 0.0) {}

    std::size_t size() const { return size_; }
    double &operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
    double operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }
    std::span<const double> data() const { return data_; }

    /// Maximum absolute column sum.
    double norm1() const;

   private:
    std::size_t size_ = 0;
    std::vector<double> data_;
};

SquareMatrix multiply(const SquareMatrix &a, const SquareMatrix &b);

/// C(n, k). Exact integer arithmetic for n <= 60, log-gamma above.
double binomial_coefficient(std::size_t n, std::size_t k);

/// C(n, k) p^k (1-p)^(n-k); p may lie outside [0, 1].
double binomial_term(std::size_t n, double p, std::size_t k);

/// Response of a detector that only counts excitations: entry (i, j) is the
/// probability of recording i excitations when j qubits are in |1>.
struct CollectiveResponse {
    std::size_t num_qubits = 0;
    double p0 = 0;
    double p1 = 0;
    SquareMatrix matrix;
};

/// L_ij(a, b) = sum_q B(j, 1-b, q) B(n-j, a, i-q), q in [max(0, i+j-n), min(i, j)].
/// Evaluated for arbitrary real (a, b) so the same routine yields the inverse.
SquareMatrix response_matrix(std::size_t num_qubits, double a, double b);

/// Throws InputError unless n >= 1 and p0, p1 in [0, 1].
CollectiveResponse build_response(std::size_t num_qubits, double p0, double p1);

/// L^-1 = L(p0', p1'). Throws SingularModelError.
SquareMatrix build_inverse_response(std::size_t num_qubits, double p0, double p1);

struct CollectiveUnfolding {
    Distribution distribution;
    /// 1-norm condition number of L, computed with the analytic inverse.
    double condition_number = 0;
};

/// g = L^-1 f with f_j = counts_j / N, and the propagated standard errors
/// sqrt((sum_j (L^-1_ij)^2 f_j - g_i^2) / N).
CollectiveUnfolding unfold_collective(const CollectiveCounts &counts, double p0, double p1);

/// Same, from a measured excitation distribution and its shot count.
CollectiveUnfolding unfold_collective(std::span<const double> frequencies, double shots, double p0, double p1);

}  // namespace detmit

#endif
