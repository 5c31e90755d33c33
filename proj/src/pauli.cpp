// Copyright 2026 The qauth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qauth/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qauth {

namespace {

std::uint64_t low_bits(std::size_t count) {
    return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

int popcount64(std::uint64_t v) { return std::popcount(v); }

}  // namespace

void validate_permutation(const Permutation& perm) {
    std::uint64_t seen = 0;
    if (perm.size() > 64) throw std::invalid_argument("permutation too long");
    for (const std::uint32_t v : perm) {
        if (v >= perm.size() || (seen & (std::uint64_t{1} << v)) != 0) {
            throw std::invalid_argument("malformed permutation");
        }
        seen |= std::uint64_t{1} << v;
    }
}

Permutation inverse_permutation(const Permutation& perm) {
    validate_permutation(perm);
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<std::uint32_t>(i);
    return inv;
}

std::uint64_t QubitPartition::message_mask() const { return low_bits(message); }

std::uint64_t QubitPartition::trap_zero_mask() const {
    return low_bits(trap_zero) << message;
}

std::uint64_t QubitPartition::trap_plus_mask() const {
    return low_bits(trap_plus) << (message + trap_zero);
}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask,
                             unsigned phase_exp)
    : n_(n), x_mask_(x_mask), z_mask_(z_mask), phase_(phase_exp & 3u) {
    if (n == 0 || n > 64) throw std::invalid_argument("Pauli qubit count out of range");
    if ((x_mask & ~low_bits(n)) != 0 || (z_mask & ~low_bits(n)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond the qubit count");
    }
}

PauliOperator PauliOperator::from_index(std::size_t n, std::uint64_t index) {
    if (n > 31) throw std::invalid_argument("index enumeration limited to 31 qubits");
    const std::uint64_t mask = low_bits(n);
    if (index >> (2 * n)) throw std::invalid_argument("Pauli index out of range");
    return PauliOperator(n, (index >> n) & mask, index & mask, 0);
}

std::size_t PauliOperator::weight() const {
    return static_cast<std::size_t>(popcount64(x_mask_ | z_mask_));
}

PauliOperator PauliOperator::adjoint() const {
    // (i^k X^x Z^z)^dag = i^{-k} (-1)^{|x&z|} X^x Z^z
    const unsigned phase = (4u - phase_ + 2u * (popcount64(x_mask_ & z_mask_) & 1)) & 3u;
    return PauliOperator(n_, x_mask_, z_mask_, phase);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Pauli size mismatch");
    const int cross = popcount64(x_mask_ & other.z_mask_) + popcount64(z_mask_ & other.x_mask_);
    return (cross & 1) == 0;
}

bool PauliOperator::equals_up_to_phase(const PauliOperator& other) const {
    return n_ == other.n_ && x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
}

std::string PauliOperator::str() const {
    const unsigned y_count = static_cast<unsigned>(popcount64(x_mask_ & z_mask_));
    const unsigned prefix = (phase_ + 4u - (y_count & 3u)) & 3u;
    static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[prefix];
    for (std::size_t i = 0; i < n_; ++i) {
        const bool x = (x_mask_ >> i) & 1;
        const bool z = (z_mask_ >> i) & 1;
        out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

PauliOperator PauliOperator::from_str(const std::string& text) {
    std::size_t pos = 0;
    unsigned prefix = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        prefix = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        prefix = (prefix + 1) & 3u;
        ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("Pauli literal has no letters");
    std::uint64_t x = 0, z = 0;
    unsigned y_count = 0;
    const std::size_t n = text.size() - pos;
    if (n > 64) throw std::invalid_argument("Pauli literal too long");
    for (std::size_t i = 0; i < n; ++i) {
        switch (text[pos + i]) {
            case 'I': break;
            case 'X': x |= std::uint64_t{1} << i; break;
            case 'Z': z |= std::uint64_t{1} << i; break;
            case 'Y':
                x |= std::uint64_t{1} << i;
                z |= std::uint64_t{1} << i;
                ++y_count;  // Y = i XZ
                break;
            default:
                throw std::invalid_argument("invalid Pauli letter in literal: " + text);
        }
    }
    return PauliOperator(n, x, z, (prefix + y_count) & 3u);
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("Pauli size mismatch");
    // X^xa Z^za X^xb Z^zb = (-1)^{|za & xb|} X^{xa^xb} Z^{za^zb}
    const unsigned phase =
        (a.phase_exp() + b.phase_exp() + 2u * (popcount64(a.z_mask() & b.x_mask()) & 1)) & 3u;
    return PauliOperator(a.num_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(), phase);
}

PauliOperator tensor(const PauliOperator& a, const PauliOperator& b) {
    const std::size_t n = a.num_qubits() + b.num_qubits();
    if (n > 64) throw std::invalid_argument("tensor product exceeds 64 qubits");
    return PauliOperator(n, a.x_mask() | (b.x_mask() << a.num_qubits()),
                         a.z_mask() | (b.z_mask() << a.num_qubits()),
                         a.phase_exp() + b.phase_exp());
}

PauliOperator sub_pauli(const PauliOperator& p, std::size_t offset, std::size_t count) {
    if (offset + count > p.num_qubits()) throw std::invalid_argument("sub_pauli out of range");
    const std::uint64_t mask = low_bits(count);
    return PauliOperator(count, (p.x_mask() >> offset) & mask, (p.z_mask() >> offset) & mask, 0);
}

PauliOperator conjugate_by_permutation(const PauliOperator& p, const Permutation& perm) {
    if (perm.size() != p.num_qubits()) throw std::invalid_argument("permutation length mismatch");
    validate_permutation(perm);
    std::uint64_t x = 0, z = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        x |= ((p.x_mask() >> perm[i]) & 1) << i;
        z |= ((p.z_mask() >> perm[i]) & 1) << i;
    }
    return PauliOperator(p.num_qubits(), x, z, p.phase_exp());
}

std::vector<PauliOperator> enumerate_paulis(std::size_t n, std::size_t limit) {
    if (n > limit) throw std::invalid_argument("enumerate_paulis: qubit count exceeds limit");
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << (2 * n));
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
        out.push_back(PauliOperator::from_index(n, idx));
    }
    return out;
}

PauliOperator random_pauli(std::size_t n, Rng& rng, bool allow_identity) {
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::uint64_t idx = allow_identity ? rng.below(count) : 1 + rng.below(count - 1);
    return PauliOperator::from_index(n, idx);
}

bool preserves_traps(const PauliOperator& p, const QubitPartition& part) {
    if (part.total() != p.num_qubits()) {
        throw std::invalid_argument("partition does not match Pauli size");
    }
    // |0> traps tolerate only Z components, |+> traps only X components.
    return (p.x_mask() & part.trap_zero_mask()) == 0 &&
           (p.z_mask() & part.trap_plus_mask()) == 0;
}

bool ideal_accepted(const PauliOperator& p, const QubitPartition& part, std::size_t t) {
    if (!preserves_traps(p, part)) return false;
    const std::uint64_t msg = (p.x_mask() | p.z_mask()) & part.message_mask();
    return static_cast<std::size_t>(popcount64(msg)) <= t;
}

Matrix to_matrix(const PauliOperator& p) {
    if (p.num_qubits() > 12) throw std::invalid_argument("to_matrix limited to 12 qubits");
    const std::size_t dim = std::size_t{1} << p.num_qubits();
    Matrix m = Matrix::Zero(dim, dim);
    const Complex phase = phase_factor(p.phase_exp());
    for (std::uint64_t col = 0; col < dim; ++col) {
        // X^x Z^z |col> = (-1)^{|z & col|} |col ^ x>
        const double sign = (popcount64(p.z_mask() & col) & 1) ? -1.0 : 1.0;
        m(col ^ p.x_mask(), col) = phase * sign;
    }
    return m;
}

void apply_to_vector(const PauliOperator& p, const Vector& in, Vector& out) {
    const std::size_t dim = std::size_t{1} << p.num_qubits();
    if (static_cast<std::size_t>(in.size()) != dim) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    out.resize(dim);
    const Complex phase = phase_factor(p.phase_exp());
    for (std::uint64_t col = 0; col < dim; ++col) {
        const double sign = (popcount64(p.z_mask() & col) & 1) ? -1.0 : 1.0;
        out[col ^ p.x_mask()] = phase * sign * in[col];
    }
}

}  // namespace qauth
