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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qauth/defs.hpp"
#include "qauth/rng.hpp"

namespace qauth {

using Permutation = std::vector<std::uint32_t>;

// Throws std::invalid_argument unless perm is a bijection on {0..n-1}.
void validate_permutation(const Permutation& perm);
Permutation inverse_permutation(const Permutation& perm);

/// Block structure of a codeword register: `message` data qubits followed by
/// a block of |0> traps and a block of |+> traps (either block may be empty).
struct QubitPartition {
    std::size_t message = 0;
    std::size_t trap_zero = 0;
    std::size_t trap_plus = 0;

    std::size_t total() const { return message + trap_zero + trap_plus; }
    std::uint64_t message_mask() const;
    std::uint64_t trap_zero_mask() const;
    std::uint64_t trap_plus_mask() const;
};

/// An n-qubit Pauli operator in symplectic form with an exact global phase:
///
///     i^phase_exp * prod_i X_i^{x_i} Z_i^{z_i}
///
/// Bit i of x_mask/z_mask is qubit i's X/Z component; a qubit with both bits
/// set carries XZ, which equals -iY. Phase-free enumeration therefore lists
/// the Y position as XZ and string formatting re-absorbs the -i into the
/// printed prefix so that parse/print round-trips bit-exactly.
class PauliOperator {
  public:
    PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask,
                  unsigned phase_exp = 0);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n, 0, 0, 0); }

    // Index in the fixed enumeration order: lexicographic by (x_mask, z_mask).
    static PauliOperator from_index(std::size_t n, std::uint64_t index);
    std::uint64_t index() const { return (x_mask_ << n_) | z_mask_; }

    std::size_t num_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }
    unsigned phase_exp() const { return phase_; }

    /// Number of non-identity tensor factors; phase ignored.
    std::size_t weight() const;

    bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0 && phase_ == 0; }
    bool is_identity_up_to_phase() const { return x_mask_ == 0 && z_mask_ == 0; }

    PauliOperator phase_free() const { return PauliOperator(n_, x_mask_, z_mask_, 0); }
    PauliOperator adjoint() const;
    bool commutes_with(const PauliOperator& other) const;
    bool equals_up_to_phase(const PauliOperator& other) const;

    bool operator==(const PauliOperator& other) const = default;

    /// Formats as an optional phase prefix in {+, +i, -, -i} followed by one
    /// letter from {I,X,Y,Z} per qubit, qubit 0 first, e.g. "-iXIZ".
    std::string str() const;
    static PauliOperator from_str(const std::string& text);

  private:
    std::size_t n_;
    std::uint64_t x_mask_;
    std::uint64_t z_mask_;
    unsigned phase_;
};

/// Phase-exact product ab. Masks XOR; the phase picks up a factor (-1) for
/// every qubit where a's Z crosses b's X.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    return multiply(a, b);
}

/// Concatenates a (low qubits) and b (high qubits); phases add mod 4.
PauliOperator tensor(const PauliOperator& a, const PauliOperator& b);

/// The n-qubit block of p starting at `offset`, phase dropped.
PauliOperator sub_pauli(const PauliOperator& p, std::size_t offset, std::size_t count);

/// Conjugation by the qubit permutation taking qubit i to position perm[i]:
/// the result carries p's letter from position perm[i] at position i. The
/// phase is unchanged.
PauliOperator conjugate_by_permutation(const PauliOperator& p, const Permutation& perm);

/// All 4^n phase-free Paulis in lexicographic (x_mask, z_mask) order.
std::vector<PauliOperator> enumerate_paulis(std::size_t n, std::size_t limit = 10);

/// Uniformly random phase-free Pauli; optionally excluding the identity.
PauliOperator random_pauli(std::size_t n, Rng& rng, bool allow_identity = true);

/// True iff p leaves both trap blocks in their initial states: letters on
/// the |0> block restricted to {I,Z} and on the |+> block to {I,X}. The
/// message block is unconstrained.
bool preserves_traps(const PauliOperator& p, const QubitPartition& part);

/// preserves_traps and additionally the message-block weight is at most t,
/// i.e. the damage is within what the error correction can absorb.
bool ideal_accepted(const PauliOperator& p, const QubitPartition& part, std::size_t t);

/// Dense 2^n x 2^n matrix with the exact tracked phase. Qubit 0 is the least
/// significant bit of the row/column index.
Matrix to_matrix(const PauliOperator& p);

/// out = M(p) * v without forming the matrix.
void apply_to_vector(const PauliOperator& p, const Vector& in, Vector& out);

}  // namespace qauth
