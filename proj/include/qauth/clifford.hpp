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

#include <string>
#include <vector>

#include "qauth/defs.hpp"
#include "qauth/pauli.hpp"
#include "qauth/rng.hpp"

namespace qauth {

/// A Clifford unitary, represented by the images of the single-qubit X and Z
/// generators under conjugation. Elements are identified modulo global phase:
/// two unitaries with the same generator images act identically by
/// conjugation, which is the only way keys enter the codes.
///
/// Construction validates the symplectic condition (image_x[j] anticommutes
/// with image_z[j], every other generator pair commutes) and that each image
/// carries a phase consistent with Hermiticity.
class CliffordElement {
  public:
    CliffordElement(std::vector<PauliOperator> image_x, std::vector<PauliOperator> image_z);

    static CliffordElement identity(std::size_t n);

    std::size_t num_qubits() const { return n_; }
    const PauliOperator& image_x(std::size_t j) const { return image_x_[j]; }
    const PauliOperator& image_z(std::size_t j) const { return image_z_[j]; }

    /// Canonical key for dedup / equality of the conjugation action.
    std::string action_key() const;

    bool operator==(const CliffordElement& other) const {
        return image_x_ == other.image_x_ && image_z_ == other.image_z_;
    }

  private:
    std::size_t n_;
    std::vector<PauliOperator> image_x_;
    std::vector<PauliOperator> image_z_;
};

/// C p C^dag, phase-exact, assembled from the generator images.
PauliOperator conjugate(const CliffordElement& c, const PauliOperator& p);

/// Composition: conjugate(compose(a, b), p) == conjugate(a, conjugate(b, p)).
CliffordElement compose(const CliffordElement& a, const CliffordElement& b);

/// Inverse element: conjugate(inverse(c), conjugate(c, p)) == p.
CliffordElement inverse(const CliffordElement& c);

/// Exact uniform sample over the n-qubit Clifford group modulo global phase:
/// a uniformly random symplectic image frame built pair by pair, with
/// independent uniform sign choices for each generator image.
CliffordElement sample_uniform(std::size_t n, Rng& rng);
CliffordElement sample_uniform(std::size_t n, std::uint64_t seed);

/// Every group element modulo phase; n=1 yields exactly 24. The n=2 closure
/// (11520 actions) is substantially slower and must be opted into.
std::vector<CliffordElement> enumerate_all(std::size_t n, bool enable_two_qubit = false);

/// A dense unitary realizing the tableau: U M(p) U^dag == M(conjugate(c, p))
/// for every Pauli p. The global phase is fixed by making the first nonzero
/// entry of the first column real positive.
Matrix to_unitary(const CliffordElement& c);

/// |{C in the exhaustive 1-qubit group : C^dag p C == q up to phase}| for
/// non-identity p, q. Uniform randomization of non-identity Paulis makes the
/// table constant at 24/3 = 8.
std::size_t randomization_counts(const PauliOperator& p, const PauliOperator& q);

/// Stable serialization as generator-image literals, e.g.
/// {"X1": "+Z", "Z1": "+X"} (qubits are 1-indexed in the keys).
std::string serialize(const CliffordElement& c);
CliffordElement deserialize_clifford(const std::string& text);

}  // namespace qauth
