// Copyright 2026 The lcs authors
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

#include "lcs/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace lcs {

LogicalGate LogicalGate::identity(std::size_t k) {
  return LogicalGate(CliffordTableau::identity(k));
}

LogicalGate LogicalGate::from_symplectic(const BitMatrix& c) {
  if (!is_symplectic(c))
    throw std::invalid_argument("target matrix is not symplectic");
  const std::size_t k = c.rows() / 2;
  CliffordTableau t(k);
  std::vector<PauliOp> x_img, z_img;
  for (std::size_t i = 0; i < k; ++i)
    x_img.push_back(PauliOp::from_symplectic(c.column(i)));
  for (std::size_t i = 0; i < k; ++i)
    z_img.push_back(PauliOp::from_symplectic(c.column(k + i)));
  t.set_images(std::move(x_img), std::move(z_img));
  return LogicalGate(std::move(t));
}

LogicalGate LogicalGate::from_spec(const std::string& spec, std::size_t k) {
  CliffordTableau t(k);
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ';')) {
    // trim whitespace
    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);
    const auto at = token.find('@');
    if (at == std::string::npos)
      throw std::invalid_argument("gate spec wants NAME@qubits: " + token);
    Gate g;
    g.kind = gate_kind_from_name(token.substr(0, at));
    if (!g.is_unitary() || g.kind == GateKind::TICK)
      throw std::invalid_argument("target gates must be unitary: " + token);
    const std::string args = token.substr(at + 1);
    const auto comma = args.find(',');
    g.a = std::stoi(args.substr(0, comma));
    if (g.is_two_qubit()) {
      if (comma == std::string::npos)
        throw std::invalid_argument("two-qubit gate spec wants NAME@a,b");
      g.b = std::stoi(args.substr(comma + 1));
    } else if (comma != std::string::npos) {
      throw std::invalid_argument("single-qubit gate spec wants NAME@q");
    }
    if (g.a < 1 || static_cast<std::size_t>(g.a) > k ||
        (g.is_two_qubit() &&
         (g.b < 1 || static_cast<std::size_t>(g.b) > k || g.b == g.a)))
      throw std::invalid_argument("gate spec qubit out of range: " + token);
    t.apply_gate(g);
  }
  return LogicalGate(std::move(t));
}

namespace {

// Reduced encoding cached per call chain; cheap to rebuild at these sizes.
ReducedEncoding reduced_encoding_of(const StabilizerCode& code) {
  return reduce_encoding(build_encoding(code));
}

std::vector<std::size_t> indices_of(const BitVector& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) idx.push_back(i);
  return idx;
}

}  // namespace

LogicalOperatorCheck is_logical_operator(const SymplecticMap& a,
                                         const StabilizerCode& code) {
  if (a.n != code.n)
    throw std::invalid_argument("circuit/code qubit count mismatch");
  LogicalOperatorCheck check;
  const BitMatrix stab = code.stabilizer_matrix();
  for (std::size_t j = 0; j < code.stabilizers.size(); ++j) {
    const BitVector image = a.mat * code.stabilizers[j].symplectic_vector();
    const auto sol = gf2_solve(stab, image);
    if (!sol) {
      check.ok = false;
      check.offender = j;
      return check;
    }
    check.expansions.push_back(indices_of(sol->particular));
  }
  check.ok = true;
  return check;
}

LogicalOperatorCheck is_logical_operator(const GateSequence& circuit,
                                         const StabilizerCode& code) {
  return is_logical_operator(tableau_of(circuit).symplectic(), code);
}

LogicalActionResult logical_action(const SymplecticMap& a,
                                   const StabilizerCode& code) {
  const auto logical = is_logical_operator(a, code);
  if (!logical.ok)
    throw std::invalid_argument("circuit is not a logical operator");
  const ReducedEncoding enc = reduced_encoding_of(code);
  const std::size_t k = code.k;
  LogicalActionResult result;
  result.action = BitMatrix(2 * k, 2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    const PauliOp& gen = i < k ? code.logical_x[i] : code.logical_z[i - k];
    const BitVector image = a.mat * gen.symplectic_vector();
    const auto sol = gf2_solve(enc.e_prime, image);
    if (!sol)
      throw std::logic_error("logical image escaped the normalizer span");
    for (std::size_t r = 0; r < 2 * k; ++r)
      result.action.set(r, i, sol->particular.get(r));
    std::vector<std::size_t> coset;
    for (std::size_t r = 2 * k; r < k + code.n; ++r)
      if (sol->particular.get(r)) coset.push_back(r - 2 * k);
    result.cosets.push_back(std::move(coset));
  }
  return result;
}

LogicalActionResult logical_action(const GateSequence& circuit,
                                   const StabilizerCode& code) {
  return logical_action(tableau_of(circuit).symplectic(), code);
}

namespace {

// Signed reference image of the j-th stabilizer generator: the product of
// generators given by the expansion, as an exact PauliOp.
PauliOp stabilizer_product(const StabilizerCode& code,
                           const std::vector<std::size_t>& expansion) {
  PauliOp p = PauliOp::identity(code.n);
  for (std::size_t i : expansion) p *= code.stabilizers[i];
  return p;
}

// Exactly-signed expected image of logical generator i (X-bars first).
PauliOp expected_logical_image(const StabilizerCode& code, const LogicalGate& target,
                               std::size_t i, const std::vector<std::size_t>& coset) {
  const std::size_t k = code.k;
  PauliOp logical_k{BitVector(k), BitVector(k), 0};
  if (i < k)
    logical_k.x.set(i, true);
  else
    logical_k.z.set(i - k, true);
  const PauliOp mapped = target.tableau.conjugate(logical_k);
  PauliOp lifted = PauliOp::identity(code.n);
  lifted.phase = mapped.phase;
  for (std::size_t j = 0; j < k; ++j)
    if (mapped.x.get(j)) lifted *= code.logical_x[j];
  for (std::size_t j = 0; j < k; ++j)
    if (mapped.z.get(j)) lifted *= code.logical_z[j];
  return lifted * stabilizer_product(code, coset);
}

struct SignCheck {
  bool all_correct = true;
  // One constraint per stabilizer generator, then per logical generator:
  // the actual image and whether its sign must be flipped.
  std::vector<PauliOp> images;
  std::vector<bool> defects;
  std::vector<std::string> messages;
};

SignCheck check_signs(const CliffordTableau& t, const StabilizerCode& code,
                      const LogicalGate& target,
                      const LogicalOperatorCheck& logical,
                      const LogicalActionResult& action) {
  SignCheck sc;
  for (std::size_t j = 0; j < code.stabilizers.size(); ++j) {
    const PauliOp image = t.conjugate(code.stabilizers[j]);
    const PauliOp ref = stabilizer_product(code, logical.expansions[j]);
    const bool defect = image != ref;
    if (defect) {
      sc.all_correct = false;
      sc.messages.push_back("stabilizer S" + std::to_string(j + 1) +
                            " image has a sign defect");
    }
    sc.images.push_back(image);
    sc.defects.push_back(defect);
  }
  for (std::size_t i = 0; i < 2 * code.k; ++i) {
    const PauliOp& gen =
        i < code.k ? code.logical_x[i] : code.logical_z[i - code.k];
    const PauliOp image = t.conjugate(gen);
    const PauliOp ref = expected_logical_image(code, target, i, action.cosets[i]);
    const bool defect = image != ref;
    if (defect) {
      sc.all_correct = false;
      const std::string name = i < code.k
                                   ? "logical X" + std::to_string(i + 1)
                                   : "logical Z" + std::to_string(i - code.k + 1);
      sc.messages.push_back(name + " image has a sign defect");
    }
    sc.images.push_back(image);
    sc.defects.push_back(defect);
  }
  return sc;
}

VerificationReport implements_target_impl(const SymplecticMap& a,
                                          const CliffordTableau* tableau,
                                          const StabilizerCode& code,
                                          const LogicalGate& target, bool strict) {
  if (target.k != code.k)
    throw std::invalid_argument("target acts on the wrong number of logical qubits");
  VerificationReport report;
  const auto logical = is_logical_operator(a, code);
  report.is_logical = logical.ok;
  if (!logical.ok) {
    report.failures.push_back(
        "stabilizer S" + std::to_string(*logical.offender + 1) +
        " is not mapped into the stabilizer group");
    return report;
  }
  const auto action = logical_action(a, code);
  report.logical_action = action.action;
  if (action.action != target.symplectic()) {
    report.failures.push_back("logical action differs from the target");
    return report;
  }
  report.gauge = extract_gauge(a, code, target);
  if (tableau != nullptr) {
    const SignCheck sc = check_signs(*tableau, code, target, logical, action);
    report.sign_correct = sc.all_correct;
    if (strict && !sc.all_correct)
      report.failures.insert(report.failures.end(), sc.messages.begin(),
                             sc.messages.end());
  }
  return report;
}

}  // namespace

VerificationReport implements_target(const CliffordTableau& t,
                                     const StabilizerCode& code,
                                     const LogicalGate& target, bool strict) {
  return implements_target_impl(t.symplectic(), &t, code, target, strict);
}

VerificationReport implements_target(const GateSequence& circuit,
                                     const StabilizerCode& code,
                                     const LogicalGate& target, bool strict) {
  if (circuit.n != code.n)
    throw std::invalid_argument("circuit/code qubit count mismatch");
  return implements_target(tableau_of(circuit), code, target, strict);
}

VerificationReport implements_target(const LayeredCircuit& circuit,
                                     const StabilizerCode& code,
                                     const LogicalGate& target, bool strict) {
  return implements_target(flatten(circuit), code, target, strict);
}

VerificationReport implements_target(const SymplecticMap& a,
                                     const StabilizerCode& code,
                                     const LogicalGate& target) {
  return implements_target_impl(a, nullptr, code, target, false);
}

ReducedFreedom extract_gauge(const SymplecticMap& a, const StabilizerCode& code,
                             const LogicalGate& target) {
  const ReducedEncoding enc = reduced_encoding_of(code);
  const auto f_prime = gf2_solve_matrix(enc.e_prime, a.mat * enc.e_prime);
  if (!f_prime)
    throw std::invalid_argument("circuit does not implement a logical operator");
  if (!reduced_freedom_template(target.symplectic(), code.n).matches(*f_prime))
    throw std::invalid_argument("gauge does not embed the requested target");
  return ReducedFreedom{code.n, code.k, *f_prime};
}

ReducedFreedom extract_gauge(const LayeredCircuit& circuit, const StabilizerCode& code,
                             const LogicalGate& target) {
  return extract_gauge(circuit_symplectic(circuit), code, target);
}

PauliOp compute_pauli_frame(const CliffordTableau& unframed,
                            const StabilizerCode& code, const LogicalGate& target) {
  const SymplecticMap a = unframed.symplectic();
  const auto logical = is_logical_operator(a, code);
  if (!logical.ok)
    throw std::invalid_argument("circuit is not a logical operator");
  const auto action = logical_action(a, code);
  if (action.action != target.symplectic())
    throw std::invalid_argument("circuit does not implement the target up to Pauli");
  const SignCheck sc = check_signs(unframed, code, target, logical, action);

  // Pauli P flips the sign of image Q iff they anticommute; one GF(2)
  // solve matches every defect.
  const std::size_t m = sc.images.size();
  const BitMatrix omega = symplectic_form(code.n);
  BitMatrix sys(m, 2 * code.n);
  BitVector rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    sys.set_row(j, omega * sc.images[j].symplectic_vector());
    rhs.set(j, sc.defects[j]);
  }
  const auto sol = gf2_solve(sys, rhs);
  if (!sol)
    throw std::logic_error("Pauli frame system inconsistent on a verified circuit");
  return PauliOp::from_symplectic(sol->particular);
}

PauliOp fix_pauli_frame(LayeredCircuit& circuit, const StabilizerCode& code,
                        const LogicalGate& target) {
  circuit.pauli_frame.reset();
  const PauliOp frame = compute_pauli_frame(tableau_of(circuit), code, target);
  circuit.pauli_frame = frame;
  return frame;
}

}  // namespace lcs
