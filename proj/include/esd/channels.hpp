// Copyright 2026 The esdsim Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esd/matrix.hpp"
#include "esd/states.hpp"

namespace esd {

enum class NoiseKind { AmplitudeDamping, PhaseDamping, GeneralizedAmplitudeDamping, Depolarizing };

/// Which subsystem of a bipartite state a channel acts on.
enum class Side { First, Second };

std::string_view to_string(NoiseKind kind);
std::string_view to_string(Side side);
/// Accepts short ("ad", "pd", "gad", "depolarizing"/"dep") and long
/// ("amplitude-damping", ...) names. Throws DomainError otherwise.
NoiseKind parse_noise_kind(std::string_view text);
Side parse_side(std::string_view text);

/// A noise family. The mixing probability p is present exactly for
/// generalized amplitude damping.
class NoiseModel {
public:
    static NoiseModel amplitude_damping() { return NoiseModel(NoiseKind::AmplitudeDamping, std::nullopt); }
    static NoiseModel phase_damping() { return NoiseModel(NoiseKind::PhaseDamping, std::nullopt); }
    static NoiseModel depolarizing() { return NoiseModel(NoiseKind::Depolarizing, std::nullopt); }
    /// Throws DomainError unless 0 <= p <= 1.
    static NoiseModel generalized_amplitude_damping(double p);
    /// Throws DomainError when p is given for a non-GAD kind or missing for GAD.
    static NoiseModel make(NoiseKind kind, std::optional<double> p = std::nullopt);

    NoiseKind kind() const noexcept { return kind_; }
    std::optional<double> p() const noexcept { return p_; }

    /// "depolarizing", "gad(p=0.25)", ...
    std::string label() const;

    bool operator==(const NoiseModel&) const = default;

private:
    NoiseModel(NoiseKind kind, std::optional<double> p) : kind_(kind), p_(p) {}

    NoiseKind kind_;
    std::optional<double> p_;
};

/// Kraus operators of one noise model on a single qubit or qutrit at a fixed
/// dimensionless time gamma_t.
struct ChannelAtTime {
    NoiseModel model;
    int dim;
    double gamma_t;
    std::vector<ComplexMatrix> kraus;
};

/// e^{-gamma_t/2}: the damping amplitude shared by the AD, PD and GAD families.
double damping_eta(double gamma_t);
/// 1 - e^{-gamma_t/2}: the depolarizing probability on the same time axis.
double depolarizing_alpha(double gamma_t);

/// Qutrit shift operator Y|k> = |k-1 mod 3> (ones on the superdiagonal and bottom-left).
ComplexMatrix qutrit_shift();
/// Qutrit clock operator diag(1, w, w^2) with w = e^{2 pi i / 3}.
ComplexMatrix qutrit_clock();

/// Kraus set for (model, dim) at gamma_t.
///
/// Operator lists, with eta = e^{-gamma_t/2} and alpha = 1 - eta:
///   AD  qubit:  diag(eta, 1), sqrt(1-eta^2)|1><0|
///   AD  qutrit: diag(1, eta, eta), sqrt(1-eta^2)|0><1|, sqrt(1-eta^2)|0><2|
///   PD  qubit:  diag(1, eta), sqrt(1-eta^2)|1><1|
///   PD  qutrit: diag(1, eta, eta), sqrt(1-eta^2)|1><1|, sqrt(1-eta^2)|2><2|
///   GAD qubit:  sqrt(1-p){diag(1,eta), sqrt(1-eta^2)|0><1|},
///               sqrt(p){diag(eta,1), sqrt(1-eta^2)|1><0|}
///   GAD qutrit: sqrt(p){diag(1,eta,eta), sqrt(1-eta^2)|0><1|, sqrt(1-eta^2)|0><2|},
///               sqrt(1-p){diag(eta,eta,1), sqrt(1-eta^2)|2><1|, sqrt(1-eta^2)|2><0|}
///   DEP qubit:  sqrt(1-alpha) I, sqrt(alpha/3){X, Y, Z}
///   DEP qutrit: sqrt(1-alpha) I, sqrt(alpha/8){Y, Z, Y^2, YZ, Y^2Z, YZ^2, Y^2Z^2, Z^2}
///
/// The qubit AD set decays toward |1>, and the qubit and qutrit GAD sets
/// attach p to opposite halves; both are kept in exactly this form.
///
/// Throws DimensionError for dim outside {2,3} and DomainError for negative
/// or non-finite gamma_t.
ChannelAtTime kraus_set(const NoiseModel& model, int dim, double gamma_t);

/// True iff ||sum_i K_i^dagger K_i - I||_max <= tol. An empty set is never CPTP.
bool validate_cptp(const ChannelAtTime& channel, double tol);
/// ||sum_i K_i^dagger K_i - I||_max, or +inf for an empty or ill-shaped set.
double completeness_defect(const ChannelAtTime& channel);

/// sum_i (K_i (x) I) rho (K_i (x) I)^dagger for Side::First, or with
/// (I (x) K_i) for Side::Second. Throws DimensionError when channel.dim does
/// not match the chosen subsystem.
DensityMatrix apply_local(const ChannelAtTime& channel, const DensityMatrix& rho, Side side);

}  // namespace esd
