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

#include "esd/channels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "esd/errors.hpp"

namespace esd {

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::AmplitudeDamping: return "amplitude-damping";
        case NoiseKind::PhaseDamping: return "phase-damping";
        case NoiseKind::GeneralizedAmplitudeDamping: return "generalized-amplitude-damping";
        case NoiseKind::Depolarizing: return "depolarizing";
    }
    return "unknown";
}

std::string_view to_string(Side side) { return side == Side::First ? "first" : "second"; }

NoiseKind parse_noise_kind(std::string_view text) {
    if (text == "ad" || text == "amplitude-damping") return NoiseKind::AmplitudeDamping;
    if (text == "pd" || text == "phase-damping" || text == "dephasing") return NoiseKind::PhaseDamping;
    if (text == "gad" || text == "generalized-amplitude-damping") return NoiseKind::GeneralizedAmplitudeDamping;
    if (text == "dep" || text == "depolarizing") return NoiseKind::Depolarizing;
    throw DomainError("unknown noise model '" + std::string(text) + "'");
}

Side parse_side(std::string_view text) {
    if (text == "first") return Side::First;
    if (text == "second") return Side::Second;
    throw DomainError("side must be 'first' or 'second', got '" + std::string(text) + "'");
}

NoiseModel NoiseModel::generalized_amplitude_damping(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("GAD mixing probability p must lie in [0, 1]");
    }
    return NoiseModel(NoiseKind::GeneralizedAmplitudeDamping, p);
}

NoiseModel NoiseModel::make(NoiseKind kind, std::optional<double> p) {
    if (kind == NoiseKind::GeneralizedAmplitudeDamping) {
        if (!p) throw DomainError("generalized amplitude damping requires p");
        return generalized_amplitude_damping(*p);
    }
    if (p) throw DomainError("p is only meaningful for generalized amplitude damping");
    return NoiseModel(kind, std::nullopt);
}

std::string NoiseModel::label() const {
    switch (kind_) {
        case NoiseKind::AmplitudeDamping: return "ad";
        case NoiseKind::PhaseDamping: return "pd";
        case NoiseKind::Depolarizing: return "depolarizing";
        case NoiseKind::GeneralizedAmplitudeDamping: {
            std::ostringstream os;
            os << "gad(p=" << *p_ << ")";
            return os.str();
        }
    }
    return "unknown";
}

double damping_eta(double gamma_t) { return std::exp(-gamma_t / 2.0); }
double depolarizing_alpha(double gamma_t) { return 1.0 - std::exp(-gamma_t / 2.0); }

ComplexMatrix qutrit_shift() {
    return {{0, 1, 0},
            {0, 0, 1},
            {1, 0, 0}};
}

ComplexMatrix qutrit_clock() {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return {{1, 0, 0},
            {0, w, 0},
            {0, 0, w * w}};
}

namespace {

using Ops = std::vector<ComplexMatrix>;

Ops amplitude_damping_ops(int dim, double eta) {
    const double decay = std::sqrt(1.0 - eta * eta);
    if (dim == 2) {
        return {{{eta, 0}, {0, 1}},
                {{0, 0}, {decay, 0}}};
    }
    return {{{1, 0, 0}, {0, eta, 0}, {0, 0, eta}},
            {{0, decay, 0}, {0, 0, 0}, {0, 0, 0}},
            {{0, 0, decay}, {0, 0, 0}, {0, 0, 0}}};
}

Ops phase_damping_ops(int dim, double gamma) {
    const double loss = std::sqrt(1.0 - gamma * gamma);
    if (dim == 2) {
        return {{{1, 0}, {0, gamma}},
                {{0, 0}, {0, loss}}};
    }
    return {{{1, 0, 0}, {0, gamma, 0}, {0, 0, gamma}},
            {{0, 0, 0}, {0, loss, 0}, {0, 0, 0}},
            {{0, 0, 0}, {0, 0, 0}, {0, 0, loss}}};
}

Ops gad_ops(int dim, double eta, double p) {
    const double decay = std::sqrt(1.0 - eta * eta);
    if (dim == 2) {
        const double lo = std::sqrt(1.0 - p);
        const double hi = std::sqrt(p);
        return {lo * ComplexMatrix{{1, 0}, {0, eta}},
                lo * ComplexMatrix{{0, decay}, {0, 0}},
                hi * ComplexMatrix{{eta, 0}, {0, 1}},
                hi * ComplexMatrix{{0, 0}, {decay, 0}}};
    }
    const double lo = std::sqrt(p);
    const double hi = std::sqrt(1.0 - p);
    return {lo * ComplexMatrix{{1, 0, 0}, {0, eta, 0}, {0, 0, eta}},
            lo * ComplexMatrix{{0, decay, 0}, {0, 0, 0}, {0, 0, 0}},
            lo * ComplexMatrix{{0, 0, decay}, {0, 0, 0}, {0, 0, 0}},
            hi * ComplexMatrix{{eta, 0, 0}, {0, eta, 0}, {0, 0, 1}},
            hi * ComplexMatrix{{0, 0, 0}, {0, 0, 0}, {0, decay, 0}},
            hi * ComplexMatrix{{0, 0, 0}, {0, 0, 0}, {decay, 0, 0}}};
}

Ops depolarizing_ops(int dim, double alpha) {
    const double keep = std::sqrt(1.0 - alpha);
    if (dim == 2) {
        const double flip = std::sqrt(alpha / 3.0);
        const Complex i{0, 1};
        return {keep * ComplexMatrix::identity(2),
                flip * ComplexMatrix{{0, 1}, {1, 0}},
                flip * ComplexMatrix{{0, -i}, {i, 0}},
                flip * ComplexMatrix{{1, 0}, {0, -1}}};
    }
    const double flip = std::sqrt(alpha / 8.0);
    const auto y = qutrit_shift();
    const auto z = qutrit_clock();
    const auto y2 = y * y;
    const auto z2 = z * z;
    return {keep * ComplexMatrix::identity(3),
            flip * y,
            flip * z,
            flip * y2,
            flip * (y * z),
            flip * (y2 * z),
            flip * (y * z2),
            flip * (y2 * z2),
            flip * z2};
}

}  // namespace

ChannelAtTime kraus_set(const NoiseModel& model, int dim, double gamma_t) {
    if (dim != 2 && dim != 3) {
        throw DimensionError("kraus_set: unsupported subsystem dimension " + std::to_string(dim));
    }
    if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t)) {
        throw DomainError("kraus_set: gamma_t must be finite and non-negative");
    }
    const double eta = damping_eta(gamma_t);
    Ops ops;
    switch (model.kind()) {
        case NoiseKind::AmplitudeDamping: ops = amplitude_damping_ops(dim, eta); break;
        case NoiseKind::PhaseDamping: ops = phase_damping_ops(dim, eta); break;
        case NoiseKind::GeneralizedAmplitudeDamping: ops = gad_ops(dim, eta, *model.p()); break;
        case NoiseKind::Depolarizing: ops = depolarizing_ops(dim, depolarizing_alpha(gamma_t)); break;
    }
    return {model, dim, gamma_t, std::move(ops)};
}

double completeness_defect(const ChannelAtTime& channel) {
    if (channel.kraus.empty()) return std::numeric_limits<double>::infinity();
    const auto n = static_cast<std::size_t>(channel.dim);
    ComplexMatrix sum(n, n);
    for (const auto& k : channel.kraus) {
        if (k.rows() != n || k.cols() != n) return std::numeric_limits<double>::infinity();
        sum += dagger(k) * k;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(n));
}

bool validate_cptp(const ChannelAtTime& channel, double tol) { return completeness_defect(channel) <= tol; }

DensityMatrix apply_local(const ChannelAtTime& channel, const DensityMatrix& rho, Side side) {
    const Dims dims = rho.dims();
    const int target = side == Side::First ? dims.a : dims.b;
    if (channel.dim != target) {
        throw DimensionError("apply_local: channel acts on dimension " + std::to_string(channel.dim) +
                             " but the " + std::string(to_string(side)) + " subsystem has dimension " +
                             std::to_string(target));
    }
    const auto other = ComplexMatrix::identity(static_cast<std::size_t>(side == Side::First ? dims.b : dims.a));
    const auto n = static_cast<std::size_t>(dims.total());
    ComplexMatrix out(n, n);
    for (const auto& k : channel.kraus) {
        const auto lifted = side == Side::First ? kron(k, other) : kron(other, k);
        out += lifted * rho.matrix() * dagger(lifted);
    }
    return {dims, std::move(out)};
}

}  // namespace esd
