// Copyright 2026 The owc Authors
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

#include "owc/sim.h"

#include <cmath>
#include <complex>
#include <numbers>

using namespace owc;

namespace {

using cd = std::complex<double>;

size_t position_of(const std::vector<WireId> &wires, WireId w) {
    for (size_t k = 0; k < wires.size(); k++) {
        if (wires[k] == w) {
            return k;
        }
    }
    throw std::invalid_argument("Unknown wire " + std::to_string(w) + ".");
}

/// Dense amplitudes over an explicit wire list, with in-place gate application.
struct Register {
    std::vector<WireId> wires;
    Eigen::VectorXcd amps;

    size_t mask(WireId w) const {
        return size_t{1} << (wires.size() - 1 - position_of(wires, w));
    }

    void apply_1q(WireId w, const Eigen::Matrix2cd &m) {
        size_t b = mask(w);
        for (size_t k = 0; k < (size_t)amps.size(); k++) {
            if (k & b) {
                continue;
            }
            cd a0 = amps[k];
            cd a1 = amps[k | b];
            amps[k] = m(0, 0) * a0 + m(0, 1) * a1;
            amps[k | b] = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }

    void apply(const Gate &g) {
        switch (g.kind) {
            case GateKind::J:
                apply_1q(g.a, j_matrix(g.angle));
                break;
            case GateKind::CZ: {
                size_t both = mask(g.a) | mask(g.b);
                for (size_t k = 0; k < (size_t)amps.size(); k++) {
                    if ((k & both) == both) {
                        amps[k] = -amps[k];
                    }
                }
                break;
            }
            case GateKind::CX: {
                size_t c = mask(g.a);
                size_t t = mask(g.b);
                for (size_t k = 0; k < (size_t)amps.size(); k++) {
                    if ((k & c) && !(k & t)) {
                        std::swap(amps[k], amps[k | t]);
                    }
                }
                break;
            }
        }
    }

    /// Contracts wire w with the bra (b0, b1) and drops it. Returns the norm of
    /// the result before renormalization.
    double project(WireId w, cd b0, cd b1) {
        size_t pos = position_of(wires, w);
        size_t bit = wires.size() - 1 - pos;
        size_t low_mask = (size_t{1} << bit) - 1;
        Eigen::VectorXcd out(amps.size() / 2);
        for (size_t r = 0; r < (size_t)out.size(); r++) {
            size_t i0 = ((r >> bit) << (bit + 1)) | (r & low_mask);
            out[r] = b0 * amps[i0] + b1 * amps[i0 | (size_t{1} << bit)];
        }
        amps = std::move(out);
        wires.erase(wires.begin() + pos);
        return amps.norm();
    }

    /// Smallest-index-first reduced 2x2 density matrix of wire w.
    Eigen::Matrix2cd reduced(WireId w) const {
        size_t b = mask(w);
        Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
        for (size_t k = 0; k < (size_t)amps.size(); k++) {
            if (k & b) {
                continue;
            }
            cd a0 = amps[k];
            cd a1 = amps[k | b];
            rho(0, 0) += a0 * std::conj(a0);
            rho(0, 1) += a0 * std::conj(a1);
            rho(1, 0) += a1 * std::conj(a0);
            rho(1, 1) += a1 * std::conj(a1);
        }
        return rho;
    }
};

/// Product state: input wires set from the bits of `column` (ordered as
/// `inputs`, big-endian), every other wire |+>.
Register prepare(const Circuit &circuit, const std::vector<WireId> &inputs, size_t column) {
    Register reg;
    for (const auto &w : circuit.wires) {
        reg.wires.push_back(w.id);
    }
    size_t n = reg.wires.size();
    reg.amps = Eigen::VectorXcd::Zero(size_t{1} << n);
    size_t fixed = 0;
    size_t fixed_mask = 0;
    for (size_t k = 0; k < inputs.size(); k++) {
        size_t m = reg.mask(inputs[k]);
        fixed_mask |= m;
        if ((column >> (inputs.size() - 1 - k)) & 1) {
            fixed |= m;
        }
    }
    size_t num_plus = n - inputs.size();
    double amp = std::pow(2.0, -0.5 * (double)num_plus);
    for (size_t k = 0; k < (size_t)reg.amps.size(); k++) {
        if ((k & fixed_mask) == fixed) {
            reg.amps[k] = amp;
        }
    }
    return reg;
}

void check_cap(const Circuit &circuit, size_t max_wires) {
    if (circuit.wires.size() > max_wires) {
        throw SimulationError(
            "Circuit has " + std::to_string(circuit.wires.size()) + " wires; the simulation cap is " +
            std::to_string(max_wires) + ".");
    }
}

}  // namespace

Isometry owc::circuit_isometry(const Circuit &circuit, size_t max_wires) {
    check_cap(circuit, max_wires);
    Isometry iso;
    iso.inputs = circuit.input_wires_by_origin();
    iso.outputs = circuit.output_wires();
    auto measured = circuit.measured_wires();
    size_t cols = size_t{1} << iso.inputs.size();
    iso.matrix = Eigen::MatrixXcd::Zero(size_t{1} << iso.outputs.size(), cols);
    const double s = 1 / std::sqrt(2.0);
    for (size_t col = 0; col < cols; col++) {
        Register reg = prepare(circuit, iso.inputs, col);
        for (const auto &g : circuit.gates) {
            reg.apply(g);
        }
        for (auto w : measured) {
            reg.project(w, s, s);
        }
        double norm = reg.amps.norm();
        if (norm < 1e-9) {
            throw SimulationError(
                "Projection of the measured wires onto |+> vanishes for input column " + std::to_string(col) + ".");
        }
        iso.matrix.col(col) = reg.amps / norm;
    }
    return iso;
}

Eigen::MatrixXcd owc::gate_operator(const std::vector<Gate> &gates, const std::vector<WireId> &wires) {
    size_t dim = size_t{1} << wires.size();
    Eigen::MatrixXcd op(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        Register reg{wires, Eigen::VectorXcd::Zero(dim)};
        reg.amps[col] = 1;
        for (const auto &g : gates) {
            reg.apply(g);
        }
        op.col(col) = reg.amps;
    }
    return op;
}

std::map<WireId, double> owc::measured_wire_fidelity(const Circuit &circuit, size_t max_wires) {
    check_cap(circuit, max_wires);
    auto inputs = circuit.input_wires_by_origin();
    std::map<WireId, double> result;
    for (auto w : circuit.measured_wires()) {
        result[w] = 1.0;
    }
    for (size_t col = 0; col < (size_t{1} << inputs.size()); col++) {
        Register reg = prepare(circuit, inputs, col);
        for (const auto &g : circuit.gates) {
            reg.apply(g);
        }
        for (auto &[w, f] : result) {
            auto rho = reg.reduced(w);
            double fid = 0.5 * (rho(0, 0) + rho(1, 1) + rho(0, 1) + rho(1, 0)).real();
            f = std::min(f, fid);
        }
    }
    return result;
}

double owc::max_deviation(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            "Shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ".");
    }
    if (a.size() == 0) {
        return 0;
    }
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    cd phase = 1;
    if (std::abs(b(r, c)) > 1e-15) {
        phase = a(r, c) / b(r, c);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double owc::max_deviation(const Isometry &a, const Isometry &b) {
    return max_deviation(a.matrix, b.matrix);
}

bool owc::equivalent(const Isometry &a, const Isometry &b, double tol) {
    return max_deviation(a, b) <= tol;
}

StateVector owc::run_pattern(
    const OpenGraph &graph,
    const CorrectionStructure &structure,
    const Eigen::VectorXcd &input,
    const std::map<Vertex, bool> &outcomes) {
    std::vector<Vertex> inputs(graph.inputs().begin(), graph.inputs().end());
    if ((size_t)input.size() != (size_t{1} << inputs.size())) {
        throw std::invalid_argument("Input state has the wrong dimension.");
    }
    auto order = structure.measurement_order();
    for (auto v : order) {
        if (!outcomes.contains(v)) {
            throw std::invalid_argument("No outcome given for vertex " + std::to_string(v) + ".");
        }
    }
    if (graph.num_vertices() > 24) {
        throw SimulationError("Pattern too large to simulate densely.");
    }

    // |input> on I, |+> elsewhere.
    Register reg;
    reg.wires = graph.vertices();
    size_t n = reg.wires.size();
    reg.amps = Eigen::VectorXcd::Zero(size_t{1} << n);
    double amp = std::pow(2.0, -0.5 * (double)(n - inputs.size()));
    for (size_t k = 0; k < (size_t)reg.amps.size(); k++) {
        size_t in_index = 0;
        for (auto v : inputs) {
            in_index = (in_index << 1) | ((k & reg.mask(v)) ? 1 : 0);
        }
        reg.amps[k] = amp * input[in_index];
    }
    for (auto [a, b] : graph.edges()) {
        reg.apply(Gate::cz(a, b));
    }

    // Signal parities: x_sig[v] flips the sign of the angle (X corrections),
    // z_sig[v] shifts it by pi (Z corrections).
    std::map<Vertex, bool> x_sig, z_sig;
    for (auto i : order) {
        double theta = graph.angle(i).to_radians();
        double phi = (x_sig[i] ? -theta : theta) + (z_sig[i] ? std::numbers::pi : 0.0);
        bool s = outcomes.at(i);
        double a = phi + (s ? std::numbers::pi : 0.0);
        double norm = reg.project(i, 1 / std::sqrt(2.0), std::polar(1 / std::sqrt(2.0), -a));
        if (norm < 1e-9) {
            throw SimulationError("Outcome " + std::to_string(s) + " on vertex " + std::to_string(i) + " is impossible.");
        }
        reg.amps /= norm;
        if (s) {
            const auto &g = structure.correcting_sets.at(i);
            for (auto j : g) {
                x_sig[j] = !x_sig[j];
            }
            for (auto k : odd_neighborhood(graph, g)) {
                if (k != i) {
                    z_sig[k] = !z_sig[k];
                }
            }
        }
    }

    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    for (auto o : graph.outputs()) {
        if (z_sig[o]) {
            reg.apply_1q(o, z);
        }
        if (x_sig[o]) {
            reg.apply_1q(o, x);
        }
    }
    return StateVector{reg.wires, reg.amps};
}
