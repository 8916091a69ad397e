# Copyright 2026 The ajcgate Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import ajcgate as ag


def test_doublet_params_resonant():
    d = ag.doublet_params(ag.SystemParams(0.0, 0.0), ag.DoubletBranch.from_ground(0))
    assert d.rabi_freq == pytest.approx(2.0)
    assert d.c_bar == pytest.approx(0.0)
    assert d.s_bar == pytest.approx(1.0)


def test_ajc_hamiltonian_is_hermitian_and_conserves_number():
    ops = ag.build_ajc(ag.SystemParams(0.7, 1.9), ag.Mode.A)
    h, n = ops["hamiltonian"], ops["excitation_number"]
    assert np.allclose(h, h.conj().T)
    assert np.abs(h @ n - n @ h).max() < 1e-12


def test_decomposition_residual():
    assert ag.check_decomposition(ag.SystemParams(1.0, 1.5), ag.Mode.B) < 1e-12


def test_evolve_matches_closed_form():
    config = ag.SpaceConfig()
    p = ag.SystemParams(0.4, 1.1)
    state = np.zeros(config.dim, dtype=complex)
    state[config.index_of(ag.Atom.g, 0, 0)] = 1.0
    h = ag.build_ajc(p, ag.Mode.A, config)["hamiltonian"]
    oracle = ag.evolve(h, 0.8, state, config)
    closed = ag.qubit_evolution(p, ag.DoubletBranch.from_ground(0), 0.8, state, config)
    assert np.linalg.norm(oracle - closed) < 1e-9


def test_cnot_truth_table_ground_rows():
    table = ag.cnot_truth_table(ag.SystemParams(1e-3, 1e-3))
    ground = [r for r in table["rows"] if r["control"] == "g"]
    assert len(ground) == 2
    for row in ground:
        assert row["fidelity_phase_blind"] >= 0.999


def test_calibrate_and_regime_errors():
    t, prob = ag.calibrate_pulse(ag.SystemParams(1e-3, 1e-3), ag.DoubletBranch.from_ground(0))
    assert t == pytest.approx(math.pi / 4, abs=1e-6)
    assert prob > 0.999
    with pytest.raises(ag.RegimeError):
        ag.cnot_truth_table(ag.SystemParams(0.5, 0.5))
    with pytest.raises(ag.PhysicsError):
        ag.hadamard_apply(ag.SystemParams(1.0, 1.0), ag.Atom.g)


def test_hadamard_output():
    config = ag.SpaceConfig()
    out = ag.hadamard_apply(ag.SystemParams(2.0, 2.0), ag.Atom.g)
    r = 1 / math.sqrt(2)
    assert out[config.index_of(ag.Atom.e, 1, 0)] == pytest.approx(r)
    assert out[config.index_of(ag.Atom.g, 0, 0)] == pytest.approx(-r)


def test_success_probability():
    assert ag.success_probability(math.pi, math.pi) == pytest.approx(1.0)
    assert ag.success_probability(math.pi / 2, 0.4) == pytest.approx(0.0, abs=1e-15)


def test_report_is_json():
    doc = json.loads(ag.report("cnot", 1e-3, 1e-3, 3))
    assert list(doc) == ["params", "results", "findings"]
    with pytest.raises(ValueError):
        ag.report("nope", 1e-3, 1e-3, 3)
