import math

import numpy as np
import pytest

import qaw


def test_reference_values():
    assert qaw.qpochhammer_inf(0.5, 0.5) == pytest.approx(0.28878809508660242, rel=1e-14)
    assert qaw.eval_h(5, 0.3, 0.45) == pytest.approx(0.458515546875, rel=1e-14)
    assert qaw.eval_scheme("qh", 2, 0.5, 0.3)[-1] == pytest.approx(0.3, rel=1e-15)
    assert qaw.density("f_h", [0.3], 0.5)[0] == pytest.approx(0.79950361603864106, rel=1e-14)


def test_gaussian_limit():
    (v,) = qaw.density("f_N", [0.0], 1.0)
    assert v == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), rel=1e-14)


def test_connection_round_trip():
    kw = dict(y=0.2, z=-0.3, rho1=0.4, rho2=0.5)
    fwd = qaw.connection("w_to_p", 6, 0.5, **kw)
    bwd = qaw.connection("p_to_w", 6, 0.5, **kw)
    assert fwd.shape == (7, 7)
    assert np.allclose(fwd @ bwd, np.eye(7), atol=1e-10)


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        qaw.eval_scheme("aw", 2, 0.1, 1.5, a=0.1)
    with pytest.raises(ValueError):
        qaw.eval_scheme("aw", 2, 0.1, 0.5, a=0.1, y=0.2)
    with pytest.raises(ValueError):
        qaw.density("f_x", [0.0], 0.5)


def test_suite_passes():
    r = qaw.run_suite("ladder")
    assert r["passed"]
    assert all(rep["passed"] for rep in r["reports"])
    assert "markov" in qaw.suite_names()


def test_sampling_is_deterministic():
    a = qaw.sample_chain(0.5, 0.3, 0.4, 500, seed=9)
    b = qaw.sample_chain(0.5, 0.3, 0.4, 500, seed=9, threads=1)
    assert a.shape == (500, 3)
    assert np.array_equal(a, b)
    bound = 2.0 / math.sqrt(0.5)
    assert np.all(np.abs(a) <= bound)
