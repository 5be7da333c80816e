import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from zscode.bits import BitWord
from zscode.estimator import BalancedCodeTransformer
from zscode.exceptions import BoundViolationError
from zscode.validation import check_bit_matrix


@pytest.fixture
def X(rng):
    return rng.integers(0, 2, size=(500, 16))


def test_params_roundtrip():
    est = BalancedCodeTransformer(scheme="op", disparity=2)
    assert est.get_params() == {"scheme": "op", "disparity": 2}
    other = clone(est).set_params(disparity=4)
    assert other.disparity == 4 and est.disparity == 2


@pytest.mark.parametrize("scheme", ["sp", "op"])
@pytest.mark.parametrize("disparity", [0, 2, 4])
def test_transform_roundtrip(X, scheme, disparity):
    est = BalancedCodeTransformer(scheme, disparity).fit(X)
    C = est.transform(X)
    assert C.shape == (len(X), est.n_codeword_bits_)
    assert np.abs(est.codeword_disparity(C)).max() <= disparity
    assert (est.inverse_transform(C) == X).all()


def test_rows_match_scalar_codec(X):
    est = BalancedCodeTransformer("sp", 0).fit(X)
    C = est.transform(X[:20])
    for row, crow in zip(X[:20], C):
        assert BitWord.from_bits(list(crow)) == est.codec_.encode(BitWord.from_bits(list(row)))


def test_pipeline_composition(X):
    pipe = make_pipeline(FunctionTransformer(lambda a: a ^ 1), BalancedCodeTransformer("op", 2))
    C = pipe.fit_transform(X)
    assert (pipe[-1].inverse_transform(C) ^ 1 == X).all()


def test_not_fitted(X):
    with pytest.raises(NotFittedError):
        BalancedCodeTransformer().transform(X)


def test_input_validation(X):
    est = BalancedCodeTransformer().fit(X)
    with pytest.raises(ValueError):
        est.transform(X[:, :8])
    with pytest.raises(ValueError):
        est.transform(X * 2)
    with pytest.raises(ValueError):
        BalancedCodeTransformer().fit(X[:, :7])
    with pytest.raises(ValueError):
        BalancedCodeTransformer().fit(np.zeros((3, 66), dtype=int))
    with pytest.raises(ValueError):
        BalancedCodeTransformer(scheme="xp").fit(X)
    with pytest.raises(ValueError):
        BalancedCodeTransformer(disparity=3).fit(X)
    with pytest.raises(ValueError):
        check_bit_matrix([[0.5, 1.0]])
    assert check_bit_matrix([[True, False]]).dtype == np.uint8


def test_inverse_transform_detects_corruption(X):
    est = BalancedCodeTransformer("sp", 0).fit(X)
    C = est.transform(X)
    C[3, -1] ^= 1
    with pytest.raises(BoundViolationError) as info:
        est.inverse_transform(C)
    assert info.value.index == 3
