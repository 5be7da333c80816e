"""scikit-learn transformer wrapping the balanced codecs.

Rows of ``X`` are data words given as 0/1 columns (MSB first).  ``transform``
returns codeword rows of width ``m``; ``inverse_transform`` undoes it.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bits import pack_rows, unpack_rows
from .schemes import build_codec, disparity_to_d
from .validation import check_bit_matrix, check_scheme


class BalancedCodeTransformer(TransformerMixin, BaseEstimator):
    """Knuth balanced / nearly-balanced block code as a transformer.

    Parameters
    ----------
    scheme : {"sp", "op"}
        Simple Parallel or Optimized Parallel construction.
    disparity : int
        Allowed codeword disparity bound (0, 2, 4, ...).

    Attributes
    ----------
    codec_ : SpCodec or OpCodec
    n_features_in_ : int
        Data word length ``n``.
    n_codeword_bits_ : int
        Codeword length ``m``.
    """

    def __init__(self, scheme="sp", disparity=0):
        self.scheme = scheme
        self.disparity = disparity

    def fit(self, X, y=None):
        X = check_bit_matrix(X)
        self.codec_ = build_codec(check_scheme(self.scheme), X.shape[1],
                                  disparity_to_d(self.disparity))
        self.n_features_in_ = X.shape[1]
        self.n_codeword_bits_ = self.codec_.m
        return self

    def transform(self, X):
        check_is_fitted(self, "codec_")
        X = check_bit_matrix(X, self.n_features_in_)
        codec = self.codec_
        parity, data = codec.encode_array(pack_rows(X))
        return np.hstack([unpack_rows(parity, codec.p), unpack_rows(data, codec.n)])

    def inverse_transform(self, X):
        check_is_fitted(self, "codec_")
        codec = self.codec_
        X = check_bit_matrix(X, codec.m, max_bits=None)
        words = codec.decode_array(pack_rows(X[:, :codec.p]), pack_rows(X[:, codec.p:]))
        return unpack_rows(words, codec.n)

    def codeword_disparity(self, X):
        """Disparity of each codeword row (ones minus zeros)."""
        X = check_bit_matrix(X, max_bits=None)
        return 2 * X.sum(axis=1, dtype=np.int64) - X.shape[1]
