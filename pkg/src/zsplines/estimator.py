"""scikit-learn style front end for flow-up bases."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_graph, check_matrix
from .basis import flow_up_basis, reduction_sequence
from .oracle import IntegerLattice, spline_lattice_kernel


class SplineBasis(TransformerMixin, BaseEstimator):
    """Flow-up basis of the spline module of a labeled graph.

    Parameters
    ----------
    graph : LabeledGraph or dict
        The edge-labeled graph, or its JSON document form. Vertex order is
        the flow-up order.
    verify : bool, default=False
        After fitting, compare the lattice spanned by the basis with the
        kernel oracle and raise ``RuntimeError`` on mismatch.

    Attributes
    ----------
    basis_ : FlowUpBasis
    sequence_ : ReductionSequence
    components_ : ndarray of shape (rank_, n_features_in_), dtype=object
        Basis splines as rows; exact Python integers.
    leading_terms_ : ndarray of shape (n_features_in_,), dtype=object
    rank_ : int
    n_features_in_ : int

    Notes
    -----
    ``transform`` maps splines to their (unique) integer coordinates in the
    basis and rejects vectors that are not splines. ``inverse_transform``
    maps coordinates back. All arithmetic is exact; arrays use
    ``dtype=object``.
    """

    def __init__(self, graph=None, verify=False):
        self.graph = graph
        self.verify = verify

    def fit(self, X=None, y=None):
        G = check_graph(self.graph)
        self.graph_ = G
        self.sequence_ = reduction_sequence(G)
        self.basis_ = flow_up_basis(G, self.sequence_)
        self.n_features_in_ = G.n
        self.rank_ = self.basis_.rank
        self.components_ = _object_array(self.basis_.matrix(), (self.rank_, G.n))
        self.leading_terms_ = _object_array(list(self.basis_.leading_terms), (G.n,))
        if self.verify:
            spanned = IntegerLattice(self.basis_.elements, G.n)
            if spanned != spline_lattice_kernel(G):
                raise RuntimeError("flow-up basis does not span the spline lattice")
        return self

    def _coordinates(self, f):
        residual = list(f)
        coords = []
        for elem, i in zip(self.basis_.elements, self.basis_.indices):
            if any(residual[: i - 1]):
                return None
            c, rem = divmod(residual[i - 1], elem[i - 1])
            if rem:
                return None
            coords.append(c)
            residual = [a - c * b for a, b in zip(residual, elem)]
        return None if any(residual) else coords

    def transform(self, X):
        """Integer coordinates of each spline row of ``X`` in the basis."""
        check_is_fitted(self, "basis_")
        rows = check_matrix(X, self.n_features_in_)
        out = []
        for k, f in enumerate(rows):
            coords = self._coordinates(f)
            if coords is None:
                raise ValueError(f"row {k} is not a spline on this graph")
            out.append(coords)
        return _object_array(out, (len(out), self.rank_))

    def inverse_transform(self, X):
        check_is_fitted(self, "basis_")
        rows = check_matrix(X, self.rank_)
        n = self.n_features_in_
        out = []
        for coords in rows:
            f = [0] * n
            for c, elem in zip(coords, self.basis_.elements):
                f = [a + c * b for a, b in zip(f, elem)]
            out.append(f)
        return _object_array(out, (len(out), n))

    def contains(self, X):
        """Boolean mask: which rows of ``X`` are splines."""
        check_is_fitted(self, "basis_")
        rows = check_matrix(X, self.n_features_in_)
        return np.array([self._coordinates(f) is not None for f in rows], dtype=bool)


def _object_array(rows, shape):
    arr = np.empty(shape, dtype=object)
    if len(shape) == 1:
        for k, x in enumerate(rows):
            arr[k] = x
    else:
        for k, row in enumerate(rows):
            for j, x in enumerate(row):
                arr[k, j] = x
    return arr
