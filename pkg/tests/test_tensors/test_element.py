# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS, SparseMat
from cychom.tensors import BasedSpace, LinearMap, TensorElem, apply_slotwise, apply_tensor_power, element
from cychom.tensors.errors import FactorMismatchError, IndexOutOfRangeError

Q = RATIONALS


@pytest.fixture(scope='module')
def v():
    return BasedSpace(['a', 'b'], Q)


@pytest.fixture(scope='module')
def w():
    return BasedSpace(['p', 'q', 'r'], Q)


def test_zero_coefficients_dropped(v):
    x = TensorElem([v, v], {(0, 1): Q(2), (1, 1): Q(0)})
    assert len(x) == 1
    assert not x.is_zero()
    assert TensorElem([v, v]).is_zero()


def test_index_checked(v):
    with pytest.raises(IndexOutOfRangeError):
        TensorElem([v, v], {(0, 2): Q(1)})
    with pytest.raises(IndexOutOfRangeError):
        TensorElem([v, v], {(0,): Q(1)})


def test_linear_structure(v):
    x = TensorElem([v, v], {(0, 1): Q(1)})
    y = TensorElem([v, v], {(0, 1): Q(-1), (1, 0): Q(1)})
    assert (x + y).coeffs == {(1, 0): Q(1)}
    assert (x - x).is_zero()
    assert (-x).coeffs == {(0, 1): Q(-1)}
    assert x.scale('1/2').coeffs == {(0, 1): Q('1/2')}


def test_mismatched_factors(v, w):
    with pytest.raises(FactorMismatchError):
        TensorElem([v, v]) + TensorElem([v, w])


def test_outer_product_and_flip(v, w):
    x = TensorElem.basis_tensor([v], (1,))
    y = TensorElem([w], {(2,): Q(3)})
    product = x @ y
    assert product.factors == (v, w)
    assert product.coeffs == {(1, 2): Q(3)}
    assert product.flip().coeffs == {(2, 1): Q(3)}
    assert product.flip().factors == (w, v)


def test_word_coded_keys(v, w):
    x = TensorElem([v, w], {(1, 2): Q(5), (0, 1): Q(1)})
    assert x.words
    assert x.table == {5: Q(5), 1: Q(1)}
    assert x.encoded() == x.table


def test_tuple_keys_past_the_word_limit(monkeypatch, v, w):
    monkeypatch.setattr(element, 'WORD_LIMIT', 4)
    x = TensorElem.basis_tensor([v], (1,))
    assert x.words
    product = x @ TensorElem([w], {(2,): Q(3)})
    assert not product.words
    assert product.table == {(1, 2): Q(3)}
    assert product.encoded() == {5: Q(3)}
    assert (product + product).coeffs == {(1, 2): Q(6)}
    assert product.flip().coeffs == {(2, 1): Q(3)}


@pytest.mark.parametrize(
    ['key', 'rotated', 'sign'],
    (
            ((0, 1), (1, 0), -1),
            ((0, 1, 1), (1, 0, 1), 1),
            ((1, 0, 0, 0), (0, 1, 0, 0), -1),
    )
)
def test_rotate_is_signed(v, key, rotated, sign):
    x = TensorElem([v] * len(key), {key: Q(1)})
    assert x.rotate().coeffs == {rotated: Q(sign)}
    assert x.rotate(signed=False).coeffs == {rotated: Q(1)}


def test_rotate_needs_equal_factors(v, w):
    with pytest.raises(FactorMismatchError):
        TensorElem([v, w], {(0, 0): Q(1)}).rotate()


def test_encoded(v, w):
    x = TensorElem([v, w], {(1, 2): Q(5)})
    assert x.encoded() == {5: Q(5)}
    assert TensorElem.from_encoded([v, w], {5: Q(5)}) == x


def test_apply_tensor_power(v, w):
    f = LinearMap.from_images(v, w, {0: {0: Q(1), 1: Q(1)}, 1: {2: Q(2)}})
    x = TensorElem([v, v], {(0, 1): Q(1)})
    image = apply_tensor_power(f, 2, x)
    assert image.factors == (w, w)
    assert image.coeffs == {(0, 2): Q(2), (1, 2): Q(2)}
    with pytest.raises(FactorMismatchError):
        apply_tensor_power(f, 3, x)


def test_apply_slotwise_mixed(v, w):
    f = LinearMap.from_images(v, w, {0: {0: Q(1)}, 1: {1: Q(1)}})
    x = TensorElem([v, v], {(1, 0): Q(3)})
    image = apply_slotwise([f, LinearMap.identity(v)], x)
    assert image.factors == (w, v)
    assert image.coeffs == {(1, 0): Q(3)}
    assert apply_slotwise([LinearMap.zero(v, w), f], x).is_zero()
    with pytest.raises(FactorMismatchError):
        apply_slotwise([f], x)


def test_linear_map_compose(v, w):
    f = LinearMap.from_images(v, w, {0: {0: Q(1)}, 1: {1: Q(1)}})
    g = LinearMap.from_images(w, v, {0: {1: Q(1)}, 1: {0: Q(1)}, 2: {}})
    h = g.compose(f)
    assert h.images == [{1: Q(1)}, {0: Q(1)}]
    with pytest.raises(FactorMismatchError):
        f.compose(f)
    with pytest.raises(FactorMismatchError):
        LinearMap(v, w, SparseMat.identity(2, Q))
