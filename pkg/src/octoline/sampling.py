from __future__ import annotations

import zlib

import numpy as np

from octoline.algebra.octonion import quaternion_subalgebra
from octoline.invariants.determinant import det_rho
from octoline.models import (
    ConformalGenerator,
    ConformalWord,
    Dilation,
    Inversion,
    LorentzVector,
    QMat2,
    QuaternionSubalgebra,
    Reflection,
    Rho,
    Translation,
    Twistor,
)


def derive_seed(root: int, name: str) -> int:
    # 只由 (root, name) 决定，与运行顺序无关
    seq = np.random.SeedSequence(entropy=root, spawn_key=(zlib.crc32(name.encode("utf-8")),))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_octonion(rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(8)


def random_unit(rng: np.random.Generator) -> np.ndarray:
    x = rng.standard_normal(8)
    return x / np.linalg.norm(x)


def random_orthonormal_imaginary_pair(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    u = rng.standard_normal(8)
    u[0] = 0.0
    u /= np.linalg.norm(u)
    v = rng.standard_normal(8)
    v[0] = 0.0
    v -= (v @ u) * u
    v /= np.linalg.norm(v)
    return u, v


def random_subalgebra(rng: np.random.Generator) -> QuaternionSubalgebra:
    u, v = random_orthonormal_imaginary_pair(rng)
    return quaternion_subalgebra(u, v)


def random_twistor(rng: np.random.Generator) -> Twistor:
    return Twistor.primal(rng.standard_normal(8), rng.standard_normal(8))


def random_rho(rng: np.random.Generator) -> Rho:
    return Rho.from_array(rng.standard_normal((4, 8)))


def random_unit_det_rho(rng: np.random.Generator, min_det: float = 1e-3) -> Rho:
    while True:
        rho = random_rho(rng)
        value = det_rho(rho)
        if value > min_det * rho.norm() ** 4:
            return rho.scaled(value ** -0.25)


def random_lorentz(rng: np.random.Generator) -> LorentzVector:
    return LorentzVector.from_array(rng.standard_normal(10))


def random_sl2r(rng: np.random.Generator) -> np.ndarray:
    while True:
        p = rng.standard_normal((2, 2))
        d = float(np.linalg.det(p))
        if abs(d) > 0.1:
            p = p / np.sqrt(abs(d))
            return p if d > 0 else p[:, ::-1].copy()


def random_gl2r(rng: np.random.Generator) -> np.ndarray:
    while True:
        p = rng.standard_normal((2, 2))
        if abs(np.linalg.det(p)) > 0.1:
            return p


def random_generator(rng: np.random.Generator) -> ConformalGenerator:
    kind = int(rng.integers(4))
    if kind == 0:
        return Translation(0.5 * rng.standard_normal(8))
    if kind == 1:
        return Reflection(random_unit(rng))
    if kind == 2:
        return Inversion()
    return Dilation(float(np.exp(0.5 * rng.standard_normal())))


def random_word(rng: np.random.Generator, max_len: int = 8) -> ConformalWord:
    return ConformalWord(tuple(random_generator(rng) for _ in range(int(rng.integers(1, max_len + 1)))))


def random_even_word(rng: np.random.Generator, max_len: int = 8, scale: float = 0.3) -> ConformalWord:
    letters: list[ConformalGenerator] = []
    while len(letters) < max_len:
        kind = int(rng.integers(4))
        if kind == 0:
            block: list[ConformalGenerator] = [Translation(scale * rng.standard_normal(8))]
        elif kind == 1:
            block = [Reflection(random_unit(rng)), Reflection(random_unit(rng))]
        elif kind == 2:
            block = [Dilation(float(np.exp(scale * rng.standard_normal())))]
        else:
            block = [Inversion(), Translation(scale * rng.standard_normal(8)), Inversion()]
        if len(letters) + len(block) > max_len:
            break
        letters.extend(block)
    if not letters:
        letters = [Translation(scale * rng.standard_normal(8))]
    return ConformalWord(tuple(letters))


def stabilizer_word(rng: np.random.Generator, timelike: bool = True, pairs: int = 3) -> ConformalWord:
    """固定 v = (±1, 0, 1) 的偶数字。"""
    letters: list[ConformalGenerator] = []
    for _ in range(pairs):
        if timelike and rng.random() < 0.5:
            letters.extend([Inversion(), Reflection(random_unit(rng))])
        else:
            letters.extend([Reflection(random_unit(rng)), Reflection(random_unit(rng))])
    return ConformalWord(tuple(letters))


def random_qmat2(rng: np.random.Generator) -> QMat2:
    return QMat2(rng.standard_normal((4, 4)))
