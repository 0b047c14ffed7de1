from __future__ import annotations

import json

import numpy as np
import pytest

from octoline.errors import PayloadError
from octoline.invariants.normal_form import normalize
from octoline.models import DUAL, Dilation, Inversion, Reflection, Translation
from octoline.payloads import (
    decode_lorentz,
    decode_qmat2,
    decode_rho,
    decode_spinor,
    decode_twistor,
    decode_word,
    encode_normal_form,
    encode_rho,
    encode_word,
    load_rho,
    read_json,
)
from octoline.sampling import random_rho


def octonion(k: int = 0, value: float = 1.0) -> list[float]:
    out = [0.0] * 8
    out[k] = value
    return out


class TestRho:
    def test_both_encodings_agree(self, examples_dir):
        as_pairs = load_rho(examples_dir / "rho0.json")
        as_matrix = decode_rho({"matrix": [[octonion(), octonion(0, 0.0)], [octonion(0, 0.0), octonion()]]})
        assert np.allclose(as_pairs.as_array(), as_matrix.as_array())

    def test_encode_then_decode(self, rng):
        rho = random_rho(rng)
        assert np.allclose(decode_rho(json.loads(json.dumps(encode_rho(rho)))).as_array(), rho.as_array())

    def test_both_encodings_given(self):
        psi = {"phi_minus": octonion(), "phi_plus": octonion()}
        with pytest.raises(PayloadError):
            decode_rho({"psi1": psi, "psi2": psi, "matrix": [[octonion(), octonion()], [octonion(), octonion()]]})

    def test_half_a_pair(self):
        with pytest.raises(PayloadError):
            decode_rho({"psi1": {"phi_minus": octonion(), "phi_plus": octonion()}})

    def test_wrong_length_reports_location(self):
        with pytest.raises(PayloadError) as info:
            decode_rho({"psi1": {"phi_minus": [1.0, 0.0], "phi_plus": octonion()}, "psi2": {"phi_minus": octonion(), "phi_plus": octonion()}})
        assert info.value.location.startswith("psi1.phi_minus")

    def test_non_finite_numbers(self):
        data = json.loads('{"matrix": [[[NaN, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0]], [[0, 0, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0]]]}')
        with pytest.raises(PayloadError) as info:
            decode_rho(data)
        assert info.value.location.startswith("matrix")

    def test_mixed_duality(self):
        psi = {"phi_minus": octonion(), "phi_plus": octonion()}
        with pytest.raises(PayloadError):
            decode_rho({"psi1": psi, "psi2": {**psi, "duality": "dual"}})

    def test_unknown_field(self):
        with pytest.raises(PayloadError):
            decode_rho({"matrix": [[octonion(), octonion()], [octonion(), octonion()]], "note": "x"})


class TestOtherPayloads:
    def test_spinor(self):
        phi = decode_spinor({"chirality": "+", "coords": octonion(3)})
        assert phi.chirality == "+"
        with pytest.raises(PayloadError):
            decode_spinor({"chirality": "0", "coords": octonion()})

    def test_dual_twistor(self):
        psi = decode_twistor({"duality": "dual", "phi_minus": octonion(), "phi_plus": octonion(1)})
        assert psi.duality == DUAL
        assert psi.phi_minus.chirality == "+"

    def test_lorentz(self):
        f = decode_lorentz({"a": 1.0, "b": octonion(0, 0.0), "c": 1.0})
        assert (f.a, f.c) == (1.0, 1.0)

    def test_qmat2(self):
        m = decode_qmat2({"entries": [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]})
        assert np.allclose(m.a, [1, 0, 0, 0])


class TestWords:
    def test_decode(self):
        word = decode_word(
            [
                {"kind": "translation", "t": octonion(2, 0.5)},
                {"kind": "reflection", "n": octonion(1)},
                {"kind": "inversion"},
                {"kind": "dilation", "lam": 2.0},
            ]
        )
        kinds = [type(g) for g in word.generators]
        assert kinds == [Translation, Reflection, Inversion, Dilation]
        assert encode_word(word)[2] == {"kind": "inversion"}

    def test_unknown_kind(self):
        with pytest.raises(PayloadError):
            decode_word([{"kind": "rotation"}])

    def test_non_positive_dilation(self):
        with pytest.raises(PayloadError):
            decode_word([{"kind": "dilation", "lam": 0.0}])

    def test_non_unit_normal(self):
        with pytest.raises(PayloadError) as info:
            decode_word([{"kind": "inversion"}, {"kind": "reflection", "n": octonion(1, 2.0)}])
        assert info.value.location == "word.1"


class TestFiles:
    def test_missing_file(self, tmp_path):
        with pytest.raises(PayloadError):
            read_json(tmp_path / "absent.json")

    def test_broken_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(PayloadError):
            load_rho(path)

    def test_normal_form_payload(self, examples_dir):
        form = normalize(load_rho(examples_dir / "antidiagonal.json"))
        payload = encode_normal_form(form)
        assert set(payload) == {"rho", "word", "p"}
        assert any(item["kind"] == "inversion" for item in payload["word"])
