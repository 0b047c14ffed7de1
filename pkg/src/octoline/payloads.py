from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, TypeAdapter, ValidationError, model_validator

from octoline.errors import OctolineError, PayloadError
from octoline.models import (
    ConformalGenerator,
    ConformalWord,
    Dilation,
    Inversion,
    LorentzVector,
    NormalForm,
    QMat2,
    Reflection,
    Rho,
    Spinor,
    Translation,
    Twistor,
)

OctonionField = Annotated[list[FiniteFloat], Field(min_length=8, max_length=8)]
QuaternionField = Annotated[list[FiniteFloat], Field(min_length=4, max_length=4)]
_Row = Annotated[list[OctonionField], Field(min_length=2, max_length=2)]
MatrixField = Annotated[list[_Row], Field(min_length=2, max_length=2)]


class _Payload(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SpinorPayload(_Payload):
    chirality: Literal["+", "-"]
    coords: OctonionField


class TwistorPayload(_Payload):
    duality: Literal["primal", "dual"] = "primal"
    phi_minus: OctonionField
    phi_plus: OctonionField

    def to_model(self) -> Twistor:
        return Twistor.from_array([self.phi_minus, self.phi_plus], self.duality)

    @classmethod
    def from_model(cls, psi: Twistor) -> TwistorPayload:
        return cls(
            duality=psi.duality,
            phi_minus=psi.phi_minus.coords.tolist(),
            phi_plus=psi.phi_plus.coords.tolist(),
        )


class LorentzPayload(_Payload):
    a: FiniteFloat
    b: OctonionField
    c: FiniteFloat

    def to_model(self) -> LorentzVector:
        return LorentzVector(self.a, self.b, self.c)


class TranslationPayload(_Payload):
    kind: Literal["translation"] = "translation"
    t: OctonionField


class ReflectionPayload(_Payload):
    kind: Literal["reflection"] = "reflection"
    n: OctonionField


class InversionPayload(_Payload):
    kind: Literal["inversion"] = "inversion"


class DilationPayload(_Payload):
    kind: Literal["dilation"] = "dilation"
    lam: Annotated[FiniteFloat, Field(gt=0)]


GeneratorPayload = Annotated[
    Union[TranslationPayload, ReflectionPayload, InversionPayload, DilationPayload],
    Field(discriminator="kind"),
]
_WORD_ADAPTER = TypeAdapter(list[GeneratorPayload])


class RhoPayload(_Payload):
    # psi1/psi2 与 matrix = [[φ₁⁻, φ₁⁺], [φ₂⁻, φ₂⁺]] 二选一

    psi1: TwistorPayload | None = None
    psi2: TwistorPayload | None = None
    matrix: MatrixField | None = None

    @model_validator(mode="after")
    def _one_encoding(self) -> RhoPayload:
        has_pair = self.psi1 is not None and self.psi2 is not None
        has_any_psi = self.psi1 is not None or self.psi2 is not None
        if has_pair == (self.matrix is not None) or (has_any_psi and not has_pair):
            raise ValueError("需要且只能提供 psi1/psi2 或 matrix 之一")
        if self.psi1 is not None and self.psi2 is not None and self.psi1.duality != self.psi2.duality:
            raise ValueError("psi1 与 psi2 的 duality 必须一致")
        return self

    def to_model(self) -> Rho:
        if self.matrix is not None:
            return Rho.from_array(np.asarray(self.matrix, dtype=np.float64).reshape(4, 8))
        assert self.psi1 is not None and self.psi2 is not None
        return Rho(self.psi1.to_model(), self.psi2.to_model())

    @classmethod
    def from_model(cls, rho: Rho) -> RhoPayload:
        return cls(psi1=TwistorPayload.from_model(rho.psi1), psi2=TwistorPayload.from_model(rho.psi2))


class QMat2Payload(_Payload):
    entries: Annotated[list[QuaternionField], Field(min_length=4, max_length=4)]

    def to_model(self) -> QMat2:
        return QMat2(self.entries)


def _location(exc: ValidationError) -> str:
    first = exc.errors()[0]
    return ".".join(str(part) for part in first.get("loc", ())) or "<root>"


def _validate(model: type[_Payload], data: Any) -> Any:
    try:
        payload = model.model_validate(data)
        return payload.to_model()  # type: ignore[attr-defined]
    except ValidationError as exc:
        raise PayloadError(exc.errors()[0].get("msg", "校验失败"), _location(exc)) from exc
    except OctolineError as exc:
        raise PayloadError(str(exc)) from exc


def decode_spinor(data: Any) -> Spinor:
    try:
        p = SpinorPayload.model_validate(data)
    except ValidationError as exc:
        raise PayloadError(exc.errors()[0].get("msg", "校验失败"), _location(exc)) from exc
    return Spinor(p.chirality, p.coords)


def decode_twistor(data: Any) -> Twistor:
    return _validate(TwistorPayload, data)


def decode_lorentz(data: Any) -> LorentzVector:
    return _validate(LorentzPayload, data)


def decode_rho(data: Any) -> Rho:
    return _validate(RhoPayload, data)


def decode_qmat2(data: Any) -> QMat2:
    return _validate(QMat2Payload, data)


def decode_word(data: Any) -> ConformalWord:
    try:
        letters = _WORD_ADAPTER.validate_python(data)
    except ValidationError as exc:
        raise PayloadError(exc.errors()[0].get("msg", "校验失败"), _location(exc)) from exc
    out: list[ConformalGenerator] = []
    try:
        for letter in letters:
            if isinstance(letter, TranslationPayload):
                out.append(Translation(letter.t))
            elif isinstance(letter, ReflectionPayload):
                out.append(Reflection(letter.n))
            elif isinstance(letter, InversionPayload):
                out.append(Inversion())
            else:
                out.append(Dilation(letter.lam))
    except OctolineError as exc:
        raise PayloadError(str(exc), f"word.{len(out)}") from exc
    return ConformalWord(tuple(out))


def encode_rho(rho: Rho) -> dict[str, Any]:
    return RhoPayload.from_model(rho).model_dump(exclude_none=True)


def encode_generator(g: ConformalGenerator) -> dict[str, Any]:
    if isinstance(g, Translation):
        return {"kind": "translation", "t": g.t.tolist()}
    if isinstance(g, Reflection):
        return {"kind": "reflection", "n": g.n.tolist()}
    if isinstance(g, Inversion):
        return {"kind": "inversion"}
    return {"kind": "dilation", "lam": g.lam}


def encode_word(word: ConformalWord) -> list[dict[str, Any]]:
    return [encode_generator(g) for g in word.generators]


def encode_normal_form(form: NormalForm) -> dict[str, Any]:
    return {
        "rho": encode_rho(form.rho),
        "word": encode_word(form.word),
        "p": np.asarray(form.p).tolist(),
    }


def read_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise PayloadError("文件不存在", str(p)) from exc
    except json.JSONDecodeError as exc:
        raise PayloadError(f"JSON 解析失败: {exc.msg}", f"{p}:{exc.lineno}:{exc.colno}") from exc


def load_rho(path: str | Path) -> Rho:
    return decode_rho(read_json(path))


def dumps(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, default=str)
