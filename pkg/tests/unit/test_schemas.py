# tests/unit/test_schemas.py
# Documentos de salida: alias, textos canónicos y validación de RunConfig.
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.algebra.poly import EvalSet
from app.counting.classes import LeadClass
from app.counting.formula import dist_table
from app.kernel.scalars import certify, sqrt, to_interval, working_precision
from app.models import VerdictEnum
from app.schemas import DistTableOut, RunConfig, VerdictOut, margin_text, scalar_text


def test_01_dist_table_uses_class_alias(gf3):
    table = dist_table(LeadClass(gf3, (0,)), 2, EvalSet.full(gf3))
    doc = json.loads(DistTableOut.from_domain(table).model_dump_json(by_alias=True))
    assert doc == {"q": 3, "ell": 1, "d": 2, "class": [0], "counts": [1, 1, 1], "source": "formula"}


def test_02_scalar_texts():
    assert scalar_text(None) is None
    assert scalar_text(Fraction(2, 3)) == "2/3"
    assert margin_text(Fraction(1, 2)) == ["1/2", "1/2"]
    with working_precision(128):
        lo, hi = margin_text(sqrt(2))
    assert lo.startswith("1.41421") and hi.startswith("1.41421")


def test_03_verdict_document():
    verdict = certify("sqrt2>1", lambda _b: sqrt(2) - to_interval(1), {"x": 2})
    doc = VerdictOut.from_domain(verdict)
    assert doc.verdict is VerdictEnum.holds
    assert json.loads(doc.model_dump_json())["verdict"] == "holds"


def test_04_run_config_validation():
    cfg = RunConfig(command="count", budget=10, precision=256)
    assert cfg.workers == 1 and cfg.output is None
    with pytest.raises(ValidationError):
        RunConfig(command="count", budget=10, precision=64)
    with pytest.raises(ValidationError):
        RunConfig(command="count", budget=0, precision=128)
