import json
from pathlib import Path

import pytest

from catsset.finmon import FinMonoidalStructure
from catsset.library import boolean_or, chain3_max, chain3_truncated_add, zmonoid
from catsset.skew import SkewData, skew_from_strict

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"


@pytest.mark.parametrize(
    "filename,builder",
    [
        ("two-or.json", boolean_or),
        ("chain3-max.json", chain3_max),
        ("chain3-truncated-add.json", chain3_truncated_add),
    ],
)
def test_shipped_structures_match_library(filename, builder):
    doc = json.loads((EXAMPLES / filename).read_text())
    assert doc == builder().to_json_dict()
    FinMonoidalStructure.from_json_dict(doc)


@pytest.mark.parametrize(
    "filename,builder",
    [
        ("skew-two-or.json", lambda: skew_from_strict(boolean_or())),
        ("skew-kappa-z.json", lambda: skew_from_strict(zmonoid(), kappa="z")),
    ],
)
def test_shipped_skew_data_match_library(filename, builder):
    doc = json.loads((EXAMPLES / filename).read_text())
    assert doc == builder().to_json_dict()
    SkewData.from_json_dict(doc)
