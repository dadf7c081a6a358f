"""CLI JSON outputs validate against the schemas shipped in docs."""

import json
from pathlib import Path

import jsonschema
import pytest

from kpasep.cli import main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"

CASES = [
    ("stationary.schema.json",
     ["stationary", "--k", "2", "--n", "2", "--sector", "1"]),
    ("tableaux.schema.json",
     ["tableaux", "enumerate", "--word", "dae"]),
    ("verify_ansatz.schema.json",
     ["verify", "ansatz", "--k", "2", "--window", "2,1"]),
    ("verify_chain.schema.json",
     ["verify", "chain", "--n", "2", "--r", "1"]),
    ("verify_tilings.schema.json",
     ["verify", "tilings", "--word", "dae"]),
    ("verify_weights.schema.json",
     ["verify", "weights", "--k", "2", "--n", "2"]),
]


@pytest.mark.parametrize("schema_name,argv", CASES)
def test_output_matches_schema(capsys, schema_name, argv):
    code = main(argv)
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    jsonschema.validate(doc, schema)
