import json
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "schema" / "cmtheta.schema.json").read_text())


@pytest.fixture(scope="session")
def validate(schema):
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.Draft202012Validator.check_schema(schema)

    def check(doc, definition):
        sub = {"$ref": f"#/$defs/{definition}", "$defs": schema["$defs"]}
        jsonschema.Draft202012Validator(sub).validate(doc)

    return check
