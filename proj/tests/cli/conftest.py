import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "docs" / "schemas"


@pytest.fixture(scope="session")
def udc():
    path = os.environ.get("UDC_BIN")
    if not path:
        pytest.skip("UDC_BIN not set")

    def run(*args, expect=0):
        proc = subprocess.run([path, *map(str, args)], capture_output=True, text=True, timeout=600)
        assert proc.returncode == expect, f"exit {proc.returncode}, stderr: {proc.stderr}"
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    def load(name):
        return json.loads((SCHEMAS / f"{name}.schema.json").read_text())

    return load


@pytest.fixture
def validated(schema):
    def check(name, text):
        doc = json.loads(text)
        jsonschema.validate(doc, schema(name))
        return doc

    return check


@pytest.fixture
def spec_file(tmp_path, schema):
    def write(doc, name="spec.json"):
        jsonschema.validate(doc, schema("spec"))
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return path

    return write
