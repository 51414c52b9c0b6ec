#!/usr/bin/env python3
"""Validate the tool's JSON outputs against the shipped schemas.

usage: validate_schemas.py QUTRIT_TP SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items()
    )
    return schemas, registry


def run(tool, *args):
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    if proc.returncode not in (0, 2):
        raise RuntimeError(f"{args}: exit {proc.returncode}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(schema_dir)

    def validator(name, pointer=None):
        schema = schemas[name]
        if pointer:
            schema = {"$ref": f"{name}#{pointer}"}
        cls = jsonschema.validators.validator_for(schemas[name])
        cls.check_schema(schemas[name])
        return cls(schema, registry=registry)

    cases = [
        ("gate-table.schema.json", None, ["export", "--format", "json"]),
        ("gate-table.schema.json", None, ["export", "--source", "paper"]),
        ("gate-table.schema.json", None, ["derive", "--format", "json"]),
        ("gate-table.schema.json", "/$defs/operator", ["derive", "--channel", "0", "--outcome", "0", "--format", "json"]),
        ("errata.schema.json", None, ["compare", "--format", "json"]),
        ("batch-summary.schema.json", None,
         ["simulate", "--channel", "0", "--trials", "50", "--seed", "3", "--events", "--format", "json"]),
        ("batch-summary.schema.json", None,
         ["simulate", "--channel", "8", "--trials", "200", "--seed", "9", "--haar", "--summary-only"]),
        ("batch-summary.schema.json", None,
         ["simulate", "--channel", "3", "--trials", "100", "--haar", "--use-paper-gates"]),
    ]
    failures = 0
    for name, pointer, args in cases:
        doc = run(tool, *args)
        errors = sorted(validator(name, pointer).iter_errors(doc), key=lambda e: list(e.path))
        status = "ok" if not errors else "FAIL"
        print(f"{status}: {' '.join(args)} against {name}{pointer or ''}")
        for e in errors[:5]:
            print(f"  {list(e.path)}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
