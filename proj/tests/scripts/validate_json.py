"""Runs the CLI with --json and validates every output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema_name, args):
    out = subprocess.run([tool, "--json", *args], capture_output=True, text=True)
    if out.returncode != 0:
        raise SystemExit(f"{args}: exit {out.returncode}: {out.stderr}")
    validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
    errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=str)
    if errors:
        raise SystemExit(f"{args}: {errors[0].message} at {list(errors[0].absolute_path)}")
    print(f"ok  {schema_name:32} {' '.join(args)}")


fields = [
    "x^2*y Dx - x*y^2 Dy",
    "x^3 Dx",
    "x^2 Dx",
    "y^2 Dx",
    "x^2 Dx + x*y Dy + y Dx",
    "x^3 Dx + y Dx + x Dy",
    "x^2 Dx + y^2 Dx + x*y Dy",
    "(1+2i) x^2*y Dx - 1/3 x*y^2 Dy + y Dy",
    "x Dx + 2 y Dy",
    "x^2*y^3 Dx - x^3*y^2 Dy + x Dx",
]
for f in fields:
    check("analyze.schema.json", ["analyze", f])
    check("verdict.schema.json", ["check-complete", f])

for g in ["y Dx + x^2 Dy", "x Dx + y Dy", "x Dx - y Dy", "y Dx + 2 x^3 Dy", "x^2 Dx + y^2 Dy"]:
    check("resolution_tree.schema.json", ["resolve", "--germ", g])
check("resolution_tree.schema.json", ["resolve", "x^2*y Dx - x*y^2 Dy", "--point", "0"])

check("invariants.schema.json", ["invariants", "--germ", "x Dx - y Dy", "--line", "0,1"])
check("invariants.schema.json", ["invariants", "--germ", "x^2 Dx + y Dy", "--line", "1,0", "--den", "x"])

rule_runs = [
    ["obsidiota", "--germ", "x^3 Dx"],
    ["residues", "--germ", "x^2 Dx - x Dx + y Dy"],
    ["le3.1", "--germ", "x Dx - 2 y Dy", "--num", "x*y"],
    ["le3.2", "--germ", "x Dx + 2 y Dy + y Dx", "--den", "x"],
    ["le3.3", "--germ", "x Dx + 2 y Dy + x^2 Dy"],
    ["selano", "--germ", "x Dx + y^2 Dy"],
    ["model", "--germ", "x^2 Dx + y^2 Dy + x^2*y Dy", "--den", "x*y"],
    ["model", "--germ", "x Dx - y Dy"],
]
for r in rule_runs:
    check("sc_rules.schema.json", ["sc-rules", *r])
