#!/usr/bin/env python3
"""End-to-end checks of the galcomp binary: exit codes, output schemas, determinism."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import sympy

binary, fixtures, schemas = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
failures = []


def schema(name):
    return json.loads((schemas / f"{name}.schema.json").read_text())


def run(args, code, check=None):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
    label = " ".join(args)
    if proc.returncode != code:
        failures.append(f"{label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
        return None
    if "json" in args and code == 0:
        out = json.loads(proc.stdout)
        if check:
            try:
                jsonschema.validate(out, schema(check))
            except jsonschema.ValidationError as e:
                failures.append(f"{label}: schema {check}: {e.message}")
        return out
    return proc.stdout


def expect(cond, what):
    if not cond:
        failures.append(what)


ctx_schema = schema("context")
for f in sorted(fixtures.glob("*.json")):
    jsonschema.validate(json.loads(f.read_text()), ctx_schema)
    run(["close", "--input", str(f), "--format", "json"], 0, "close")
    run(["base-field", "--input", str(f), "--format", "json"], 0, "base_field")
    run(["fuse", "--input", str(f), "--table", "--format", "json"], 0, "fuse")
    run(["close", "--input", str(f)], 0)

c2 = str(fixtures / "c2_complex.json")
rc = str(fixtures / "r_c_two_object.json")
s3 = str(fixtures / "s3_cbrt2.json")

out = run(["fuse", "--input", c2, "--left", "A", "--right", "A", "--format", "json"], 0, "fuse")
expect(out and out["summands"] == [{"X": "I", "mult": 1, "field_degree": 2}], "A (x) A should be I")
out = run(["base-field", "--input", rc, "--format", "json"], 0, "base_field")
expect(out and out["indices"] == {"C": 2, "R": 1}, "R/C indices")
expect(out and out["fixed_field"]["degree"] == 1, "R/C base field is Q")
out = run(["base-field", "--input", s3, "--format", "json"], 0, "base_field")
if out:
    t = sympy.symbols("t")
    poly = sympy.Poly(list(reversed([sympy.Rational(c) for c in out["node_fields"]["A"]["min_poly"]])), t)
    real_root = next(r for r in poly.all_roots() if r.is_real)
    expect(poly.degree() == 3 and sympy.field_isomorphism(real_root, sympy.cbrt(2)) is not None,
           "k_A should be Q(cbrt2)")
out = run(["fuse", "--input", s3, "--left", "V", "--right", "V", "--format", "json"], 0, "fuse")
expect(out and sorted(x["field_degree"] for x in out["summands"]) == [3, 6], "V (x) V* field degrees {3,6}")
ids = str(fixtures / "identities_only.json")
out = run(["fuse", "--input", ids, "--left", "I_A", "--right", "I_A", "--format", "json"], 0, "fuse")
expect(out and out["summands"] == [{"X": "I_A", "mult": 1, "field_degree": 2}], "identity fuse")
out = run(["oracle-sweep", "--input", ids, "--format", "json"], 0, "oracle_sweep")
expect(out and out["pairs"] == 1 and out["failures"] == 0, "trivial context sweep")
run(["fuse", "--input", rc, "--left", "M", "--right", "M"], 5)
run(["fuse", "--input", c2, "--left", "Z", "--right", "A"], 2)
run(["fuse", "--input", c2], 2)

out = run(["oracle-sweep", "--realization", "cyclotomic:8", "--format", "json"], 0, "oracle_sweep")
expect(out and out["failures"] == 0 and out["pairs"] > 0, "cyclotomic 8 sweep")
run(["oracle-sweep", "--input", s3, "--format", "json"], 0, "oracle_sweep")
run(["oracle-sweep", "--realization", "quintic"], 2)
run(["oracle-sweep", "--realization", "cyclotomic:99"], 2)
run(["oracle-sweep"], 2)

out = run(["examples", "--format", "json"], 0, "examples")
expect(out and out["all_passed"] and len(out["fixtures"]) == 4, "examples")
run(["examples", "--only", "s3_cbrt2"], 0)
run(["examples", "--only", "nope"], 2)

run([], 2)
run(["close"], 2)
run(["close", "--input", c2, "--format", "xml"], 2)
run(["close", "--input", "/nonexistent.json"], 2)
run(["close", "--input", s3, "--max-group-order", "3"], 3)

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    (tmp / "broken.json").write_text("{ not json")
    run(["close", "--input", str(tmp / "broken.json")], 2)
    (tmp / "disconnected.json").write_text(json.dumps({
        "degree": 3, "ambient_generators": ["(0 1 2)", "(0 1)"],
        "fields": {"A": ["(0 1)"], "B": ["(1 2)"]}}))
    run(["base-field", "--input", str(tmp / "disconnected.json")], 5)
    out = run(["close", "--input", str(tmp / "disconnected.json"), "--format", "json"], 0, "close")
    expect(out and out["connected"] is False, "disconnected system")
    (tmp / "unrealized.json").write_text(json.dumps({
        "degree": 2, "ambient_generators": [[1, 0]], "fields": {"A": []}}))
    run(["oracle-sweep", "--input", str(tmp / "unrealized.json")], 2)
    (tmp / "mismatch.json").write_text(json.dumps({
        "degree": 3, "ambient_generators": ["(0 1 2)"], "realization": {"name": "s3_x3m2"}, "fields": {"A": []}}))
    run(["oracle-sweep", "--input", str(tmp / "mismatch.json")], 2)

# Same input, same bytes.
a = subprocess.run([binary, "fuse", "--input", s3, "--table", "--format", "json"], capture_output=True).stdout
b = subprocess.run([binary, "fuse", "--input", s3, "--table", "--format", "json"], capture_output=True).stdout
expect(a == b, "fuse --table output is not deterministic")
a = subprocess.run([binary, "oracle-sweep", "--realization", "s3_x3m2", "--format", "json"], capture_output=True).stdout
b = subprocess.run([binary, "oracle-sweep", "--realization", "s3_x3m2", "--format", "json"], capture_output=True).stdout
expect(a == b, "oracle-sweep output is not deterministic")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
