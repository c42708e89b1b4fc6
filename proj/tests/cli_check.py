"""Run the CLI over the data fixtures; validate each JSON output against
docs/schema and compare it with tests/golden after normalization.

usage: cli_check.py BRATTELI ROOT {schema,golden,update}
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def cases(root):
    # paths relative to root so messages do not depend on the checkout
    d = Path("data")
    fixtures = sorted((root / d).glob("*.json"))
    out = []
    for f in fixtures:
        out.append((f"analyze_{f.stem}", "analyze", ["analyze", str(f)], 0))
        out.append((f"good_{f.stem}", "good", ["good", str(f)], 0))
        out.append((f"enumerate_{f.stem}", "enumerate", ["enumerate", str(f), "--level", "2"], 0))
        out.append((f"diagram_{f.stem}", "diagram", None, 0))
    ex1, n4, n5 = d / "two_measures.json", d / "loop_family_n4.json", d / "loop_family_n5.json"
    out += [
        ("member_two_measures_third", "member", ["member", str(ex1), "--class", "1", "--value", "1/3"], 0),
        ("member_two_measures_fifth", "member", ["member", str(ex1), "--class", "1", "--value", "1/5"], 0),
        ("member_two_measures_golden", "member", ["member", str(ex1), "--class", "0", "--value", "3 - l"], 0),
        ("member_two_measures_range", "member", ["member", str(ex1), "--class", "0", "--value", "l"], 0),
        ("member_n4_third", "member", ["member", str(n4), "--value", "1/3"], 0),
        ("equal_n4_witness", "equal", ["equal", str(n4), str(d / "witness_p.json")], 0),
        ("equal_n4_n5", "equal", ["equal", str(n4), str(n5)], 0),
        ("equal_two_measures_classes", "equal",
         ["equal", str(ex1), str(ex1), "--class-a", "0", "--class-b", "1"], 0),
        ("construct_rational_i0", "construct", ["construct", "rational", "--q", "4", "--lambda", "3", "--i", "0"], 0),
        ("construct_rational_i1", "construct",
         ["construct", "rational", "--q", "4", "--lambda", "3", "--i", "1", "--source", str(ex1)], 0),
        ("construct_extend_fibonacci", "construct", ["construct", "extend", str(d / "fibonacci.json")], 0),
        ("construct_extend_golden_over_loop", "construct",
         ["construct", "extend", str(d / "golden_over_loop.json"), "--class", "1"], 0),
        ("construct_simplify_n4", "construct", ["construct", "simplify", str(n4)], 0),
        ("error_missing_file", "error", ["analyze", str(d / "missing.json")], 2),
        ("error_bad_value", "error", ["member", str(ex1), "--value", "1/"], 2),
        ("error_unknown_class", "error", ["good", str(ex1), "--class", "7"], 2),
        ("error_search_failed", "error",
         ["construct", "extend", str(d / "fibonacci.json"), "--max-r", "1", "--max-n", "1", "--coeff-bound", "2"], 3),
    ]
    return out


def run(exe, args, code, cwd=None):
    p = subprocess.run([exe, "--json", *args], capture_output=True, text=True, timeout=60, cwd=cwd)
    if p.returncode != code:
        raise AssertionError(f"{args}: exit {p.returncode}, wanted {code}\n{p.stderr}")
    return p.stdout


def validator(root, name):
    registry = Registry()
    for f in (root / "docs" / "schema").glob("*.json"):
        s = json.loads(f.read_text())
        registry = registry.with_resource(s["$id"], Resource.from_contents(s))
    schema = json.loads((root / "docs" / "schema" / f"{name}.schema.json").read_text())
    return Draft202012Validator(schema, registry=registry)


def normalize(text):
    return json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n"


def outputs(exe, root):
    for name, schema, args, code in cases(root):
        if args is None:
            yield name, schema, (root / "data" / f"{name.removeprefix('diagram_')}.json").read_text()
            continue
        first = run(exe, args, code, root)
        if run(exe, args, code, root) != first:
            raise AssertionError(f"{name}: output differs between runs")
        yield name, schema, first


def sidecar_outputs(exe, root):
    # --out writes the diagram and its verification file
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "fib_ext.json"
        subprocess.run([exe, "construct", "extend", str(root / "data" / "fibonacci.json"), "--out", str(out)],
                       check=True, capture_output=True)
        yield "sidecar diagram", "diagram", out.read_text()
        yield "sidecar verification", "verification", Path(str(out) + ".verification.json").read_text()
        # the written diagram is itself a valid input
        yield "sidecar reanalysis", "analyze", run(exe, ["analyze", str(out)], 0)


def main():
    exe, root, mode = str(Path(sys.argv[1]).resolve()), Path(sys.argv[2]).resolve(), sys.argv[3]
    golden = root / "tests" / "golden"
    failures = 0
    if mode == "schema":
        checked = 0
        for name, schema, text in [*outputs(exe, root), *sidecar_outputs(exe, root)]:
            errors = list(validator(root, schema).iter_errors(json.loads(text)))
            checked += 1
            for e in errors:
                failures += 1
                print(f"FAIL {name}: {e.json_path}: {e.message}")
        print(f"{checked} outputs validated, {failures} schema errors")
    elif mode in ("golden", "update"):
        names = set()
        for name, _, text in outputs(exe, root):
            names.add(name)
            path = golden / f"{name}.json"
            if mode == "update":
                path.write_text(normalize(text))
            elif not path.exists():
                failures += 1
                print(f"FAIL {name}: no golden file")
            elif path.read_text() != normalize(text):
                failures += 1
                print(f"FAIL {name}: differs from {path.name}")
        stale = [p.name for p in golden.glob("*.json") if p.stem not in names]
        for s in stale:
            failures += 1
            print(f"FAIL stale golden {s}")
        print(f"{len(names)} golden comparisons, {failures} failures")
    else:
        sys.exit(f"unknown mode {mode}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
