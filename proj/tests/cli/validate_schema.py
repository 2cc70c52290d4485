"""Runs dop on a command matrix and validates every JSON document against the schema."""
import json
import subprocess
import sys

import jsonschema

DOP, SCHEMA = sys.argv[1], sys.argv[2]

CASES = [
    (["decide", "--ring", "laurent", "--deriv", "dx=x^3"], 0),
    (["decide", "--ring", "laurent", "--deriv", "dx=x^2 + x"], 0),
    (["decide", "--ring", "poly1", "--deriv", "dx=5"], 0),
    (["decide", "--ring", "poly1", "--deriv", "dx=x^2"], 0),
    (["decide", "--ring", "poly1", "--deriv", "dx=x^2+1"], 2),
    (["decide", "--ring", "poly2", "--deriv", "dx=1; dy=x"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=x; dy=y"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=1; dy=y"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=1; dy=x*y + 1"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=1; dy=x*y^2"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=x*y^2 + y^2 - y; dy=-x*y^4 - y^4 + y^3"], 0),
    (["decide", "--ring", "poly2", "--deriv", "dx=0; dy=0"], 0),
    (["darboux", "--deriv", "dx=x; dy=y", "--bound", "2"], 0),
    (["darboux", "--deriv", "dx=x^2 - x*y; dy=y^2 - x*y", "--bound", "3"], 0),
    (["primitive", "--deriv", "dx=1; dy=y", "--bound", "3"], 0),
    (["primitive", "--deriv", "dx=x; dy=y", "--bound", "2"], 0),
    (["primitive", "--deriv", "dx=1; dy=x*y + 1", "--bound", "2"], 0),
    (["simple", "--ring", "poly1", "--deriv", "dx=5"], 0),
    (["simple", "--ring", "laurent", "--deriv", "dx=x^2 + x"], 0),
    (["ore-mul", "--ring", "poly2", "--deriv", "dx=1; dy=x", "--f", "t^2", "--g", "x*y"], 0),
    (["witness", "--deriv", "dx=1", "--f", "t^2", "--x", "x"], 0),
    (["first-integral", "--deriv", "dx=1; dy=x*y^2", "--bound", "3"], 0),
    (["first-integral", "--deriv", "dx=1; dy=y", "--bound", "2"], 2),
    (["decide", "--ring", "poly2", "--deriv", "dx=1"], 1),
    (["witness", "--deriv", "dx=x", "--f", "t", "--x", "x"], 1),
    (["decide", "--deriv", "dx=1", "--kmax", "0"], 1),
]


def main():
    schema = json.load(open(SCHEMA))
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, want in CASES:
        proc = subprocess.run([DOP, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != want:
            print(f"FAIL exit {proc.returncode} != {want}: {label}\n{proc.stderr}")
            failures += 1
            continue
        try:
            validator.validate(json.loads(proc.stdout))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL schema: {label}\n{e}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
