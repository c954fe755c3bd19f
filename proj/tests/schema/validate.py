"""Validate every scenario, and the report each one produces, against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main(tool, root):
    root = pathlib.Path(root)
    scenario_schema = json.loads((root / "schemas/scenario.schema.json").read_text())
    report_schema = json.loads((root / "schemas/report.schema.json").read_text())
    failures = 0
    for path in sorted((root / "scenarios").glob("*.json")):
        scenario = json.loads(path.read_text())
        try:
            jsonschema.validate(scenario, scenario_schema)
            out = subprocess.run([tool, scenario["command"], "--json", "--scenario", str(path)],
                                 capture_output=True, text=True, check=False).stdout
            jsonschema.validate(json.loads(out), report_schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {path.name}: {e.message}")
            failures += 1
    out = subprocess.run([tool, "regress", "--json"], capture_output=True, text=True, check=False).stdout
    try:
        jsonschema.validate(json.loads(out), report_schema)
    except jsonschema.ValidationError as e:
        print(f"FAIL regress report: {e.message}")
        failures += 1
    print("schemas: %d failure(s)" % failures)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
