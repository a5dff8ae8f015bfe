"""Runs the CLI over the curated corpus and validates every JSON report."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def main():
    cli, schema_path, corpus = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    reports = []
    for f in sorted(corpus.iterdir()):
        name = str(f)
        maxmin = "maxmin" in f.read_text().split("\n", 2)[0] or '"maxmin"' in f.read_text()
        reports.append(run(cli, "core", name, "--json"))
        reports.append(run(cli, "verify", name, "--json"))
        if maxmin:
            continue
        reports.append(run(cli, "spectra", name, "--json"))
        reports.append(run(cli, "spectra", name, "--json", "--display", "maxtimes"))
        reports.append(run(cli, "classify", name, "--json"))
        n = json.loads(reports[-1])["n"]
        reports.append(run(cli, "orbit", name, "--json", "--vector", ",".join(["0"] * n)))
    reports.append(run(cli, "verify", str(corpus), "--json"))
    random_args = ["verify", "--random", "--seed", "7", "--count", "20", "--n", "4", "--json"]
    first = run(cli, *random_args)
    second = run(cli, *random_args, "--serial")
    if first != second:
        sys.exit("random corpus reports differ between runs")
    reports.append(first)
    reports.append(run(cli, "verify", str(corpus / "swap.txt"), "--json", "--mutate", expect=1))
    for text in reports:
        doc = json.loads(text)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            sys.exit(f"{doc.get('command')}: {errors[0].message} at {list(errors[0].path)}")
    print(f"{len(reports)} reports valid")


if __name__ == "__main__":
    main()
