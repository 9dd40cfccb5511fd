#!/usr/bin/env python3
"""Rewrite tests/golden/* from the current vgit binary, following MANIFEST."""
import os
import shlex
import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
cli = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "tools" / "vgit")
golden = root / "tests" / "golden"
data = root / "tests" / "data"

for line in (golden / "MANIFEST").read_text().splitlines():
    if not line.strip() or line.startswith("#"):
        continue
    name, stdin_name, *args = shlex.split(line)
    stdin = open(data / stdin_name, "rb") if stdin_name != "-" else subprocess.DEVNULL
    proc = subprocess.run([cli, *args], stdin=stdin, capture_output=True, env={**os.environ, "VGIT_SEED": "0"})
    if proc.returncode != 0:
        sys.exit(f"{name}: exit {proc.returncode}: {proc.stderr.decode()}")
    (golden / name).write_bytes(proc.stdout)
    print(f"wrote {name}")
