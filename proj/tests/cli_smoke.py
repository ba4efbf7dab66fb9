"""End-to-end checks of the command-line tool. Usage:

    python3 cli_smoke.py <esdlab-binary> <scenarios-dir>
"""

import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
SCENARIOS = Path(sys.argv[2])
failures = 0


def run(*args, expect_ok=True):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    ok = (proc.returncode == 0) == expect_ok
    if not ok:
        failures += 1
        print(f"FAIL: {' '.join(args)} -> rc={proc.returncode}\n{proc.stderr}")
    return proc.stdout


out = run("threshold", str(SCENARIOS / "w3_sweep.cfg"), "--measure", "pairwise:bc")
value = float(out.strip())
assert abs(value - 0.4076) < 5e-4, out

out = run("solve-kappa", str(SCENARIOS / "w3_sweep.cfg"), "--lhs", "pairwise:ab",
          "--rhs", "pairwise:bc")
assert abs(float(out.strip()) - 0.2324) < 5e-3, out

out = run("threshold", str(SCENARIOS / "cluster_bc.cfg"), "--measure", "bipartite:bc|a")
assert abs(float(out.strip()) - 0.568) < 2e-3, out

out = run("ghz-check", "--n", "3")
assert out.startswith("no-retrieval"), out

out = run("scaling", "--n", "3", "--k", "1")
assert out.splitlines()[0] == "n,k,gamma_star,kappa_star,retrieved,prob,preserved_pairwise", out

with tempfile.TemporaryDirectory() as tmp:
    target = Path(tmp) / "sweep.csv"
    run("sweep", str(SCENARIOS / "w3_point.cfg"), "--out", str(target))
    text = target.read_text()
    assert text.startswith("gamma,kappa,prob,pairwise:ab,pairwise:ac,pairwise:bc\n"), text
    assert text.count("\n") == 2, text

    fig2 = Path(tmp) / "fig2.csv"
    run("reproduce", "fig2", "--out", str(fig2))
    lines = fig2.read_text().splitlines()
    assert len(lines) == 1 + 202, len(lines)

# error paths exit nonzero
run("threshold", str(SCENARIOS / "w3_sweep.cfg"), "--measure", "pairwise:zz", expect_ok=False)
run("reproduce", "fig9", expect_ok=False)
run("sweep", "/nonexistent.cfg", expect_ok=False)

if failures:
    sys.exit(1)
print("cli smoke ok")
