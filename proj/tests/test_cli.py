#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: exit codes, payload shapes,
document round-trips, and diagram emission.

Usage: test_cli.py <path-to-binary> <path-to-data-dir>
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
DATA = sys.argv[2]

failures = []


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("IDEM_VERBOSE", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    doc = None
    if proc.stdout.strip():
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError:
            doc = None
    return proc.returncode, doc


def check(name, cond, detail=""):
    if cond:
        print(f"ok   {name}")
    else:
        print(f"FAIL {name}  {detail}")
        failures.append(name)


def write_tmp(doc):
    fd, path = tempfile.mkstemp(suffix=".json")
    with os.fdopen(fd, "w") as f:
        json.dump(doc, f)
    return path


def revalidates(doc, expected_kind):
    path = write_tmp(doc)
    code, out = run("validate", path)
    os.unlink(path)
    return code == 0 and out["status"] == "ok" and out["payload"]["kind"] == expected_kind


chain3 = os.path.join(DATA, "chain3.json")
n3 = os.path.join(DATA, "n3.json")
inf3 = os.path.join(DATA, "inf3.json")
diamond = os.path.join(DATA, "diamond.json")

# --- validate and props ----------------------------------------------------
code, doc = run("validate", chain3)
check("validate chain3 exits 0 with status ok", code == 0 and doc["status"] == "ok")
check("validate reports semiring kind", doc["payload"]["kind"] == "semiring")
check("validate reports totally ordered", doc["payload"]["properties"]["totally_ordered"])

code, doc = run("props", diamond)
check("props diamond exits 0", code == 0)
check("props diamond not totally ordered", not doc["payload"]["properties"]["totally_ordered"])
check("props diamond radical idealic", doc["payload"]["properties"]["radical_idealic"])

bad = write_tmp({"elements": ["0", "1"], "zero": "0", "one": "1",
                 "add": [["0", "1"], ["1", "1"]],
                 "mul": [["0", "0"], ["0", "0"]]})
code, doc = run("validate", bad)
os.unlink(bad)
check("validate rejects a broken table with exit 1",
      code == 1 and doc["status"] == "validation-failure" and doc["diagnostics"])

code, doc = run("validate", os.path.join(DATA, "no-such.json"))
check("validate missing file exits 1", code == 1 and doc["status"] == "validation-failure")

# --- ideals ------------------------------------------------------------------
code, doc = run("ideals", diamond, "--kind", "all")
check("ideals diamond all = 5", code == 0 and doc["payload"]["count"] == 5)
code, doc = run("ideals", diamond, "--kind", "prime-k")
check("ideals diamond prime-k = 3", code == 0 and doc["payload"]["count"] == 3)
check("prime k-ideals are label arrays",
      sorted(map(tuple, doc["payload"]["ideals"])) == [("0", "a"), ("0", "a", "b", "c"), ("0", "b")])
code, doc = run("ideals", inf3)
check("ideals inf3 default kind k = 2", code == 0 and doc["payload"]["count"] == 2)

# --- spectra ------------------------------------------------------------------
dot_path = tempfile.mktemp(suffix=".dot")
code, doc = run("speck", chain3, "--dot", dot_path)
check("speck chain3 has 2 points", code == 0 and doc["payload"]["points"] == 2)
speck_chain3_space = doc["payload"]["space"]
check("speck space doc re-validates", revalidates(speck_chain3_space, "space"))
with open(dot_path) as f:
    dot = f.read()
os.unlink(dot_path)
check("speck dot names the specialization edge",
      "digraph" in dot and '"{0}" -> "{0,a}"' in dot)

code, doc = run("specc", chain3)
check("specc chain3 has 2 points", code == 0 and doc["payload"]["points"] == 2)
specc_chain3_space = doc["payload"]["space"]

code, doc = run("spv", chain3)
check("spv chain3 has 2 points", code == 0 and doc["payload"]["points"] == 2)
spv_chain3_space = doc["payload"]["space"]
check("spv emits one valuation per point", len(doc["payload"]["valuations"]) == 2)
val = doc["payload"]["valuations"][0]
check("valuation doc carries prime, quotient, values",
      all(k in val for k in ("prime", "quotient", "values")))
check("valuation quotient re-validates", revalidates(val["quotient"], "semiring"))

code, doc = run("zar", chain3)
check("zar chain3 has 2 points", code == 0 and doc["payload"]["points"] == 2)

code, doc = run("specc", diamond)
check("specc diamond has 3 points", code == 0 and doc["payload"]["points"] == 3)
code, doc = run("spv", diamond)
check("spv diamond has 3 points", code == 0 and doc["payload"]["points"] == 3)

# --- homeo ---------------------------------------------------------------------
a = write_tmp(speck_chain3_space)
b = write_tmp(spv_chain3_space)
c = write_tmp(specc_chain3_space)
code, doc = run("homeo", a, b)
check("speck and spv agree on chain3", code == 0 and doc["payload"]["homeomorphic"])
check("homeo emits a point map", len(doc["payload"]["map"]) == 2)
code, doc = run("homeo", a, c)
check("speck and specc disagree on chain3",
      code == 0 and doc["payload"]["homeomorphic"] is False)
os.unlink(a), os.unlink(b), os.unlink(c)

# --- closure --------------------------------------------------------------------
code, doc = run("closure", n3, "--op", "integral", "--ideal", "0")
check("integral closure of {0} is {0,a}",
      code == 0 and doc["payload"]["closed"] == ["0", "a"])
check("integral witness z=0 n=2 present",
      any(w["element"] == "a" and w["z"] == "0" and w["n"] == 2
          for w in doc["payload"]["witnesses"]))

code, doc = run("closure", chain3, "--op", "bracket", "--ideal", "0",
                "--congruence", "{0,a}{1}")
check("bracket closure at a congruence", code == 0 and doc["payload"]["closed"] == ["0", "a"])

code, doc = run("closure", chain3, "--op", "k", "--ideal", "0,1")
check("closure rejects a non-ideal input", code == 1 and doc["status"] == "validation-failure")

code, doc = run("closure", chain3, "--op", "no-such-op", "--ideal", "0")
check("closure rejects an unknown operation", code == 1)

# --- radical-congruence ------------------------------------------------------------
code, doc = run("radical-congruence", n3, "--blocks", "{0}{a}{1}")
check("radical of the diagonal on n3",
      code == 0 and doc["payload"]["radical"] == [["0", "a"], ["1"]])

# --- duality -------------------------------------------------------------------------
code, doc = run("duality", "roundtrip", diamond)
check("duality roundtrip is the identity", code == 0 and doc["payload"]["identical"])

code, doc = run("duality", "to-lattice", diamond)
check("duality to-lattice exits 0", code == 0)
lattice_doc = doc["payload"]["lattice"]
check("emitted lattice re-validates", revalidates(lattice_doc, "lattice"))

lp = write_tmp(lattice_doc)
code, doc = run("duality", "from-lattice", lp)
os.unlink(lp)
with open(diamond) as f:
    diamond_doc = json.load(f)
check("from-lattice recovers the diamond tables",
      code == 0 and doc["payload"]["semiring"] == diamond_doc)

code, doc = run("duality", "to-lattice", n3)
check("duality refuses a non-lattice carrier", code == 1 and doc["status"] == "validation-failure")

# --- idealize / radicalize ------------------------------------------------------------
code, doc = run("idealize", inf3)
check("idealize inf3 collapses the top onto 1",
      code == 0 and doc["payload"]["map"]["a"] == doc["payload"]["map"]["1"])
check("idealized semiring re-validates", revalidates(doc["payload"]["semiring"], "semiring"))

code, doc = run("radicalize", n3)
check("radicalize n3 collapses the nilpotent onto 0",
      code == 0 and doc["payload"]["map"]["a"] == doc["payload"]["map"]["0"])

# --- realize ----------------------------------------------------------------------------
sp = write_tmp(speck_chain3_space)
code, doc = run("realize", sp)
os.unlink(sp)
check("realize rebuilds a carrier from its spectrum",
      code == 0 and revalidates(doc["payload"]["semiring"], "semiring"))
check("realize names a spectrum point for every space point",
      len(doc["payload"]["points"]) == 2)

non_t0 = write_tmp({"points": ["p", "q"], "opens": [[], ["p", "q"]]})
code, doc = run("realize", non_t0)
os.unlink(non_t0)
check("realize refuses a non-T0 space", code == 1 and doc["status"] == "validation-failure")

# --- enumerate -------------------------------------------------------------------------
code, doc = run("enumerate", "--order", "3")
check("enumerate order 3 finds 3 classes", code == 0 and doc["payload"]["count"] == 3)
check("enumerated semirings re-validate",
      all(revalidates(d, "semiring") for d in doc["payload"]["semirings"]))
code, doc = run("enumerate", "--order", "7")
check("enumerate order 7 is out of range", code == 1 and doc["status"] == "validation-failure")

# --- cd-example --------------------------------------------------------------------------
code, doc = run("cd-example", "--n", "2", "--degree", "8")
check("cd-example n=2 degree=8 proves the pair",
      code == 0 and doc["payload"]["membership"] == "proven")
check("cd-example reports the pair rendering",
      doc["payload"]["pair"]["first"] == "x^4 + y^4"
      and doc["payload"]["pair"]["second"] == "x^2*y^2")
check("cd-example derivation is non-empty", len(doc["payload"]["derivation"]) > 0)

code, doc = run("cd-example", "--n", "3", "--degree", "4")
check("cd-example inconclusive exits 2",
      code == 2 and doc["status"] == "inconclusive"
      and doc["payload"]["membership"] == "inconclusive")

# --- envelope and verbosity ---------------------------------------------------------------
code, doc = run("props", chain3)
check("quiet runs carry empty diagnostics", doc["diagnostics"] == [])
code, doc = run("validate", chain3, env_extra={"IDEM_VERBOSE": "1"})
check("IDEM_VERBOSE adds diagnostics", code == 0 and len(doc["diagnostics"]) > 0)

code, doc = run("no-such-subcommand")
check("unknown subcommand exits 1", code == 1 and doc["status"] == "validation-failure")

print()
if failures:
    print(f"{len(failures)} check(s) failed")
    sys.exit(1)
print("all cli checks passed")
