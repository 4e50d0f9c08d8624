"""End-to-end checks of the command-line tool: outputs, JSON shapes, exit codes."""

import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def call(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout.strip()


def expect(label, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + label)
    if not cond:
        failures.append(f"{label}: {detail}")


def main():
    tmp = tempfile.mkdtemp()
    oracle = os.path.join(tmp, "o.json")
    with open(oracle, "w") as f:
        json.dump({"members": ["000"]}, f)

    rc, out = call("run", "--machine", "xor-probe", "--oracle", oracle, "--input", "000", "--constraint", "li")
    t = json.loads(out) if out else {}
    expect("run violation exit 3", rc == 3, out)
    expect("run violation index", t.get("violationIndex") == 2 and t.get("outcome") == "violation", out)
    expect("run events", [e["q"] for e in t.get("events", [])] == ["000", "111"], out)

    rc, out = call("run", "--machine", "xor-probe", "--oracle", oracle, "--input", "000")
    expect("run accept exit 0", rc == 0 and json.loads(out)["outcome"] == "accept", out)
    rc, out = call("run", "--machine", "reject-all", "--oracle", oracle, "--input", "0")
    expect("run reject exit 1", rc == 1, out)

    transcript = os.path.join(tmp, "t.json")
    with open(transcript, "w") as f:
        json.dump({"input": "00", "events": [{"q": "000", "a": True}], "outcome": "accept", "steps": 2}, f)
    rc, out = call("check", "constraint", "--kind", "s-li", "--transcript", transcript)
    expect("check constraint allowed", rc == 0 and json.loads(out) == {"allowed": True}, out)
    rc, out = call("check", "constraint", "--kind", "s-ld", "--transcript", transcript)
    expect("check constraint refused", rc == 0 and json.loads(out) == {"allowed": False}, out)

    rc, out = call("pad", "3sat", "--input", "0")
    expect("pad 3sat", rc == 0 and json.loads(out) == "100", out)
    rc, out = call("pad", "clique", "--input", "10")
    expect("pad clique", rc == 0 and json.loads(out) == "1010", out)

    formula = {"clauses": [[{"v": 1, "neg": False}, {"v": 2, "neg": False}, {"v": 3, "neg": True}]]}
    rc, enc = call("encode", "formula", "--json", json.dumps(formula))
    expect("encode formula", rc == 0, enc)
    rc, dec = call("decode", "formula", "--input", json.loads(enc))
    expect("formula round trip", rc == 0 and json.loads(dec) == formula, dec)
    rc, out = call("decode", "formula", "--input", "10")
    expect("decode malformed exit 2", rc == 2 and json.loads(out)["error"] == "malformed", out)

    rc, out = call("check", "escape", "--constraint", "pair-0-11", "--input", "01", "--prefix", "0", "--r", "2")
    expect("escape route", rc == 0 and json.loads(out) == ["11"], out)
    rc, out = call("check", "escape", "--constraint", "singleton", "--input", "01", "--prefix", "0", "--r", "2")
    expect("no escape route", rc == 0 and json.loads(out) is None, out)
    rc, out = call("check", "escape", "--constraint", "singleton", "--input", "01", "--prefix", "0", "--r", "2",
                   "--cap", "3")
    expect("escape cap exit 4", rc == 4 and json.loads(out)["error"] == "resource", out)

    rc, out = call("check", "robust", "--machine", "xor-probe", "--constraint", "li", "--wrap", "prefix",
                   "--count", "20")
    expect("wrapped machine robust", rc == 0 and json.loads(out)["robust"] is True, out)
    rc, out = call("check", "robust", "--machine", "xor-probe", "--constraint", "li", "--wrap", "none",
                   "--count", "20")
    expect("raw machine not robust", rc == 3 and json.loads(out)["robust"] is False, out)

    rc, handle = call("transform", "increasing", "--machine", "zero-one-probe", "--padding", "rank-shift")
    expect("transform handle", rc == 0 and json.loads(handle)["kind"] == "transform", handle)
    te = json.dumps({"kind": "tight-equiv", "inner": {"members": ["", "01"]}, "nonMember": "1"})
    rc_a, a = call("run", "--machine", handle, "--oracle", te, "--input", "01")
    rc_b, b = call("run", "--machine", "zero-one-probe", "--oracle", te, "--input", "01")
    expect("transformed handle runs", rc_a == rc_b and json.loads(a)["outcome"] == json.loads(b)["outcome"], a + b)

    rc, out = call("diag", "run", "--construction", "thm4.4", "--machines", "reject-all,xor-probe,zero-probe")
    expect("diag run", rc == 0, out)
    certs = os.path.join(tmp, "c.json")
    with open(certs, "w") as f:
        f.write(out)
    d = json.loads(out)
    expect("diag certificates", [c["case"] for c in d["certificates"]] ==
           ["disagreement-reject", "constraint-violation", "disagreement-reject"], out)
    rc, out = call("diag", "verify", "--certs", certs, "--oracle", certs)
    expect("diag verify", rc == 0 and json.loads(out)["all"] is True, out)
    d["certificates"][0]["case"] = "disagreement-accept"
    with open(certs, "w") as f:
        json.dump(d, f)
    rc, out = call("diag", "verify", "--certs", certs, "--oracle", certs)
    expect("tampered certificate exit 1", rc == 1 and json.loads(out)["all"] is False, out)

    rc, out = call("run", "--machine", "nope", "--oracle", oracle, "--input", "0")
    expect("unknown machine exit 2", rc == 2, out)
    rc, _ = call("run", "--bogus-flag")
    expect("unknown flag exit 2", rc == 2)
    rc, _ = call()
    expect("missing subcommand exit 2", rc == 2)

    first = call("diag", "run", "--construction", "thm4.13", "--machines", "shift-up-probe,reject-all")
    second = call("diag", "run", "--construction", "thm4.13", "--machines", "shift-up-probe,reject-all")
    expect("byte-identical reruns", first == second and first[0] == 0, first[1])

    if failures:
        print("\n".join(failures))
        sys.exit(1)


main()
