# Copyright 2026 The Trigonal Isogeny Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
import csv
import json
import os
import subprocess

import pytest

CLI = os.environ.get("TRIGONAL_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="TRIGONAL_CLI not set")


def run(*args, env=None):
    p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=env)
    return p.returncode, p.stdout, p.stderr


def error_of(stderr):
    return json.loads(stderr.strip().splitlines()[-1])["error"]


def test_analyze(curve37):
    code, out, _ = run("analyze", "--curve", curve37)
    assert code == 0
    r = json.loads(out)
    assert r["num_tractable"] == 1
    assert r["subgroups"][0]["trigonal_rational"] and r["subgroups"][0]["isogeny_rational"]


def test_isogeny_signs(curve37):
    plus = json.loads(run("isogeny", "--curve", curve37, "--no-verify")[1])
    minus = json.loads(run("isogeny", "--curve", curve37, "--no-verify", "--sign", "-")[1])
    assert plus["sign"] == "+" and minus["sign"] == "-"
    assert plus["x_model"] == minus["x_model"]


def test_map(curve37, tmp_path):
    div = tmp_path / "d.json"
    div.write_text(json.dumps({"points_plus": [["10", "28"]], "points_minus": [["14", "6"]]}))
    code, out, _ = run("map", "--curve", curve37, "--divisor", div)
    assert code == 0
    assert json.loads(out)["image"]["degree"] == 0


def test_verify(curve37):
    code, out, _ = run("verify", "--curve", curve37, "--trials", "2", "--ext", "2", "--seed", "3")
    assert code == 0
    v = json.loads(out)["verification"]
    assert v["ok"] and len(v["fibers"]) == 4


def test_survey_csv_and_threads(tmp_path):
    outputs = []
    for threads in ("1", "3"):
        path = tmp_path / f"s{threads}.csv"
        env = dict(os.environ, TRIGONAL_THREADS=threads)
        code, out, _ = run("survey", "--prime", "101", "--samples", "25", "--seed", "9", "--csv", path, env=env)
        assert code == 0
        outputs.append((out, path.read_text()))
    assert outputs[0] == outputs[1]
    rows = list(csv.reader(outputs[0][1].splitlines()))
    assert rows[0] == ["trial", "pattern", "num_tractable", "num_trig_rational", "num_isog_rational", "success"]
    assert [r[0] for r in rows[1:]] == [str(i) for i in range(25)]
    assert all(r[5] in ("0", "1") for r in rows[1:])
    stats = json.loads(outputs[0][0])
    assert stats["curves_with_success"] == sum(int(r[5]) for r in rows[1:])


def test_survey_prime_bits():
    code, out, _ = run("survey", "--prime-bits", "16", "--samples", "4", "--seed", "1", "--depth", "subgroups")
    assert code == 0
    r = json.loads(out)
    assert r["p"] == "65521" and r["depth"] == "subgroups"


def test_expectation():
    assert json.loads(run("expectation")[1])["decimal"] == "0.1857"
    assert json.loads(run("expectation", "--success-prob", "1/2")[1])["decimal"] == "0.3113"


@pytest.mark.parametrize(
    "args,exit_code,err",
    [
        (["analyze", "--curve", "/nonexistent.json"], 2, "ParseError"),
        (["analyze"], 2, "ParseError"),
        (["expectation", "--success-prob", "2"], 2, "ParseError"),
        (["survey", "--prime", "100", "--samples", "1", "--seed", "1"], 2, "NonPrime"),
        (["isogeny", "--curve", "{data}/curve101_not_rational.json"], 1, "NotRational"),
        (["isogeny", "--curve", "{data}/curve101_no_subgroup.json"], 1, "NoTractableSubgroup"),
        (["map", "--curve", "{data}/curve101_twisted.json", "--divisor", '{"points_plus":[],"points_minus":[]}'],
         1, "NotRational"),
    ],
)
def test_errors(data, args, exit_code, err):
    code, out, stderr = run(*[a.replace("{data}", str(data)) for a in args])
    assert code == exit_code
    assert out == ""
    assert error_of(stderr)["code"] == err
