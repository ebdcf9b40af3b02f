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
"""Rational (2,2,2)-isogenies of genus-3 hyperelliptic curves.

Curves, divisors and reports use the same JSON layout as the ``trigonal``
command-line tool. Arguments may be dicts, JSON text or file paths; results
are dicts.
"""

import json
import os

from . import _core

__all__ = [
    "TrigonalError",
    "CSV_HEADER",
    "analyze",
    "isogeny",
    "verify",
    "map_divisor",
    "survey",
    "expectation",
    "normalize",
    "l_polynomial",
    "prime_with_bits",
]

CSV_HEADER = _core.CSV_HEADER


class TrigonalError(Exception):
    """A failure reported by the native core.

    ``code`` is the machine-readable name (``NotRational``, ``ParseError``...),
    ``exit_code`` is what the command-line tool would return.
    """

    def __init__(self, code, message, exit_code):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.exit_code = exit_code


def _text(obj):
    if isinstance(obj, (dict, list)):
        return json.dumps(obj)
    return os.fspath(obj)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.NativeError as e:
        raise TrigonalError(*e.args) from None


def analyze(curve):
    return json.loads(_call(_core.analyze, _text(curve)))


def isogeny(curve, subgroup=0, sign="+", verify=True, trials=5, ext=1, seed=0):
    return json.loads(_call(_core.isogeny, _text(curve), subgroup, sign, verify, trials, ext, seed))


def verify(curve, subgroup=0, sign="+", trials=5, ext=1, seed=0):
    return json.loads(_call(_core.verify, _text(curve), subgroup, sign, trials, ext, seed))


def map_divisor(curve, divisor, subgroup=0, sign="+", seed=0):
    return json.loads(_call(_core.map_divisor, _text(curve), _text(divisor), subgroup, sign, seed))


def survey(samples, seed, p=None, prime_bits=None, depth="full", rows=False):
    """Returns the statistics dict, or (stats, csv_rows) when ``rows`` is set."""
    if (p is None) == (prime_bits is None):
        raise TrigonalError("ParseError", "give exactly one of p and prime_bits", 2)
    prime = str(p) if p is not None else _core.prime_with_bits(prime_bits)
    stats, lines = _call(_core.survey, prime, samples, seed, depth, rows)
    stats = json.loads(stats)
    return (stats, lines) if rows else stats


def expectation(success_prob="1/4"):
    return json.loads(_call(_core.expectation, str(success_prob)))


def normalize(kind, report):
    """Parse and re-serialize a report; the identity on well-formed input."""
    return json.loads(_call(_core.normalize, kind, _text(report)))


def l_polynomial(curve):
    return [int(c) for c in _call(_core.l_polynomial, _text(curve))]


def prime_with_bits(bits):
    return int(_core.prime_with_bits(bits))
