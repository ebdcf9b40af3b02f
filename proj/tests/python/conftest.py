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
import os
import pathlib

import pytest

DATA = pathlib.Path(os.environ.get("TRIGONAL_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


@pytest.fixture
def data():
    return DATA


@pytest.fixture
def curve37(data):
    return data / "curve37.json"
