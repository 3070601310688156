import io
import json
import subprocess
import sys

import pytest

from cyclreg.cli import run
from cyclreg.semigroup import CayleyTable
from cyclreg.variety import Verdict


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def bands(tmp_path):
    p = tmp_path / "bands.txt"
    p.write_text("x = x^2\n", encoding="utf-8")
    return str(p)


def test_word_decompose():
    code, out, _ = call("word", "decompose", "xyxz")
    assert code == 0
    assert out == "components: [xyx][z]; m_c=2; blocking: z; regular: no\n"
    code, out, _ = call("word", "decompose", "xyyx")
    assert out == "components: [xyyx]; m_c=1; blocking: -; regular: yes\n"


def test_word_similar():
    assert call("word", "similar", "xyx", "yxy")[:2] == (0, "similar: yes\n")
    code, out, _ = call("word", "similar", "z", "zz")
    assert code == 1 and "SINGLETON_POWER" in out


def test_parse_error_exit_code():
    code, _, err = call("word", "decompose", "x^0")
    assert code == 2 and "column 3" in err
    code, _, err = call("identity", "check", "--semigroup", "A0", "xy = y!")
    assert code == 2 and "column 7" in err


def test_usage_errors():
    assert call("word")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("semigroup", "show", "K")[0] == 2
    assert call("semigroup", "show", "Q")[0] == 2


def test_identity_check():
    code, out, _ = call("identity", "check", "--semigroup", "A0", "xy = yx")
    assert code == 1
    assert "x->a, y->b" in out and "ab vs 0" in out
    code, out, _ = call("identity", "check", "--semigroup", "A0", "x^2 = x^3")
    assert code == 0 and out.startswith("holds")
    code, out, _ = call("identity", "check", "--semigroup", "K", "--n", "2", "x^4 = x^6")
    assert code == 0


def test_identity_derive():
    code, out, _ = call("identity", "derive-yx", "x^2zy^2 = x^2z^2y^2")
    assert (code, out) == (0, "x^3y^3 = x^3yxy^3\n")
    assert call("identity", "derive-yx", "xyx = yxy")[0] == 1


def test_semigroup_show():
    code, out, _ = call("semigroup", "show", "A0")
    assert code == 0
    assert "regular elements: {a, b, 0}" in out
    assert "cyclically regular: yes" in out
    assert "regularly closed: no (a*b = ab is not regular)" in out
    code, out, _ = call("semigroup", "show", "K", "--n", "1")
    assert "order: 9" in out and "cyclically regular: no" in out


def test_semigroup_show_json_round_trips():
    code, out, _ = call("semigroup", "show", "B", "--json")
    d = json.loads(out)
    S = CayleyTable.from_dict(d)
    assert S.order == 6 and d["cyclically_regular"] is False


def test_semigroup_close(tmp_path):
    p = tmp_path / "n3.txt"
    p.write_text("# nilpotent\ngens: x\nx^3 = 0\n", encoding="utf-8")
    code, out, _ = call("semigroup", "close", str(p))
    assert code == 0 and "order: 3" in out
    p.write_text("gens: x y\nxy = yx\n", encoding="utf-8")
    assert call("semigroup", "close", str(p), "--cap", "8")[0] == 3
    p.write_text("gens: x\nx^3 = q!\n", encoding="utf-8")
    code, _, err = call("semigroup", "close", str(p))
    assert code == 2 and "line 2" in err
    assert call("semigroup", "close", str(tmp_path / "missing.txt"))[0] == 2


def test_variety_regular_closed(bands):
    code, out, _ = call("variety", "regular-closed", "--basis", bands)
    assert code == 0 and "SINGLETON_POWER" in out
    code, out, _ = call("variety", "regular-closed", "--basis", bands, "--json")
    v = Verdict.from_dict(json.loads(out))
    assert v.answer and v.to_json() == out.strip()


def test_variety_cyclic_regular(tmp_path, bands):
    code, out, _ = call("variety", "cyclic-regular", "--basis", bands, "--json")
    assert code == 0 and json.loads(out)["parameters"] == {"n_max": 3}
    p = tmp_path / "comm.txt"
    p.write_text("xy = yx\n", encoding="utf-8")
    code, out, _ = call("variety", "cyclic-regular", "--basis", str(p), "--n-max", "2")
    assert code == 1 and "variety contains A" in out
    assert call("variety", "cyclic-regular", "--basis", str(p), "--n-max", "0")[0] == 2


def test_output_is_deterministic(bands):
    runs = {call("variety", "cyclic-regular", "--basis", bands, "--json") for _ in range(3)}
    assert len(runs) == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cyclreg", "word", "similar", "xy", "yx"],
                       capture_output=True, text=True)
    assert r.returncode == 1 and "ORDER_DIFFERS" in r.stdout
