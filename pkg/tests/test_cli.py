import json
import subprocess
import sys

import pytest

from hyperkit import formats
from hyperkit.axioms import Tag
from hyperkit.cli import main
from hyperkit.core import find_isomorphism
from hyperkit.matroid import adjoin_point, fano_matroid
from hyperkit.univ import free
from hyperkit.zoo import (
    cyclic_group,
    group_to_hypermagma,
    krasner,
    make_gf9,
    symmetric_group,
)

from util import small_battery, z2


def write_obj(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(formats.dumps(payload))
    return str(p)


def krasner_file(tmp_path):
    return write_obj(tmp_path, "krasner.json", formats.hypermagma_to_dict(krasner()))


def test_roundtrip_hypermagmas():
    for M in small_battery():
        d = formats.hypermagma_to_dict(M)
        again = formats.parse_hypermagma(json.loads(formats.dumps(d)))
        assert again == M
        assert formats.dumps(formats.hypermagma_to_dict(again)) == formats.dumps(d)


def test_roundtrip_group_ring_matroid():
    S3 = symmetric_group(3)
    d = formats.group_to_dict(S3)
    assert formats.parse_group(d) == S3
    R = make_gf9()
    assert formats.parse_ring(formats.ring_to_dict(R)) == R
    F = adjoin_point(fano_matroid())
    assert formats.parse_matroid(formats.matroid_to_dict(F)) == F


def test_check_krasner(tmp_path, capsys):
    path = krasner_file(tmp_path)
    assert main(["check", path]) == 0
    out = capsys.readouterr().out
    assert "canonical hypergroup" in out


def test_check_json_output(tmp_path, capsys):
    path = krasner_file(tmp_path)
    assert main(["check", path, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classification"] == "CanonicalHypergroup"
    assert payload["flags"]["total"]


def test_check_empty(tmp_path, capsys):
    path = write_obj(
        tmp_path, "empty.json", {"kind": "hypermagma", "carrier": [], "table": []}
    )
    assert main(["check", path]) == 0
    assert "initial" in capsys.readouterr().out


def test_check_matroid_via_mosaic(tmp_path, capsys):
    F = fano_matroid()
    path = write_obj(tmp_path, "fano.json", formats.matroid_to_dict(F))
    assert main(["check", path]) == 0
    out = capsys.readouterr().out
    assert "commutative mosaic" in out
    assert "associative=no" in out
    assert "witness associative" in out


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == 2
    missing = write_obj(tmp_path, "missing.json", {"kind": "hypermagma", "carrier": ["a"]})
    assert main(["check", missing]) == 2
    # invalid content is a parse failure too: a group table that is no group
    not_group = write_obj(
        tmp_path,
        "ng.json",
        {"kind": "group", "carrier": ["a", "b"], "table": [["a", "a"], ["a", "a"]]},
    )
    assert main(["check", not_group]) == 2
    false_identity = write_obj(
        tmp_path,
        "fi.json",
        {
            "kind": "hypermagma",
            "carrier": ["a", "b"],
            "identity": "a",
            "table": [[["a"], []], [[], []]],
        },
    )
    assert main(["check", false_identity]) == 2


def test_construct_free(tmp_path, capsys):
    out = str(tmp_path / "f.json")
    assert main(["construct", "free", "--tag", "cmsc", "--gens", "1", "-o", out]) == 0
    kind, obj = formats.load(out)
    assert obj.labels == ("0", "1", "-1")


def test_construct_tensor_boxtimes(tmp_path):
    z2p = write_obj(tmp_path, "z2.json", formats.hypermagma_to_dict(z2()))
    out = str(tmp_path / "t.json")
    assert main(["construct", "tensor", "--op", "boxtimes", z2p, z2p, "-o", out]) == 0
    _, T = formats.load(out)
    assert T.n == 2
    # the tensor square of Z2 is Z2 (self-inverse elements represent it)
    assert find_isomorphism(T, z2()) is not None
    quotient = tmp_path / "t.quotient.morphism.json"
    assert quotient.exists()


def test_construct_from_ring(tmp_path):
    f9 = write_obj(tmp_path, "f9.json", formats.ring_to_dict(make_gf9()))
    out = str(tmp_path / "h.json")
    assert (
        main(
            [
                "construct",
                "from-ring",
                "--quotient-units",
                f9,
                "--subgroup",
                "1,2",
                "-o",
                out,
            ]
        )
        == 0
    )
    _, H = formats.load(out)
    assert H.n == 5


def test_construct_from_group_conj(tmp_path):
    s3 = write_obj(tmp_path, "s3.json", formats.group_to_dict(symmetric_group(3)))
    out = str(tmp_path / "conj.json")
    assert main(["construct", "from-group", "--construction", "conj", s3, "-o", out]) == 0
    _, C = formats.load(out)
    assert C.n == 3


def test_construct_from_matroid(tmp_path):
    fano = write_obj(
        tmp_path, "fano.json", formats.matroid_to_dict(fano_matroid())
    )
    out = str(tmp_path / "fm.json")
    assert main(["construct", "from-matroid", fano, "-o", out]) == 0
    _, H = formats.load(out)
    assert H.n == 8


def test_construct_product_and_morphisms(tmp_path):
    kp = krasner_file(tmp_path)
    out = str(tmp_path / "p.json")
    assert main(["construct", "product", kp, kp, "-o", out]) == 0
    _, P = formats.load(out)
    assert P.n == 4
    for i in (0, 1):
        mp = tmp_path / f"p.proj{i}.morphism.json"
        assert mp.exists()
        _, m = formats.load(str(mp))
        assert m.dom == P


def test_construct_unitize(tmp_path):
    kp = krasner_file(tmp_path)
    out = str(tmp_path / "u.json")
    assert main(["construct", "unitize", kp, "--at", "1", "-o", out]) == 0
    _, U = formats.load(out)
    assert U.n == 1


def test_construct_coequalizer_via_morphism_files(tmp_path):
    from hyperkit.core import Morphism

    Z, K = z2(), krasner()
    t = Morphism(Z, K, (0, 1))
    zero = Morphism(Z, K, (0, 0))
    fp = write_obj(tmp_path, "f.json", formats.morphism_to_dict(t))
    gp = write_obj(tmp_path, "g.json", formats.morphism_to_dict(zero))
    out = str(tmp_path / "coeq.json")
    assert main(["construct", "coequalizer", "--tag", "uhmag", fp, gp, "-o", out]) == 0
    _, Q = formats.load(out)
    assert Q.n == 1
    out2 = str(tmp_path / "eq.json")
    assert main(["construct", "equalizer", fp, gp, "-o", out2]) == 0
    _, E = formats.load(out2)
    assert E.n == 1


def test_construct_builtin(tmp_path):
    out = str(tmp_path / "k.json")
    assert main(["construct", "builtin", "--name", "krasner", "-o", out]) == 0
    _, K = formats.load(out)
    assert K == krasner()


def test_module_error_exit_1(tmp_path):
    f9 = write_obj(tmp_path, "f9.json", formats.ring_to_dict(make_gf9()))
    out = str(tmp_path / "h.json")
    code = main(
        ["construct", "from-ring", "--quotient-units", f9, "--subgroup", "1,i", "-o", out]
    )
    assert code == 1


def test_construct_deterministic_bytes(tmp_path):
    kp = krasner_file(tmp_path)
    out1, out2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    main(["construct", "tensor", "--op", "wedge", kp, kp, "-o", out1])
    main(["construct", "tensor", "--op", "wedge", kp, kp, "-o", out2])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_paper_suite_only(capsys):
    assert main(["paper-suite", "--only", "krasner"]) == 0
    out = capsys.readouterr().out
    assert "PASS krasner" in out


def test_paper_suite_jobs_deterministic(capsys):
    main(["paper-suite", "--only", "f2-represents", "--jobs", "1"])
    out1 = capsys.readouterr().out
    main(["paper-suite", "--only", "f2-represents", "--jobs", "4"])
    out2 = capsys.readouterr().out
    assert out1 == out2


GOLDEN_WEDGE = """{
  "kind": "hypermagma",
  "carrier": [
    "e",
    "1|1"
  ],
  "identity": "e",
  "table": [
    [
      [
        "e"
      ],
      [
        "1|1"
      ]
    ],
    [
      [
        "1|1"
      ],
      [
        "e"
      ]
    ]
  ]
}
"""


def test_golden_wedge_serialization():
    from hyperkit.monoidal import wedge_smash

    q = wedge_smash(z2(), z2())
    assert formats.dumps(formats.hypermagma_to_dict(q.cod)) == GOLDEN_WEDGE


def test_golden_gf9_quotient_row():
    from hyperkit.zoo import gf9_quotient

    H = gf9_quotient().additive
    d = formats.hypermagma_to_dict(H)
    assert d["carrier"] == ["0", "i", "1", "1+i", "1+2i"]
    assert d["table"][2][1] == ["1+i", "1+2i"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperkit", "paper-suite", "--only", "can-z2-k"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "PASS can-z2-k" in proc.stdout
