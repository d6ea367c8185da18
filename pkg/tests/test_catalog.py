"""Involution class catalog: template matching, exact sizes, and order
divisibility."""

import json

import pytest

from planesieve.catalog import (CLASS_TEMPLATES, catalog_records,
                                class_divides_order, classes_for,
                                involution_class_size)
from planesieve.groups import group_spec, order


def _size(spec, label):
    for entry in classes_for(spec):
        if entry.label == label:
            return involution_class_size(entry)
    raise AssertionError(f"{label} does not cover {spec}")


def test_template_labels_unique():
    labels = [t["label"] for t in CLASS_TEMPLATES]
    assert len(labels) == len(set(labels)) == 22


def test_template_parities_valid():
    assert {t["parity"] for t in CLASS_TEMPLATES} <= {"odd", "even", "mixed"}


FROZEN = [
    (("PSL", {"n": 2, "q": 13}), "psl2-odd-plus", 91),
    (("PSL", {"n": 2, "q": 7}), "psl2-odd-minus", 21),
    (("PSL", {"n": 2, "q": 4}), "psl2-even", 15),
    (("PSL", {"n": 3, "q": 13}), "psl3-odd", 30927),
    (("PSL", {"n": 3, "q": 2}), "psl3-even", 21),
    (("PSL", {"n": 4, "q": 2}), "psl-transvection", 105),
    (("PSL", {"n": 5, "q": 2}), "psl-transvection", 465),
    (("PSp", {"n": 4, "q": 7}), "psp4", 1225),
    (("PSp", {"n": 6, "q": 7}), "psp-central", 7**4 * (7**4 + 7**2 + 1)),
    (("PSU", {"n": 5, "q": 7}), "psu-odd-n-bound", 7**4 * (7**5 + 1) // 8),
    (("POmega", {"n": 7, "q": 7, "eps": "o"}), "omega-odd-plus", 343 * 344 // 2),
    (("POmega", {"n": 7, "q": 7, "eps": "o"}), "omega-odd-minus", 343 * 342 // 2),
    (("POmega", {"n": 9, "q": 7, "eps": "o"}), "omega-odd-plus", 2401 * 2402 // 2),
    (("POmega", {"n": 9, "q": 7, "eps": "o"}), "omega-odd-minus", 2401 * 2400 // 2),
    (("G2", {"q": 7}), "g2", 7**4 * (7**4 + 7**2 + 1)),
    (("F4", {"q": 7}), "f4", 7**8 * (7**8 + 7**4 + 1)),
    (("3D4", {"q": 7}), "threeD4", 7**8 * (7**8 + 7**4 + 1)),
    (("E6", {"q": 7, "eps": "-"}), "e6",
     7**16 * (7**2 - 7 + 1) * (7**6 - 7**3 + 1) * (7**8 + 7**4 + 1)),
    (("E6", {"q": 7, "eps": "+"}), "e6",
     7**16 * (7**2 + 7 + 1) * (7**6 + 7**3 + 1) * (7**8 + 7**4 + 1)),
]


@pytest.mark.parametrize("spec_args,label,expected", FROZEN)
def test_frozen_class_sizes(spec_args, label, expected):
    fam, kwargs = spec_args
    assert _size(group_spec(fam, **kwargs), label) == expected


GRID = [
    ("PSL", {"n": 2, "q": 5}), ("PSL", {"n": 2, "q": 9}),
    ("PSL", {"n": 2, "q": 16}), ("PSL", {"n": 3, "q": 4}),
    ("PSL", {"n": 4, "q": 3}), ("PSL", {"n": 6, "q": 2}),
    ("PSU", {"n": 5, "q": 3}), ("PSU", {"n": 7, "q": 3}),
    ("PSp", {"n": 4, "q": 5}), ("PSp", {"n": 6, "q": 3}),
    ("POmega", {"n": 7, "q": 3, "eps": "o"}),
    ("POmega", {"n": 11, "q": 13, "eps": "o"}),
    ("G2", {"q": 13}), ("F4", {"q": 13}), ("3D4", {"q": 13}),
    ("E6", {"q": 13, "eps": "-"}), ("E7", {"q": 7}), ("E8", {"q": 7}),
]


def test_class_sizes_positive_and_dividing():
    checked = 0
    for fam, kwargs in GRID:
        spec = group_spec(fam, **kwargs)
        for entry in classes_for(spec):
            size = involution_class_size(entry)
            assert size > 0
            if entry.exact:
                assert order(spec) % size == 0, (str(spec), entry.label)
                assert class_divides_order(entry)
            checked += 1
    assert checked >= 18


def test_uncovered_families_yield_no_classes():
    assert classes_for(group_spec("A", n=7)) == ()
    assert classes_for(group_spec("SPOR", name="M11")) == ()
    assert classes_for(group_spec("POmega", n=8, q=7, eps="+")) == ()
    assert classes_for(group_spec("PSU", n=4, q=3)) == ()


def test_eps_validity_distinguishes_forms():
    minus = _size(group_spec("E6", q=7, eps="-"), "e6")
    plus = _size(group_spec("E6", q=7, eps="+"), "e6")
    assert minus != plus
    odd9 = classes_for(group_spec("POmega", n=9, q=7, eps="o"))
    assert {e.label for e in odd9} >= {"omega-odd-plus", "omega-odd-minus"}


def test_psl2_parity_split_by_q_mod_4():
    assert [e.label for e in classes_for(group_spec("PSL", n=2, q=13))] \
        == ["psl2-odd-plus"]
    assert [e.label for e in classes_for(group_spec("PSL", n=2, q=7))] \
        == ["psl2-odd-minus"]
    assert [e.label for e in classes_for(group_spec("PSL", n=2, q=8))] \
        == ["psl2-even"]


def test_catalog_records_serializable():
    records = catalog_records()
    assert len(records) == 22
    text = json.dumps(records)
    assert "psl2-odd-plus" in text
    for rec in records:
        assert rec["anchor"]
        assert rec["parity"] in ("odd", "even", "mixed")


def test_exact_flags_are_stable():
    by_label = {t["label"]: t["exact"] for t in CLASS_TEMPLATES}
    assert by_label["psl2-odd-plus"] is True
    assert by_label["g2"] is True
    assert by_label["e7-plus"] is False
    assert by_label["e8"] is False
