import json
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

import metrivec

SCHEMAS = Path(__file__).resolve().parents[2] / "schemas"


@pytest.fixture(scope="module")
def validator():
    report = json.loads((SCHEMAS / "report.schema.json").read_text())
    config = json.loads((SCHEMAS / "config.schema.json").read_text())
    registry = Registry().with_resources(
        [(s["$id"], Resource.from_contents(s)) for s in (report, config)]
        + [("config.schema.json", Resource.from_contents(config))]
    )
    return jsonschema.Draft202012Validator(report, registry=registry)


CASES = [
    ("integrate", dict(fn="smooth:poly12", space="euclidean:2")),
    ("integrate", dict(fn="digits:16", space="linf:16", mesh_levels=3)),
    ("oscillate", dict(fn="rationals", space="omega-sup:1000", points="1/3,sqrt(2)/2")),
    ("oscillate", dict(fn="digits", space="linf", N=16)),
    ("darboux", dict(fn="digits:16", space="omega-sum:16", eps=0.05)),
    ("adversary", dict(fn="ratind", N=20)),
    ("ftc", dict(fn="smooth:trig", precheck=True)),
    ("spacecheck", dict(space="omega-sup:16", samples=500)),
    ("atlas", dict(space="linf,omega-sum", fn="digits,smooth:trig", grid=256)),
]


@pytest.mark.parametrize("command,options", CASES)
def test_outputs_match_schema(validator, command, options):
    validator.validate(metrivec.run(command, **options))
