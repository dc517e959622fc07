import json
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from swtori.braid import BraidWord
from swtori.laurent import LaurentPoly

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SCHEMAS = ROOT / "src" / "swtori" / "schemas"

# reproducible runs; exact arithmetic on larger braids can exceed the default deadline
settings.register_profile("swtori", deadline=None, derandomize=True)
settings.load_profile("swtori")


@st.composite
def braid_words(draw, min_strands=1, max_strands=5, max_length=12):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(n, tuple(draw(st.lists(letter, max_size=max_length))))


@st.composite
def laurent_polys(draw, vars=("t", "u", "v"), max_terms=6, max_exp=3, max_coef=5):
    nv = draw(st.integers(1, len(vars)))
    names = tuple(vars[:nv])
    exps = st.tuples(*[st.integers(-max_exp, max_exp) for _ in names])
    terms = draw(st.dictionaries(exps, st.integers(-max_coef, max_coef), max_size=max_terms))
    return LaurentPoly(names, terms)


@pytest.fixture(scope="session")
def validator():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    resources = []
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def validate(instance, name):
        schema = json.loads((SCHEMAS / name).read_text())
        Draft202012Validator(schema, registry=registry).validate(instance)

    return validate
