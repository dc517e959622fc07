"""Write fixtures/T.json, fixtures/Tprime.json and fixtures/e1.json."""

import json
from pathlib import Path

from swtori.surgeryfam import lagrangian_pair_triples
from swtori.swring import e1_block

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def dump(obj, name):
    path = OUT / name
    path.write_text(json.dumps(obj, indent=2) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    T, Tprime = lagrangian_pair_triples()
    dump(T.to_dict(), "T.json")
    dump(Tprime.to_dict(), "Tprime.json")
    dump(e1_block().to_dict(), "e1.json")
