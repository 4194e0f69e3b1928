"""Print the headline values of the construction next to their published values.

    python scripts/reproduce_results.py [--json]
"""

import argparse
import json

from gja.algebra import A, H, format_element
from gja.axioms import classify_assoc
from gja.brackets import INSTANCES_BY_NAME, JACOBI_INSTANCES, PRINTED_FOTI_INNER3, jacobi_commutator_variant, jacobi_fito, jacobi_foti, prefactored_jacobi
from gja.rep import signature, table_diff
from gja.words import Word, contract, contract_traced

a, b, c, d = A.basis()


def rows():
    x, steps = contract_traced(Word.of("cbcb"))
    chain = " -> ".join([str(s.before) for s in steps] + [format_element(x)])
    yield "contract cbcb", chain, "-ccbb -> cca -> -cc -> -a"
    yield "contract bdbd", format_element(contract(Word.of("bdbd"))), "a"
    yield "(b+c)^2", format_element((b + c) * (b + c)), "0"
    yield "(c+d)^2", format_element((c + d) * (c + d)), "0"
    yield "class of A", classify_assoc(A).summary["class"], "neither"
    yield "class of H", classify_assoc(H).summary["class"], "associative"
    for inst in JACOBI_INSTANCES:
        yield f"fito {inst.name}", format_element(jacobi_fito(inst)), "0"
    printed = {"inner-3": format_element(PRINTED_FOTI_INNER3)}
    for inst in JACOBI_INSTANCES:
        yield f"foti {inst.name}", format_element(jacobi_foti(inst)), printed.get(inst.name, "")
    yield "commutator variant", format_element(jacobi_commutator_variant()), "-4a"
    yield "commutator variant, generators x2", format_element(jacobi_commutator_variant(2)), ""
    yield "graded prefactors outer-1", format_element(prefactored_jacobi(INSTANCES_BY_NAME["outer-1"])), ""
    yield "graded prefactors inner-1", format_element(prefactored_jacobi(INSTANCES_BY_NAME["inner-1"])), ""
    for alg in (H, A):
        s = signature(alg)
        yield f"signature {alg.name}", f"{s.signs} trace {s.trace}", ""
    yield "A vs H differing cells", " ".join(w["row"] + w["col"] for w in table_diff()), ""


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    data = list(rows())
    if args.json:
        print(json.dumps([{"quantity": q, "engine": v, "published": r} for q, v, r in data], indent=2))
        return
    w = max(len(q) for q, _, _ in data)
    for q, v, r in data:
        flag = "" if not r or r.split(" (")[0] == v else "   <- differs"
        print(f"{q:<{w}}  {v:<28} {r}{flag}")


if __name__ == "__main__":
    main()
